/* Copyright (C) 2026 The gr2cyc Authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#include <gr2/literal.hpp>

#include <charconv>
#include <sstream>

namespace gr2 {

namespace {

struct IntPolyAlgebra {
  using value_type = std::vector<long long>;
  char var;

  static void trim_zeros(value_type& v)
  {
    while (v.size() > 1 && v.back() == 0)
      v.pop_back();
  }
  value_type from_int(long long n) const { return {n}; }
  std::optional<value_type> variable(char c) const
  {
    if (c != var)
      return std::nullopt;
    return value_type{0, 1};
  }
  std::optional<value_type> teich(std::optional<std::uint64_t>) const { return std::nullopt; }
  value_type add(const value_type& a, const value_type& b) const
  {
    value_type r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
      r[i] += b[i];
    trim_zeros(r);
    return r;
  }
  value_type neg(const value_type& a) const
  {
    value_type r = a;
    for (auto& c : r)
      c = -c;
    return r;
  }
  value_type sub(const value_type& a, const value_type& b) const { return add(a, neg(b)); }
  value_type mul(const value_type& a, const value_type& b) const
  {
    if (a.size() + b.size() > 4096)
      throw ParseError("polynomial degree too large");
    value_type r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        r[i + j] += a[i] * b[j];
    trim_zeros(r);
    return r;
  }
  value_type pow(const value_type& a, std::uint64_t e) const
  {
    if (e > 4096)
      throw ParseError("exponent too large");
    value_type r{1};
    for (std::uint64_t i = 0; i < e; ++i)
      r = mul(r, a);
    return r;
  }
};

struct ElemAlgebra {
  using value_type = GrElem;
  const GaloisRing& R;

  value_type from_int(long long n) const { return R.from_int(n); }
  std::optional<value_type> variable(char c) const
  {
    if (c != 'x')
      return std::nullopt;
    return R.xi();
  }
  std::optional<value_type> teich(std::optional<std::uint64_t> e) const { return e ? R.teich(*e) : R.zero(); }
  value_type add(const value_type& a, const value_type& b) const { return R.add(a, b); }
  value_type sub(const value_type& a, const value_type& b) const { return R.sub(a, b); }
  value_type neg(const value_type& a) const { return R.neg(a); }
  value_type mul(const value_type& a, const value_type& b) const { return R.mul(a, b); }
  value_type pow(const value_type& a, std::uint64_t e) const { return R.pow(a, e); }
};

struct QuotAlgebra {
  using value_type = QuotPoly;
  const CyclicRing& R;

  value_type from_int(long long n) const { return R.constant(R.gr().from_int(n)); }
  std::optional<value_type> variable(char c) const
  {
    if (c == 'x')
      return R.constant(R.gr().xi());
    if (c == 'u' || c == 'X')
      return R.u_power(1);
    if (c == 'Y')
      return R.y_power(1);
    return std::nullopt;
  }
  std::optional<value_type> teich(std::optional<std::uint64_t> e) const
  {
    return R.constant(e ? R.gr().teich(*e) : R.gr().zero());
  }
  value_type add(const value_type& a, const value_type& b) const { return R.add(a, b); }
  value_type sub(const value_type& a, const value_type& b) const { return R.sub(a, b); }
  value_type neg(const value_type& a) const { return R.neg(a); }
  value_type mul(const value_type& a, const value_type& b) const { return R.mul(a, b); }
  value_type pow(const value_type& a, std::uint64_t e) const
  {
    if (e > 0xffffffffull)
      throw ParseError("exponent too large");
    return R.pow(a, static_cast<unsigned>(e));
  }
};

std::string format_digits(const std::vector<Digit>& c)
{
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0)
      continue;
    if (!out.empty())
      out += '+';
    if (k == 0) {
      out += std::to_string(c[k]);
      continue;
    }
    if (c[k] != 1)
      out += std::to_string(c[k]) + '*';
    out += 'x';
    if (k > 1)
      out += '^' + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

unsigned parse_unsigned(std::string_view text, const char* what)
{
  auto t = trim(text);
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    throw ParseError(std::string("expected a non-negative integer for ") + what + ", got '" + t + "'");
  return v;
}

} // namespace

std::string trim(std::string_view text)
{
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1])))
    --e;
  return std::string(text.substr(b, e - b));
}

std::vector<std::string> split_top_level(std::string_view text, char sep)
{
  std::vector<std::string> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(' || c == '[')
      ++depth;
    else if (c == ')' || c == ']')
      --depth;
    else if (c == sep && depth == 0) {
      parts.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  parts.push_back(trim(text.substr(start)));
  return parts;
}

std::vector<long long> parse_int_polynomial(std::string_view text, char var)
{
  return detail::evaluate(IntPolyAlgebra{var}, text);
}

GrElem parse_element(const GaloisRing& R, std::string_view text)
{
  return detail::evaluate(ElemAlgebra{R}, text);
}

std::string format_element(const GaloisRing&, const GrElem& a) { return format_digits(a.c); }

std::string format_teich(const GaloisRing& R, const GrElem& a)
{
  if (!R.is_teichmuller(a))
    return format_digits(a.c);
  auto e = R.teich_log(a);
  return e ? "T(" + std::to_string(*e) + ")" : "T(-)";
}

std::string format_field(const ResidueField&, const FqElem& x) { return format_digits(x.c); }

QuotPoly parse_quot_poly(const CyclicRing& R, std::string_view text)
{
  return detail::evaluate(QuotAlgebra{R}, text);
}

std::string format_quot_poly(const CyclicRing& R, const QuotPoly& f)
{
  const auto u = R.to_u(f);
  std::string out;
  for (std::size_t k = u.size(); k-- > 0;) {
    if (R.gr().is_zero(u[k]))
      continue;
    auto c = format_element(R.gr(), u[k]);
    const bool simple = c.find_first_of("+x") == std::string::npos;
    if (!out.empty())
      out += '+';
    if (k == 0) {
      out += simple ? c : "(" + c + ")";
      continue;
    }
    if (c != "1")
      out += (simple ? c : "(" + c + ")") + '*';
    out += 'u';
    if (k > 1)
      out += '^' + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

ParsedCode parse_code(std::string_view text)
{
  const auto t = trim(text);
  const auto open = t.find('(');
  if (open == std::string::npos || t.back() != ')')
    throw ParseError("code literal must look like full(...) or tors(...): '" + t + "'");
  const auto head = trim(std::string_view(t).substr(0, open));
  const auto body = std::string_view(t).substr(open + 1, t.size() - open - 2);
  const auto sections = split_top_level(body, ';');

  auto read_params = [&](const std::string& s) {
    auto ps = split_top_level(s, ',');
    if (ps.size() != 3)
      throw ParseError("expected p,s,a in '" + t + "'");
    return CodeParams{parse_unsigned(ps[0], "p"), parse_unsigned(ps[1], "s"), parse_unsigned(ps[2], "a")};
  };

  ParsedCode out;
  if (head == "tors") {
    if (sections.size() != 2)
      throw ParseError("tors literal needs 2 sections: '" + t + "'");
    out.params = read_params(sections[0]);
    out.code = TorsionCode{parse_unsigned(sections[1], "i1")};
  } else if (head == "full") {
    if (sections.size() != 3)
      throw ParseError("full literal needs 3 sections: '" + t + "'");
    out.params = read_params(sections[0]);
    auto idx = split_top_level(sections[1], ',');
    if (idx.size() != 2)
      throw ParseError("expected i0,i1 in '" + t + "'");
    FullCode f{parse_unsigned(idx[0], "i0"), parse_unsigned(idx[1], "i1"), {}};
    const auto& hs = sections[2];
    if (hs.size() < 2 || hs.front() != '[' || hs.back() != ']')
      throw ParseError("expected [h0,...] in '" + t + "'");
    const auto inner = trim(std::string_view(hs).substr(1, hs.size() - 2));
    auto ring = GaloisRing::make(out.params.p, out.params.s);
    if (!inner.empty())
      for (const auto& h : split_top_level(inner, ','))
        f.h.push_back(parse_element(*ring, h));
    out.code = std::move(f);
  } else {
    throw ParseError("unknown code kind '" + head + "'");
  }
  auto R = CyclicRing::make(out.params);
  out.code = make_canonical(R, out.code);
  return out;
}

std::string format_code(const CodeParams& params, const GaloisRing& R, const CanonicalCode& code)
{
  std::ostringstream os;
  const auto prefix = std::to_string(params.p) + "," + std::to_string(params.s) + "," + std::to_string(params.a);
  if (const auto* t = std::get_if<TorsionCode>(&code)) {
    os << "tors(" << prefix << ';' << t->i1 << ')';
    return os.str();
  }
  const auto& f = std::get<FullCode>(code);
  os << "full(" << prefix << ';' << f.i0 << ',' << f.i1 << ";[";
  for (std::size_t j = 0; j < f.h.size(); ++j)
    os << (j ? "," : "") << format_teich(R, f.h[j]);
  os << "])";
  return os.str();
}

std::string format_code(const CyclicRing& R, const CanonicalCode& code)
{
  return format_code(R.params(), R.gr(), code);
}

} // namespace gr2
