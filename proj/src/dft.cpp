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

#include <gr2/dft.hpp>

#include <gr2/errors.hpp>
#include <gr2/literal.hpp>

#include <algorithm>
#include <set>

namespace gr2 {

namespace {

// Transforms need GR(p^2, s M) with a usable Teichmuller group.
constexpr std::uint64_t kBigRingLimit = std::uint64_t{1} << 32;

unsigned inverse_mod(unsigned x, unsigned mod)
{
  if (mod == 1)
    return 0;
  for (unsigned k = 1; k < mod; ++k)
    if (std::uint64_t{x} * k % mod == 1)
      return k;
  throw InternalError("no modular inverse");
}

std::uint64_t checked_power(unsigned p, unsigned e)
{
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > kBigRingLimit / p)
      throw LimitError("GR(" + std::to_string(p) + "^2," + std::to_string(e) +
                       ") is beyond the transform limit p^{sM} <= 2^32");
    r *= p;
  }
  return r;
}

} // namespace

CompositeContext::CompositeContext(unsigned p, unsigned s, unsigned n)
{
  const auto split = split_length(n, p);
  p_ = p;
  s_ = s;
  n_ = n;
  m_ = split.m;
  a_ = split.a;
  pa_ = n / m_;
  m_prime_ = inverse_mod(m_ % pa_, pa_);
  part_ = gr2::partition(m_, p, s);
  const auto q_big = checked_power(p, s * part_.order);
  base_ = GaloisRing::make(p, s);
  big_ = GaloisRing::make(p, s * part_.order);
  zeta_ = big_->teich((q_big - 1) / m_);
  base_emb_ = std::make_unique<Embedding>(base_, big_);
  for (const auto& c : part_.cosets) {
    auto ring = GaloisRing::make(p, s * c.size);
    comp_rings_.emplace_back(ring, a_);
    comp_embs_.push_back(std::make_unique<Embedding>(ring, big_));
  }
}

WordRing::WordRing(RingPtr ring, unsigned n) : ring_(std::move(ring)), n_(n)
{
  if (n_ == 0)
    throw DomainError("length must be positive");
}

Word WordRing::zero() const { return Word(n_, ring_->zero()); }

Word WordRing::one() const { return monomial(0, ring_->one()); }

Word WordRing::monomial(unsigned k, const GrElem& c) const
{
  auto w = zero();
  w[k % n_] = c;
  return w;
}

Word WordRing::add(const Word& x, const Word& y) const
{
  Word r(n_);
  for (unsigned k = 0; k < n_; ++k)
    r[k] = ring_->add(x[k], y[k]);
  return r;
}

Word WordRing::sub(const Word& x, const Word& y) const
{
  Word r(n_);
  for (unsigned k = 0; k < n_; ++k)
    r[k] = ring_->sub(x[k], y[k]);
  return r;
}

Word WordRing::neg(const Word& x) const
{
  Word r(n_);
  for (unsigned k = 0; k < n_; ++k)
    r[k] = ring_->neg(x[k]);
  return r;
}

Word WordRing::mul(const Word& x, const Word& y) const
{
  auto r = zero();
  for (unsigned i = 0; i < n_; ++i) {
    if (ring_->is_zero(x[i]))
      continue;
    for (unsigned j = 0; j < n_; ++j) {
      if (ring_->is_zero(y[j]))
        continue;
      auto& slot = r[(i + j) % n_];
      slot = ring_->add(slot, ring_->mul(x[i], y[j]));
    }
  }
  return r;
}

Word WordRing::pow(const Word& x, std::uint64_t e) const
{
  auto r = one();
  auto b = x;
  while (e > 0) {
    if (e & 1)
      r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

namespace {

struct WordAlgebra {
  using value_type = Word;
  const WordRing& W;

  value_type from_int(long long n) const { return W.monomial(0, W.gr().from_int(n)); }
  std::optional<value_type> variable(char c) const
  {
    if (c == 'x')
      return W.monomial(0, W.gr().xi());
    if (c == 'X')
      return W.monomial(1, W.gr().one());
    return std::nullopt;
  }
  std::optional<value_type> teich(std::optional<std::uint64_t> e) const
  {
    return W.monomial(0, e ? W.gr().teich(*e) : W.gr().zero());
  }
  value_type add(const value_type& a, const value_type& b) const { return W.add(a, b); }
  value_type sub(const value_type& a, const value_type& b) const { return W.sub(a, b); }
  value_type neg(const value_type& a) const { return W.neg(a); }
  value_type mul(const value_type& a, const value_type& b) const { return W.mul(a, b); }
  value_type pow(const value_type& a, std::uint64_t e) const { return W.pow(a, e); }
};

} // namespace

Word WordRing::parse(std::string_view text) const { return detail::evaluate(WordAlgebra{*this}, text); }

std::string WordRing::format(const Word& w) const
{
  std::string out;
  for (std::size_t k = w.size(); k-- > 0;) {
    if (ring_->is_zero(w[k]))
      continue;
    auto c = format_element(*ring_, w[k]);
    const bool simple = c.find_first_of("+x") == std::string::npos;
    if (!out.empty())
      out += '+';
    if (k == 0) {
      out += simple ? c : "(" + c + ")";
      continue;
    }
    if (c != "1")
      out += (simple ? c : "(" + c + ")") + '*';
    out += 'X';
    if (k > 1)
      out += '^' + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

std::vector<std::vector<GrElem>> phi_inverse(const CompositeContext& ctx, const Word& c)
{
  if (c.size() != ctx.n())
    throw DomainError("expected a word of length " + std::to_string(ctx.n()) + ", got " + std::to_string(c.size()));
  std::vector<std::vector<GrElem>> d(ctx.m(), std::vector<GrElem>(ctx.pa()));
  for (unsigned i = 0; i < ctx.m(); ++i)
    for (unsigned j = 0; j < ctx.pa(); ++j)
      d[i][j] = c[i + j * ctx.m()];
  return d;
}

Word phi(const CompositeContext& ctx, const std::vector<std::vector<GrElem>>& tuple)
{
  if (tuple.size() != ctx.m())
    throw DomainError("expected a tuple of length " + std::to_string(ctx.m()));
  Word c(ctx.n());
  for (unsigned i = 0; i < ctx.m(); ++i) {
    if (tuple[i].size() != ctx.pa())
      throw DomainError("tuple entry of wrong degree");
    for (unsigned j = 0; j < ctx.pa(); ++j)
      c[i + j * ctx.m()] = tuple[i][j];
  }
  return c;
}

std::vector<std::vector<GrElem>> dft_all(const CompositeContext& ctx, const Word& c)
{
  const auto d = phi_inverse(ctx, c);
  const auto& big = *ctx.big();
  const unsigned m = ctx.m();
  const unsigned pa = ctx.pa();

  std::vector<std::vector<GrElem>> emb(m, std::vector<GrElem>(pa));
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < pa; ++j)
      emb[i][j] = ctx.base_embedding().apply(d[i][j]);

  std::vector<GrElem> zpow(m);
  zpow[0] = big.one();
  for (unsigned k = 1; k < m; ++k)
    zpow[k] = big.mul(zpow[k - 1], ctx.zeta());

  std::vector<std::vector<GrElem>> out(m, std::vector<GrElem>(pa, big.zero()));
  for (unsigned h = 0; h < m; ++h)
    for (unsigned i = 0; i < m; ++i) {
      const auto& z = zpow[(std::uint64_t{h} * i) % m];
      const unsigned shift = static_cast<unsigned>((std::uint64_t{ctx.m_prime()} * i) % pa);
      for (unsigned j = 0; j < pa; ++j) {
        if (big.is_zero(emb[i][j]))
          continue;
        auto& slot = out[h][(shift + j) % pa];
        slot = big.add(slot, big.mul(emb[i][j], z));
      }
    }
  return out;
}

DftVector dft_forward(const CompositeContext& ctx, const Word& c)
{
  const auto all = dft_all(ctx, c);
  DftVector out;
  out.reserve(ctx.components());
  for (std::size_t idx = 0; idx < ctx.components(); ++idx) {
    const auto& row = all[ctx.partition().cosets[idx].rep];
    std::vector<GrElem> u(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
      auto r = ctx.component_embedding(idx).recover(row[j]);
      if (!r)
        throw InternalError("transform coefficient outside its component ring");
      u[j] = std::move(*r);
    }
    out.push_back(ctx.component(idx).from_u(u));
  }
  return out;
}

Word dft_inverse(const CompositeContext& ctx, const DftVector& v)
{
  if (v.size() != ctx.components())
    throw DomainError("expected " + std::to_string(ctx.components()) + " components, got " +
                      std::to_string(v.size()));
  const auto& big = *ctx.big();
  const unsigned m = ctx.m();
  const unsigned pa = ctx.pa();

  // Full coefficient table chat_h, h = 0..m-1, in the big ring.
  std::vector<std::vector<GrElem>> chat(m);
  for (std::size_t idx = 0; idx < ctx.components(); ++idx) {
    const auto& R = ctx.component(idx);
    if (v[idx].y.size() != pa)
      throw DomainError("component of wrong length");
    const auto u = R.to_u(v[idx]);
    std::vector<GrElem> lifted(pa);
    for (unsigned j = 0; j < pa; ++j)
      lifted[j] = ctx.component_embedding(idx).apply(u[j]);
    const auto& members = ctx.partition().cosets[idx].members;
    for (std::size_t t = 0; t < members.size(); ++t) {
      std::vector<GrElem> row(pa);
      for (unsigned j = 0; j < pa; ++j)
        row[j] = big.frobenius(lifted[j], static_cast<unsigned>(ctx.s() * t));
      chat[members[t]] = std::move(row);
    }
  }

  std::vector<GrElem> zinv(m);
  zinv[0] = big.one();
  const auto zeta_inv = big.inv(ctx.zeta());
  for (unsigned k = 1; k < m; ++k)
    zinv[k] = big.mul(zinv[k - 1], zeta_inv);
  const auto inv_m = big.inv(big.from_int(m));

  std::vector<std::vector<GrElem>> d(m, std::vector<GrElem>(pa));
  for (unsigned k = 0; k < m; ++k) {
    std::vector<GrElem> acc(pa, big.zero());
    for (unsigned h = 0; h < m; ++h) {
      const auto& z = zinv[(std::uint64_t{h} * k) % m];
      for (unsigned j = 0; j < pa; ++j)
        acc[j] = big.add(acc[j], big.mul(chat[h][j], z));
    }
    // Multiply by u^{-k m'}.
    const unsigned shift = static_cast<unsigned>((std::uint64_t{k} * ctx.m_prime()) % pa);
    for (unsigned j = 0; j < pa; ++j) {
      const auto coeff = big.mul(acc[(j + shift) % pa], inv_m);
      auto r = ctx.base_embedding().recover(coeff);
      if (!r)
        throw DomainError("component vector is not the transform of a word over " + ctx.base()->name());
      d[k][j] = std::move(*r);
    }
  }
  return phi(ctx, d);
}

DecomposedCode decompose_code(const CompositeContext& ctx, const std::vector<Word>& gens)
{
  std::vector<DftVector> images;
  images.reserve(gens.size());
  for (const auto& g : gens)
    images.push_back(dft_forward(ctx, g));
  DecomposedCode out;
  out.n = ctx.n();
  for (std::size_t idx = 0; idx < ctx.components(); ++idx) {
    std::vector<QuotPoly> comp;
    for (const auto& im : images)
      comp.push_back(im[idx]);
    out.comps.push_back(normalize(ctx.component(idx), comp));
  }
  return out;
}

namespace {

void check_shape(const CompositeContext& ctx, const DecomposedCode& code)
{
  if (code.n != ctx.n() || code.comps.size() != ctx.components())
    throw DomainError("decomposed code does not match length " + std::to_string(ctx.n()));
}

} // namespace

std::vector<Word> compose_code(const CompositeContext& ctx, const DecomposedCode& code)
{
  check_shape(ctx, code);
  std::vector<Word> out;
  for (std::size_t idx = 0; idx < ctx.components(); ++idx) {
    const auto& R = ctx.component(idx);
    make_canonical(R, code.comps[idx]);
    for (const auto& g : generators(R, code.comps[idx])) {
      if (R.is_zero(g))
        continue;
      DftVector v;
      for (std::size_t k = 0; k < ctx.components(); ++k)
        v.push_back(k == idx ? g : ctx.component(k).zero());
      out.push_back(dft_inverse(ctx, v));
    }
  }
  if (out.empty())
    out.push_back(Word(ctx.n(), ctx.base()->zero()));
  return out;
}

DecomposedCode dual_decomposition(const CompositeContext& ctx, const DecomposedCode& code)
{
  check_shape(ctx, code);
  DecomposedCode out;
  out.n = code.n;
  out.comps.resize(code.comps.size());
  for (std::size_t idx = 0; idx < ctx.components(); ++idx) {
    const auto& info = ctx.partition().cosets[idx];
    const auto& R = ctx.component(idx);
    switch (info.cls) {
    case CosetClass::J0:
      out.comps[idx] = euclidean_dual(R, code.comps[idx]);
      break;
    case CosetClass::J1:
      out.comps[idx] = hermitian_dual(R, code.comps[idx]);
      break;
    case CosetClass::J2Prime:
    case CosetClass::J2Second:
      out.comps[idx] = euclidean_dual(ctx.component(info.partner), code.comps[info.partner]);
      break;
    }
  }
  return out;
}

void for_each_self_dual_composite(const CompositeContext& ctx,
                                  const std::function<bool(const DecomposedCode&)>& visit)
{
  const auto& cosets = ctx.partition().cosets;
  // Choices per free slot; J2'' slots are determined by their partner.
  std::vector<std::vector<CanonicalCode>> choices(cosets.size());
  for (std::size_t idx = 0; idx < cosets.size(); ++idx) {
    const auto& R = ctx.component(idx);
    switch (cosets[idx].cls) {
    case CosetClass::J0:
      choices[idx] = enumerate_self_dual(R, DualKind::Euclidean);
      break;
    case CosetClass::J1:
      choices[idx] = enumerate_self_dual(R, DualKind::Hermitian);
      break;
    case CosetClass::J2Prime:
      choices[idx] = enumerate_ideals(R);
      break;
    case CosetClass::J2Second:
      break;
    }
  }

  std::vector<std::size_t> free;
  for (std::size_t idx = 0; idx < cosets.size(); ++idx)
    if (cosets[idx].cls != CosetClass::J2Second) {
      if (choices[idx].empty())
        return;
      free.push_back(idx);
    }

  DecomposedCode cur;
  cur.n = ctx.n();
  cur.comps.resize(cosets.size());
  std::vector<std::size_t> pos(cosets.size(), 0);
  while (true) {
    for (auto idx : free)
      cur.comps[idx] = choices[idx][pos[idx]];
    for (std::size_t idx = 0; idx < cosets.size(); ++idx)
      if (cosets[idx].cls == CosetClass::J2Second)
        cur.comps[idx] = euclidean_dual(ctx.component(idx), cur.comps[cosets[idx].partner]);
    if (!visit(cur))
      return;
    // Odometer over the free slots, last slot fastest.
    std::size_t k = free.size();
    while (k > 0) {
      --k;
      if (++pos[free[k]] < choices[free[k]].size())
        break;
      pos[free[k]] = 0;
      if (k == 0)
        return;
    }
    if (free.empty())
      return;
  }
}

std::vector<DecomposedCode> enumerate_self_dual_composite(const CompositeContext& ctx, std::uint64_t ceiling)
{
  std::vector<DecomposedCode> out;
  for_each_self_dual_composite(ctx, [&](const DecomposedCode& c) {
    if (out.size() >= ceiling)
      throw LimitError("more than " + std::to_string(ceiling) + " self-dual codes of length " +
                       std::to_string(ctx.n()));
    out.push_back(c);
    return true;
  });
  return out;
}

std::string format_decomposed(const CompositeContext& ctx, const DecomposedCode& code)
{
  check_shape(ctx, code);
  std::string out = std::to_string(code.n) + ";[";
  for (std::size_t idx = 0; idx < code.comps.size(); ++idx) {
    if (idx > 0)
      out += ',';
    out += std::to_string(ctx.partition().cosets[idx].rep) + ':' +
           format_code(ctx.component(idx), code.comps[idx]);
  }
  return out + ']';
}

DecomposedCode parse_decomposed(const CompositeContext& ctx, std::string_view text)
{
  const auto t = trim(text);
  const auto semi = t.find(';');
  if (semi == std::string::npos)
    throw ParseError("decomposed code must look like n;[h:code,...]: '" + t + "'");
  const auto head = trim(std::string_view(t).substr(0, semi));
  const auto body = trim(std::string_view(t).substr(semi + 1));
  unsigned n = 0;
  try {
    std::size_t used = 0;
    n = static_cast<unsigned>(std::stoul(head, &used));
    if (used != head.size())
      throw ParseError("bad length '" + head + "'");
  } catch (const std::logic_error&) {
    throw ParseError("bad length '" + head + "'");
  }
  if (n != ctx.n())
    throw DomainError("literal has length " + std::to_string(n) + ", expected " + std::to_string(ctx.n()));
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    throw ParseError("expected [h:code,...] in '" + t + "'");

  DecomposedCode out;
  out.n = n;
  out.comps.resize(ctx.components());
  std::vector<bool> seen(ctx.components(), false);
  const auto inner = trim(std::string_view(body).substr(1, body.size() - 2));
  if (!inner.empty())
    for (const auto& item : split_top_level(inner, ',')) {
      const auto colon = item.find(':');
      if (colon == std::string::npos)
        throw ParseError("expected h:code in '" + item + "'");
      const auto hs = trim(std::string_view(item).substr(0, colon));
      unsigned h = 0;
      try {
        std::size_t used = 0;
        h = static_cast<unsigned>(std::stoul(hs, &used));
        if (used != hs.size())
          throw ParseError("bad coset index '" + hs + "'");
      } catch (const std::logic_error&) {
        throw ParseError("bad coset index '" + hs + "'");
      }
      std::size_t idx = ctx.components();
      for (std::size_t k = 0; k < ctx.components(); ++k)
        if (ctx.partition().cosets[k].rep == h)
          idx = k;
      if (idx == ctx.components())
        throw DomainError(std::to_string(h) + " is not a coset representative modulo " + std::to_string(ctx.m()));
      if (seen[idx])
        throw DomainError("coset " + std::to_string(h) + " given twice");
      auto parsed = parse_code(std::string_view(item).substr(colon + 1));
      if (parsed.params != ctx.component(idx).params())
        throw DomainError("component at " + std::to_string(h) + " must be over GR(" + std::to_string(ctx.p()) +
                          "^2," + std::to_string(ctx.component(idx).gr().s()) + ") with a = " +
                          std::to_string(ctx.a()));
      out.comps[idx] = std::move(parsed.code);
      seen[idx] = true;
    }
  for (std::size_t k = 0; k < seen.size(); ++k)
    if (!seen[k])
      throw DomainError("missing component for coset " + std::to_string(ctx.partition().cosets[k].rep));
  return out;
}

DenseCode materialize_composite(const Ambient& A, const CompositeContext& ctx, const DecomposedCode& code)
{
  std::vector<std::uint64_t> gens;
  for (const auto& w : compose_code(ctx, code))
    gens.push_back(A.encode(w));
  return closure(A, gens);
}

} // namespace gr2
