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
#pragma once

// Text forms.
//
//   element   2*x^2+3, (x+1)^3, T(4), T(-)      x is the generator xi
//   poly      u^3+2*x*u+1                      over a cyclic ring, u or X
//   code      full(p,s,a;i0,i1;[T(1),T(-)])    tors(p,s,a;i1)

#include <gr2/cyclic_core.hpp>
#include <gr2/errors.hpp>

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gr2 {

namespace detail {

// Recursive-descent evaluator for + - * ^ ( ) over any algebra providing
//   value_type, from_int, variable(char), teich(optional<uint64_t>),
//   add, sub, neg, mul, pow.
template <class Alg>
class ExprParser {
public:
  using V = typename Alg::value_type;

  ExprParser(const Alg& alg, std::string_view src) : alg_(alg), src_(src) {}

  V parse()
  {
    auto v = expr();
    skip_ws();
    if (pos_ != src_.size())
      fail("unexpected character");
    return v;
  }

private:
  const Alg& alg_;
  std::string_view src_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const
  {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(src_) + "'");
  }

  void skip_ws()
  {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  char peek()
  {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool eat(char c)
  {
    if (peek() != c)
      return false;
    ++pos_;
    return true;
  }

  unsigned long long number()
  {
    skip_ws();
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      fail("expected a number");
    unsigned long long v = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      if (v > (~0ull - 9) / 10)
        fail("number too large");
      v = v * 10 + static_cast<unsigned>(src_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  V expr()
  {
    V acc = term();
    while (true) {
      if (eat('+'))
        acc = alg_.add(acc, term());
      else if (eat('-'))
        acc = alg_.sub(acc, term());
      else
        return acc;
    }
  }

  bool starts_factor()
  {
    const char c = peek();
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c));
  }

  V term()
  {
    V acc = factor();
    while (true) {
      if (eat('*'))
        acc = alg_.mul(acc, factor());
      else if (starts_factor())
        acc = alg_.mul(acc, factor());
      else
        return acc;
    }
  }

  V factor()
  {
    if (eat('-'))
      return alg_.neg(factor());
    if (eat('+'))
      return factor();
    V base = atom();
    if (eat('^')) {
      const auto e = number();
      if (e > (1ull << 32))
        fail("exponent too large");
      return alg_.pow(base, static_cast<std::uint64_t>(e));
    }
    return base;
  }

  V atom()
  {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      auto v = expr();
      if (!eat(')'))
        fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto n = number();
      if (n > (1ull << 62))
        fail("integer too large");
      return alg_.from_int(static_cast<long long>(n));
    }
    if (c == 'T') {
      ++pos_;
      if (!eat('('))
        fail("expected '(' after T");
      std::optional<std::uint64_t> e;
      if (!eat('-'))
        e = number();
      if (!eat(')'))
        fail("expected ')'");
      auto v = alg_.teich(e);
      if (!v)
        fail("T(...) not allowed here");
      return *v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      auto v = alg_.variable(c);
      if (!v)
        fail(std::string("unknown variable '") + c + "'");
      return *v;
    }
    fail(c == '\0' ? "unexpected end of input" : "unexpected character");
  }
};

template <class Alg>
typename Alg::value_type evaluate(const Alg& alg, std::string_view text)
{
  return ExprParser<Alg>(alg, text).parse();
}

} // namespace detail

/// Integer polynomial in one variable, low degree first. Used for
/// GR2_MODULUS_OVERRIDE.
std::vector<long long> parse_int_polynomial(std::string_view text, char var);

GrElem parse_element(const GaloisRing& R, std::string_view text);
/// Polynomial in x, highest degree first: "2*x^2+x+3", "0".
std::string format_element(const GaloisRing& R, const GrElem& a);
/// T(e) / T(-) for a Teichmuller element, format_element otherwise.
std::string format_teich(const GaloisRing& R, const GrElem& a);
std::string format_field(const ResidueField& F, const FqElem& x);

/// Polynomial in `var` (u or X) over the cyclic ring, coefficients may use x
/// and T(e). Returned in Y coordinates.
QuotPoly parse_quot_poly(const CyclicRing& R, std::string_view text);
/// u-coordinate form, e.g. "u+3" or "(x+2)*u^2+1".
std::string format_quot_poly(const CyclicRing& R, const QuotPoly& f);

struct ParsedCode {
  CodeParams params;
  CanonicalCode code;
};

/// Parses and validates (make_canonical) a code literal.
ParsedCode parse_code(std::string_view text);
std::string format_code(const CodeParams& params, const GaloisRing& R, const CanonicalCode& code);
std::string format_code(const CyclicRing& R, const CanonicalCode& code);

/// Splits on a separator at bracket depth 0.
std::vector<std::string> split_top_level(std::string_view text, char sep);

std::string trim(std::string_view text);

} // namespace gr2
