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

#include <doctest.h>

#include <gr2/counting.hpp>
#include <gr2/dft.hpp>
#include <gr2/errors.hpp>
#include <gr2/literal.hpp>

#include <algorithm>
#include <random>
#include <set>

using namespace gr2;

namespace {

CanonicalCode full(unsigned i0, unsigned i1, std::vector<GrElem> h = {}) { return FullCode{i0, i1, std::move(h)}; }
CanonicalCode tors(unsigned i1) { return TorsionCode{i1}; }

Word random_word(std::mt19937_64& rng, const CompositeContext& ctx)
{
  const auto& G = *ctx.base();
  Word w(ctx.n());
  for (auto& x : w) {
    std::vector<long long> c(G.s());
    for (auto& v : c)
      v = static_cast<long long>(rng() % G.p2());
    x = G.from_coeffs(c);
  }
  return w;
}

std::vector<GrElem> frob_row(const GaloisRing& G, const std::vector<GrElem>& row, unsigned k)
{
  std::vector<GrElem> out;
  for (const auto& x : row)
    out.push_back(G.frobenius(x, k));
  return out;
}

// Component position of coset representative h.
std::size_t slot(const CompositeContext& ctx, unsigned h) { return ctx.partition().index_of(h); }

struct Sizes {
  unsigned p, s, n;
};

const Sizes kSizes[] = {{2, 1, 6}, {2, 1, 10}, {2, 1, 12}, {3, 1, 6}, {3, 1, 12}, {2, 2, 6}, {2, 1, 7}, {3, 1, 4}};

} // namespace

TEST_CASE("context parameters")
{
  CompositeContext ctx(2, 1, 6);
  CHECK(ctx.m() == 3);
  CHECK(ctx.pa() == 2);
  CHECK(ctx.m_prime() == 1);
  CHECK(ctx.order() == 2);
  const auto& B = *ctx.big();
  CHECK(B.s() == 2);
  CHECK(B.pow(ctx.zeta(), 3) == B.one());
  CHECK(ctx.zeta() != B.one());
  CHECK(ctx.components() == 2);
  CHECK(ctx.component(slot(ctx, 1)).gr().s() == 2);

  for (const auto& [p, s, n] : kSizes) {
    CompositeContext c(p, s, n);
    const auto& G = *c.big();
    for (unsigned k = 1; k < c.m(); ++k)
      CHECK(G.pow(c.zeta(), k) != G.one());
    CHECK(G.pow(c.zeta(), c.m()) == G.one());
    CHECK((std::uint64_t{c.m()} * c.m_prime()) % c.pa() == 1 % c.pa());
  }
  CHECK_THROWS_AS(CompositeContext(2, 1, 0), DomainError);
  CHECK_THROWS_AS(CompositeContext(2, 8, 37), LimitError);
}

TEST_CASE("phi")
{
  CompositeContext ctx(2, 1, 6);
  const auto& G = *ctx.base();
  WordRing W(ctx.base(), 6);
  const auto z = G.zero();
  const auto o = G.one();
  CHECK(phi(ctx, {{z, o}, {z, z}, {z, z}}) == W.parse("X^3"));
  CHECK(phi(ctx, {{z, z}, {o, z}, {z, z}}) == W.parse("X"));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const auto w = random_word(rng, ctx);
    CHECK(phi(ctx, phi_inverse(ctx, w)) == w);
  }
  CHECK_THROWS_AS(phi(ctx, {{z, o}}), DomainError);
  CHECK_THROWS_AS(phi_inverse(ctx, Word(5, z)), DomainError);
}

TEST_CASE("transform examples")
{
  CompositeContext ctx(2, 1, 6);
  WordRing W(ctx.base(), 6);
  const auto ones = dft_forward(ctx, W.one());
  for (std::size_t k = 0; k < ctx.components(); ++k)
    CHECK(ones[k] == ctx.component(k).one());

  const auto& B = *ctx.big();
  const auto all = dft_all(ctx, W.parse("X"));
  for (unsigned h = 0; h < 3; ++h) {
    CHECK(all[h][0] == B.zero());
    CHECK(all[h][1] == B.pow(ctx.zeta(), h));
  }
  CHECK(dft_inverse(ctx, dft_forward(ctx, W.parse("X"))) == W.parse("X"));
  CHECK(dft_inverse(ctx, dft_forward(ctx, W.zero())) == W.zero());
  CHECK_THROWS_AS(dft_inverse(ctx, DftVector{}), DomainError);
}

TEST_CASE("transform identities on random words")
{
  for (const auto& [p, s, n] : kSizes) {
    CAPTURE(p);
    CAPTURE(s);
    CAPTURE(n);
    CompositeContext ctx(p, s, n);
    WordRing W(ctx.base(), n);
    const auto& B = *ctx.big();
    const auto& part = ctx.partition();
    std::uint64_t q = 1;
    for (unsigned i = 0; i < s; ++i)
      q *= p;
    std::mt19937_64 rng(n * 31 + p);
    for (int t = 0; t < 60; ++t) {
      const auto x = random_word(rng, ctx);
      const auto y = random_word(rng, ctx);
      const auto fx = dft_forward(ctx, x);
      const auto fy = dft_forward(ctx, y);
      REQUIRE(dft_inverse(ctx, fx) == x);
      const auto fxy = dft_forward(ctx, W.mul(x, y));
      const auto fsum = dft_forward(ctx, W.add(x, y));
      for (std::size_t k = 0; k < ctx.components(); ++k) {
        CHECK(fxy[k] == ctx.component(k).mul(fx[k], fy[k]));
        CHECK(fsum[k] == ctx.component(k).add(fx[k], fy[k]));
      }
      const auto all = dft_all(ctx, x);
      for (unsigned h = 0; h < ctx.m(); ++h)
        CHECK(all[(h * q) % ctx.m()] == frob_row(B, all[h], s));
      for (const auto& c : part.cosets) {
        if (c.cls != CosetClass::J1 && c.cls != CosetClass::J0)
          continue;
        const unsigned minus = (ctx.m() - c.rep) % ctx.m();
        if (c.size == 1)
          CHECK(all[minus] == all[c.rep]);
        else
          CHECK(all[minus] == frob_row(B, all[c.rep], s * c.size / 2));
      }
    }
  }
}

TEST_CASE("inner product through the transform")
{
  for (const auto& [p, s, n] : kSizes) {
    CAPTURE(n);
    CompositeContext ctx(p, s, n);
    const auto& B = *ctx.big();
    CyclicRing Rb(ctx.big(), ctx.a());
    CyclicRing Rs(ctx.base(), ctx.a());
    const auto& emb = ctx.base_embedding();
    std::mt19937_64 rng(n);
    for (int t = 0; t < 20; ++t) {
      const auto x = random_word(rng, ctx);
      const auto y = random_word(rng, ctx);
      const auto dx = phi_inverse(ctx, x);
      const auto dy = phi_inverse(ctx, y);

      // m * sum_i d_i * tilde(d'_i), lifted to the big ring.
      auto lhs = Rs.zero();
      for (unsigned i = 0; i < ctx.m(); ++i)
        lhs = Rs.add(lhs, Rs.mul(Rs.from_u(dx[i]), Rs.tilde(Rs.from_u(dy[i]))));
      lhs = Rs.scale(lhs, ctx.base()->from_int(ctx.m()));
      std::vector<GrElem> lhs_big;
      for (const auto& c : Rs.to_u(lhs))
        lhs_big.push_back(emb.apply(c));

      const auto cx = dft_all(ctx, x);
      const auto cy = dft_all(ctx, y);
      auto rhs = Rb.zero();
      for (unsigned h = 0; h < ctx.m(); ++h)
        rhs = Rb.add(rhs, Rb.mul(Rb.from_u(cx[h]), Rb.tilde(Rb.from_u(cy[(ctx.m() - h) % ctx.m()]))));
      CHECK(Rb.to_u(rhs) == lhs_big);

      // Coefficient of u^{-k} in [d, d'] is <X^{mk} c, c'>.
      const auto bracket = Rs.to_u(Rs.scale(lhs, ctx.base()->inv(ctx.base()->from_int(ctx.m()))));
      WordRing W(ctx.base(), n);
      for (unsigned k = 0; k < ctx.pa(); ++k) {
        const auto shifted = W.mul(W.monomial(ctx.m() * k, ctx.base()->one()), x);
        auto e = ctx.base()->zero();
        for (unsigned i = 0; i < n; ++i)
          e = ctx.base()->add(e, ctx.base()->mul(shifted[i], y[i]));
        CHECK(bracket[(ctx.pa() - k) % ctx.pa()] == e);
      }
      (void)B;
    }
  }
}

TEST_CASE("decomposition examples")
{
  CompositeContext ctx(2, 1, 6);
  WordRing W(ctx.base(), 6);
  const auto h1 = slot(ctx, 1);
  const auto& G2 = ctx.component(h1).gr();

  const auto two = decompose_code(ctx, {W.parse("2")});
  CHECK(two.comps == std::vector<CanonicalCode>{tors(0), tors(0)});
  const auto whole = decompose_code(ctx, {W.one()});
  CHECK(whole.comps == std::vector<CanonicalCode>{full(0, 0), full(0, 0)});
  CHECK(decompose_code(ctx, {W.zero()}).comps == std::vector<CanonicalCode>{tors(2), tors(2)});

  // <2> x <1+u+2 xi> composes to a self-dual code of length 6.
  DecomposedCode ex{6, {tors(0), normalize(ctx.component(h1), {parse_quot_poly(ctx.component(h1), "1+u+2*x")})}};
  CHECK(ex.comps[h1] == full(1, 1, {G2.mul(G2.xi(), G2.xi())}));
  const auto gens = compose_code(ctx, ex);
  CHECK(decompose_code(ctx, gens) == ex);
  CHECK(dual_decomposition(ctx, ex) == ex);
  const auto all = enumerate_self_dual_composite(ctx);
  CHECK(std::find(all.begin(), all.end(), ex) != all.end());

  CHECK(dual_decomposition(ctx, two) == two);
  const DecomposedCode mixed{6, {full(0, 0), full(1, 1, {G2.xi()})}};
  CHECK(dual_decomposition(ctx, mixed).comps[0] == tors(2));
  CHECK(compose_code(ctx, DecomposedCode{6, {tors(2), tors(2)}}) == std::vector<Word>{W.zero()});
}

TEST_CASE("paired components swap under duality")
{
  CompositeContext ctx(2, 1, 7);
  const auto i1 = slot(ctx, 1);
  const auto i6 = slot(ctx, 6);
  REQUIRE(ctx.partition().cosets[i1].cls == CosetClass::J2Prime);
  REQUIRE(ctx.partition().cosets[i6].cls == CosetClass::J2Second);
  for (const auto& c1 : enumerate_ideals(ctx.component(i1)))
    for (const auto& c6 : enumerate_ideals(ctx.component(i6))) {
      DecomposedCode code{7, {full(0, 0), full(0, 0), full(0, 0)}};
      code.comps[i1] = c1;
      code.comps[i6] = c6;
      const auto d = dual_decomposition(ctx, code);
      CHECK(d.comps[i1] == euclidean_dual(ctx.component(i6), c6));
      CHECK(d.comps[i6] == euclidean_dual(ctx.component(i1), c1));
      CHECK(d.comps[slot(ctx, 0)] == tors(1));
    }
}

TEST_CASE("membership agrees componentwise")
{
  CompositeContext ctx(2, 1, 6);
  Ambient A(ctx.base(), 6);
  for (const auto& code : enumerate_self_dual_composite(ctx)) {
    const auto dense = materialize_composite(A, ctx, code);
    std::size_t inside = 0;
    for (std::uint64_t v = 0; v < A.size(); ++v) {
      const auto comps = dft_forward(ctx, A.decode(v));
      bool all_in = true;
      for (std::size_t k = 0; k < ctx.components(); ++k)
        all_in = all_in && contains(ctx.component(k), code.comps[k], comps[k]);
      const bool in_dense = std::binary_search(dense.words.begin(), dense.words.end(), v);
      CHECK(all_in == in_dense);
      inside += in_dense;
    }
    CHECK(inside * inside == A.size());
  }
}

TEST_CASE("composite self-dual codes")
{
  CHECK(enumerate_self_dual_composite(CompositeContext(2, 1, 2)).size() == 1);
  CHECK(enumerate_self_dual_composite(CompositeContext(2, 1, 6)).size() == 3);
  CHECK(enumerate_self_dual_composite(CompositeContext(2, 1, 10)).size() == 5);
  for (unsigned n : {3u, 5u, 7u, 12u, 14u, 24u}) {
    CompositeContext ctx(2, 1, n);
    CHECK(BigCount(enumerate_self_dual_composite(ctx).size()) == count_E_composite(2, 1, n));
  }
  for (unsigned n : {4u, 6u, 8u, 12u}) {
    CompositeContext ctx(3, 1, n);
    CHECK(BigCount(enumerate_self_dual_composite(ctx).size()) == count_E_composite(3, 1, n));
  }
  CompositeContext c6(2, 2, 6);
  CHECK(BigCount(enumerate_self_dual_composite(c6).size()) == count_E_composite(2, 2, 6));

  CompositeContext ctx(2, 1, 6);
  Ambient A(ctx.base(), 6);
  for (const auto& code : enumerate_self_dual_composite(ctx)) {
    CHECK(dual_decomposition(ctx, code) == code);
    const auto dense = materialize_composite(A, ctx, code);
    CHECK(brute_dual(A, dense, DualKind::Euclidean) == dense);
  }
  std::size_t seen = 0;
  for_each_self_dual_composite(ctx, [&](const DecomposedCode&) { return ++seen < 2; });
  CHECK(seen == 2);
  CHECK_THROWS_AS(enumerate_self_dual_composite(CompositeContext(2, 1, 24), 10), LimitError);
}

TEST_CASE("decomposed literals")
{
  CompositeContext ctx(2, 1, 6);
  const auto codes = enumerate_self_dual_composite(ctx);
  std::set<std::string> texts;
  for (const auto& c : codes) {
    const auto text = format_decomposed(ctx, c);
    texts.insert(text);
    CHECK(parse_decomposed(ctx, text) == c);
  }
  CHECK(texts == std::set<std::string>{"6;[0:tors(2,1,1;0),1:tors(2,2,1;0)]", "6;[0:tors(2,1,1;0),1:full(2,2,1;1,1;[T(1)])]",
                                       "6;[0:tors(2,1,1;0),1:full(2,2,1;1,1;[T(2)])]"});
  CHECK_THROWS_AS(parse_decomposed(ctx, "6;[0:tors(2,1,1;0)]"), DomainError);
  CHECK_THROWS_AS(parse_decomposed(ctx, "6;[0:tors(2,1,1;0),2:tors(2,2,1;0)]"), DomainError);
  CHECK_THROWS_AS(parse_decomposed(ctx, "5;[0:tors(2,1,1;0),1:tors(2,2,1;0)]"), DomainError);
  CHECK_THROWS_AS(parse_decomposed(ctx, "6;[0:tors(2,1,1;0),1:tors(2,1,1;0)]"), DomainError);
  CHECK_THROWS_AS(parse_decomposed(ctx, "6;0:tors(2,1,1;0)"), ParseError);
  CHECK_THROWS_AS(parse_decomposed(ctx, "six;[]"), ParseError);
}

TEST_CASE("word arithmetic")
{
  WordRing W(GaloisRing::make(2, 1), 6);
  CHECK(W.mul(W.parse("X^5"), W.parse("X")) == W.one());
  CHECK(W.pow(W.parse("X"), 6) == W.one());
  CHECK(W.format(W.parse("X^3+2*X+1")) == "X^3+2*X+1");
  CHECK(W.format(W.zero()) == "0");
  CHECK(W.sub(W.parse("X"), W.parse("X")) == W.zero());
  CHECK(W.add(W.parse("3"), W.neg(W.parse("3"))) == W.zero());
  CHECK_THROWS_AS(W.parse("X +"), ParseError);
  CHECK_THROWS_AS(W.parse("u"), ParseError);
}
