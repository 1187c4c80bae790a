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
#include <gr2/duality.hpp>
#include <gr2/errors.hpp>
#include <gr2/literal.hpp>
#include <gr2/oracle.hpp>

#include <set>

using namespace gr2;

namespace {

CanonicalCode full(unsigned i0, unsigned i1, std::vector<GrElem> h = {}) { return FullCode{i0, i1, std::move(h)}; }
CanonicalCode tors(unsigned i1) { return TorsionCode{i1}; }

using Solution = std::vector<FqElem>;

std::vector<FqElem> rhs(const ResidueField& F, const SelfDualSystem& sys)
{
  std::vector<FqElem> out;
  for (auto v : sys.b)
    out.push_back(F.from_int(v));
  return out;
}

// Row-by-row back-substitution. Row i reads
//   d x_i + (x_i^sigma - x_i) = r_i   (Hermitian),  d x_i = r_i  (Euclidean)
// with d = M[i][i] in {0, 2}. For Hermitian rows d = 0 is Psi(x_i) = r_i and
// d = 2 is Tr(x_i) = r_i, so each step is a preimage under Psi or Tr.
void back_substitute(const ResidueField& F, const SelfDualSystem& sys, Solution& x, std::set<Solution>& out)
{
  const std::size_t i = x.size();
  if (i == sys.b.size()) {
    out.insert(x);
    return;
  }
  FqElem r = F.from_int(sys.b[i]);
  for (std::size_t j = 0; j < i; ++j)
    r = F.sub(r, F.scale(x[j], sys.M[i][j]));
  const Digit d = sys.M[i][i] % F.p();
  std::vector<FqElem> cands;
  if (sys.kind == DualKind::Hermitian) {
    if (d == 0)
      cands = F.preimage_set(ResidueField::HalfMap::Psi, r);
    else if (d == 2)
      cands = F.preimage_set(ResidueField::HalfMap::Trace, r);
    else
      FAIL("unexpected diagonal entry ", d);
  } else if (d == 0) {
    if (F.is_zero(r))
      for (std::uint64_t k = 0; k < F.size(); ++k)
        cands.push_back(F.from_index(k));
  } else {
    cands.push_back(F.mul(r, F.inv(F.from_int(d))));
  }
  for (const auto& c : cands) {
    x.push_back(c);
    back_substitute(F, sys, x, out);
    x.pop_back();
  }
}

std::set<Solution> sequential_solutions(const ResidueField& F, const SelfDualSystem& sys)
{
  std::set<Solution> out;
  Solution x;
  back_substitute(F, sys, x, out);
  return out;
}

std::set<Solution> scanned_solutions(const ResidueField& F, const SelfDualSystem& sys)
{
  std::set<Solution> out;
  const auto b = rhs(F, sys);
  const std::size_t k = sys.b.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i)
    total *= F.size();
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Solution x;
    auto t = idx;
    for (std::size_t i = 0; i < k; ++i) {
      x.push_back(F.from_index(t % F.size()));
      t /= F.size();
    }
    if (apply_system(F, sys, x) == b)
      out.insert(x);
  }
  return out;
}

// C(n, k) mod p from Pascal's rule, for n below the table size.
struct PascalModP {
  unsigned p;
  std::vector<std::vector<Digit>> rows;
  PascalModP(unsigned p_, unsigned n_max) : p(p_)
  {
    for (unsigned n = 0; n <= n_max; ++n) {
      std::vector<Digit> row(n + 1, 1);
      for (unsigned k = 1; k < n; ++k)
        row[k] = (rows[n - 1][k - 1] + rows[n - 1][k]) % p;
      rows.push_back(std::move(row));
    }
  }
  long long operator()(long long n, long long k) const
  {
    if (k < 0 || k > n)
      return 0;
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }
};

Digit mod_p(long long v, unsigned p) { return static_cast<Digit>(((v % p) + p) % p); }

const CodeParams kOracle[] = {{2, 1, 0}, {2, 1, 1}, {2, 1, 2}, {2, 2, 1}, {3, 1, 1}, {3, 2, 0}, {5, 1, 0}};

} // namespace

TEST_CASE("Euclidean dual examples")
{
  auto R = CyclicRing::make({2, 1, 1});
  const auto& G = R.gr();
  CHECK(euclidean_dual(R, full(1, 1, {G.zero()})) == full(1, 1, {G.one()}));
  CHECK(euclidean_dual(R, full(1, 1, {G.one()})) == full(1, 1, {G.zero()}));
  CHECK(euclidean_dual(R, tors(0)) == tors(0));
  for (const CodeParams params : {CodeParams{2, 1, 1}, CodeParams{3, 2, 2}, CodeParams{5, 1, 0}}) {
    auto Q = CyclicRing::make(params);
    CHECK(euclidean_dual(Q, full(0, 0)) == tors(Q.length()));
    CHECK(euclidean_dual(Q, tors(Q.length())) == full(0, 0));
  }
  CHECK(is_self_dual(R, tors(0), DualKind::Euclidean));
  CHECK_FALSE(is_self_dual(R, full(1, 1, {G.zero()}), DualKind::Euclidean));
  CHECK_FALSE(is_self_dual(R, full(0, 0), DualKind::Euclidean));
}

TEST_CASE("Hermitian dual examples")
{
  auto R = CyclicRing::make({2, 2, 1});
  const auto& G = R.gr();
  CHECK(hermitian_dual(R, tors(0)) == tors(0));
  CHECK(hermitian_dual(R, full(1, 1, {G.xi()})) == full(1, 1, {G.xi()}));
  CHECK(is_self_dual(R, full(1, 1, {G.xi()}), DualKind::Hermitian));
  CHECK_FALSE(is_self_dual(R, full(0, 0), DualKind::Hermitian));
  // The generator with h = xi is 1 + u + 2 xi^2.
  CHECK(normalize(R, {parse_quot_poly(R, "1+u+2*x^2")}) == full(1, 1, {G.xi()}));
  CHECK(normalize(R, {parse_quot_poly(R, "1+u+2*x")}) == full(1, 1, {G.mul(G.xi(), G.xi())}));
  for (const auto& c : enumerate_ideals(R))
    CHECK(conjugate_code(R, conjugate_code(R, c)) == c);

  auto odd = CyclicRing::make({2, 1, 1});
  CHECK_THROWS_AS(hermitian_dual(odd, tors(0)), DomainError);
  CHECK_THROWS_AS(is_self_dual(odd, tors(0), DualKind::Hermitian), DomainError);
}

TEST_CASE("dual laws on every ideal")
{
  for (const CodeParams params : {CodeParams{2, 1, 3}, CodeParams{2, 2, 2}, CodeParams{3, 1, 2}, CodeParams{3, 2, 1},
                                  CodeParams{5, 1, 1}, CodeParams{2, 4, 1}, CodeParams{2, 1, 4}}) {
    CAPTURE(params.p);
    CAPTURE(params.s);
    CAPTURE(params.a);
    auto R = CyclicRing::make(params);
    const auto total = big_pow(params.p, 2 * params.s * R.length());
    for (const auto& c : enumerate_ideals(R)) {
      const auto e = euclidean_dual(R, c);
      CHECK(euclidean_dual(R, e) == c);
      CHECK(cardinality(R, c) * cardinality(R, e) == total);
      CHECK(euclidean_dual_by_annihilator(R, c) == e);
      if (auto f = euclidean_dual_by_formula(R, c))
        CHECK(*f == e);
      if (params.s % 2 == 0) {
        const auto h = hermitian_dual(R, c);
        CHECK(hermitian_dual(R, h) == c);
        CHECK(cardinality(R, c) * cardinality(R, h) == total);
      }
    }
  }
}

TEST_CASE("duals agree with brute-force inner products")
{
  for (const auto& params : kOracle) {
    CAPTURE(params.p);
    CAPTURE(params.s);
    CAPTURE(params.a);
    auto R = CyclicRing::make(params);
    Ambient A(R.ring_ptr(), R.length());
    for (const auto& c : enumerate_ideals(R)) {
      const auto dense = materialize(A, R, c);
      CHECK(brute_dual(A, dense, DualKind::Euclidean) == materialize(A, R, euclidean_dual(R, c)));
      if (params.s % 2 == 0)
        CHECK(brute_dual(A, dense, DualKind::Hermitian) == materialize(A, R, hermitian_dual(R, c)));
    }
  }
}

TEST_CASE("system construction")
{
  auto sys = build_system(CyclicRing::make({2, 1, 1}), 1, DualKind::Euclidean);
  CHECK(sys.i0 == 1);
  CHECK(sys.M == std::vector<std::vector<Digit>>{{0}});
  CHECK(sys.b == std::vector<Digit>{1});

  sys = build_system(CyclicRing::make({2, 1, 2}), 2, DualKind::Euclidean);
  CHECK(sys.M == std::vector<std::vector<Digit>>{{0, 0}, {0, 0}});
  CHECK(sys.b == std::vector<Digit>{1, 0});

  sys = build_system(CyclicRing::make({3, 1, 1}), 1, DualKind::Euclidean);
  CHECK(sys.M == std::vector<std::vector<Digit>>{{2}});
  CHECK(sys.b == std::vector<Digit>{1});

  CHECK_THROWS_AS(build_system(CyclicRing::make({2, 1, 2}), 3, DualKind::Euclidean), DomainError);
  CHECK_THROWS_AS(build_system(CyclicRing::make({2, 1, 0}), 1, DualKind::Euclidean), DomainError);

  for (const unsigned p : {2u, 3u, 5u, 7u}) {
    for (unsigned a = 1; a <= 4; ++a) {
      unsigned tb = 1;
      for (unsigned k = 1; k < a; ++k)
        tb *= p;
      if (tb > 64)
        continue;
      auto R = CyclicRing::make({p, 1, a});
      const PascalModP binom(p, R.length() + 1);
      for (unsigned i1 = 0; i1 <= tb; ++i1) {
        CAPTURE(p);
        CAPTURE(a);
        CAPTURE(i1);
        const auto S = build_system(R, i1, DualKind::Euclidean);
        const long long i0 = static_cast<long long>(R.length()) - i1;
        CHECK(S.i0 == i0);
        for (unsigned i = 1; i <= i1; ++i) {
          for (unsigned j = 1; j <= i1; ++j) {
            Digit expect = 0;
            if (j < i)
              expect = mod_p(((i0 + j - 1) % 2 ? -1 : 1) * binom(i0 - j + 1, i - j), p);
            else if (j == i)
              expect = mod_p(((i0 + i - 1) % 2 ? -1 : 1) + 1, p);
            CHECK(S.M[i - 1][j - 1] == expect);
          }
          CHECK(S.b[i - 1] == (i + i1 == tb + 1 ? 1u : 0u));
        }
        // Every row after the first annihilates b.
        for (unsigned i = 1; i < i1; ++i) {
          long long acc = 0;
          for (unsigned j = 1; j <= i; ++j)
            acc += static_cast<long long>(S.M[i][j - 1]) * S.b[j - 1];
          CHECK(acc % p == 0);
        }
        // Entry identity on the binomial parts, k < j < i.
        for (unsigned i = 1; i <= i1; ++i)
          for (unsigned j = 1; j < i; ++j)
            for (unsigned k = 1; k < j; ++k) {
              const long long lhs = static_cast<long long>(S.M[i - 1][j - 1]) * S.M[j - 1][k - 1];
              const long long rhs =
                  ((i0 + j - 1) % 2 ? -1 : 1) * binom(i - k, j - k) * static_cast<long long>(S.M[i - 1][k - 1]);
              CHECK(mod_p(lhs - rhs, p) == 0);
            }
        // Diagonal shape: zero for p = 2, otherwise alternating 2, 0 by the parity of i0 + i.
        for (unsigned i = 1; i <= i1; ++i) {
          if (p == 2)
            CHECK(S.M[i - 1][i - 1] == 0);
          else
            CHECK(S.M[i - 1][i - 1] == ((i0 + i) % 2 == 1 ? 2u : 0u));
        }
      }
    }
  }
}

TEST_CASE("solver examples")
{
  auto R4 = CyclicRing::make({2, 2, 1});
  const auto& F4 = R4.gr().field();
  const auto omega = R4.gr().residue(R4.gr().xi());
  const auto h = build_system(R4, 1, DualKind::Hermitian);
  const auto sol = solve_system(F4, h);
  CHECK(std::set<Solution>(sol.begin(), sol.end()) ==
        std::set<Solution>{{omega}, {F4.mul(omega, omega)}});
  CHECK(count_solutions(F4, h) == 2);
  CHECK(solve_system(F4, build_system(R4, 1, DualKind::Euclidean)).empty());
  CHECK(count_solutions(F4, build_system(R4, 1, DualKind::Euclidean)) == 0);

  auto R9 = CyclicRing::make({3, 2, 1});
  const auto& F9 = R9.gr().field();
  const auto h9 = build_system(R9, 1, DualKind::Hermitian);
  const auto sol9 = solve_system(F9, h9);
  CHECK(sol9.size() == 3);
  for (const auto& x : sol9) {
    // x^3 + x = 1
    CHECK(F9.add(F9.pow(x[0], 3), x[0]) == F9.one());
  }
  CHECK(std::set<Solution>(sol9.begin(), sol9.end()) == scanned_solutions(F9, h9));
}

TEST_CASE("solver against back-substitution and exhaustive scan")
{
  struct Case {
    CodeParams params;
    DualKind kind;
  };
  const Case cases[] = {{{2, 2, 2}, DualKind::Hermitian},  {{2, 2, 3}, DualKind::Hermitian},
                        {{3, 2, 2}, DualKind::Hermitian},  {{2, 4, 2}, DualKind::Hermitian},
                        {{5, 2, 2}, DualKind::Hermitian},  {{2, 1, 3}, DualKind::Euclidean},
                        {{2, 1, 4}, DualKind::Euclidean},  {{3, 1, 2}, DualKind::Euclidean},
                        {{2, 2, 2}, DualKind::Euclidean},  {{5, 1, 2}, DualKind::Euclidean},
                        {{3, 2, 2}, DualKind::Euclidean}};
  for (const auto& [params, kind] : cases) {
    auto R = CyclicRing::make(params);
    const auto& F = R.gr().field();
    for (unsigned i1 = 0; i1 <= R.torsion_bound(); ++i1) {
      CAPTURE(params.p);
      CAPTURE(params.s);
      CAPTURE(params.a);
      CAPTURE(i1);
      const auto sys = build_system(R, i1, kind);
      if (big_pow(F.size(), i1) > (1u << 16))
        continue;
      const auto sol = solve_system(F, sys);
      const std::set<Solution> got(sol.begin(), sol.end());
      CHECK(got.size() == sol.size());
      CHECK(BigCount(sol.size()) == count_solutions(F, sys));
      CHECK(got == sequential_solutions(F, sys));
      if (big_pow(F.size(), i1) <= (1u << 12))
        CHECK(got == scanned_solutions(F, sys));
      if (kind == DualKind::Hermitian)
        CHECK(BigCount(sol.size()) == big_pow(params.p, params.s * i1 / 2));
    }
  }
}

TEST_CASE("self-dual enumeration")
{
  auto R = CyclicRing::make({2, 2, 1});
  const auto& G = R.gr();
  const auto herm = enumerate_self_dual(R, DualKind::Hermitian);
  CHECK(herm == std::vector<CanonicalCode>{tors(0), full(1, 1, {G.xi()}), full(1, 1, {G.mul(G.xi(), G.xi())})});
  CHECK(enumerate_self_dual(CyclicRing::make({2, 1, 3}), DualKind::Euclidean).size() == 11);
  CHECK(enumerate_self_dual(CyclicRing::make({3, 1, 1}), DualKind::Euclidean).size() == 2);

  for (const CodeParams params : {CodeParams{2, 1, 1}, CodeParams{2, 1, 2}, CodeParams{2, 1, 3}, CodeParams{2, 2, 1},
                                  CodeParams{2, 2, 2}, CodeParams{3, 1, 1}, CodeParams{3, 1, 2}, CodeParams{3, 2, 1},
                                  CodeParams{3, 2, 2}, CodeParams{2, 4, 1}, CodeParams{5, 1, 2}, CodeParams{2, 1, 0}}) {
    CAPTURE(params.p);
    CAPTURE(params.s);
    CAPTURE(params.a);
    auto Q = CyclicRing::make(params);
    std::vector<DualKind> kinds{DualKind::Euclidean};
    if (params.s % 2 == 0)
      kinds.push_back(DualKind::Hermitian);
    for (const auto kind : kinds) {
      const auto codes = enumerate_self_dual(Q, kind);
      const auto expect = kind == DualKind::Euclidean ? count_E_prime_power(params) : count_H_prime_power(params);
      CHECK(BigCount(codes.size()) == expect);
      for (const auto& c : codes) {
        CHECK(is_self_dual(Q, c, kind));
        CHECK(index_sum(Q, c) == Q.length());
      }
      // Nothing outside the enumeration is self-dual.
      if (count_all(params) <= 2000) {
        std::size_t sd = 0;
        for (const auto& c : enumerate_ideals(Q))
          sd += is_self_dual(Q, c, kind);
        CHECK(sd == codes.size());
      }
    }
  }
}
