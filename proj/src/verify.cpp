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

#include <gr2/verify.hpp>

#include <gr2/counting.hpp>
#include <gr2/dft.hpp>
#include <gr2/duality.hpp>
#include <gr2/literal.hpp>
#include <gr2/oracle.hpp>

#include <algorithm>
#include <random>
#include <sstream>

namespace gr2 {

namespace {

using Check = std::function<std::string()>;  // empty string on success

std::string label(unsigned p, unsigned s, unsigned n)
{
  return "p=" + std::to_string(p) + " s=" + std::to_string(s) + " n=" + std::to_string(n);
}

unsigned ipow(unsigned b, unsigned e)
{
  unsigned r = 1;
  while (e-- > 0)
    r *= b;
  return r;
}

BigCount ambient_size(const GaloisRing& G, unsigned n)
{
  return big_pow(G.p(), 2 * G.s() * n);
}

// Canonical enumeration, closed-form count and brute-force ideals agree, and
// every dual matches the brute-force dual.
std::string prime_power_oracle(unsigned p, unsigned s, unsigned a)
{
  auto R = CyclicRing::make({p, s, a});
  const unsigned N = R.length();
  Ambient A(R.ring_ptr(), N);
  const auto brute = brute_ideals(A);
  const auto canon = enumerate_ideals(R);
  if (BigCount(brute.size()) != count_all({p, s, a}) || brute.size() != canon.size())
    return "ideal counts differ: brute " + std::to_string(brute.size()) + ", canonical " +
           std::to_string(canon.size()) + ", formula " + to_decimal(count_all({p, s, a}));

  std::vector<std::vector<std::uint64_t>> brute_sets, canon_sets;
  for (const auto& I : brute)
    brute_sets.push_back(I.words);
  for (const auto& c : canon)
    canon_sets.push_back(materialize(A, R, c).words);
  std::sort(brute_sets.begin(), brute_sets.end());
  std::sort(canon_sets.begin(), canon_sets.end());
  if (brute_sets != canon_sets)
    return "canonical codes do not match the brute-force ideals";

  std::vector<DualKind> kinds{DualKind::Euclidean};
  if (s % 2 == 0)
    kinds.push_back(DualKind::Hermitian);
  for (const auto& c : canon) {
    const auto C = materialize(A, R, c);
    for (auto kind : kinds) {
      const auto D = brute_dual(A, C, kind);
      if (materialize(A, R, dual(R, c, kind)) != D)
        return std::string(to_string(kind)) + " dual differs from brute force at " + format_code(R, c);
      if (BigCount(C.words.size()) * D.words.size() != ambient_size(R.gr(), N))
        return "|C||C^perp| differs from the ambient size at " + format_code(R, c);
    }
  }
  return {};
}

std::string self_dual_counts(unsigned p, unsigned s, unsigned a, DualKind kind, bool brute)
{
  auto R = CyclicRing::make({p, s, a});
  const auto codes = enumerate_self_dual(R, kind);
  const BigCount expect = kind == DualKind::Euclidean ? count_E_prime_power({p, s, a}) : count_H_prime_power({p, s, a});
  if (BigCount(codes.size()) != expect)
    return "found " + std::to_string(codes.size()) + " codes, formula gives " + to_decimal(expect);
  std::unique_ptr<Ambient> A;
  if (brute)
    A = std::make_unique<Ambient>(R.ring_ptr(), R.length());
  for (const auto& c : codes) {
    if (!is_self_dual(R, c, kind))
      return format_code(R, c) + " is not self-dual";
    if (A) {
      const auto C = materialize(*A, R, c);
      if (brute_dual(*A, C, kind) != C)
        return format_code(R, c) + " differs from its brute-force dual";
    }
  }
  return {};
}

std::string solver_substitution(unsigned p, unsigned s, unsigned a, std::uint64_t limit)
{
  auto R = CyclicRing::make({p, s, a});
  const auto& F = R.gr().field();
  std::vector<DualKind> kinds{DualKind::Euclidean};
  if (s % 2 == 0)
    kinds.push_back(DualKind::Hermitian);
  for (auto kind : kinds)
    for (unsigned i1 = 1; i1 <= R.torsion_bound(); ++i1) {
      if (big_pow(p, s * i1) > limit)
        break;
      const auto sys = build_system(R, i1, kind);
      const auto sols = solve_system(F, sys);
      if (kind == DualKind::Hermitian && BigCount(sols.size()) != big_pow(p, s * i1 / 2))
        return "hermitian system i1=" + std::to_string(i1) + " has " + std::to_string(sols.size()) + " solutions";
      if (BigCount(sols.size()) != count_solutions(F, sys))
        return "solution count disagrees with the rank count at i1=" + std::to_string(i1);
      for (const auto& x : sols) {
        const auto lhs = apply_system(F, sys, x);
        for (unsigned k = 0; k < i1; ++k)
          if (lhs[k] != F.from_int(sys.b[k]))
            return "substitution fails at i1=" + std::to_string(i1);
      }
    }
  return {};
}

Word random_word(std::mt19937_64& rng, const GaloisRing& G, unsigned n)
{
  Word w(n);
  for (auto& e : w) {
    std::vector<long long> c(G.s());
    for (auto& x : c)
      x = static_cast<long long>(rng() % G.p2());
    e = G.from_coeffs(c);
  }
  return w;
}

std::string dft_identities(unsigned p, unsigned s, unsigned n, unsigned samples)
{
  CompositeContext ctx(p, s, n);
  WordRing W(ctx.base(), n);
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ n);
  for (unsigned t = 0; t < samples; ++t) {
    const auto x = random_word(rng, *ctx.base(), n);
    const auto y = random_word(rng, *ctx.base(), n);
    const auto fx = dft_forward(ctx, x);
    const auto fy = dft_forward(ctx, y);
    if (dft_inverse(ctx, fx) != x)
      return "inverse transform does not recover " + W.format(x);
    const auto fxy = dft_forward(ctx, W.mul(x, y));
    const auto fs = dft_forward(ctx, W.add(x, y));
    for (std::size_t i = 0; i < ctx.components(); ++i) {
      const auto& R = ctx.component(i);
      if (R.mul(fx[i], fy[i]) != fxy[i] || R.add(fx[i], fy[i]) != fs[i])
        return "transform is not a ring morphism at component " + std::to_string(i);
    }
  }
  return {};
}

// Every cyclic code of length n, built as products of component ideals,
// against brute-force duals. With full_scan, also compares against the
// brute-force ideal list.
std::string composite_oracle(unsigned p, unsigned s, unsigned n, bool full_scan)
{
  CompositeContext ctx(p, s, n);
  Ambient A(ctx.base(), n);
  std::vector<std::vector<CanonicalCode>> comps;
  for (std::size_t i = 0; i < ctx.components(); ++i)
    comps.push_back(enumerate_ideals(ctx.component(i)));

  std::vector<std::vector<std::uint64_t>> sets;
  std::vector<std::size_t> pos(comps.size(), 0);
  while (true) {
    DecomposedCode code{n, {}};
    for (std::size_t i = 0; i < comps.size(); ++i)
      code.comps.push_back(comps[i][pos[i]]);
    const auto C = materialize_composite(A, ctx, code);
    std::vector<Word> gens;
    for (auto g : C.gens)
      gens.push_back(A.decode(g));
    if (decompose_code(ctx, gens) != code)
      return "decomposition does not recover " + format_decomposed(ctx, code);
    const auto D = brute_dual(A, C, DualKind::Euclidean);
    if (materialize_composite(A, ctx, dual_decomposition(ctx, code)) != D)
      return "componentwise dual differs from brute force at " + format_decomposed(ctx, code);
    sets.push_back(C.words);

    std::size_t k = comps.size();
    while (k > 0 && ++pos[k - 1] == comps[k - 1].size())
      pos[--k] = 0;
    if (k == 0)
      break;
  }

  if (full_scan) {
    std::vector<std::vector<std::uint64_t>> brute;
    for (const auto& I : brute_ideals(A))
      brute.push_back(I.words);
    std::sort(brute.begin(), brute.end());
    std::sort(sets.begin(), sets.end());
    if (brute != sets)
      return "component products do not match the brute-force ideals (" + std::to_string(brute.size()) +
             " vs " + std::to_string(sets.size()) + ")";
  }

  const auto sd = enumerate_self_dual_composite(ctx);
  if (BigCount(sd.size()) != count_E_composite(p, s, n))
    return "self-dual enumeration gives " + std::to_string(sd.size()) + ", formula " +
           to_decimal(count_E_composite(p, s, n));
  for (const auto& c : sd) {
    const auto C = materialize_composite(A, ctx, c);
    if (brute_dual(A, C, DualKind::Euclidean) != C)
      return format_decomposed(ctx, c) + " is not self-dual at full length";
  }
  return {};
}

struct NamedCheck {
  std::string name;
  Check run;
};

std::vector<NamedCheck> build_checks(VerifyLevel level)
{
  const bool full = level == VerifyLevel::Full;
  std::vector<NamedCheck> out;

  struct PP {
    unsigned p, s, a;
  };
  std::vector<PP> oracle_params{{2, 1, 0}, {2, 1, 1}, {2, 1, 2}, {2, 2, 1}, {3, 1, 1}, {3, 2, 0}};
  if (full)
    oracle_params.insert(oracle_params.end(), {{5, 1, 0}, {3, 1, 0}, {2, 2, 0}});
  for (auto [p, s, a] : oracle_params)
    out.push_back({"ideals and duals vs oracle " + label(p, s, ipow(p, a)),
                   [p, s, a] { return prime_power_oracle(p, s, a); }});

  std::vector<PP> euclid{{2, 1, 1}, {2, 1, 2}, {2, 2, 1}, {3, 1, 1}};
  if (full)
    euclid.insert(euclid.end(), {{2, 1, 3}, {2, 1, 4}, {2, 2, 2}, {3, 1, 2}, {3, 2, 2}, {5, 1, 2}});
  for (auto [p, s, a] : euclid) {
    const bool brute = big_pow(p, 2 * s * ipow(p, a)) <= (1u << 16);
    out.push_back({"euclidean self-dual count " + label(p, s, ipow(p, a)),
                   [p, s, a, brute] { return self_dual_counts(p, s, a, DualKind::Euclidean, brute); }});
  }

  std::vector<PP> herm{{2, 2, 1}, {3, 2, 1}};
  if (full)
    herm.insert(herm.end(), {{2, 2, 2}, {2, 4, 1}, {3, 2, 2}, {2, 2, 3}});
  for (auto [p, s, a] : herm) {
    const bool brute = big_pow(p, 2 * s * ipow(p, a)) <= (1u << 16);
    out.push_back({"hermitian self-dual count " + label(p, s, ipow(p, a)),
                   [p, s, a, brute] { return self_dual_counts(p, s, a, DualKind::Hermitian, brute); }});
  }

  const std::uint64_t limit = full ? (std::uint64_t{1} << 20) : (std::uint64_t{1} << 12);
  std::vector<PP> systems{{2, 2, 2}, {2, 2, 3}, {3, 2, 2}, {2, 1, 3}};
  if (full)
    systems.insert(systems.end(), {{2, 4, 3}, {3, 4, 2}, {2, 2, 4}, {5, 2, 2}, {3, 1, 3}});
  for (auto [p, s, a] : systems)
    out.push_back({"system solutions by substitution " + label(p, s, ipow(p, a)),
                   [p, s, a, limit] { return solver_substitution(p, s, a, limit); }});

  struct Len {
    unsigned p, s, n;
  };
  const unsigned samples = full ? 200 : 25;
  std::vector<Len> lens{{2, 1, 6}, {3, 1, 6}};
  if (full)
    lens.insert(lens.end(), {{2, 1, 10}, {2, 1, 12}, {3, 1, 12}, {2, 2, 6}, {2, 1, 14}});
  for (auto [p, s, n] : lens)
    out.push_back({"transform round trip and morphism " + label(p, s, n),
                   [p, s, n, samples] { return dft_identities(p, s, n, samples); }});

  std::vector<std::pair<Len, bool>> comp{{{2, 1, 6}, true}, {{2, 1, 3}, true}};
  if (full)
    comp.insert(comp.end(), {{{2, 1, 7}, false}, {{3, 1, 4}, true}, {{3, 1, 2}, true}, {{2, 2, 3}, true}});
  for (auto [l, scan] : comp) {
    auto [p, s, n] = l;
    out.push_back({"composite decomposition and duals vs oracle " + label(p, s, n),
                   [p, s, n, scan] { return composite_oracle(p, s, n, scan); }});
  }
  return out;
}

} // namespace

bool run_verify(VerifyLevel level, const std::function<void(const CheckResult&)>& report)
{
  bool all = true;
  for (const auto& check : build_checks(level)) {
    CheckResult r{check.name, false, {}};
    try {
      r.detail = check.run();
      r.pass = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    all = all && r.pass;
    if (report)
      report(r);
  }
  return all;
}

} // namespace gr2
