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

#include <gr2/duality.hpp>

#include <gr2/errors.hpp>

#include <algorithm>

namespace gr2 {

namespace {

void require_even(const CyclicRing& R)
{
  if (R.gr().s() % 2 != 0)
    throw DomainError("Hermitian duality requires even s, got s = " + std::to_string(R.gr().s()));
}

using Series = std::vector<FqElem>;

// Inverse of a power series with unit constant term, mod Y^len.
Series series_inverse(const ResidueField& F, const Series& v, std::size_t len)
{
  Series inv(len, F.zero());
  if (len == 0)
    return inv;
  const auto c0 = F.inv(v[0]);
  inv[0] = c0;
  for (std::size_t k = 1; k < len; ++k) {
    auto acc = F.zero();
    for (std::size_t j = 1; j <= k && j < v.size(); ++j)
      acc = F.add(acc, F.mul(v[j], inv[k - j]));
    inv[k] = F.neg(F.mul(acc, c0));
  }
  return inv;
}

Series series_mul(const ResidueField& F, const Series& a, const Series& b, std::size_t len)
{
  Series r(len, F.zero());
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (F.is_zero(a[i]))
      continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j)
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  return r;
}

long long sign(unsigned e) { return e % 2 == 0 ? 1 : -1; }

// Mod-p Gaussian elimination on A v = rhs. Returns the particular solution
// and kernel basis, or nullopt when inconsistent.
struct AffineSolution {
  std::vector<Digit> particular;
  std::vector<std::vector<Digit>> kernel;
};

std::optional<AffineSolution> solve_mod_p(unsigned p, std::vector<std::vector<Digit>> A, std::vector<Digit> rhs)
{
  const std::size_t rows = A.size();
  const std::size_t cols = rows == 0 ? 0 : A[0].size();
  auto inv_mod = [p](Digit a) {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e > 0) {
      if (e & 1)
        r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<Digit>(r);
  };

  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && A[piv][c] == 0)
      ++piv;
    if (piv == rows)
      continue;
    std::swap(A[rank], A[piv]);
    std::swap(rhs[rank], rhs[piv]);
    const auto iv = inv_mod(A[rank][c]);
    for (auto& v : A[rank])
      v = static_cast<Digit>(std::uint64_t{v} * iv % p);
    rhs[rank] = static_cast<Digit>(std::uint64_t{rhs[rank]} * iv % p);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || A[r][c] == 0)
        continue;
      const std::uint64_t f = A[r][c];
      for (std::size_t k = 0; k < cols; ++k)
        A[r][k] = static_cast<Digit>((A[r][k] + (p - f) * A[rank][k]) % p);
      rhs[r] = static_cast<Digit>((rhs[r] + (p - f) * rhs[rank]) % p);
    }
    pivots.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (rhs[r] != 0)
      return std::nullopt;

  AffineSolution sol;
  sol.particular.assign(cols, 0);
  for (std::size_t r = 0; r < rank; ++r)
    sol.particular[pivots[r]] = rhs[r];
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots)
    is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f])
      continue;
    std::vector<Digit> v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < rank; ++r)
      v[pivots[r]] = static_cast<Digit>((p - A[r][f]) % p);
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

// The system as an F_p-linear map on s * i1 coordinates.
std::optional<AffineSolution> restrict_and_solve(const ResidueField& F, const SelfDualSystem& sys)
{
  const unsigned s = F.s();
  const std::size_t n = std::size_t{s} * sys.i1;
  std::vector<std::vector<Digit>> A(n, std::vector<Digit>(n, 0));
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<FqElem> x(sys.i1, F.zero());
    x[col / s].c[col % s] = 1;
    const auto image = apply_system(F, sys, x);
    for (std::size_t row = 0; row < n; ++row)
      A[row][col] = image[row / s].c[row % s];
  }
  std::vector<Digit> rhs(n, 0);
  for (std::size_t i = 0; i < sys.i1; ++i)
    rhs[i * s] = sys.b[i] % F.p();
  return solve_mod_p(F.p(), std::move(A), std::move(rhs));
}

} // namespace

const char* to_string(DualKind kind) { return kind == DualKind::Euclidean ? "euclidean" : "hermitian"; }

std::optional<CanonicalCode> euclidean_dual_by_formula(const CyclicRing& R, const CanonicalCode& code)
{
  const auto* f = std::get_if<FullCode>(&code);
  const unsigned N = R.length();
  if (f == nullptr || R.a() == 0 || f->i0 + f->i1 > N)
    return std::nullopt;
  const auto& G = R.gr();
  const unsigned p = G.p();
  const unsigned i0 = f->i0;
  const unsigned i1 = f->i1;
  const unsigned tb = R.torsion_bound();

  auto inner = R.zero();
  for (unsigned t = 0; t < i1; ++t) {
    auto acc = G.zero();
    for (unsigned j = 0; j <= t; ++j)
      acc = G.add(acc, G.scale(f->h[j], sign(i0 + j) * static_cast<long long>(R.binom(i0 - j, t - j))));
    inner.y[t] = acc;
  }
  auto g1 = R.sub(R.y_power(N - i1), R.times_p(R.mul(R.y_power(N - i0 - i1), inner)));

  const unsigned K = (N - i0 + i1 - 1) / tb;
  for (unsigned t = 1; t <= K; ++t) {
    long long coef = 0;
    for (unsigned j = 1; j <= std::min(t, p - 1); ++j)
      coef += sign(j + 1) * static_cast<long long>(R.binom(p - j, t - j)) * R.binom(p, j);
    g1 = R.add(g1, R.scale(R.y_power(t * tb - i1), G.from_int(coef)));
  }
  return normalize(R, {g1, R.times_p(R.y_power(N - i0))});
}

CanonicalCode euclidean_dual_by_annihilator(const CyclicRing& R, const CanonicalCode& code)
{
  const unsigned N = R.length();
  if (const auto* t = std::get_if<TorsionCode>(&code))
    return normalize(R, {R.y_power(N - t->i1), R.constant(R.gr().from_int(R.gr().p()))});

  const auto& f = std::get<FullCode>(code);
  if (f.i1 == 0)
    return TorsionCode{N - f.i0};

  // The dual has residue (Y^{N-i1}) and torsion (Y^{N-i0}); its first
  // generator Y^{N-i1} + p w' must kill g~, i.e. zbar + w' Y^{i0} vbar = 0
  // where Y^{N-i1} g~ = p z and g~ = Y^{i0} v mod p.
  const auto& G = R.gr();
  const auto& F = G.field();
  const auto gt = R.tilde(generators(R, code)[0]);
  const auto prod = R.mul(R.y_power(N - f.i1), gt);
  const unsigned len = N - f.i0;
  Series zq(len, F.zero());
  Series vq(len, F.zero());
  for (unsigned k = 0; k < N; ++k) {
    const auto zk = G.residue(G.div_p(prod.y[k]));
    const auto vk = G.residue(gt.y[k]);
    if (k < f.i0) {
      if (!F.is_zero(zk) || !F.is_zero(vk))
        throw InternalError("dual construction: unexpected low-order term");
      continue;
    }
    zq[k - f.i0] = zk;
    vq[k - f.i0] = vk;
  }
  auto w = series_mul(F, zq, series_inverse(F, vq, len), len);
  for (auto& c : w)
    c = F.neg(c);
  auto g = R.y_power(N - f.i1);
  for (unsigned k = 0; k < len; ++k)
    g.y[k] = G.add(g.y[k], G.times_p(G.lift_teichmuller(w[k])));
  return normalize(R, {g, R.times_p(R.y_power(len))});
}

CanonicalCode euclidean_dual(const CyclicRing& R, const CanonicalCode& code)
{
  if (auto d = euclidean_dual_by_formula(R, code))
    return *d;
  return euclidean_dual_by_annihilator(R, code);
}

CanonicalCode conjugate_code(const CyclicRing& R, const CanonicalCode& code)
{
  require_even(R);
  if (std::holds_alternative<TorsionCode>(code))
    return code;
  auto f = std::get<FullCode>(code);
  for (auto& hj : f.h)
    hj = R.gr().conjugate(hj);
  return f;
}

CanonicalCode hermitian_dual(const CyclicRing& R, const CanonicalCode& code)
{
  require_even(R);
  return conjugate_code(R, euclidean_dual(R, code));
}

CanonicalCode dual(const CyclicRing& R, const CanonicalCode& code, DualKind kind)
{
  return kind == DualKind::Euclidean ? euclidean_dual(R, code) : hermitian_dual(R, code);
}

bool is_self_dual(const CyclicRing& R, const CanonicalCode& code, DualKind kind)
{
  if (kind == DualKind::Hermitian)
    require_even(R);
  if (index_sum(R, code) != R.length())
    return false;
  return dual(R, code, kind) == code;
}

SelfDualSystem build_system(const CyclicRing& R, unsigned i1, DualKind kind)
{
  if (kind == DualKind::Hermitian)
    require_even(R);
  if (R.a() == 0 && i1 > 0)
    throw DomainError("length 1 has no self-duality system with i1 > 0");
  if (i1 > R.torsion_bound())
    throw DomainError("i1 = " + std::to_string(i1) + " exceeds p^(a-1) = " + std::to_string(R.torsion_bound()));
  const unsigned p = R.gr().p();
  SelfDualSystem sys;
  sys.kind = kind;
  sys.i1 = i1;
  sys.i0 = R.length() - i1;
  sys.M.assign(i1, std::vector<Digit>(i1, 0));
  sys.b.assign(i1, 0);
  auto modp = [p](long long v) { return static_cast<Digit>(((v % p) + p) % p); };
  for (unsigned i = 0; i < i1; ++i) {
    for (unsigned j = 0; j < i; ++j)
      sys.M[i][j] = modp(sign(sys.i0 + j) * static_cast<long long>(R.binom(sys.i0 - j, i - j) % p));
    sys.M[i][i] = modp(sign(sys.i0 + i) + 1);
  }
  if (i1 > 0) {
    const unsigned pos = R.torsion_bound() - i1;  // 0-based
    if (pos < i1)
      sys.b[pos] = 1;
  }
  return sys;
}

std::vector<FqElem> apply_system(const ResidueField& F, const SelfDualSystem& sys, const std::vector<FqElem>& x)
{
  std::vector<FqElem> out(sys.i1, F.zero());
  for (unsigned i = 0; i < sys.i1; ++i) {
    for (unsigned j = 0; j <= i; ++j)
      if (sys.M[i][j] != 0)
        out[i] = F.add(out[i], F.scale(x[j], sys.M[i][j]));
    if (sys.kind == DualKind::Hermitian)
      out[i] = F.add(out[i], F.psi(x[i]));
  }
  return out;
}

BigCount count_solutions(const ResidueField& F, const SelfDualSystem& sys)
{
  auto sol = restrict_and_solve(F, sys);
  if (!sol)
    return 0;
  return big_pow(F.p(), sol->kernel.size());
}

std::vector<std::vector<FqElem>> solve_system(const ResidueField& F, const SelfDualSystem& sys,
                                              std::uint64_t ceiling)
{
  if (sys.kind == DualKind::Hermitian && F.s() % 2 != 0)
    throw DomainError("Hermitian duality requires even s");
  auto sol = restrict_and_solve(F, sys);
  if (!sol)
    return {};
  const unsigned p = F.p();
  const unsigned s = F.s();
  const std::size_t kdim = sol->kernel.size();
  if (big_pow(p, kdim) > ceiling)
    throw LimitError("system has " + to_decimal(big_pow(p, kdim)) + " solutions, above the ceiling " +
                     std::to_string(ceiling));

  std::vector<std::vector<FqElem>> out;
  std::vector<Digit> coef(kdim, 0);
  while (true) {
    std::vector<FqElem> x(sys.i1, F.zero());
    for (std::size_t idx = 0; idx < sol->particular.size(); ++idx) {
      std::uint64_t v = sol->particular[idx];
      for (std::size_t k = 0; k < kdim; ++k)
        v += std::uint64_t{coef[k]} * sol->kernel[k][idx];
      x[idx / s].c[idx % s] = static_cast<Digit>(v % p);
    }
    out.push_back(std::move(x));
    std::size_t k = 0;
    while (k < kdim && ++coef[k] == p) {
      coef[k] = 0;
      ++k;
    }
    if (k == kdim)
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_self_dual(const CyclicRing& R, DualKind kind, const std::function<bool(const CanonicalCode&)>& visit)
{
  if (kind == DualKind::Hermitian)
    require_even(R);
  if (!visit(TorsionCode{0}))
    return;
  const auto& G = R.gr();
  for (unsigned i1 = 1; i1 <= R.torsion_bound(); ++i1) {
    const auto sys = build_system(R, i1, kind);
    std::vector<CanonicalCode> codes;
    for (const auto& x : solve_system(G.field(), sys)) {
      FullCode f{sys.i0, i1, {}};
      for (const auto& xj : x)
        f.h.push_back(G.lift_teichmuller(xj));
      codes.emplace_back(std::move(f));
    }
    std::sort(codes.begin(), codes.end(),
              [&](const CanonicalCode& x, const CanonicalCode& y) { return canonical_less(R, x, y); });
    for (const auto& c : codes)
      if (!visit(c))
        return;
  }
}

std::vector<CanonicalCode> enumerate_self_dual(const CyclicRing& R, DualKind kind)
{
  std::vector<CanonicalCode> out;
  for_each_self_dual(R, kind, [&](const CanonicalCode& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

} // namespace gr2
