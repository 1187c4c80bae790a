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

#include <gr2/cyclic_core.hpp>

#include <gr2/errors.hpp>

#include <algorithm>

namespace gr2 {

namespace {

unsigned int_pow(unsigned b, unsigned e)
{
  unsigned r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > (1u << 24) / b)
      throw DomainError("code length p^a is too large");
    r *= b;
  }
  return r;
}

// Rank of a set of vectors over F_q.
std::size_t fq_rank(const ResidueField& F, std::vector<std::vector<FqElem>> rows, unsigned cols)
{
  std::size_t rank = 0;
  for (unsigned c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && F.is_zero(rows[piv][c]))
      ++piv;
    if (piv == rows.size())
      continue;
    std::swap(rows[rank], rows[piv]);
    const auto iv = F.inv(rows[rank][c]);
    for (auto& v : rows[rank])
      v = F.mul(v, iv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || F.is_zero(rows[r][c]))
        continue;
      const auto f = rows[r][c];
      for (unsigned k = c; k < cols; ++k)
        rows[r][k] = F.sub(rows[r][k], F.mul(f, rows[rank][k]));
    }
    ++rank;
  }
  return rank;
}

// Lifts a residue vector by copying digits (not Teichmuller): cheap and
// sufficient wherever only the residue class matters.
GrElem digit_lift(const FqElem& x) { return GrElem{x.c}; }

} // namespace

// ----------------------------------------------------------------- CyclicRing

CyclicRing::CyclicRing(RingPtr ring, unsigned a)
  : ring_(std::move(ring)), a_(a), n_(int_pow(ring_->p(), a)),
    tb_(a == 0 ? 0 : int_pow(ring_->p(), a - 1))
{
  const Digit m = ring_->p2();
  const unsigned size = std::max(n_, ring_->p()) + 1;
  pascal_.assign(size, std::vector<Digit>(size, 0));
  for (unsigned n = 0; n < size; ++n) {
    pascal_[n][0] = 1 % m;
    for (unsigned k = 1; k <= n; ++k)
      pascal_[n][k] = (pascal_[n - 1][k - 1] + (k < n ? pascal_[n - 1][k] : 0)) % m;
  }
  reduction_.assign(n_, 0);
  qbar_.assign(n_, 0);
  const unsigned p = ring_->p();
  for (unsigned k = 1; k < n_; ++k) {
    const Digit c = pascal_[n_][k];
    reduction_[k] = (m - c) % m;
    if (c % p != 0)
      throw InternalError("binomial C(p^a, k) not divisible by p");
    qbar_[k] = (c / p) % p;
  }

  // (Y+1)^N - 1 must vanish after reduction.
  auto check = sub(pow(add(y_power(1), one()), n_), one());
  if (!is_zero(check))
    throw InternalError("Y-reduction identity failed");
}

CyclicRing CyclicRing::make(const CodeParams& params)
{
  return CyclicRing(GaloisRing::make(params.p, params.s), params.a);
}

Digit CyclicRing::binom(unsigned n, unsigned k) const
{
  if (k > n)
    return 0;
  if (n >= pascal_.size())
    throw InternalError("binomial table too small");
  return pascal_[n][k];
}

QuotPoly CyclicRing::zero() const { return QuotPoly{std::vector<GrElem>(n_, ring_->zero())}; }

QuotPoly CyclicRing::one() const
{
  auto f = zero();
  f.y[0] = ring_->one();
  return f;
}

QuotPoly CyclicRing::constant(const GrElem& c) const
{
  auto f = zero();
  f.y[0] = c;
  return f;
}

QuotPoly CyclicRing::y_power(unsigned k) const
{
  if (k < n_) {
    auto f = zero();
    f.y[k] = ring_->one();
    return f;
  }
  auto base = zero();
  if (n_ == 1)
    return zero();  // Y = 0 when N = 1
  base.y[1] = ring_->one();
  return pow(base, k);
}

QuotPoly CyclicRing::u_power(unsigned k) const
{
  std::vector<GrElem> u(n_, ring_->zero());
  u[k % n_] = ring_->one();
  return from_u(u);
}

bool CyclicRing::is_zero(const QuotPoly& f) const
{
  return std::all_of(f.y.begin(), f.y.end(), [this](const GrElem& c) { return ring_->is_zero(c); });
}

QuotPoly CyclicRing::add(const QuotPoly& f, const QuotPoly& g) const
{
  QuotPoly r{std::vector<GrElem>(n_)};
  for (unsigned i = 0; i < n_; ++i)
    r.y[i] = ring_->add(f.y[i], g.y[i]);
  return r;
}

QuotPoly CyclicRing::sub(const QuotPoly& f, const QuotPoly& g) const
{
  QuotPoly r{std::vector<GrElem>(n_)};
  for (unsigned i = 0; i < n_; ++i)
    r.y[i] = ring_->sub(f.y[i], g.y[i]);
  return r;
}

QuotPoly CyclicRing::neg(const QuotPoly& f) const { return sub(zero(), f); }

QuotPoly CyclicRing::mul(const QuotPoly& f, const QuotPoly& g) const
{
  const auto& R = *ring_;
  std::vector<GrElem> prod(2 * n_ - 1, R.zero());
  for (unsigned i = 0; i < n_; ++i) {
    if (R.is_zero(f.y[i]))
      continue;
    for (unsigned j = 0; j < n_; ++j) {
      if (R.is_zero(g.y[j]))
        continue;
      prod[i + j] = R.add(prod[i + j], R.mul(f.y[i], g.y[j]));
    }
  }
  for (unsigned t = 2 * n_ - 2; t >= n_; --t) {
    if (R.is_zero(prod[t]))
      continue;
    const auto c = prod[t];
    prod[t] = R.zero();
    for (unsigned k = 1; k < n_; ++k)
      if (reduction_[k] != 0)
        prod[t - n_ + k] = R.add(prod[t - n_ + k], R.scale(c, reduction_[k]));
  }
  prod.resize(n_);
  return QuotPoly{std::move(prod)};
}

QuotPoly CyclicRing::scale(const QuotPoly& f, const GrElem& c) const
{
  QuotPoly r{std::vector<GrElem>(n_)};
  for (unsigned i = 0; i < n_; ++i)
    r.y[i] = ring_->mul(f.y[i], c);
  return r;
}

QuotPoly CyclicRing::times_p(const QuotPoly& f) const
{
  QuotPoly r{std::vector<GrElem>(n_)};
  for (unsigned i = 0; i < n_; ++i)
    r.y[i] = ring_->times_p(f.y[i]);
  return r;
}

QuotPoly CyclicRing::pow(const QuotPoly& f, unsigned e) const
{
  auto r = one();
  auto b = f;
  while (e > 0) {
    if (e & 1)
      r = mul(r, b);
    e >>= 1;
    if (e > 0)
      b = mul(b, b);
  }
  return r;
}

QuotPoly CyclicRing::from_u(const std::vector<GrElem>& ucoeffs) const
{
  // u^k = sum_j C(k, j) Y^j.
  if (ucoeffs.size() != n_)
    throw DomainError("polynomial length does not match p^a");
  auto r = zero();
  for (unsigned k = 0; k < n_; ++k) {
    if (ring_->is_zero(ucoeffs[k]))
      continue;
    for (unsigned j = 0; j <= k; ++j)
      if (pascal_[k][j] != 0)
        r.y[j] = ring_->add(r.y[j], ring_->scale(ucoeffs[k], pascal_[k][j]));
  }
  return r;
}

std::vector<GrElem> CyclicRing::to_u(const QuotPoly& f) const
{
  // Y^k = sum_j C(k, j) (-1)^{k-j} u^j.
  std::vector<GrElem> u(n_, ring_->zero());
  for (unsigned k = 0; k < n_; ++k) {
    if (ring_->is_zero(f.y[k]))
      continue;
    for (unsigned j = 0; j <= k; ++j) {
      if (pascal_[k][j] == 0)
        continue;
      long long c = pascal_[k][j];
      if ((k - j) % 2 == 1)
        c = -c;
      u[j] = ring_->add(u[j], ring_->scale(f.y[k], c));
    }
  }
  return u;
}

QuotPoly CyclicRing::tilde(const QuotPoly& f) const
{
  auto u = to_u(f);
  std::vector<GrElem> r(n_);
  for (unsigned k = 0; k < n_; ++k)
    r[k] = u[(n_ - k) % n_];
  return from_u(r);
}

QuotPoly CyclicRing::conjugate_coeffs(const QuotPoly& f) const
{
  QuotPoly r{std::vector<GrElem>(n_)};
  for (unsigned i = 0; i < n_; ++i)
    r.y[i] = ring_->conjugate(f.y[i]);
  return r;
}

std::vector<FqElem> CyclicRing::residue(const QuotPoly& f) const
{
  std::vector<FqElem> r(n_);
  for (unsigned i = 0; i < n_; ++i)
    r[i] = ring_->residue(f.y[i]);
  return r;
}

QuotPoly CyclicRing::lift(const std::vector<FqElem>& r) const
{
  auto f = zero();
  for (std::size_t i = 0; i < r.size() && i < n_; ++i)
    f.y[i] = ring_->lift_teichmuller(r[i]);
  return f;
}

// ------------------------------------------------------------ canonical form

namespace {

// Checks Y^{N-i0} wbar == qbar (mod Y^{i1}).
bool consistent(const CyclicRing& R, unsigned i0, unsigned i1, const std::vector<GrElem>& h)
{
  const unsigned N = R.length();
  const unsigned p = R.gr().p();
  const auto& qbar = R.carry_residue();
  const auto& F = R.gr().field();
  for (unsigned k = 0; k < i1; ++k) {
    FqElem lhs = F.zero();
    if (k >= N - i0)
      lhs = R.gr().residue(h[k - (N - i0)]);
    if (lhs != F.from_int(qbar[k] % p))
      return false;
  }
  return true;
}

} // namespace

CanonicalCode make_canonical(const CyclicRing& R, const CanonicalCode& code)
{
  const unsigned N = R.length();
  if (const auto* t = std::get_if<TorsionCode>(&code)) {
    if (t->i1 > N)
      throw DomainError("TorsionOnly: i1 = " + std::to_string(t->i1) + " exceeds p^a = " + std::to_string(N));
    return code;
  }
  const auto& f = std::get<FullCode>(code);
  if (f.i0 >= N)
    throw DomainError("Full: i0 = " + std::to_string(f.i0) + " must be below p^a = " + std::to_string(N));
  if (f.i1 > f.i0)
    throw DomainError("Full: i1 = " + std::to_string(f.i1) + " exceeds i0 = " + std::to_string(f.i0));
  if (f.h.size() != f.i1)
    throw DomainError("Full: expected " + std::to_string(f.i1) + " h-values, got " + std::to_string(f.h.size()));
  for (const auto& hj : f.h) {
    if (hj.c.size() != R.gr().s())
      throw DomainError("Full: h-value has the wrong degree for " + R.gr().name());
    if (!R.gr().is_teichmuller(hj))
      throw DomainError("Full: h-value is not in the Teichmuller set");
  }
  if (!consistent(R, f.i0, f.i1, f.h))
    throw DomainError("Full: (i0, i1, h) is inconsistent: the ideal it generates has a smaller torsion index");
  return code;
}

unsigned index_sum(const CyclicRing& R, const CanonicalCode& code)
{
  if (const auto* t = std::get_if<TorsionCode>(&code))
    return R.length() + t->i1;
  const auto& f = std::get<FullCode>(code);
  return f.i0 + f.i1;
}

BigCount cardinality(const CyclicRing& R, const CanonicalCode& code)
{
  const auto q = R.gr().q();
  const unsigned N = R.length();
  return big_pow(q, 2 * N - index_sum(R, code));
}

std::vector<QuotPoly> generators(const CyclicRing& R, const CanonicalCode& code)
{
  if (const auto* t = std::get_if<TorsionCode>(&code))
    return {R.times_p(R.y_power(t->i1))};
  const auto& f = std::get<FullCode>(code);
  auto g = R.y_power(f.i0);
  for (unsigned j = 0; j < f.i1; ++j)
    g.y[j] = R.gr().add(g.y[j], R.gr().times_p(f.h[j]));
  return {g, R.times_p(R.y_power(f.i1))};
}

bool contains(const CyclicRing& R, const CanonicalCode& code, const QuotPoly& v)
{
  const auto& G = R.gr();
  const unsigned N = R.length();
  QuotPoly rest = v;
  unsigned i1 = 0;
  if (const auto* t = std::get_if<TorsionCode>(&code)) {
    i1 = t->i1;
  } else {
    const auto& f = std::get<FullCode>(code);
    i1 = f.i1;
    for (unsigned j = 0; j < f.i0; ++j)
      if (G.is_unit(v.y[j]))
        return false;
    // c = (vbar / Y^{i0}) lifted; rest = v - c g lies in pR.
    auto c = R.zero();
    for (unsigned j = f.i0; j < N; ++j)
      c.y[j - f.i0] = digit_lift(G.residue(v.y[j]));
    rest = R.sub(v, R.mul(c, generators(R, code)[0]));
  }
  for (unsigned j = 0; j < N; ++j) {
    if (G.is_unit(rest.y[j]))
      return false;
    if (j < i1 && !G.is_zero(rest.y[j]))
      return false;
  }
  return true;
}

void for_each_codeword(const CyclicRing& R, const CanonicalCode& code,
                       const std::function<bool(const QuotPoly&)>& visit, std::uint64_t ceiling)
{
  if (cardinality(R, code) > ceiling)
    throw LimitError("code has " + to_decimal(cardinality(R, code)) + " codewords, above the ceiling " +
                     std::to_string(ceiling));
  const auto& G = R.gr();
  const auto& F = G.field();
  const unsigned N = R.length();
  const auto q = F.size();

  unsigned unit_slots = 0;  // coefficients of c in c * g
  QuotPoly g = R.zero();
  unsigned i1 = 0;
  if (const auto* t = std::get_if<TorsionCode>(&code)) {
    i1 = t->i1;
  } else {
    const auto& f = std::get<FullCode>(code);
    unit_slots = N - f.i0;
    i1 = f.i1;
    g = generators(R, code)[0];
  }
  const unsigned tors_slots = N - i1;
  const unsigned slots = unit_slots + tors_slots;

  // Mixed-radix counter over q^{slots}.
  std::vector<std::uint64_t> digit(slots, 0);
  while (true) {
    auto c = R.zero();
    for (unsigned k = 0; k < unit_slots; ++k)
      c.y[k] = digit_lift(F.from_index(digit[k]));
    auto e = R.zero();
    for (unsigned k = 0; k < tors_slots; ++k)
      e.y[i1 + k] = digit_lift(F.from_index(digit[unit_slots + k]));
    auto word = R.times_p(e);
    if (unit_slots > 0)
      word = R.add(word, R.mul(c, g));
    if (!visit(word))
      return;
    unsigned k = 0;
    while (k < slots && ++digit[k] == q) {
      digit[k] = 0;
      ++k;
    }
    if (k == slots)
      break;
  }
}

std::vector<QuotPoly> codewords(const CyclicRing& R, const CanonicalCode& code, std::uint64_t ceiling)
{
  std::vector<QuotPoly> out;
  for_each_codeword(R, code, [&](const QuotPoly& w) {
    out.push_back(w);
    return true;
  }, ceiling);
  return out;
}

CanonicalCode normalize(const CyclicRing& R, const std::vector<QuotPoly>& gens)
{
  const auto& G = R.gr();
  const auto& F = G.field();
  const unsigned N = R.length();

  // GR-module spanned by Y^k g, one row per product.
  std::vector<QuotPoly> rows;
  for (const auto& g : gens) {
    auto cur = g;
    for (unsigned k = 0; k < N; ++k) {
      if (!R.is_zero(cur))
        rows.push_back(cur);
      cur = R.mul(cur, R.y_power(1));
    }
  }

  // Reduced echelon form with unit pivots, column order Y^0 .. Y^{N-1}.
  std::vector<unsigned> pivot_col;
  std::size_t rank = 0;
  for (unsigned c = 0; c < N && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && !G.is_unit(rows[piv].y[c]))
      ++piv;
    if (piv == rows.size())
      continue;
    std::swap(rows[rank], rows[piv]);
    rows[rank] = R.scale(rows[rank], G.inv(rows[rank].y[c]));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || G.is_zero(rows[r].y[c]))
        continue;
      rows[r] = R.sub(rows[r], R.scale(rows[rank], rows[r].y[c]));
    }
    pivot_col.push_back(c);
    ++rank;
  }

  // Torsion code: residues of the unit rows plus (remaining rows)/p.
  std::vector<std::vector<FqElem>> tors;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<FqElem> v(N);
    for (unsigned j = 0; j < N; ++j)
      v[j] = r < rank ? G.residue(rows[r].y[j]) : G.residue(G.div_p(rows[r].y[j]));
    tors.push_back(std::move(v));
  }
  const auto tdim = fq_rank(F, std::move(tors), N);
  const unsigned i1 = N - static_cast<unsigned>(tdim);

  if (rank == 0)
    return TorsionCode{i1};

  const unsigned i0 = pivot_col.front();
  if (i0 != N - rank)
    throw InternalError("residue code is not of the form (Y^i0)");
  const auto& g = rows.front();
  FullCode out{i0, i1, {}};
  for (unsigned j = 0; j < i1; ++j)
    out.h.push_back(G.lift_teichmuller(G.residue(G.div_p(g.y[j]))));
  return out;
}

void for_each_ideal(const CyclicRing& R, const std::function<bool(const CanonicalCode&)>& visit)
{
  const auto& G = R.gr();
  const auto& F = G.field();
  const unsigned N = R.length();
  const auto& qbar = R.carry_residue();
  const auto q = F.size();

  for (unsigned i0 = 0; i0 < N; ++i0) {
    for (unsigned i1 = 0; i1 <= i0; ++i1) {
      // Coefficients of wbar below i1: those with index k - (N - i0), k in
      // [N - i0, i1), are forced to qbar_k; qbar_k must vanish for k < N - i0.
      bool feasible = true;
      std::vector<std::optional<Digit>> forced(i1);
      for (unsigned k = 0; k < i1; ++k) {
        if (k < N - i0) {
          if (qbar[k] != 0) {
            feasible = false;
            break;
          }
        } else {
          forced[k - (N - i0)] = qbar[k];
        }
      }
      if (!feasible)
        continue;
      std::vector<unsigned> free_pos;
      for (unsigned j = 0; j < i1; ++j)
        if (!forced[j])
          free_pos.push_back(j);
      std::vector<std::uint64_t> digit(free_pos.size(), 0);
      while (true) {
        FullCode code{i0, i1, std::vector<GrElem>(i1)};
        for (unsigned j = 0; j < i1; ++j)
          if (forced[j])
            code.h[j] = G.lift_teichmuller(F.from_int(*forced[j]));
        for (std::size_t k = 0; k < free_pos.size(); ++k)
          code.h[free_pos[k]] = G.lift_teichmuller(F.from_index(digit[k]));
        if (!visit(code))
          return;
        std::size_t k = 0;
        while (k < digit.size() && ++digit[k] == q) {
          digit[k] = 0;
          ++k;
        }
        if (k == digit.size())
          break;
      }
    }
  }
  for (unsigned i1 = 0; i1 <= N; ++i1)
    if (!visit(TorsionCode{i1}))
      return;
}

std::vector<CanonicalCode> enumerate_ideals(const CyclicRing& R)
{
  std::vector<CanonicalCode> out;
  for_each_ideal(R, [&](const CanonicalCode& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

bool canonical_less(const CyclicRing& R, const CanonicalCode& x, const CanonicalCode& y)
{
  auto key = [&](const CanonicalCode& c) {
    std::vector<std::uint64_t> k;
    if (const auto* t = std::get_if<TorsionCode>(&c)) {
      k = {t->i1, 0, R.length()};
    } else {
      const auto& f = std::get<FullCode>(c);
      k = {f.i1, 1, f.i0};
      for (const auto& hj : f.h) {
        auto e = R.gr().teich_log(hj);
        k.push_back(e ? *e + 1 : 0);
      }
    }
    return k;
  };
  return key(x) < key(y);
}

} // namespace gr2
