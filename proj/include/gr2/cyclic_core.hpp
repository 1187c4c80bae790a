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

/**
 * Cyclic codes of length N = p^a over GR(p^2, s), i.e. ideals of
 * R = GR(p^2, s)[u] / (u^N - 1).
 *
 * Internally every polynomial is written in Y = u - 1. In these coordinates
 * R = GR[Y] / (Y^N + p q(Y)) where (Y + 1)^N - 1 = Y^N + p q(Y), and
 * R / pR = F_q[Y] / (Y^N).
 *
 * Canonical form. Every ideal C is exactly one of
 *
 *   Full(i0, i1, h)  = < Y^{i0} + p sum_{j<i1} h_j Y^j ,  p Y^{i1} >,
 *                      0 <= i0 < N, 0 <= i1 <= i0, h_j in T_s,
 *   TorsionOnly(i1)  = < p Y^{i1} >,   0 <= i1 <= N  (i1 = N is {0}),
 *
 * where (Y^{i0}) is the residue code of C and (Y^{i1}) its torsion code
 * {v mod p : p v in C}. A Full tuple denotes an ideal with those indices iff
 *
 *   Y^{N - i0} * wbar == qbar   (mod Y^{i1})          (consistency)
 *
 * with wbar = sum h_j Y^j mod p and qbar = q mod p. Ideals with
 * i0 + i1 > N exist and are covered by this form.
 */

#include <gr2/bigcount.hpp>
#include <gr2/galois_ring.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace gr2 {

struct CodeParams {
  unsigned p = 2;
  unsigned s = 1;
  unsigned a = 0;
  auto operator<=>(const CodeParams&) const = default;
};

/// Element of R, coefficients in the basis Y^0 .. Y^{N-1}.
struct QuotPoly {
  std::vector<GrElem> y;
  auto operator<=>(const QuotPoly&) const = default;
};

struct FullCode {
  unsigned i0 = 0;
  unsigned i1 = 0;
  std::vector<GrElem> h;
  auto operator<=>(const FullCode&) const = default;
};

struct TorsionCode {
  unsigned i1 = 0;
  auto operator<=>(const TorsionCode&) const = default;
};

using CanonicalCode = std::variant<FullCode, TorsionCode>;

/// The quotient ring R = GR(p^2, s)[u]/(u^{p^a} - 1).
class CyclicRing {
public:
  CyclicRing(RingPtr ring, unsigned a);
  static CyclicRing make(const CodeParams& params);

  const GaloisRing& gr() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  CodeParams params() const { return {ring_->p(), ring_->s(), a_}; }
  unsigned a() const { return a_; }
  unsigned length() const { return n_; }
  /// p^{a-1}, or 0 when a = 0.
  unsigned torsion_bound() const { return tb_; }

  QuotPoly zero() const;
  QuotPoly one() const;
  QuotPoly constant(const GrElem& c) const;
  /// Y^k reduced into R (k may exceed N - 1).
  QuotPoly y_power(unsigned k) const;
  /// u^k.
  QuotPoly u_power(unsigned k) const;

  bool is_zero(const QuotPoly& f) const;
  QuotPoly add(const QuotPoly& f, const QuotPoly& g) const;
  QuotPoly sub(const QuotPoly& f, const QuotPoly& g) const;
  QuotPoly neg(const QuotPoly& f) const;
  QuotPoly mul(const QuotPoly& f, const QuotPoly& g) const;
  QuotPoly scale(const QuotPoly& f, const GrElem& c) const;
  QuotPoly times_p(const QuotPoly& f) const;
  QuotPoly pow(const QuotPoly& f, unsigned e) const;

  /// Coefficients in the u basis <-> Y basis.
  QuotPoly from_u(const std::vector<GrElem>& ucoeffs) const;
  std::vector<GrElem> to_u(const QuotPoly& f) const;

  /// The involution u -> u^{-1}.
  QuotPoly tilde(const QuotPoly& f) const;
  /// Apply the ring conjugation to every coefficient (s even).
  QuotPoly conjugate_coeffs(const QuotPoly& f) const;

  /// Residue in F_q[Y]/(Y^N).
  std::vector<FqElem> residue(const QuotPoly& f) const;
  /// Teichmuller lift of a residue polynomial (shorter input is zero padded).
  QuotPoly lift(const std::vector<FqElem>& r) const;

  /// qbar: the F_p coefficients of q(Y) mod p, where Y^N = -p q(Y) in R.
  const std::vector<Digit>& carry_residue() const { return qbar_; }

  /// C(n, k) mod p^2 for n, k <= table size (N or larger on demand).
  Digit binom(unsigned n, unsigned k) const;

private:
  RingPtr ring_;
  unsigned a_;
  unsigned n_;
  unsigned tb_;
  std::vector<std::vector<Digit>> pascal_;  // mod p^2
  std::vector<Digit> reduction_;            // Y^N = sum_k reduction_[k] Y^k
  std::vector<Digit> qbar_;
};

/// Validates the canonical invariants (including the consistency condition)
/// and returns the code. Throws DomainError naming the violated constraint.
CanonicalCode make_canonical(const CyclicRing& R, const CanonicalCode& code);

/// |C| = q^{2N - i0 - i1} for Full, q^{N - i1} for TorsionOnly.
BigCount cardinality(const CyclicRing& R, const CanonicalCode& code);

/// The two (or one) generators of the canonical form.
std::vector<QuotPoly> generators(const CyclicRing& R, const CanonicalCode& code);

bool contains(const CyclicRing& R, const CanonicalCode& code, const QuotPoly& v);

inline constexpr std::uint64_t kDefaultCodewordCeiling = std::uint64_t{1} << 20;

/// Streams every codeword exactly once. The visitor returns false to stop.
/// Throws LimitError when |C| exceeds the ceiling.
void for_each_codeword(const CyclicRing& R, const CanonicalCode& code,
                       const std::function<bool(const QuotPoly&)>& visit,
                       std::uint64_t ceiling = kDefaultCodewordCeiling);

std::vector<QuotPoly> codewords(const CyclicRing& R, const CanonicalCode& code,
                                std::uint64_t ceiling = kDefaultCodewordCeiling);

/// Canonical form of the ideal generated by gens.
CanonicalCode normalize(const CyclicRing& R, const std::vector<QuotPoly>& gens);

/// Streams every ideal of R exactly once, Full forms ordered by (i0, i1, h)
/// and then TorsionOnly(0..N).
void for_each_ideal(const CyclicRing& R, const std::function<bool(const CanonicalCode&)>& visit);

std::vector<CanonicalCode> enumerate_ideals(const CyclicRing& R);

/// i0 + i1 of the code (i0 = N for TorsionOnly).
unsigned index_sum(const CyclicRing& R, const CanonicalCode& code);

/// Deterministic ordering used for emitted listings: TorsionOnly before Full
/// at equal i1, then i0, then h by Teichmuller exponent with 0 first.
bool canonical_less(const CyclicRing& R, const CanonicalCode& x, const CanonicalCode& y);

} // namespace gr2
