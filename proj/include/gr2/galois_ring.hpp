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
 * Exact arithmetic in the Galois ring GR(p^2, s) and its residue field F_{p^s}.
 *
 * GR(p^2, s) = Z_{p^2}[x] / (f(x)) where f is a monic basic irreducible
 * polynomial whose root xi satisfies xi^{p^s} = xi, so xi generates the
 * Teichmuller set T_s = {0, 1, xi, ..., xi^{p^s - 2}}. Elements are stored in
 * coefficient form over the basis 1, xi, ..., xi^{s-1}; the p-adic pair
 * (a, b) with alpha = a + p b is a computed view.
 *
 * The residue field has its own arithmetic on mod-p coefficient vectors so
 * that field computations never touch p-torsion.
 */

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gr2 {

using Digit = std::uint32_t;

/// Element of GR(p^2, s): s coefficients in [0, p^2).
struct GrElem {
  std::vector<Digit> c;
  auto operator<=>(const GrElem&) const = default;
};

/// Element of F_{p^s}: s coefficients in [0, p).
struct FqElem {
  std::vector<Digit> c;
  auto operator<=>(const FqElem&) const = default;
};

/// Polynomial arithmetic in Z_m[x]/(f) for a monic f of degree s.
class PolyModRing {
public:
  PolyModRing() = default;
  PolyModRing(Digit m, std::vector<Digit> monic);

  Digit modulus() const { return m_; }
  unsigned degree() const { return deg_; }
  const std::vector<Digit>& poly() const { return f_; }

  std::vector<Digit> add(const std::vector<Digit>& a, const std::vector<Digit>& b) const;
  std::vector<Digit> sub(const std::vector<Digit>& a, const std::vector<Digit>& b) const;
  std::vector<Digit> mul(const std::vector<Digit>& a, const std::vector<Digit>& b) const;
  std::vector<Digit> scale(const std::vector<Digit>& a, Digit k) const;
  std::vector<Digit> pow(std::vector<Digit> a, std::uint64_t e) const;
  std::vector<Digit> one() const;

private:
  Digit m_ = 0;
  unsigned deg_ = 0;
  std::vector<Digit> f_;                 // monic, length deg_+1
  std::vector<std::vector<Digit>> red_;  // x^{deg_+k} reduced, k = 0..deg_-2
};

/// The residue field F_{p^s} = GR(p^2, s) / p GR(p^2, s).
class ResidueField {
public:
  ResidueField() = default;
  ResidueField(unsigned p, std::vector<Digit> monic);

  unsigned p() const { return p_; }
  unsigned s() const { return s_; }
  std::uint64_t size() const { return q_; }

  FqElem zero() const;
  FqElem one() const;
  FqElem from_int(long long v) const;
  bool is_zero(const FqElem& x) const;

  FqElem add(const FqElem& x, const FqElem& y) const;
  FqElem sub(const FqElem& x, const FqElem& y) const;
  FqElem neg(const FqElem& x) const;
  FqElem mul(const FqElem& x, const FqElem& y) const;
  FqElem scale(const FqElem& x, Digit k) const;
  FqElem inv(const FqElem& x) const;
  FqElem pow(const FqElem& x, std::uint64_t e) const;

  /// x -> x^{p^k}.
  FqElem frobenius(const FqElem& x, unsigned k) const;

  /// Tr(x) = x + x^{p^{s/2}} (s even).
  FqElem trace_half(const FqElem& x) const;
  /// Psi(x) = x^{p^{s/2}} - x (s even).
  FqElem psi(const FqElem& x) const;

  enum class HalfMap { Trace, Psi };
  /// All x with map(x) = target, by exhaustive scan (size <= 2^16).
  std::vector<FqElem> preimage_set(HalfMap map, const FqElem& target) const;

  /// Bijection F_{p^s} <-> [0, p^s) reading coefficients as base-p digits.
  std::uint64_t index(const FqElem& x) const;
  FqElem from_index(std::uint64_t i) const;

private:
  unsigned p_ = 0;
  unsigned s_ = 0;
  std::uint64_t q_ = 0;
  PolyModRing arith_;
};

class GaloisRing;
using RingPtr = std::shared_ptr<const GaloisRing>;

/// A constructed Galois ring GR(p^2, s). Immutable; share through RingPtr.
class GaloisRing {
public:
  /// Deterministic construction: the lexicographically smallest primitive
  /// polynomial of degree s over F_p, lifted to Z_{p^2} and replaced by the
  /// minimal polynomial of the Teichmuller lift of its root. Honors the
  /// GR2_MODULUS_OVERRIDE environment variable when its degree equals s.
  /// Results are cached per (p, s, override).
  static RingPtr make(unsigned p, unsigned s);

  /// Same construction starting from a caller-supplied monic polynomial over
  /// Z_{p^2} whose reduction mod p must be primitive.
  static RingPtr make_from_polynomial(unsigned p, const std::vector<long long>& monic);

  unsigned p() const { return p_; }
  unsigned s() const { return s_; }
  Digit p2() const { return p2_; }
  /// p^s, the size of the residue field and of T_s.
  std::uint64_t q() const { return field_.size(); }
  /// Monic modulus over Z_{p^2}, low degree first, length s+1.
  const std::vector<Digit>& modulus() const { return arith_.poly(); }
  const ResidueField& field() const { return field_; }

  GrElem zero() const;
  GrElem one() const;
  GrElem xi() const;
  GrElem from_int(long long v) const;
  GrElem from_coeffs(const std::vector<long long>& coeffs) const;

  bool is_zero(const GrElem& a) const;
  bool is_unit(const GrElem& a) const;
  /// True iff every coefficient is divisible by p.
  bool in_max_ideal(const GrElem& a) const { return !is_unit(a); }

  GrElem add(const GrElem& a, const GrElem& b) const;
  GrElem sub(const GrElem& a, const GrElem& b) const;
  GrElem neg(const GrElem& a) const;
  GrElem mul(const GrElem& a, const GrElem& b) const;
  GrElem scale(const GrElem& a, long long k) const;
  /// Hensel-lifted inverse. Throws DomainError on non-units.
  GrElem inv(const GrElem& a) const;
  GrElem pow(const GrElem& a, std::uint64_t e) const;

  GrElem times_p(const GrElem& a) const;
  /// a / p for a in p GR; throws InternalError otherwise.
  GrElem div_p(const GrElem& a) const;

  FqElem residue(const GrElem& a) const;
  /// The unique Teichmuller element with the given residue.
  GrElem lift_teichmuller(const FqElem& x) const;
  /// Teichmuller representative of a mod p, i.e. a^{p^s}.
  GrElem teichmuller_part(const GrElem& a) const;
  bool is_teichmuller(const GrElem& a) const;
  /// alpha = a + p b with a, b in T_s.
  std::pair<GrElem, GrElem> teichmuller_decompose(const GrElem& alpha) const;

  /// Generalized Frobenius a + p b -> a^{p^k} + p b^{p^k}.
  GrElem frobenius(const GrElem& alpha, unsigned k = 1) const;
  /// The order-2 automorphism a + p b -> a^{p^{s/2}} + p b^{p^{s/2}}; s even.
  GrElem conjugate(const GrElem& alpha) const;

  /// xi^e.
  GrElem teich(std::uint64_t e) const;
  /// e with xi^e = t for t in T_s \ {0}; nullopt for t = 0. Throws
  /// DomainError if t is not Teichmuller.
  std::optional<std::uint64_t> teich_log(const GrElem& t) const;

  /// Evaluate a polynomial with coefficients in Z_{p^2} at alpha.
  GrElem eval_int_poly(const std::vector<Digit>& poly, const GrElem& alpha) const;

  /// Textual form "GR(p^2,s)".
  std::string name() const;

  GaloisRing(unsigned p, std::vector<Digit> teich_modulus);

private:
  unsigned p_;
  unsigned s_;
  Digit p2_;
  PolyModRing arith_;
  ResidueField field_;
  std::vector<std::uint32_t> log_table_;  // residue index -> exponent, if q small
};

/// Injective ring morphism GR(p^2, s) -> GR(p^2, s nu) sending xi_s to the
/// smallest power xi_{s nu}^{k e}, e = (p^{s nu} - 1)/(p^s - 1), that is a root
/// of the modulus of the small ring.
class Embedding {
public:
  Embedding(RingPtr base, RingPtr ext);

  const RingPtr& base() const { return base_; }
  const RingPtr& ext() const { return ext_; }
  const GrElem& image_of_xi() const { return xi_image_; }

  GrElem apply(const GrElem& a) const;
  /// Preimage of b if b lies in the image, else nullopt.
  std::optional<GrElem> recover(const GrElem& b) const;

private:
  RingPtr base_;
  RingPtr ext_;
  GrElem xi_image_;
  std::vector<GrElem> basis_images_;  // images of xi_s^k, k < s
};

/// Convenience: embed(base, ext, alpha) through a freshly built Embedding.
GrElem embed(const RingPtr& base, const RingPtr& ext, const GrElem& alpha);

bool is_prime(std::uint64_t n);

} // namespace gr2
