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
 * Cyclic codes of length n = m p^a (p not dividing m) through the discrete
 * Fourier transform
 *
 *   c_hat_h = sum_{i<m} sum_{j<p^a} c_{i,j} u^{m' i + j} zeta^{h i},
 *
 * where c_{i,j} is the coefficient of X^{i + j m}, m m' = 1 mod p^a and zeta
 * is a primitive m-th root of unity in GR(p^2, s M), M the order of p^s mod m.
 * One component per q-cyclotomic coset, living in R(u, s m_h) =
 * GR(p^2, s m_h)[u]/(u^{p^a} - 1); the map is a ring isomorphism onto the
 * product of the components.
 *
 * Polynomials of length n are plain coefficient vectors (Word) over
 * GR(p^2, s); components are QuotPoly values of the component CyclicRing.
 */

#include <gr2/cosets.hpp>
#include <gr2/cyclic_core.hpp>
#include <gr2/duality.hpp>
#include <gr2/oracle.hpp>

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace gr2 {

/// Parameters and precomputed rings for length n over GR(p^2, s).
class CompositeContext {
public:
  CompositeContext(unsigned p, unsigned s, unsigned n);

  unsigned p() const { return p_; }
  unsigned s() const { return s_; }
  unsigned n() const { return n_; }
  unsigned m() const { return m_; }
  unsigned a() const { return a_; }
  /// p^a.
  unsigned pa() const { return pa_; }
  /// m' with m m' = 1 mod p^a.
  unsigned m_prime() const { return m_prime_; }
  /// Order of p^s modulo m.
  unsigned order() const { return part_.order; }

  const CosetPartition& partition() const { return part_; }
  const RingPtr& base() const { return base_; }
  const RingPtr& big() const { return big_; }
  const GrElem& zeta() const { return zeta_; }
  const Embedding& base_embedding() const { return *base_emb_; }

  std::size_t components() const { return part_.cosets.size(); }
  /// R(u, s m_h) for the coset at position idx.
  const CyclicRing& component(std::size_t idx) const { return comp_rings_[idx]; }
  const Embedding& component_embedding(std::size_t idx) const { return *comp_embs_[idx]; }

private:
  unsigned p_, s_, n_, m_, a_, pa_, m_prime_;
  CosetPartition part_;
  RingPtr base_;
  RingPtr big_;
  GrElem zeta_;
  std::unique_ptr<Embedding> base_emb_;
  std::vector<CyclicRing> comp_rings_;
  std::vector<std::unique_ptr<Embedding>> comp_embs_;
};

/// Arithmetic in GR(p^2, s)[X]/(X^n - 1) on coefficient vectors.
class WordRing {
public:
  WordRing(RingPtr ring, unsigned n);
  const GaloisRing& gr() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  unsigned length() const { return n_; }

  Word zero() const;
  Word one() const;
  Word monomial(unsigned k, const GrElem& c) const;
  Word add(const Word& x, const Word& y) const;
  Word sub(const Word& x, const Word& y) const;
  Word neg(const Word& x) const;
  Word mul(const Word& x, const Word& y) const;
  Word pow(const Word& x, std::uint64_t e) const;

  /// Polynomial in X with coefficients using x (the generator) and T(e).
  Word parse(std::string_view text) const;
  std::string format(const Word& w) const;

private:
  RingPtr ring_;
  unsigned n_;
};

/// The tuple (d_0, .., d_{m-1}) in u-coordinates, d_i = sum_j c_{i,j} u^j.
std::vector<std::vector<GrElem>> phi_inverse(const CompositeContext& ctx, const Word& c);
Word phi(const CompositeContext& ctx, const std::vector<std::vector<GrElem>>& tuple);

/// All m transform coefficients in GR(p^2, s M), u-coordinates.
std::vector<std::vector<GrElem>> dft_all(const CompositeContext& ctx, const Word& c);

/// One component per coset (partition order), recognized in R(u, s m_h).
using DftVector = std::vector<QuotPoly>;

DftVector dft_forward(const CompositeContext& ctx, const Word& c);

/// Inverse transform. Throws DomainError if the result is not over GR(p^2, s).
Word dft_inverse(const CompositeContext& ctx, const DftVector& v);

/// A cyclic code of length n as one canonical code per coset.
struct DecomposedCode {
  unsigned n = 0;
  std::vector<CanonicalCode> comps;  // partition order
  bool operator==(const DecomposedCode&) const = default;
};

DecomposedCode decompose_code(const CompositeContext& ctx, const std::vector<Word>& gens);

/// A generating set of the code: one word per component generator.
std::vector<Word> compose_code(const CompositeContext& ctx, const DecomposedCode& code);

/// C^{perp_E} componentwise: Euclidean at J0, Hermitian at J1, and at J2 the
/// Euclidean dual of the partner component.
DecomposedCode dual_decomposition(const CompositeContext& ctx, const DecomposedCode& code);

/// Every Euclidean self-dual cyclic code of length n. The visitor returns
/// false to stop.
void for_each_self_dual_composite(const CompositeContext& ctx,
                                  const std::function<bool(const DecomposedCode&)>& visit);

std::vector<DecomposedCode> enumerate_self_dual_composite(const CompositeContext& ctx,
                                                          std::uint64_t ceiling = std::uint64_t{1} << 20);

/// "n;[h:code,...]" with h the coset representative.
std::string format_decomposed(const CompositeContext& ctx, const DecomposedCode& code);
DecomposedCode parse_decomposed(const CompositeContext& ctx, std::string_view text);

/// Codeword set of a composed code (oracle scale).
DenseCode materialize_composite(const Ambient& A, const CompositeContext& ctx, const DecomposedCode& code);

} // namespace gr2
