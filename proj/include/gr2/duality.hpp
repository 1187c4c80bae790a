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

// Euclidean and Hermitian duals of length-p^a codes and the self-duality
// systems
//
//   Euclidean:  M x = b
//   Hermitian:  M x + (x^{p^{s/2}} - x) = b
//
// over F_{p^s}, whose solutions x give the offsets h_j = lift(x_{j+1}) of the
// self-dual codes with first torsion index i1 and i0 = p^a - i1.

#include <gr2/cyclic_core.hpp>

#include <optional>

namespace gr2 {

enum class DualKind { Euclidean, Hermitian };

const char* to_string(DualKind kind);

/// C^{perp_E}. Uses the closed two-generator formula when it applies and the
/// annihilator construction otherwise; the result is canonical.
CanonicalCode euclidean_dual(const CyclicRing& R, const CanonicalCode& code);

/// The closed formula alone: defined for Full codes with i0 + i1 <= N, a >= 1.
std::optional<CanonicalCode> euclidean_dual_by_formula(const CyclicRing& R, const CanonicalCode& code);

/// The annihilator construction alone: C^perp = Ann(C~), valid for every code.
CanonicalCode euclidean_dual_by_annihilator(const CyclicRing& R, const CanonicalCode& code);

/// h_j -> conjugate(h_j); requires s even.
CanonicalCode conjugate_code(const CyclicRing& R, const CanonicalCode& code);

/// conjugate_code(euclidean_dual(code)); requires s even.
CanonicalCode hermitian_dual(const CyclicRing& R, const CanonicalCode& code);

CanonicalCode dual(const CyclicRing& R, const CanonicalCode& code, DualKind kind);

bool is_self_dual(const CyclicRing& R, const CanonicalCode& code, DualKind kind);

struct SelfDualSystem {
  DualKind kind = DualKind::Euclidean;
  unsigned i0 = 0;
  unsigned i1 = 0;
  std::vector<std::vector<Digit>> M;  // i1 x i1 over F_p, lower triangular
  std::vector<Digit> b;               // length i1 over F_p
};

/// Requires 0 <= i1 <= p^{a-1}, a >= 1.
SelfDualSystem build_system(const CyclicRing& R, unsigned i1, DualKind kind);

/// Left-hand side of the system at x.
std::vector<FqElem> apply_system(const ResidueField& F, const SelfDualSystem& sys, const std::vector<FqElem>& x);

inline constexpr std::uint64_t kDefaultSolutionCeiling = std::uint64_t{1} << 20;

/// Every solution, by Gaussian elimination on the F_p-linear restriction
/// (s * i1 unknowns). Throws LimitError above the ceiling.
std::vector<std::vector<FqElem>> solve_system(const ResidueField& F, const SelfDualSystem& sys,
                                              std::uint64_t ceiling = kDefaultSolutionCeiling);

/// Number of solutions without listing them.
BigCount count_solutions(const ResidueField& F, const SelfDualSystem& sys);

/// Every self-dual code of the given kind, i1 ascending.
void for_each_self_dual(const CyclicRing& R, DualKind kind, const std::function<bool(const CanonicalCode&)>& visit);

std::vector<CanonicalCode> enumerate_self_dual(const CyclicRing& R, DualKind kind);

} // namespace gr2
