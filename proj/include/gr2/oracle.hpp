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

// Brute-force ground truth for small cyclic codes. Knows nothing about the
// canonical form: codes are explicit codeword sets over GR(p^2, s)^n, ideals
// are found by closing generating sets, duals by scanning the ambient space.

#include <gr2/duality.hpp>
#include <gr2/galois_ring.hpp>

#include <cstdint>
#include <vector>

namespace gr2 {

using Word = std::vector<GrElem>;

/// GR(p^2, s)^n with vectors packed into integers, n*s digits base p^2.
class Ambient {
public:
  Ambient(RingPtr ring, unsigned n, std::uint64_t ceiling = std::uint64_t{1} << 24);

  const GaloisRing& gr() const { return *ring_; }
  unsigned length() const { return n_; }
  std::uint64_t size() const { return size_; }

  std::uint64_t encode(const Word& w) const;
  Word decode(std::uint64_t v) const;

  std::uint64_t add(std::uint64_t x, std::uint64_t y) const;
  /// Cyclic shift X * w.
  std::uint64_t shift(std::uint64_t x) const;
  /// Coordinatewise multiplication by a ring element.
  std::uint64_t scale(std::uint64_t x, const GrElem& c) const;

  GrElem inner(std::uint64_t x, std::uint64_t y, DualKind kind) const;

private:
  RingPtr ring_;
  unsigned n_;
  std::uint64_t size_;
};

struct DenseCode {
  std::vector<std::uint64_t> words;  // sorted
  std::vector<std::uint64_t> gens;   // additive generators
  bool operator==(const DenseCode& o) const { return words == o.words; }
};

/// Smallest cyclic code containing the given words.
DenseCode closure(const Ambient& A, const std::vector<std::uint64_t>& gens);

/// Every ideal of GR(p^2, s)[X]/(X^n - 1), sorted by codeword set.
std::vector<DenseCode> brute_ideals(const Ambient& A);

/// All ambient vectors orthogonal to the code.
DenseCode brute_dual(const Ambient& A, const DenseCode& code, DualKind kind);

/// Codeword set of a canonical code (n = p^a), through its u-coordinates.
DenseCode materialize(const Ambient& A, const CyclicRing& R, const CanonicalCode& code);

} // namespace gr2
