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

// q-cyclotomic cosets modulo m (q = p^s, p not dividing m) and their split
// into
//   J0   {0}, plus m/2 when m is even
//   J1   the other self-inverse cosets
//   J2'  one coset of each inverse pair {S(h), S(-h)}
//   J2'' the partners of J2'

#include <cstdint>
#include <string>
#include <vector>

namespace gr2 {

/// S(h) = {h q^i mod m} in orbit order starting at h.
std::vector<unsigned> coset(unsigned h, unsigned m, std::uint64_t q);

/// Multiplicative order of q modulo m (1 for m = 1).
unsigned multiplicative_order(std::uint64_t q, unsigned m);

enum class CosetClass { J0, J1, J2Prime, J2Second };

const char* to_string(CosetClass c);

struct CosetInfo {
  /// Index used for the component: the smallest member, except for J2''
  /// where it is -h mod m for the partner h in J2'.
  unsigned rep = 0;
  unsigned min = 0;
  unsigned size = 0;
  CosetClass cls = CosetClass::J0;
  /// For J2' / J2'': position of the partner coset in CosetPartition::cosets.
  std::size_t partner = 0;
  std::vector<unsigned> members;  // orbit order starting at rep
};

struct CosetPartition {
  unsigned m = 1;
  unsigned p = 2;
  unsigned s = 1;
  unsigned order = 1;             // M, the order of p^s mod m
  std::vector<CosetInfo> cosets;  // J0, J1, J2', J2'' (each by min element)

  std::vector<unsigned> reps(CosetClass c) const;
  /// Position in `cosets` of the coset containing h.
  std::size_t index_of(unsigned h) const;
};

/// Requires p prime, s >= 1, m >= 1 and p not dividing m.
CosetPartition partition(unsigned m, unsigned p, unsigned s);

/// n = m p^a with p not dividing m.
struct LengthSplit {
  unsigned m = 1;
  unsigned a = 0;
};
LengthSplit split_length(unsigned n, unsigned p);

} // namespace gr2
