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

// Closed-form counts of cyclic codes over GR(p^2, s):
//   N    all cyclic codes of length p^a
//   N_E  Euclidean self-dual, length p^a or any length
//   N_H  Hermitian self-dual, length p^a (s even)
// Length 1 (a = 0): N = 3, N_E = N_H = 1.

#include <gr2/bigcount.hpp>
#include <gr2/cyclic_core.hpp>

#include <utility>
#include <vector>

namespace gr2 {

/// Codes with i0 + i1 = d, 0 <= d <= p^a.
BigCount count_by_d(const CodeParams& params, unsigned d);

BigCount count_all(const CodeParams& params);

BigCount count_E_prime_power(const CodeParams& params);

/// Requires s even.
BigCount count_H_prime_power(const CodeParams& params);

/// N_E(GR(p^2, s), n) for any n >= 1.
BigCount count_E_composite(unsigned p, unsigned s, unsigned n);

/// True iff N_E(GR(p^2, s), m p) = 1, i.e. m = 1 and p = 2. Requires p not
/// dividing m.
bool is_unique_self_dual(unsigned p, unsigned s, unsigned m);

using CountTable = std::vector<std::pair<unsigned, BigCount>>;

/// Rows n = 1 .. n_max of count_E_composite.
CountTable emit_table(unsigned p, unsigned s, unsigned n_max);

} // namespace gr2
