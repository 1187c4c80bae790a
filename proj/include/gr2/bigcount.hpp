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

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace gr2 {

/// Exact non-negative counts. No floating point anywhere in counting.
using BigCount = boost::multiprecision::cpp_int;

inline BigCount big_pow(std::uint64_t base, std::uint64_t e)
{
  return boost::multiprecision::pow(BigCount(base), static_cast<unsigned>(e));
}

inline std::string to_decimal(const BigCount& n) { return n.str(); }

} // namespace gr2
