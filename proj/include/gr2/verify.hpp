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

// Cross-checks of the structural algorithms against the brute-force oracle.

#include <functional>
#include <string>

namespace gr2 {

enum class VerifyLevel { Quick, Full };

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs every check of the level in a fixed order, reporting each as it
/// finishes. Returns true iff all pass. Exceptions inside a check count as
/// failures.
bool run_verify(VerifyLevel level, const std::function<void(const CheckResult&)>& report);

} // namespace gr2
