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

#include <gr2/counting.hpp>

#include <gr2/cosets.hpp>
#include <gr2/errors.hpp>

namespace gr2 {

namespace {

void check_params(const CodeParams& params)
{
  if (!is_prime(params.p))
    throw DomainError("p = " + std::to_string(params.p) + " is not prime");
  if (params.s == 0)
    throw DomainError("s must be at least 1");
  if (params.a > 40)
    throw DomainError("a = " + std::to_string(params.a) + " is too large");
}

std::uint64_t ipow(unsigned b, unsigned e)
{
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > (std::uint64_t{1} << 40) / b)
      throw DomainError("p^a is too large");
    r *= b;
  }
  return r;
}

// (x^k - 1) / (x - 1), asserting exact division.
BigCount geometric(const BigCount& x, std::uint64_t k)
{
  const BigCount num = boost::multiprecision::pow(x, static_cast<unsigned>(k)) - 1;
  const BigCount den = x - 1;
  if (num % den != 0)
    throw InternalError("inexact division in count formula");
  return num / den;
}

} // namespace

BigCount count_by_d(const CodeParams& params, unsigned d)
{
  check_params(params);
  const auto N = ipow(params.p, params.a);
  if (d > N)
    throw DomainError("d = " + std::to_string(d) + " exceeds p^a = " + std::to_string(N));
  if (params.a == 0)
    return 1;
  const auto tb = ipow(params.p, params.a - 1);
  const std::uint64_t ell = std::min<std::uint64_t>(d / 2, tb);
  return geometric(big_pow(params.p, params.s), ell + 1);
}

BigCount count_all(const CodeParams& params)
{
  check_params(params);
  if (params.a == 0)
    return 3;
  const auto N = ipow(params.p, params.a);
  const auto tb = ipow(params.p, params.a - 1);
  const BigCount q = big_pow(params.p, params.s);
  BigCount sum = 0;
  for (std::uint64_t d = 0; d < N; ++d)
    sum += geometric(q, std::min<std::uint64_t>(d / 2, tb) + 1);
  return 2 * sum + geometric(q, tb + 1);
}

BigCount count_E_prime_power(const CodeParams& params)
{
  check_params(params);
  const unsigned p = params.p;
  const unsigned s = params.s;
  const unsigned a = params.a;
  if (a == 0)
    return 1;
  if (p == 2) {
    if (a == 1)
      return 1;
    const BigCount two_s = big_pow(2, s);
    if (a == 2)
      return 1 + two_s;
    return 1 + two_s + big_pow(2, 2 * s + 1) * geometric(two_s, ipow(2, a - 2) - 1);
  }
  return 2 * geometric(big_pow(p, s), (ipow(p, a - 1) + 1) / 2);
}

BigCount count_H_prime_power(const CodeParams& params)
{
  check_params(params);
  if (params.s % 2 != 0)
    throw DomainError("Hermitian counts require even s, got s = " + std::to_string(params.s));
  if (params.a == 0)
    return 1;
  return geometric(big_pow(params.p, params.s / 2), ipow(params.p, params.a - 1) + 1);
}

BigCount count_E_composite(unsigned p, unsigned s, unsigned n)
{
  const auto [m, a] = split_length(n, p);
  const auto part = partition(m, p, s);
  BigCount out = 1;
  for (const auto& c : part.cosets) {
    const CodeParams comp{p, s * c.size, a};
    switch (c.cls) {
    case CosetClass::J0:
      out *= count_E_prime_power(comp);
      break;
    case CosetClass::J1:
      out *= count_H_prime_power(comp);
      break;
    case CosetClass::J2Prime:
      out *= count_all(comp);
      break;
    case CosetClass::J2Second:
      break;
    }
  }
  return out;
}

bool is_unique_self_dual(unsigned p, unsigned s, unsigned m)
{
  if (!is_prime(p))
    throw DomainError("p = " + std::to_string(p) + " is not prime");
  if (s == 0)
    throw DomainError("s must be at least 1");
  if (m == 0 || m % p == 0)
    throw DomainError("m must be positive and not divisible by p");
  return m == 1 && p == 2;
}

CountTable emit_table(unsigned p, unsigned s, unsigned n_max)
{
  if (n_max == 0)
    throw DomainError("n_max must be at least 1");
  CountTable rows;
  rows.reserve(n_max);
  for (unsigned n = 1; n <= n_max; ++n)
    rows.emplace_back(n, count_E_composite(p, s, n));
  return rows;
}

} // namespace gr2
