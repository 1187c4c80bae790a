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

#include <gr2/cosets.hpp>

#include <gr2/errors.hpp>
#include <gr2/galois_ring.hpp>

#include <algorithm>
#include <numeric>

namespace gr2 {

namespace {

void require_coprime(unsigned m, unsigned p)
{
  if (m == 0)
    throw DomainError("m must be positive");
  if (m % p == 0)
    throw DomainError("p = " + std::to_string(p) + " divides m = " + std::to_string(m));
}

std::uint64_t pow_mod(std::uint64_t b, unsigned e, unsigned m)
{
  std::uint64_t r = 1 % m;
  b %= m;
  for (unsigned i = 0; i < e; ++i)
    r = r * b % m;
  return r;
}

} // namespace

std::vector<unsigned> coset(unsigned h, unsigned m, std::uint64_t q)
{
  if (m == 0 || h >= m)
    throw DomainError("coset: need 0 <= h < m");
  if (std::gcd(q % m, std::uint64_t{m}) != 1 && m > 1)
    throw DomainError("coset: q and m are not coprime");
  std::vector<unsigned> out{h};
  std::uint64_t cur = std::uint64_t{h} * (q % m) % m;
  while (cur != h) {
    out.push_back(static_cast<unsigned>(cur));
    cur = cur * (q % m) % m;
  }
  return out;
}

unsigned multiplicative_order(std::uint64_t q, unsigned m)
{
  if (m == 1)
    return 1;
  if (std::gcd(q % m, std::uint64_t{m}) != 1)
    throw DomainError("q and m are not coprime");
  unsigned k = 1;
  std::uint64_t cur = q % m;
  while (cur != 1) {
    cur = cur * (q % m) % m;
    ++k;
  }
  return k;
}

const char* to_string(CosetClass c)
{
  switch (c) {
  case CosetClass::J0:
    return "J0";
  case CosetClass::J1:
    return "J1";
  case CosetClass::J2Prime:
    return "J2'";
  case CosetClass::J2Second:
    return "J2''";
  }
  return "?";
}

std::vector<unsigned> CosetPartition::reps(CosetClass c) const
{
  std::vector<unsigned> out;
  for (const auto& info : cosets)
    if (info.cls == c)
      out.push_back(info.rep);
  return out;
}

std::size_t CosetPartition::index_of(unsigned h) const
{
  for (std::size_t i = 0; i < cosets.size(); ++i)
    if (std::find(cosets[i].members.begin(), cosets[i].members.end(), h % m) != cosets[i].members.end())
      return i;
  throw InternalError("element missing from coset partition");
}

CosetPartition partition(unsigned m, unsigned p, unsigned s)
{
  if (!is_prime(p))
    throw DomainError("p = " + std::to_string(p) + " is not prime");
  if (s == 0)
    throw DomainError("s must be at least 1");
  require_coprime(m, p);
  const std::uint64_t q = pow_mod(p, s, m);

  CosetPartition out;
  out.m = m;
  out.p = p;
  out.s = s;
  out.order = multiplicative_order(q, m);

  std::vector<bool> seen(m, false);
  std::vector<CosetInfo> all;
  for (unsigned h = 0; h < m; ++h) {
    if (seen[h])
      continue;
    CosetInfo info;
    info.members = coset(h, m, q);
    for (auto x : info.members)
      seen[x] = true;
    info.rep = info.min = h;
    info.size = static_cast<unsigned>(info.members.size());
    all.push_back(std::move(info));
  }

  auto in_coset = [](const CosetInfo& c, unsigned x) {
    return std::find(c.members.begin(), c.members.end(), x) != c.members.end();
  };
  std::vector<CosetInfo> j0, j1, j2;
  for (auto& c : all) {
    const unsigned neg = (m - c.min) % m;
    if (c.min == 0 || (m % 2 == 0 && c.min == m / 2)) {
      c.cls = CosetClass::J0;
      j0.push_back(c);
    } else if (in_coset(c, neg)) {
      c.cls = CosetClass::J1;
      j1.push_back(c);
    } else {
      j2.push_back(c);
    }
  }
  out.cosets = j0;
  out.cosets.insert(out.cosets.end(), j1.begin(), j1.end());

  // Pair inverse cosets; the one with the smaller minimum goes to J2'.
  std::vector<CosetInfo> j2p, j2pp;
  std::vector<bool> used(j2.size(), false);
  for (std::size_t i = 0; i < j2.size(); ++i) {
    if (used[i])
      continue;
    const unsigned neg = (m - j2[i].min) % m;
    std::size_t k = i + 1;
    while (k < j2.size() && !in_coset(j2[k], neg))
      ++k;
    if (k == j2.size())
      throw InternalError("inverse coset not found");
    used[i] = used[k] = true;
    auto first = j2[i];
    auto second = j2[k];
    first.cls = CosetClass::J2Prime;
    second.cls = CosetClass::J2Second;
    second.rep = neg;
    second.members = coset(neg, m, q);
    j2p.push_back(std::move(first));
    j2pp.push_back(std::move(second));
  }
  const std::size_t base = out.cosets.size();
  for (std::size_t i = 0; i < j2p.size(); ++i) {
    j2p[i].partner = base + j2p.size() + i;
    j2pp[i].partner = base + i;
  }
  out.cosets.insert(out.cosets.end(), j2p.begin(), j2p.end());
  out.cosets.insert(out.cosets.end(), j2pp.begin(), j2pp.end());
  return out;
}

LengthSplit split_length(unsigned n, unsigned p)
{
  if (n == 0)
    throw DomainError("length must be positive");
  if (!is_prime(p))
    throw DomainError("p = " + std::to_string(p) + " is not prime");
  LengthSplit out{n, 0};
  while (out.m % p == 0) {
    out.m /= p;
    ++out.a;
  }
  return out;
}

} // namespace gr2
