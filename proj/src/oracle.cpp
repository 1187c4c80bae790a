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

#include <gr2/oracle.hpp>

#include <gr2/errors.hpp>

#include <algorithm>
#include <set>

namespace gr2 {

Ambient::Ambient(RingPtr ring, unsigned n, std::uint64_t ceiling) : ring_(std::move(ring)), n_(n), size_(1)
{
  if (n == 0)
    throw DomainError("length must be positive");
  const std::uint64_t base = ring_->p2();
  for (unsigned i = 0; i < n * ring_->s(); ++i) {
    if (size_ > ceiling / base)
      throw LimitError("ambient space " + ring_->name() + "^" + std::to_string(n) + " exceeds the oracle ceiling " +
                       std::to_string(ceiling));
    size_ *= base;
  }
}

std::uint64_t Ambient::encode(const Word& w) const
{
  const std::uint64_t base = ring_->p2();
  std::uint64_t v = 0;
  for (unsigned i = n_; i-- > 0;)
    for (unsigned c = ring_->s(); c-- > 0;)
      v = v * base + w[i].c[c];
  return v;
}

Word Ambient::decode(std::uint64_t v) const
{
  const std::uint64_t base = ring_->p2();
  Word w(n_, ring_->zero());
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned c = 0; c < ring_->s(); ++c) {
      w[i].c[c] = static_cast<Digit>(v % base);
      v /= base;
    }
  return w;
}

std::uint64_t Ambient::add(std::uint64_t x, std::uint64_t y) const
{
  const std::uint64_t base = ring_->p2();
  std::uint64_t r = 0;
  std::uint64_t place = 1;
  for (unsigned k = 0; k < n_ * ring_->s(); ++k) {
    r += ((x % base + y % base) % base) * place;
    x /= base;
    y /= base;
    place *= base;
  }
  return r;
}

std::uint64_t Ambient::shift(std::uint64_t x) const
{
  auto w = decode(x);
  std::rotate(w.rbegin(), w.rbegin() + 1, w.rend());
  return encode(w);
}

std::uint64_t Ambient::scale(std::uint64_t x, const GrElem& c) const
{
  auto w = decode(x);
  for (auto& e : w)
    e = ring_->mul(e, c);
  return encode(w);
}

GrElem Ambient::inner(std::uint64_t x, std::uint64_t y, DualKind kind) const
{
  const auto a = decode(x);
  const auto b = decode(y);
  auto acc = ring_->zero();
  for (unsigned i = 0; i < n_; ++i)
    acc = ring_->add(acc, ring_->mul(a[i], kind == DualKind::Euclidean ? b[i] : ring_->conjugate(b[i])));
  return acc;
}

namespace {

// Additive subgroup grown one generator at a time.
class Span {
public:
  explicit Span(const Ambient& A) : A_(A), member_(A.size(), false)
  {
    member_[0] = true;
    elems_.push_back(0);
  }

  bool contains(std::uint64_t v) const { return member_[v]; }

  bool absorb(std::uint64_t g)
  {
    if (member_[g])
      return false;
    gens_.push_back(g);
    const auto base = elems_;
    std::uint64_t step = g;
    while (!member_[step]) {
      for (auto x : base) {
        const auto y = A_.add(x, step);
        member_[y] = true;
        elems_.push_back(y);
      }
      step = A_.add(step, g);
    }
    return true;
  }

  DenseCode finish() &&
  {
    std::sort(elems_.begin(), elems_.end());
    return DenseCode{std::move(elems_), std::move(gens_)};
  }

private:
  const Ambient& A_;
  std::vector<bool> member_;
  std::vector<std::uint64_t> elems_;
  std::vector<std::uint64_t> gens_;
};

} // namespace

DenseCode closure(const Ambient& A, const std::vector<std::uint64_t>& gens)
{
  // Z_{p^2}-span of xi^t X^k g.
  const auto& G = A.gr();
  Span span(A);
  for (auto g : gens) {
    auto shifted = g;
    for (unsigned k = 0; k < A.length(); ++k) {
      for (unsigned t = 0; t < G.s(); ++t)
        span.absorb(A.scale(shifted, G.teich(t)));
      shifted = A.shift(shifted);
    }
  }
  return std::move(span).finish();
}

std::vector<DenseCode> brute_ideals(const Ambient& A)
{
  // Every ideal here is generated by two elements, so sums of principal
  // ideals cover them all.
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<DenseCode> principal;
  for (std::uint64_t v = 0; v < A.size(); ++v) {
    auto c = closure(A, {v});
    if (seen.insert(c.words).second)
      principal.push_back(std::move(c));
  }
  std::vector<DenseCode> all = principal;
  for (std::size_t i = 0; i < principal.size(); ++i) {
    for (std::size_t j = i + 1; j < principal.size(); ++j) {
      auto gens = principal[i].gens;
      gens.insert(gens.end(), principal[j].gens.begin(), principal[j].gens.end());
      Span span(A);
      for (auto g : gens)
        span.absorb(g);
      auto c = std::move(span).finish();
      if (seen.insert(c.words).second)
        all.push_back(std::move(c));
    }
  }
  std::sort(all.begin(), all.end(), [](const DenseCode& x, const DenseCode& y) { return x.words < y.words; });
  return all;
}

DenseCode brute_dual(const Ambient& A, const DenseCode& code, DualKind kind)
{
  if (kind == DualKind::Hermitian && A.gr().s() % 2 != 0)
    throw DomainError("Hermitian duality requires even s");
  const auto& G = A.gr();
  Span span(A);
  for (std::uint64_t v = 0; v < A.size(); ++v) {
    if (span.contains(v))
      continue;
    bool orth = true;
    for (auto g : code.gens)
      if (!G.is_zero(A.inner(v, g, kind))) {
        orth = false;
        break;
      }
    if (orth)
      span.absorb(v);
  }
  return std::move(span).finish();
}

DenseCode materialize(const Ambient& A, const CyclicRing& R, const CanonicalCode& code)
{
  if (A.length() != R.length())
    throw DomainError("ambient length does not match p^a");
  std::vector<std::uint64_t> words;
  for_each_codeword(R, code, [&](const QuotPoly& w) {
    words.push_back(A.encode(R.to_u(w)));
    return true;
  });
  Span span(A);
  for (auto w : words)
    span.absorb(w);
  auto out = std::move(span).finish();
  if (out.words.size() != words.size())
    throw InternalError("codeword stream is not closed under addition");
  return out;
}

} // namespace gr2
