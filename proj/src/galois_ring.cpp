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

#include <gr2/galois_ring.hpp>

#include <gr2/errors.hpp>
#include <gr2/literal.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <tuple>

namespace gr2 {

namespace {

constexpr std::uint64_t kLogTableLimit = 1u << 16;

Digit mod_of(long long v, Digit m)
{
  long long r = v % static_cast<long long>(m);
  return static_cast<Digit>(r < 0 ? r + m : r);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

std::uint64_t checked_power(std::uint64_t base, unsigned e)
{
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > (std::uint64_t{1} << 62) / base)
      throw DomainError("p^s exceeds the supported range (2^62)");
    r *= base;
  }
  return r;
}

// Smallest monic primitive polynomial of degree s over F_p, ordered by the
// base-p integer sum c_i p^i of its non-leading coefficients.
std::vector<Digit> smallest_primitive(unsigned p, unsigned s, std::uint64_t q)
{
  const auto factors = prime_factors(q - 1);
  for (std::uint64_t idx = 0; idx < q; ++idx) {
    std::vector<Digit> f(s + 1, 0);
    std::uint64_t t = idx;
    for (unsigned i = 0; i < s; ++i) {
      f[i] = static_cast<Digit>(t % p);
      t /= p;
    }
    f[s] = 1;
    if (f[0] == 0)
      continue;
    PolyModRing r(p, f);
    std::vector<Digit> x(s, 0);
    if (s == 1)
      x[0] = mod_of(-static_cast<long long>(f[0]), p);
    else
      x[1] = 1;
    if (r.pow(x, q - 1) != r.one())
      continue;
    bool primitive = true;
    for (auto fac : factors) {
      if (r.pow(x, (q - 1) / fac) == r.one()) {
        primitive = false;
        break;
      }
    }
    if (primitive)
      return f;
  }
  throw InternalError("no primitive polynomial found");
}

bool reduces_to_primitive(unsigned p, unsigned s, std::uint64_t q, const std::vector<Digit>& f2)
{
  std::vector<Digit> f(s + 1);
  for (unsigned i = 0; i <= s; ++i)
    f[i] = f2[i] % p;
  if (f[0] == 0)
    return false;
  PolyModRing r(p, f);
  std::vector<Digit> x(s, 0);
  if (s == 1)
    x[0] = mod_of(-static_cast<long long>(f[0]), p);
  else
    x[1] = 1;
  if (r.pow(x, q - 1) != r.one())
    return false;
  for (auto fac : prime_factors(q - 1))
    if (r.pow(x, (q - 1) / fac) == r.one())
      return false;
  return true;
}

// Given a monic lift G over Z_{p^2} of a primitive polynomial, return the
// minimal polynomial of xi = x^{p^s} in Z_{p^2}[x]/(G).
std::vector<Digit> teichmuller_modulus(unsigned p, unsigned s, std::uint64_t q,
                                       const std::vector<Digit>& lift)
{
  const Digit p2 = p * p;
  PolyModRing r(p2, lift);
  std::vector<Digit> x(s, 0);
  if (s == 1)
    x[0] = mod_of(-static_cast<long long>(lift[0]), p2);
  else
    x[1] = 1;
  const auto xi = r.pow(x, q);

  // prod_{i<s} (y - xi^{p^i}) with coefficients in Z_{p^2}[x]/(G).
  std::vector<std::vector<Digit>> poly{r.one()};
  auto conj = xi;
  for (unsigned i = 0; i < s; ++i) {
    std::vector<std::vector<Digit>> next(poly.size() + 1, std::vector<Digit>(s, 0));
    const auto neg = r.sub(std::vector<Digit>(s, 0), conj);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] = r.add(next[k + 1], poly[k]);
      next[k] = r.add(next[k], r.mul(poly[k], neg));
    }
    poly = std::move(next);
    conj = r.pow(conj, p);
  }
  std::vector<Digit> out(s + 1);
  for (unsigned k = 0; k <= s; ++k) {
    for (unsigned j = 1; j < s; ++j)
      if (poly[k][j] != 0)
        throw InternalError("Teichmuller minimal polynomial has non-constant coefficients");
    out[k] = poly[k][0];
  }
  return out;
}

} // namespace

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

// ---------------------------------------------------------------- PolyModRing

PolyModRing::PolyModRing(Digit m, std::vector<Digit> monic)
  : m_(m), deg_(static_cast<unsigned>(monic.size() - 1)), f_(std::move(monic))
{
  // x^{deg+k} for k = 0..deg-2, reduced.
  std::vector<Digit> cur(deg_, 0);
  for (unsigned i = 0; i < deg_; ++i)
    cur[i] = (m_ - f_[i] % m_) % m_;
  for (unsigned k = 0; k + 1 < deg_; ++k) {
    red_.push_back(cur);
    // multiply by x
    std::vector<Digit> nxt(deg_, 0);
    const Digit top = cur[deg_ - 1];
    for (unsigned i = deg_ - 1; i > 0; --i)
      nxt[i] = cur[i - 1];
    for (unsigned i = 0; i < deg_; ++i)
      nxt[i] = static_cast<Digit>((nxt[i] + std::uint64_t(top) * ((m_ - f_[i] % m_) % m_)) % m_);
    cur = std::move(nxt);
  }
}

std::vector<Digit> PolyModRing::one() const
{
  std::vector<Digit> r(deg_, 0);
  r[0] = 1 % m_;
  return r;
}

std::vector<Digit> PolyModRing::add(const std::vector<Digit>& a, const std::vector<Digit>& b) const
{
  std::vector<Digit> r(deg_);
  for (unsigned i = 0; i < deg_; ++i)
    r[i] = (a[i] + b[i]) % m_;
  return r;
}

std::vector<Digit> PolyModRing::sub(const std::vector<Digit>& a, const std::vector<Digit>& b) const
{
  std::vector<Digit> r(deg_);
  for (unsigned i = 0; i < deg_; ++i)
    r[i] = (a[i] + m_ - b[i]) % m_;
  return r;
}

std::vector<Digit> PolyModRing::scale(const std::vector<Digit>& a, Digit k) const
{
  std::vector<Digit> r(deg_);
  for (unsigned i = 0; i < deg_; ++i)
    r[i] = static_cast<Digit>(std::uint64_t(a[i]) * k % m_);
  return r;
}

std::vector<Digit> PolyModRing::mul(const std::vector<Digit>& a, const std::vector<Digit>& b) const
{
  std::vector<std::uint64_t> prod(2 * deg_ - 1, 0);
  for (unsigned i = 0; i < deg_; ++i) {
    if (a[i] == 0)
      continue;
    for (unsigned j = 0; j < deg_; ++j)
      prod[i + j] = (prod[i + j] + std::uint64_t(a[i]) * b[j]) % m_;
  }
  std::vector<Digit> r(deg_);
  for (unsigned i = 0; i < deg_; ++i)
    r[i] = static_cast<Digit>(prod[i]);
  for (unsigned k = 0; k + 1 < deg_; ++k) {
    const std::uint64_t c = prod[deg_ + k];
    if (c == 0)
      continue;
    for (unsigned i = 0; i < deg_; ++i)
      r[i] = static_cast<Digit>((r[i] + c * red_[k][i]) % m_);
  }
  return r;
}

std::vector<Digit> PolyModRing::pow(std::vector<Digit> a, std::uint64_t e) const
{
  auto r = one();
  while (e > 0) {
    if (e & 1)
      r = mul(r, a);
    e >>= 1;
    if (e > 0)
      a = mul(a, a);
  }
  return r;
}

// --------------------------------------------------------------- ResidueField

ResidueField::ResidueField(unsigned p, std::vector<Digit> monic)
  : p_(p), s_(static_cast<unsigned>(monic.size() - 1))
{
  for (auto& c : monic)
    c %= p;
  q_ = checked_power(p, s_);
  arith_ = PolyModRing(p, std::move(monic));
}

FqElem ResidueField::zero() const { return FqElem{std::vector<Digit>(s_, 0)}; }
FqElem ResidueField::one() const { return FqElem{arith_.one()}; }

FqElem ResidueField::from_int(long long v) const
{
  auto z = zero();
  z.c[0] = mod_of(v, p_);
  return z;
}

bool ResidueField::is_zero(const FqElem& x) const
{
  return std::all_of(x.c.begin(), x.c.end(), [](Digit d) { return d == 0; });
}

FqElem ResidueField::add(const FqElem& x, const FqElem& y) const { return {arith_.add(x.c, y.c)}; }
FqElem ResidueField::sub(const FqElem& x, const FqElem& y) const { return {arith_.sub(x.c, y.c)}; }
FqElem ResidueField::neg(const FqElem& x) const { return {arith_.sub(zero().c, x.c)}; }
FqElem ResidueField::mul(const FqElem& x, const FqElem& y) const { return {arith_.mul(x.c, y.c)}; }
FqElem ResidueField::scale(const FqElem& x, Digit k) const { return {arith_.scale(x.c, k % p_)}; }
FqElem ResidueField::pow(const FqElem& x, std::uint64_t e) const { return {arith_.pow(x.c, e)}; }

FqElem ResidueField::inv(const FqElem& x) const
{
  if (is_zero(x))
    throw DomainError("inverse of zero in the residue field");
  return pow(x, q_ - 2);
}

FqElem ResidueField::frobenius(const FqElem& x, unsigned k) const
{
  auto r = x;
  for (unsigned i = 0; i < k; ++i)
    r = pow(r, p_);
  return r;
}

FqElem ResidueField::trace_half(const FqElem& x) const
{
  if (s_ % 2 != 0)
    throw DomainError("trace to F_{p^{s/2}} requires even s");
  return add(x, frobenius(x, s_ / 2));
}

FqElem ResidueField::psi(const FqElem& x) const
{
  if (s_ % 2 != 0)
    throw DomainError("Psi requires even s");
  return sub(frobenius(x, s_ / 2), x);
}

std::vector<FqElem> ResidueField::preimage_set(HalfMap map, const FqElem& target) const
{
  if (s_ % 2 != 0)
    throw DomainError("preimage_set requires even s");
  if (q_ > kLogTableLimit)
    throw LimitError("preimage_set is limited to p^s <= 2^16");
  std::vector<FqElem> out;
  for (std::uint64_t i = 0; i < q_; ++i) {
    auto x = from_index(i);
    auto y = map == HalfMap::Trace ? trace_half(x) : psi(x);
    if (y == target)
      out.push_back(std::move(x));
  }
  return out;
}

std::uint64_t ResidueField::index(const FqElem& x) const
{
  std::uint64_t r = 0;
  for (unsigned i = s_; i-- > 0;)
    r = r * p_ + x.c[i];
  return r;
}

FqElem ResidueField::from_index(std::uint64_t i) const
{
  auto z = zero();
  for (unsigned k = 0; k < s_; ++k) {
    z.c[k] = static_cast<Digit>(i % p_);
    i /= p_;
  }
  return z;
}

// ---------------------------------------------------------------- GaloisRing

GaloisRing::GaloisRing(unsigned p, std::vector<Digit> teich_modulus)
  : p_(p), s_(static_cast<unsigned>(teich_modulus.size() - 1)), p2_(p * p),
    arith_(p * p, teich_modulus), field_(p, teich_modulus)
{
  const auto q = field_.size();
  if (q <= kLogTableLimit) {
    log_table_.assign(q, 0);
    auto cur = field_.one();
    const auto w = residue(xi());
    for (std::uint64_t e = 0; e + 1 < q; ++e) {
      log_table_[field_.index(cur)] = static_cast<std::uint32_t>(e);
      cur = field_.mul(cur, w);
    }
  }
}

RingPtr GaloisRing::make(unsigned p, unsigned s)
{
  if (!is_prime(p))
    throw DomainError("p = " + std::to_string(p) + " is not prime");
  if (s == 0)
    throw DomainError("degree s must be at least 1");
  if (p >= (1u << 16))
    throw DomainError("p must be below 2^16");

  std::string override_text;
  if (const char* env = std::getenv("GR2_MODULUS_OVERRIDE"))
    override_text = env;

  static std::mutex mutex;
  static std::map<std::tuple<unsigned, unsigned, std::string>, RingPtr> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_tuple(p, s, override_text);
  if (auto it = cache.find(key); it != cache.end())
    return it->second;

  RingPtr ring;
  if (!override_text.empty()) {
    auto poly = parse_int_polynomial(override_text, 'x');
    if (poly.size() == s + 1)
      ring = make_from_polynomial(p, poly);
  }
  if (!ring) {
    const auto q = checked_power(p, s);
    auto g = smallest_primitive(p, s, q);
    ring = std::make_shared<const GaloisRing>(p, teichmuller_modulus(p, s, q, g));
  }
  cache.emplace(std::move(key), ring);
  return ring;
}

RingPtr GaloisRing::make_from_polynomial(unsigned p, const std::vector<long long>& monic)
{
  if (!is_prime(p))
    throw DomainError("p = " + std::to_string(p) + " is not prime");
  if (monic.size() < 2)
    throw DomainError("modulus must have degree at least 1");
  const unsigned s = static_cast<unsigned>(monic.size() - 1);
  const Digit p2 = p * p;
  std::vector<Digit> f(s + 1);
  for (unsigned i = 0; i <= s; ++i)
    f[i] = mod_of(monic[i], p2);
  if (f[s] != 1)
    throw DomainError("modulus must be monic");
  const auto q = checked_power(p, s);
  if (!reduces_to_primitive(p, s, q, f))
    throw DomainError("modulus does not reduce to a primitive polynomial mod p");
  return std::make_shared<const GaloisRing>(p, teichmuller_modulus(p, s, q, f));
}

GrElem GaloisRing::zero() const { return GrElem{std::vector<Digit>(s_, 0)}; }
GrElem GaloisRing::one() const { return GrElem{arith_.one()}; }

GrElem GaloisRing::xi() const
{
  if (s_ == 1)
    return from_int(-static_cast<long long>(arith_.poly()[0]));
  auto z = zero();
  z.c[1] = 1;
  return z;
}

GrElem GaloisRing::from_int(long long v) const
{
  auto z = zero();
  z.c[0] = mod_of(v, p2_);
  return z;
}

GrElem GaloisRing::from_coeffs(const std::vector<long long>& coeffs) const
{
  // Reduce a polynomial in xi of any degree.
  auto r = zero();
  auto power = one();
  const auto x = xi();
  for (auto c : coeffs) {
    r = add(r, scale(power, c));
    power = mul(power, x);
  }
  return r;
}

bool GaloisRing::is_zero(const GrElem& a) const
{
  return std::all_of(a.c.begin(), a.c.end(), [](Digit d) { return d == 0; });
}

bool GaloisRing::is_unit(const GrElem& a) const
{
  return std::any_of(a.c.begin(), a.c.end(), [this](Digit d) { return d % p_ != 0; });
}

GrElem GaloisRing::add(const GrElem& a, const GrElem& b) const { return {arith_.add(a.c, b.c)}; }
GrElem GaloisRing::sub(const GrElem& a, const GrElem& b) const { return {arith_.sub(a.c, b.c)}; }
GrElem GaloisRing::neg(const GrElem& a) const { return {arith_.sub(zero().c, a.c)}; }
GrElem GaloisRing::mul(const GrElem& a, const GrElem& b) const { return {arith_.mul(a.c, b.c)}; }
GrElem GaloisRing::scale(const GrElem& a, long long k) const { return {arith_.scale(a.c, mod_of(k, p2_))}; }
GrElem GaloisRing::pow(const GrElem& a, std::uint64_t e) const { return {arith_.pow(a.c, e)}; }

GrElem GaloisRing::inv(const GrElem& a) const
{
  if (!is_unit(a))
    throw DomainError("inverse of a non-unit in " + name());
  // Newton step y <- y (2 - a y) doubles p-adic precision; one step reaches p^2.
  const auto y0 = lift_teichmuller(field_.inv(residue(a)));
  return mul(y0, sub(from_int(2), mul(a, y0)));
}

GrElem GaloisRing::times_p(const GrElem& a) const { return scale(a, p_); }

GrElem GaloisRing::div_p(const GrElem& a) const
{
  GrElem r = zero();
  for (unsigned i = 0; i < s_; ++i) {
    if (a.c[i] % p_ != 0)
      throw InternalError("div_p of an element outside p GR");
    r.c[i] = a.c[i] / p_;
  }
  return r;
}

FqElem GaloisRing::residue(const GrElem& a) const
{
  FqElem r{std::vector<Digit>(s_)};
  for (unsigned i = 0; i < s_; ++i)
    r.c[i] = a.c[i] % p_;
  return r;
}

GrElem GaloisRing::lift_teichmuller(const FqElem& x) const
{
  GrElem a{std::vector<Digit>(x.c.begin(), x.c.end())};
  return teichmuller_part(a);
}

GrElem GaloisRing::teichmuller_part(const GrElem& a) const { return pow(a, q()); }

bool GaloisRing::is_teichmuller(const GrElem& a) const { return teichmuller_part(a) == a; }

std::pair<GrElem, GrElem> GaloisRing::teichmuller_decompose(const GrElem& alpha) const
{
  auto a = teichmuller_part(alpha);
  auto b = teichmuller_part(div_p(sub(alpha, a)));
  return {std::move(a), std::move(b)};
}

GrElem GaloisRing::frobenius(const GrElem& alpha, unsigned k) const
{
  auto [a, b] = teichmuller_decompose(alpha);
  for (unsigned i = 0; i < k % s_; ++i) {
    a = pow(a, p_);
    b = pow(b, p_);
  }
  return add(a, times_p(b));
}

GrElem GaloisRing::conjugate(const GrElem& alpha) const
{
  if (s_ % 2 != 0)
    throw DomainError("conjugation requires even s, got " + name());
  return frobenius(alpha, s_ / 2);
}

GrElem GaloisRing::teich(std::uint64_t e) const { return pow(xi(), e % (q() - 1)); }

std::optional<std::uint64_t> GaloisRing::teich_log(const GrElem& t) const
{
  if (is_zero(t))
    return std::nullopt;
  if (!is_teichmuller(t))
    throw DomainError("element is not in the Teichmuller set");
  if (!log_table_.empty())
    return log_table_[field_.index(residue(t))];
  auto cur = one();
  const auto x = xi();
  for (std::uint64_t e = 0; e + 1 < q(); ++e) {
    if (cur == t)
      return e;
    cur = mul(cur, x);
  }
  throw InternalError("Teichmuller logarithm not found");
}

GrElem GaloisRing::eval_int_poly(const std::vector<Digit>& poly, const GrElem& alpha) const
{
  auto r = zero();
  for (std::size_t k = poly.size(); k-- > 0;)
    r = add(mul(r, alpha), from_int(poly[k]));
  return r;
}

std::string GaloisRing::name() const
{
  return "GR(" + std::to_string(p_) + "^2," + std::to_string(s_) + ")";
}

// ----------------------------------------------------------------- Embedding

namespace {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b)
{
  while (b != 0) {
    auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

} // namespace

Embedding::Embedding(RingPtr base, RingPtr ext) : base_(std::move(base)), ext_(std::move(ext))
{
  if (base_->p() != ext_->p() || ext_->s() % base_->s() != 0)
    throw DomainError("cannot embed " + base_->name() + " into " + ext_->name());
  const auto qb = base_->q();
  const auto e = (ext_->q() - 1) / (qb - 1);
  const auto root = ext_->teich(e);
  bool found = false;
  for (std::uint64_t k = 1; k < qb || k == 1; ++k) {
    if (gcd_u64(k, qb - 1) != 1)
      continue;
    auto cand = ext_->pow(root, k);
    if (ext_->is_zero(ext_->eval_int_poly(base_->modulus(), cand))) {
      xi_image_ = std::move(cand);
      found = true;
      break;
    }
  }
  if (!found)
    throw InternalError("no root of the base modulus in the extension ring");
  auto power = ext_->one();
  for (unsigned k = 0; k < base_->s(); ++k) {
    basis_images_.push_back(power);
    power = ext_->mul(power, xi_image_);
  }
}

GrElem Embedding::apply(const GrElem& a) const
{
  auto r = ext_->zero();
  for (unsigned k = 0; k < base_->s(); ++k)
    if (a.c[k] != 0)
      r = ext_->add(r, ext_->scale(basis_images_[k], a.c[k]));
  return r;
}

std::optional<GrElem> Embedding::recover(const GrElem& b) const
{
  // Solve sum_k beta_k basis_images_[k] = b over Z_{p^2}. The residues of
  // the basis images are F_p-independent, so unit pivots always exist.
  const unsigned rows = ext_->s();
  const unsigned cols = base_->s();
  const Digit m = ext_->p2();
  const unsigned p = ext_->p();
  std::vector<std::vector<Digit>> a(rows, std::vector<Digit>(cols + 1));
  for (unsigned r = 0; r < rows; ++r) {
    for (unsigned c = 0; c < cols; ++c)
      a[r][c] = basis_images_[c].c[r];
    a[r][cols] = b.c[r];
  }
  auto inv_mod = [&](Digit v) {
    for (Digit t = 1; t < m; ++t)
      if (std::uint64_t(v) * t % m == 1)
        return t;
    throw InternalError("non-unit pivot");
  };
  std::vector<unsigned> pivot_row(cols);
  unsigned row = 0;
  for (unsigned c = 0; c < cols; ++c) {
    unsigned piv = rows;
    for (unsigned r = row; r < rows; ++r)
      if (a[r][c] % p != 0) {
        piv = r;
        break;
      }
    if (piv == rows)
      throw InternalError("embedding basis is not independent mod p");
    std::swap(a[row], a[piv]);
    const Digit iv = inv_mod(a[row][c]);
    for (auto& v : a[row])
      v = static_cast<Digit>(std::uint64_t(v) * iv % m);
    for (unsigned r = 0; r < rows; ++r) {
      if (r == row || a[r][c] == 0)
        continue;
      const Digit f = a[r][c];
      for (unsigned k = 0; k <= cols; ++k)
        a[r][k] = static_cast<Digit>((a[r][k] + std::uint64_t(m - f) * a[row][k]) % m);
    }
    pivot_row[c] = row++;
  }
  for (unsigned r = row; r < rows; ++r)
    if (a[r][cols] != 0)
      return std::nullopt;
  GrElem out = base_->zero();
  for (unsigned c = 0; c < cols; ++c)
    out.c[c] = a[pivot_row[c]][cols];
  return out;
}

GrElem embed(const RingPtr& base, const RingPtr& ext, const GrElem& alpha)
{
  return Embedding(base, ext).apply(alpha);
}

} // namespace gr2
