/*
   Copyright 2026 The cftk Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cftk/finite_field.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "cftk/error.hpp"

namespace cftk {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 17; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; out.size() < count; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

std::uint64_t nth_prime(std::size_t n) { return first_primes(n + 1).back(); }

namespace {

using u128 = unsigned __int128;

std::vector<std::uint64_t> digits(std::uint64_t code, std::uint64_t p, unsigned k) {
  std::vector<std::uint64_t> d(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

std::uint64_t undigits(const std::vector<std::uint64_t>& d, std::uint64_t p) {
  std::uint64_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * p + d[i];
  return code;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FiniteField::FiniteField(std::uint64_t p) : p_(p), k_(1), q_(p), modulus_{0, 1} {
  if (!is_prime(p)) fail(ErrorKind::UnsupportedBase, "GF(p) needs a prime p, got " + std::to_string(p));
}

FiniteField::FiniteField(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  if (!is_prime(p)) fail(ErrorKind::UnsupportedBase, "GF(p^k) needs a prime p");
  if (k == 0 || modulus_.size() != k + 1 || modulus_.back() != 1)
    fail(ErrorKind::UnsupportedBase, "GF(p^k) modulus must be monic of degree k");
  for (unsigned i = 0; i < k; ++i) {
    if (q_ > (std::uint64_t{1} << 40) / p) fail(ErrorKind::UnsupportedBase, "GF(p^k) too large");
    q_ *= p;
  }
  if (k_ > 1 && q_ <= (std::uint64_t{1} << 20)) build_tables();
}

void FiniteField::build_tables() {
  const std::uint64_t n = q_ - 1;
  const auto divisors = prime_divisors(n);
  std::uint64_t gen = 0;
  for (std::uint64_t g = 1; g < q_ && gen == 0; ++g) {
    bool primitive = true;
    for (std::uint64_t r : divisors) {
      std::uint64_t e = n / r, acc = 1, b = g;
      while (e) {
        if (e & 1) acc = slow_mul(acc, b);
        b = slow_mul(b, b);
        e >>= 1;
      }
      if (acc == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) gen = g;
  }
  exp_.assign(2 * n, 0);
  log_.assign(q_, 0);
  std::uint64_t acc = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    exp_[i] = static_cast<std::uint32_t>(acc);
    exp_[i + n] = static_cast<std::uint32_t>(acc);
    log_[acc] = static_cast<std::uint32_t>(i);
    acc = slow_mul(acc, gen);
  }
}

std::uint64_t FiniteField::add(std::uint64_t a, std::uint64_t b) const {
  if (k_ == 1) {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t out = 0, place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

std::uint64_t FiniteField::neg(std::uint64_t a) const {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  std::uint64_t out = 0, place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((p_ - a % p_) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return out;
}

std::uint64_t FiniteField::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t FiniteField::slow_mul(std::uint64_t a, std::uint64_t b) const {
  auto da = digits(a, p_, k_), db = digits(b, p_, k_);
  std::vector<std::uint64_t> prod(2 * k_, 0);
  for (unsigned i = 0; i < k_; ++i)
    for (unsigned j = 0; j < k_; ++j)
      prod[i + j] = static_cast<std::uint64_t>((prod[i + j] + static_cast<u128>(da[i]) * db[j]) % p_);
  for (std::size_t m = prod.size(); m-- > k_;) {
    const std::uint64_t c = prod[m];
    if (c == 0) continue;
    prod[m] = 0;
    for (unsigned t = 0; t < k_; ++t) {
      const std::uint64_t sub = static_cast<std::uint64_t>(static_cast<u128>(c) * modulus_[t] % p_);
      prod[m - k_ + t] = (prod[m - k_ + t] + p_ - sub) % p_;
    }
  }
  prod.resize(k_);
  return undigits(prod, p_);
}

std::uint64_t FiniteField::mul(std::uint64_t a, std::uint64_t b) const {
  if (k_ == 1) return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p_);
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) return exp_[log_[a] + log_[b]];
  return slow_mul(a, b);
}

std::uint64_t FiniteField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t acc = 1;
  while (e) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

std::uint64_t FiniteField::inv(std::uint64_t a) const {
  if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero in GF(" + std::to_string(q_) + ")");
  if (!exp_.empty()) {
    const std::uint64_t n = q_ - 1;
    return exp_[(n - log_[a]) % n];
  }
  return pow(a, q_ - 2);
}

std::uint64_t FiniteField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += static_cast<long long>(p_);
  return static_cast<std::uint64_t>(r);
}

bool FiniteField::sqrt(std::uint64_t a, std::uint64_t& root) const {
  if (a == 0) {
    root = 0;
    return true;
  }
  if (p_ == 2) {
    root = pow(a, q_ / 2);
    return true;
  }
  if (pow(a, (q_ - 1) / 2) != 1) return false;
  // Tonelli-Shanks in the cyclic group GF(q)^*.
  std::uint64_t t = q_ - 1;
  unsigned s = 0;
  while (t % 2 == 0) {
    t /= 2;
    ++s;
  }
  std::uint64_t z = 2;
  while (pow(z, (q_ - 1) / 2) == 1) ++z;
  std::uint64_t m = s, c = pow(z, t), x = pow(a, (t + 1) / 2), b = pow(a, t);
  while (b != 1) {
    std::uint64_t i = 0, bb = b;
    while (bb != 1) {
      bb = mul(bb, bb);
      ++i;
    }
    std::uint64_t g = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) g = mul(g, g);
    x = mul(x, g);
    c = mul(g, g);
    b = mul(b, c);
    m = i;
  }
  root = x;
  return true;
}

namespace fq {

void trim(FqPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FqPoly add(const FiniteField& F, const FqPoly& a, const FqPoly& b) {
  FqPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(out);
  return out;
}

FqPoly sub(const FiniteField& F, const FqPoly& a, const FqPoly& b) {
  FqPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(out);
  return out;
}

FqPoly mul(const FiniteField& F, const FqPoly& a, const FqPoly& b) {
  if (a.empty() || b.empty()) return {};
  FqPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

FqPoly scale(const FiniteField& F, const FqPoly& a, std::uint64_t c) {
  FqPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.mul(a[i], c);
  trim(out);
  return out;
}

void divmod(const FiniteField& F, const FqPoly& a, const FqPoly& b, FqPoly& quot, FqPoly& rem) {
  if (b.empty()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  rem = a;
  trim(rem);
  quot.clear();
  if (rem.size() < b.size()) return;
  quot.assign(rem.size() - b.size() + 1, 0);
  const std::uint64_t inv_lc = F.inv(b.back());
  for (std::size_t m = rem.size(); m-- >= b.size();) {
    const std::uint64_t c = F.mul(rem[m], inv_lc);
    const std::size_t shift = m - (b.size() - 1);
    quot[shift] = c;
    if (c != 0) {
      for (std::size_t t = 0; t < b.size(); ++t) rem[shift + t] = F.sub(rem[shift + t], F.mul(c, b[t]));
    }
    if (m == 0) break;
  }
  trim(rem);
  trim(quot);
}

FqPoly rem(const FiniteField& F, const FqPoly& a, const FqPoly& b) {
  FqPoly q, r;
  divmod(F, a, b, q, r);
  return r;
}

FqPoly quo(const FiniteField& F, const FqPoly& a, const FqPoly& b) {
  FqPoly q, r;
  divmod(F, a, b, q, r);
  return q;
}

FqPoly monic(const FiniteField& F, const FqPoly& a) {
  if (a.empty()) return a;
  return scale(F, a, F.inv(a.back()));
}

FqPoly gcd(const FiniteField& F, FqPoly a, FqPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FqPoly r = rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

FqPoly derivative(const FiniteField& F, const FqPoly& a) {
  if (a.size() <= 1) return {};
  FqPoly out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = F.mul(a[i], F.from_int(static_cast<long long>(i % F.characteristic())));
  trim(out);
  return out;
}

FqPoly mulmod(const FiniteField& F, const FqPoly& a, const FqPoly& b, const FqPoly& modulus) {
  return rem(F, mul(F, a, b), modulus);
}

FqPoly powmod(const FiniteField& F, const FqPoly& base, const mpz_class& e, const FqPoly& modulus) {
  FqPoly acc{1};
  acc = rem(F, acc, modulus);
  FqPoly b = rem(F, base, modulus);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    acc = mulmod(F, acc, acc, modulus);
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = mulmod(F, acc, b, modulus);
  }
  return acc;
}

FqPoly powmod(const FiniteField& F, const FqPoly& base, std::uint64_t e, const FqPoly& modulus) {
  return powmod(F, base, mpz_class(static_cast<unsigned long>(e)), modulus);
}

std::uint64_t eval(const FiniteField& F, const FqPoly& a, std::uint64_t x) {
  std::uint64_t acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a[i]);
  return acc;
}

namespace {

std::vector<std::uint64_t> prime_factors_small(unsigned n) {
  std::vector<std::uint64_t> out;
  for (unsigned d = 2; d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  return out;
}

// x^(q^i) mod f for i = 0..n
std::vector<FqPoly> frobenius_powers(const FiniteField& F, const FqPoly& f, unsigned n) {
  std::vector<FqPoly> out;
  FqPoly h = rem(F, FqPoly{0, 1}, f);
  out.push_back(h);
  for (unsigned i = 1; i <= n; ++i) {
    h = powmod(F, h, F.order(), f);
    out.push_back(h);
  }
  return out;
}

}  // namespace

bool is_irreducible(const FiniteField& F, const FqPoly& f_in) {
  FqPoly f = f_in;
  trim(f);
  const int n = deg(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  f = monic(F, f);
  const auto pw = frobenius_powers(F, f, static_cast<unsigned>(n));
  const FqPoly x = rem(F, FqPoly{0, 1}, f);
  if (pw[n] != x) return false;
  for (std::uint64_t r : prime_factors_small(static_cast<unsigned>(n))) {
    const FqPoly g = gcd(F, sub(F, pw[n / r], x), f);
    if (deg(g) != 0) return false;
  }
  return true;
}

int compare(const FqPoly& a, const FqPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

bool next_monic(const FiniteField& F, FqPoly& poly) {
  // The constant term is the most significant position of the order.
  for (std::size_t i = poly.size() - 1; i-- > 0;) {
    if (poly[i] + 1 < F.order()) {
      ++poly[i];
      return true;
    }
    poly[i] = 0;
  }
  return false;
}

namespace {

// p-th root of a polynomial whose derivative vanishes.
FqPoly pth_root(const FiniteField& F, const FqPoly& c) {
  const std::uint64_t p = F.characteristic();
  FqPoly out((c.size() - 1) / p + 1, 0);
  for (std::size_t i = 0; i < c.size(); i += p) out[i / p] = F.pow(c[i], F.order() / p);
  trim(out);
  return out;
}

}  // namespace

std::vector<std::pair<FqPoly, int>> squarefree(const FiniteField& F, const FqPoly& f_in) {
  std::vector<std::pair<FqPoly, int>> out;
  FqPoly f = monic(F, f_in);
  if (deg(f) <= 0) return out;
  FqPoly d = derivative(F, f);
  if (d.empty()) {
    for (auto& [g, m] : squarefree(F, pth_root(F, f)))
      out.emplace_back(g, m * static_cast<int>(F.characteristic()));
    return out;
  }
  FqPoly c = gcd(F, f, d);
  FqPoly w = quo(F, f, c);
  int i = 1;
  while (deg(w) > 0) {
    FqPoly y = gcd(F, w, c);
    FqPoly z = quo(F, w, y);
    if (deg(z) > 0) out.emplace_back(z, i);
    w = y;
    c = quo(F, c, y);
    ++i;
  }
  if (deg(c) > 0) {
    for (auto& [g, m] : squarefree(F, pth_root(F, c)))
      out.emplace_back(g, m * static_cast<int>(F.characteristic()));
  }
  return out;
}

namespace {

void equal_degree_split(const FiniteField& F, const FqPoly& g, unsigned d, std::mt19937_64& rng,
                        std::vector<FqPoly>& out) {
  if (static_cast<unsigned>(deg(g)) == d) {
    out.push_back(g);
    return;
  }
  const unsigned n = static_cast<unsigned>(deg(g));
  std::uniform_int_distribution<std::uint64_t> coef(0, F.order() - 1);
  for (;;) {
    FqPoly a(n);
    for (auto& c : a) c = coef(rng);
    trim(a);
    if (deg(a) < 1) continue;
    FqPoly b;
    if (F.characteristic() == 2) {
      // Trace map a + a^2 + ... + a^(2^(kd-1)).
      FqPoly t = a, acc = a;
      const unsigned steps = F.degree() * d;
      for (unsigned i = 1; i < steps; ++i) {
        t = mulmod(F, t, t, g);
        acc = add(F, acc, t);
      }
      b = acc;
    } else {
      mpz_class e;
      mpz_ui_pow_ui(e.get_mpz_t(), F.order(), d);
      e = (e - 1) / 2;
      b = sub(F, powmod(F, a, e, g), FqPoly{1});
    }
    FqPoly h = gcd(F, b, g);
    if (deg(h) > 0 && deg(h) < deg(g)) {
      equal_degree_split(F, h, d, rng, out);
      equal_degree_split(F, quo(F, g, h), d, rng, out);
      return;
    }
  }
}

std::uint64_t seed_of(const FqPoly& f) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (auto c : f) h = (h ^ c) * 0x100000001b3ULL + (h >> 29);
  return h;
}

}  // namespace

std::vector<std::pair<FqPoly, int>> factor(const FiniteField& F, const FqPoly& f_in) {
  std::vector<std::pair<FqPoly, int>> out;
  std::mt19937_64 rng(seed_of(f_in));
  for (auto& [part, mult] : squarefree(F, f_in)) {
    FqPoly f = part;
    FqPoly h = rem(F, FqPoly{0, 1}, f);
    const FqPoly x = h;
    for (unsigned d = 1; deg(f) >= static_cast<int>(2 * d); ++d) {
      h = powmod(F, h, F.order(), f);
      FqPoly g = gcd(F, sub(F, h, rem(F, x, f)), f);
      if (deg(g) > 0) {
        std::vector<FqPoly> pieces;
        equal_degree_split(F, g, d, rng, pieces);
        for (auto& piece : pieces) out.emplace_back(monic(F, piece), mult);
        f = quo(F, f, g);
        h = rem(F, h, f);
      }
    }
    if (deg(f) > 0) out.emplace_back(monic(F, f), mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const int c = compare(a.first, b.first);
    return c != 0 ? c < 0 : a.second < b.second;
  });
  return out;
}

bool sqrt(const FiniteField& F, const FqPoly& a_in, FqPoly& root) {
  FqPoly a = a_in;
  trim(a);
  if (a.empty()) {
    root.clear();
    return true;
  }
  if (deg(a) % 2 != 0) return false;
  const std::size_t m = static_cast<std::size_t>(deg(a) / 2);
  FqPoly r(m + 1, 0);
  if (F.characteristic() == 2) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i % 2 == 1 && a[i] != 0) return false;
      if (i % 2 == 0) r[i / 2] = F.pow(a[i], F.order() / 2);
    }
  } else {
    std::uint64_t top;
    if (!F.sqrt(a.back(), top)) return false;
    r[m] = top;
    const std::uint64_t inv2top = F.inv(F.mul(F.from_int(2), top));
    for (std::size_t k = m; k-- > 0;) {
      // coefficient of x^(m+k) in r^2 determines r[k]
      std::uint64_t acc = a[m + k];
      for (std::size_t i = k + 1; i < m; ++i) {
        const std::size_t j = m + k - i;
        if (j > k && j < m + 1 && j != m) acc = F.sub(acc, F.mul(r[i], r[j]));
      }
      r[k] = F.mul(acc, inv2top);
    }
  }
  trim(r);
  if (mul(F, r, r) != a) return false;
  root = r;
  return true;
}

std::string to_string(const FqPoly& a) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ']';
  return os.str();
}

}  // namespace fq

}  // namespace cftk
