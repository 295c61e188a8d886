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

#include "cftk/tower.hpp"

#include <algorithm>

#include <sstream>

#include "cftk/error.hpp"

namespace cftk {

namespace {

Elem block(const Elem& a, std::size_t index, std::size_t size) {
  return Elem(a.begin() + static_cast<std::ptrdiff_t>(index * size),
              a.begin() + static_cast<std::ptrdiff_t>((index + 1) * size));
}

bool zero_span(const Scalar* p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (!p[i].is_zero()) return false;
  return true;
}

}  // namespace

TowerPtr Tower::make(const BaseField* base) { return TowerPtr(new Tower(base)); }

TowerPtr Tower::make(const BaseField* base, std::vector<Stage> stages) {
  TowerPtr t = make(base);
  for (auto& s : stages) t = t->extend_unchecked(std::move(s));
  return t;
}

TowerPtr Tower::extend_unchecked(Stage stage) const {
  const std::size_t level = height();
  kp::trim(stage.minpoly);
  if (kp::deg(stage.minpoly) < 1) fail(ErrorKind::InvalidArgument, "stage polynomial must have positive degree");
  for (const auto& c : stage.minpoly) {
    if (c.size() != dim(level)) fail(ErrorKind::InvalidArgument, "stage polynomial coefficients have the wrong length");
    for (const auto& s : c)
      if (s.field() != base_) fail(ErrorKind::MixedFields, "stage polynomial over a different base field");
  }
  stage.minpoly = kp::monic(*this, level, stage.minpoly);
  stage.degree = static_cast<unsigned>(kp::deg(stage.minpoly));
  if (stage.name.empty()) stage.name = "a" + std::to_string(level);
  auto t = std::shared_ptr<Tower>(new Tower(base_));
  t->stages_ = stages_;
  t->dims_ = dims_;
  t->dims_.push_back(dims_.back() * stage.degree);
  t->stages_.push_back(std::move(stage));
  return t;
}

TowerPtr Tower::prefix(std::size_t level) const {
  if (level > height()) fail(ErrorKind::InvalidArgument, "prefix level beyond tower height");
  if (level == height()) return shared_from_this();
  auto t = std::shared_ptr<Tower>(new Tower(base_));
  t->stages_.assign(stages_.begin(), stages_.begin() + static_cast<std::ptrdiff_t>(level));
  t->dims_.assign(dims_.begin(), dims_.begin() + static_cast<std::ptrdiff_t>(level + 1));
  return t;
}

Elem Tower::zero(std::size_t level) const { return Elem(dim(level), base_->zero()); }

Elem Tower::one(std::size_t level) const { return from_scalar(level, base_->one()); }

Elem Tower::from_scalar(std::size_t level, const Scalar& s) const {
  Elem e = zero(level);
  e[0] = s;
  return e;
}

Elem Tower::gen(std::size_t i) const {
  const Stage& s = stage(i);
  Elem e = zero(i + 1);
  if (s.degree == 1) {
    // a linear stage x + c has root -c
    Elem r = neg(s.minpoly[0]);
    return r;
  }
  e[dim(i)] = base_->one();
  return e;
}

Elem Tower::lift(const Elem& a, std::size_t from, std::size_t to) const {
  if (a.size() != dim(from)) fail(ErrorKind::InvalidArgument, "element does not belong to the stated level");
  Elem out = a;
  out.resize(dim(to), base_->zero());
  return out;
}

bool Tower::lower(const Elem& a, std::size_t from, std::size_t to, Elem& out) const {
  (void)from;
  for (std::size_t i = dim(to); i < a.size(); ++i)
    if (!a[i].is_zero()) return false;
  out.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(dim(to)));
  return true;
}

bool Tower::is_zero(const Elem& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

Elem Tower::add(const Elem& a, const Elem& b) const {
  if (a.size() != b.size()) fail(ErrorKind::MixedDomains, "adding elements of different levels");
  Elem out(a);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) out[i] += b[i];
  return out;
}

Elem Tower::sub(const Elem& a, const Elem& b) const {
  if (a.size() != b.size()) fail(ErrorKind::MixedDomains, "subtracting elements of different levels");
  Elem out(a);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) out[i] -= b[i];
  return out;
}

Elem Tower::neg(const Elem& a) const {
  Elem out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

Elem Tower::scale(const Elem& a, const Scalar& s) const {
  Elem out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i].is_zero() ? a[i] : a[i] * s;
  return out;
}

Elem Tower::mul(std::size_t level, const Elem& a, const Elem& b) const {
  if (a.size() != dim(level) || b.size() != dim(level))
    fail(ErrorKind::MixedDomains, "multiplying elements of different levels");
  Elem out = zero(level);
  mul_into(level, a.data(), b.data(), out.data(), false);
  return out;
}

void Tower::mul_into(std::size_t level, const Scalar* a, const Scalar* b, Scalar* out, bool negate) const {
  if (level == 0) {
    if (!a[0].is_zero() && !b[0].is_zero()) out[0].add_mul(a[0], b[0], negate);
    return;
  }
  const std::size_t s = level - 1, n = dim(s);
  const unsigned d = stage(s).degree;
  if (d == 1) return mul_into(s, a, b, out, negate);
  auto nonzero_blocks = [&](const Scalar* x) {
    std::vector<unsigned> idx;
    for (unsigned i = 0; i < d; ++i)
      if (!zero_span(x + i * n, n)) idx.push_back(i);
    return idx;
  };
  const auto za = nonzero_blocks(a);
  if (za.empty()) return;
  const auto zb = nonzero_blocks(b);
  if (zb.empty()) return;
  // blocks of degree >= d go to a scratch buffer and are reduced by the minimal polynomial
  Elem hi;
  if (za.back() + zb.back() >= d) hi = Elem((d - 1) * n, base_->zero());
  auto slot = [&](unsigned k) { return k < d ? out + k * n : hi.data() + (k - d) * n; };
  for (unsigned i : za)
    for (unsigned j : zb) mul_into(s, a + i * n, b + j * n, slot(i + j), negate);
  if (hi.empty()) return;
  const KPoly& m = stage(s).minpoly;
  for (unsigned k = 2 * d - 2; k >= d; --k) {
    const Scalar* c = hi.data() + (k - d) * n;
    if (zero_span(c, n)) continue;
    for (unsigned t = 0; t < d; ++t)
      if (!is_zero(m[t])) mul_into(s, c, m[t].data(), slot(k - d + t), true);
  }
}

Elem Tower::inv(std::size_t level, const Elem& a) const {
  if (is_zero(a)) fail(ErrorKind::DivisionByZero, "inverse of zero in a tower");
  if (level == 0) return Elem{a[0].inv()};
  const std::size_t s = level - 1, n = dim(s);
  const unsigned d = stage(s).degree;
  Elem low;
  if (lower(a, level, s, low)) return lift(inv(s, low), s, level);
  const KPoly& m = stage(s).minpoly;
  if (d == 2) {
    // (a0 + a1 t)(a0 - b a1 - a1 t) = a0^2 - b a0 a1 + e a1^2 for t^2 + b t + e
    const Elem a0 = block(a, 0, n), a1 = block(a, 1, n);
    const Elem& e = m[0];
    const Elem& b = m[1];
    const Elem norm = add(sub(mul(s, a0, a0), mul(s, b, mul(s, a0, a1))), mul(s, e, mul(s, a1, a1)));
    const Elem ninv = inv(s, norm);
    Elem out = mul(s, sub(a0, mul(s, b, a1)), ninv);
    const Elem hi = neg(mul(s, a1, ninv));
    out.insert(out.end(), hi.begin(), hi.end());
    return out;
  }
  // extended Euclid over the level below
  KPoly A(d);
  for (unsigned i = 0; i < d; ++i) A[i] = block(a, i, n);
  kp::trim(A);
  KPoly r0 = m, r1 = A, t0, t1{one(s)};
  while (kp::deg(r1) > 0) {
    KPoly q, r;
    kp::divmod(*this, s, r0, r1, q, r);
    KPoly t2 = kp::sub(*this, t0, kp::mul(*this, s, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r1.empty()) fail(ErrorKind::DivisionByZero, "stage polynomial is not irreducible");
  KPoly res = kp::scale(*this, s, t1, inv(s, r1[0]));
  Elem out;
  for (unsigned i = 0; i < d; ++i) {
    const Elem c = i < res.size() ? res[i] : zero(s);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

Elem Tower::pow(std::size_t level, const Elem& a, unsigned e) const {
  Elem acc = one(level), b = a;
  while (e) {
    if (e & 1U) acc = mul(level, acc, b);
    e >>= 1U;
    if (e) b = mul(level, b, b);
  }
  return acc;
}

bool Tower::is_base(const Elem& a) const {
  for (std::size_t i = 1; i < a.size(); ++i)
    if (!a[i].is_zero()) return false;
  return true;
}

std::string Tower::describe() const {
  std::ostringstream os;
  os << base_->descriptor();
  if (!stages_.empty()) {
    os << "(";
    for (std::size_t i = 0; i < stages_.size(); ++i) os << (i ? "," : "") << stages_[i].name;
    os << ")";
  }
  return os.str();
}

int compare_elems(const Elem& a, const Elem& b) { return compare_coeffs(a, b); }

int compare_kpolys(const KPoly& a, const KPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int c = compare_elems(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

namespace kp {

void trim(KPoly& a) {
  while (!a.empty() && Tower::is_zero(a.back())) a.pop_back();
}

KPoly add(const Tower& T, const KPoly& a, const KPoly& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  KPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i >= a.size()) out[i] = b[i];
    else if (i >= b.size()) out[i] = a[i];
    else out[i] = T.add(a[i], b[i]);
  }
  trim(out);
  return out;
}

KPoly sub(const Tower& T, const KPoly& a, const KPoly& b) {
  KPoly nb(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) nb[i] = T.neg(b[i]);
  return add(T, a, nb);
}

KPoly mul(const Tower& T, std::size_t level, const KPoly& a, const KPoly& b) {
  if (a.empty() || b.empty()) return {};
  KPoly out(a.size() + b.size() - 1, T.zero(level));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (Tower::is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (Tower::is_zero(b[j])) continue;
      out[i + j] = T.add(out[i + j], T.mul(level, a[i], b[j]));
    }
  }
  trim(out);
  return out;
}

KPoly scale(const Tower& T, std::size_t level, const KPoly& a, const Elem& c) {
  KPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = T.mul(level, a[i], c);
  trim(out);
  return out;
}

void divmod(const Tower& T, std::size_t level, const KPoly& a, const KPoly& b, KPoly& quot, KPoly& rem) {
  if (b.empty()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  rem = a;
  trim(rem);
  quot.clear();
  if (rem.size() < b.size()) return;
  quot.assign(rem.size() - b.size() + 1, T.zero(level));
  const Elem lc_inv = T.inv(level, b.back());
  const bool monic_b = T.is_base(b.back()) && b.back()[0].is_one();
  for (std::size_t top = rem.size(); top >= b.size(); --top) {
    if (Tower::is_zero(rem[top - 1])) continue;
    const std::size_t shift = top - b.size();
    const Elem c = monic_b ? rem[top - 1] : T.mul(level, rem[top - 1], lc_inv);
    quot[shift] = c;
    for (std::size_t t = 0; t < b.size(); ++t) {
      if (Tower::is_zero(b[t])) continue;
      rem[shift + t] = T.sub(rem[shift + t], T.mul(level, c, b[t]));
    }
  }
  trim(rem);
  trim(quot);
}

KPoly rem(const Tower& T, std::size_t level, const KPoly& a, const KPoly& b) {
  KPoly q, r;
  divmod(T, level, a, b, q, r);
  return r;
}

KPoly quo(const Tower& T, std::size_t level, const KPoly& a, const KPoly& b) {
  KPoly q, r;
  divmod(T, level, a, b, q, r);
  return q;
}

KPoly monic(const Tower& T, std::size_t level, const KPoly& a) {
  if (a.empty()) return a;
  if (T.is_base(a.back()) && a.back()[0].is_one()) return a;
  return scale(T, level, a, T.inv(level, a.back()));
}

KPoly gcd(const Tower& T, std::size_t level, KPoly a, KPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    KPoly r = rem(T, level, a, b);
    a = std::move(b);
    b = monic(T, level, r);
  }
  return monic(T, level, a);
}

KPoly derivative(const Tower& T, const KPoly& a) {
  if (a.size() <= 1) return {};
  KPoly out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = T.scale(a[i], T.base()->from_int(static_cast<long long>(i)));
  trim(out);
  return out;
}

Elem eval(const Tower& T, std::size_t level, const KPoly& a, const Elem& x) {
  Elem acc = T.zero(level);
  for (std::size_t i = a.size(); i-- > 0;) acc = T.add(T.mul(level, acc, x), a[i]);
  return acc;
}

KPoly shift(const Tower& T, std::size_t level, const KPoly& a, const Elem& c) {
  KPoly acc;
  const KPoly lin{c, T.one(level)};
  for (std::size_t i = a.size(); i-- > 0;) acc = add(T, mul(T, level, acc, lin), KPoly{a[i]});
  trim(acc);
  return acc;
}

KPoly lift(const Tower& T, const KPoly& a, std::size_t from, std::size_t to) {
  KPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = T.lift(a[i], from, to);
  return out;
}

KPoly from_base(const Tower& T, std::size_t level, const std::vector<Scalar>& coeffs) {
  KPoly out;
  for (const auto& c : coeffs) out.push_back(T.from_scalar(level, c));
  trim(out);
  return out;
}

KPoly linear(const Tower& T, std::size_t level, const Elem& r) { return KPoly{T.neg(r), T.one(level)}; }

namespace {

// p-th root of a polynomial with zero derivative; only possible over perfect bases.
bool pth_root(const Tower& T, std::size_t level, const KPoly& a, KPoly& out) {
  const BaseField* K = T.base();
  if (K->kind() != BaseField::Kind::Finite) return false;
  const std::uint64_t p = T.characteristic();
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), K->finite().order(), T.dim(level));
  e /= p;
  out.clear();
  for (std::size_t i = 0; i < a.size(); i += p) {
    Elem r = T.one(level), b = a[i];
    for (mpz_class k = e; k > 0; k >>= 1) {
      if (mpz_odd_p(k.get_mpz_t())) r = T.mul(level, r, b);
      b = T.mul(level, b, b);
    }
    out.push_back(Tower::is_zero(a[i]) ? T.zero(level) : r);
  }
  trim(out);
  return true;
}

void squarefree_into(const Tower& T, std::size_t level, const KPoly& a, int mult,
                     std::vector<std::pair<KPoly, int>>& out) {
  if (deg(a) <= 0) return;
  const int p = static_cast<int>(T.characteristic());
  KPoly d = derivative(T, a);
  KPoly root;
  if (d.empty()) {
    if (pth_root(T, level, a, root)) squarefree_into(T, level, root, mult * p, out);
    else out.emplace_back(a, mult);
    return;
  }
  KPoly c = gcd(T, level, a, d);
  KPoly w = quo(T, level, a, c);
  int i = 1;
  while (deg(w) > 0) {
    KPoly y = gcd(T, level, w, c);
    KPoly z = quo(T, level, w, y);
    if (deg(z) > 0) out.emplace_back(z, mult * i);
    ++i;
    w = y;
    c = quo(T, level, c, y);
  }
  if (deg(c) > 0) {
    if (pth_root(T, level, c, root)) squarefree_into(T, level, root, mult * p, out);
    else out.emplace_back(c, mult);
  }
}

}  // namespace

std::vector<std::pair<KPoly, int>> squarefree(const Tower& T, std::size_t level, const KPoly& a_in) {
  std::vector<std::pair<KPoly, int>> out;
  KPoly a = monic(T, level, a_in);
  if (deg(a) <= 0) return out;
  if (T.characteristic() != 0) {
    squarefree_into(T, level, a, 1, out);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
    return out;
  }
  KPoly d = derivative(T, a);
  KPoly g = gcd(T, level, a, d);
  KPoly b = quo(T, level, a, g);
  KPoly c = sub(T, quo(T, level, d, g), derivative(T, b));
  int i = 1;
  while (deg(b) > 0) {
    KPoly h = gcd(T, level, b, c);
    if (deg(h) > 0) out.emplace_back(h, i);
    b = quo(T, level, b, h);
    c = sub(T, quo(T, level, c, h), derivative(T, b));
    ++i;
  }
  return out;
}

}  // namespace kp

}  // namespace cftk
