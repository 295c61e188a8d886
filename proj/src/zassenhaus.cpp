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

#include <algorithm>

#include "cftk/error.hpp"
#include "cftk/finite_field.hpp"
#include "cftk/qpoly.hpp"

namespace cftk {

namespace {

struct ModRing {
  Integer m;

  void reduce(ZPoly& a) const {
    for (auto& c : a) {
      mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    }
    qp::trim(a);
  }
  ZPoly add(const ZPoly& a, const ZPoly& b) const {
    ZPoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (i < a.size()) out[i] += a[i];
      if (i < b.size()) out[i] += b[i];
    }
    reduce(out);
    return out;
  }
  ZPoly sub(const ZPoly& a, const ZPoly& b) const {
    ZPoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (i < a.size()) out[i] += a[i];
      if (i < b.size()) out[i] -= b[i];
    }
    reduce(out);
    return out;
  }
  ZPoly mul(const ZPoly& a, const ZPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    reduce(out);
    return out;
  }
  ZPoly scale(const ZPoly& a, const Integer& c) const {
    ZPoly out(a);
    for (auto& x : out) x *= c;
    reduce(out);
    return out;
  }
  // Division by a monic divisor.
  void divmod(const ZPoly& a, const ZPoly& h, ZPoly& q, ZPoly& r) const {
    r = a;
    reduce(r);
    q.clear();
    const std::size_t n = h.size();
    if (r.size() < n) return;
    q.assign(r.size() - n + 1, Integer(0));
    for (std::size_t top = r.size(); top >= n; --top) {
      const Integer c = r[top - 1];
      const std::size_t shift = top - n;
      q[shift] = c;
      if (sgn(c) != 0)
        for (std::size_t t = 0; t < n; ++t) r[shift + t] -= c * h[t];
      for (std::size_t t = 0; t < n; ++t) mpz_mod(r[shift + t].get_mpz_t(), r[shift + t].get_mpz_t(), m.get_mpz_t());
    }
    qp::trim(r);
    qp::trim(q);
  }
};

FqPoly to_fq(const ZPoly& a, std::uint64_t p) {
  FqPoly out;
  for (const auto& c : a) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
    out.push_back(r.get_ui());
  }
  fq::trim(out);
  return out;
}

ZPoly from_fq(const FqPoly& a) {
  ZPoly out;
  for (auto c : a) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

// s*g + t*h = 1 over GF(p), g and h coprime.
void fq_xgcd(const FiniteField& F, const FqPoly& g, const FqPoly& h, FqPoly& s, FqPoly& t) {
  FqPoly r0 = g, r1 = h, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    FqPoly q, r;
    fq::divmod(F, r0, r1, q, r);
    FqPoly s2 = fq::sub(F, s0, fq::mul(F, q, s1));
    FqPoly t2 = fq::sub(F, t0, fq::mul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const std::uint64_t c = F.inv(r0[0]);
  s = fq::scale(F, s0, c);
  t = fq::scale(F, t0, c);
}

// One quadratic Hensel step: f = g*h mod m, s*g + t*h = 1 mod m, h monic; lifts to m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Integer& m) {
  const ModRing R{m * m};
  ZPoly e = R.sub(f, R.mul(g, h));
  ZPoly q, r;
  R.divmod(R.mul(s, e), h, q, r);
  ZPoly g2 = R.add(g, R.add(R.mul(t, e), R.mul(q, g)));
  ZPoly h2 = R.add(h, r);
  ZPoly b = R.sub(R.add(R.mul(s, g2), R.mul(t, h2)), ZPoly{Integer(1)});
  ZPoly c, d;
  R.divmod(R.mul(s, b), h2, c, d);
  s = R.sub(s, d);
  t = R.sub(t, R.add(R.mul(t, b), R.mul(c, g2)));
  g = std::move(g2);
  h = std::move(h2);
}

std::vector<ZPoly> lift_all(const ZPoly& f, const std::vector<FqPoly>& facs, std::uint64_t p, const Integer& target) {
  const ModRing T{target};
  if (facs.size() == 1) {
    Integer inv;
    mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), target.get_mpz_t());
    return {T.scale(f, inv)};
  }
  const FiniteField F(p);
  const std::size_t k = facs.size() / 2;
  std::vector<FqPoly> A(facs.begin(), facs.begin() + static_cast<std::ptrdiff_t>(k));
  std::vector<FqPoly> B(facs.begin() + static_cast<std::ptrdiff_t>(k), facs.end());
  FqPoly ga{1}, hb{1};
  for (const auto& a : A) ga = fq::mul(F, ga, a);
  for (const auto& b : B) hb = fq::mul(F, hb, b);
  ga = fq::scale(F, ga, to_fq(ZPoly{f.back()}, p)[0]);
  FqPoly s, t;
  fq_xgcd(F, ga, hb, s, t);
  ZPoly g = from_fq(ga), h = from_fq(hb), zs = from_fq(s), zt = from_fq(t);
  Integer m(static_cast<unsigned long>(p));
  while (m < target) {
    hensel_step(f, g, h, zs, zt, m);
    m *= m;
  }
  T.reduce(g);
  T.reduce(h);
  Integer inv;
  mpz_invert(inv.get_mpz_t(), g.back().get_mpz_t(), target.get_mpz_t());
  g = T.scale(g, inv);
  auto left = lift_all(g, A, p, target);
  auto right = lift_all(h, B, p, target);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

Integer symmetric(Integer c, const Integer& M) {
  mpz_mod(c.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
  if (2 * c > M) c -= M;
  return c;
}

// Exact division over Z; returns false if b does not divide a.
bool z_divides(const ZPoly& a, const ZPoly& b, ZPoly& quot) {
  QPoly q, r;
  qp::divmod(qp::from_z(a), qp::from_z(b), q, r);
  if (!r.empty()) return false;
  quot.clear();
  for (const auto& c : q) {
    if (c.get_den() != 1) return false;
    quot.push_back(c.get_num());
  }
  return true;
}

std::vector<ZPoly> zassenhaus_nonzero_constant(ZPoly f) {
  const int n = qp::deg(f);
  if (n <= 1) return {f};
  // Choose the prime with the fewest modular factors among a few good ones.
  std::vector<FqPoly> best;
  std::uint64_t best_p = 0;
  int good = 0;
  for (std::uint64_t p = 3; good < 6 && p < 2000; p += 2) {
    if (!is_prime(p)) continue;
    FqPoly fb = to_fq(f, p);
    if (fq::deg(fb) != n) continue;
    FiniteField F(p);
    if (fq::deg(fq::gcd(F, fb, fq::derivative(F, fb))) != 0) continue;
    ++good;
    auto fac = fq::factor(F, fq::monic(F, fb));
    if (best_p == 0 || fac.size() < best.size()) {
      best.clear();
      for (auto& [g, e] : fac) best.push_back(g);
      best_p = p;
    }
    if (best.size() == 1) return {f};
  }
  if (best_p == 0) fail(ErrorKind::InvalidArgument, "no good prime found for factoring");
  // Coefficient bound for factors, times the leading coefficient.
  Integer maxc(0);
  for (const auto& c : f) maxc = std::max(maxc, Integer(abs(c)));
  Integer B = maxc * Integer(n + 1) * abs(f.back());
  B <<= static_cast<unsigned>(n);
  Integer M(static_cast<unsigned long>(best_p));
  while (M <= 2 * B) M *= best_p;
  std::vector<ZPoly> lifted = lift_all(f, best, best_p, M);

  std::vector<ZPoly> out;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  std::size_t k = 1;
  while (2 * k <= remaining.size()) {
    bool found = false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      const Integer lc = f.back();
      const Integer target_const = lc * f[0];
      Integer c = lc;
      for (auto i : idx) c = symmetric(c * lifted[remaining[i]][0], M);
      if (sgn(c) != 0 && mpz_divisible_p(target_const.get_mpz_t(), c.get_mpz_t())) {
        ZPoly g{lc};
        const ModRing R{M};
        for (auto i : idx) g = R.mul(g, lifted[remaining[i]]);
        for (auto& x : g) x = symmetric(x, M);
        qp::trim(g);
        QPoly gq = qp::from_z(g);
        ZPoly h = qp::primitive_part(gq);
        ZPoly quot;
        if (qp::deg(h) > 0 && z_divides(f, h, quot)) {
          out.push_back(h);
          f = quot;
          std::vector<std::size_t> rest;
          for (std::size_t j = 0; j < remaining.size(); ++j)
            if (std::find(idx.begin(), idx.end(), j) == idx.end()) rest.push_back(remaining[j]);
          remaining = rest;
          found = true;
          break;
        }
      }
      // next combination
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == remaining.size() - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++k;
  }
  if (qp::deg(f) > 0) {
    if (sgn(f.back()) < 0)
      for (auto& c : f) c = -c;
    out.push_back(f);
  }
  return out;
}

}  // namespace

std::vector<ZPoly> zassenhaus(const ZPoly& f_in) {
  ZPoly f = f_in;
  qp::trim(f);
  std::vector<ZPoly> out;
  if (qp::deg(f) <= 0) return out;
  if (sgn(f[0]) == 0) {
    out.push_back(ZPoly{Integer(0), Integer(1)});
    f.erase(f.begin());
    if (qp::deg(f) <= 0) return out;
  }
  auto rest = zassenhaus_nonzero_constant(f);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

QFactorization factor_rational(const QPoly& f_in) {
  QPoly f = f_in;
  qp::trim(f);
  if (f.empty()) fail(ErrorKind::ZeroPolynomial, "cannot factor the zero polynomial");
  QFactorization out;
  out.unit = f.back();
  for (auto& [part, mult] : qp::squarefree(f)) {
    for (const auto& z : zassenhaus(qp::primitive_part(part))) out.factors.emplace_back(qp::monic(qp::from_z(z)), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    const int c = qp::compare(a.first, b.first);
    return c != 0 ? c < 0 : a.second < b.second;
  });
  return out;
}

bool is_irreducible_rational(const QPoly& f) {
  if (qp::deg(f) <= 0) return false;
  auto fac = factor_rational(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace cftk
