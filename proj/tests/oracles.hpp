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

// Independent brute-force oracles shared by the unit and acceptance tests.
// Nothing in here calls the library's factoring or resultant code.

#ifndef CFTK_TEST_ORACLES_HPP
#define CFTK_TEST_ORACLES_HPP

#include <algorithm>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "cftk/finite_field.hpp"
#include "cftk/qpoly.hpp"

namespace oracle {

using cftk::Integer;
using cftk::QPoly;
using cftk::Rational;
using cftk::ZPoly;

inline Integer zeval(const ZPoly& f, long x) {
  Integer acc(0);
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

inline std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

// Exact division over Z via schoolbook long division.
inline bool zdiv(const ZPoly& a, const ZPoly& b, ZPoly& q) {
  if (a.size() < b.size()) return false;
  ZPoly r = a;
  q.assign(a.size() - b.size() + 1, Integer(0));
  for (std::size_t top = r.size(); top >= b.size(); --top) {
    const std::size_t shift = top - b.size();
    if (r[top - 1] % b.back() != 0) return false;
    const Integer c = r[top - 1] / b.back();
    q[shift] = c;
    for (std::size_t t = 0; t < b.size(); ++t) r[shift + t] -= c * b[t];
  }
  for (const auto& c : r)
    if (c != 0) return false;
  while (!q.empty() && q.back() == 0) q.pop_back();
  return true;
}

// Kronecker's method: search for a factor of degree d by interpolating
// through divisors of f at d+1 integer nodes. Newton divided differences of
// an integer polynomial at integer nodes are integers, which prunes the
// search without changing its outcome.
inline bool kronecker_factor_of_degree(const ZPoly& f, int d, ZPoly& out) {
  std::vector<std::pair<long, Integer>> pts;
  for (long x = 0; x <= 12; x = x <= 0 ? 1 - x : -x) {
    const Integer v = zeval(f, x);
    if (v == 0) {
      out = ZPoly{Integer(-x), Integer(1)};
      return d == 1;
    }
    pts.emplace_back(x, v);
    if (pts.size() >= 25) break;
  }
  std::stable_sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return divisors(a.second).size() < divisors(b.second).size();
  });
  pts.resize(static_cast<std::size_t>(d + 1));
  std::vector<std::vector<Integer>> cands;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<Integer> c;
    for (const auto& dv : divisors(pts[i].second)) {
      c.push_back(dv);
      if (i > 0) c.push_back(-dv);
    }
    cands.push_back(c);
  }
  const Integer lc = f.back();
  // dd[k] holds the Newton coefficients built so far.
  std::vector<Integer> vals(pts.size()), newton(pts.size());
  std::vector<std::vector<Integer>> table(pts.size(), std::vector<Integer>(pts.size()));
  bool found = false;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (found) return;
    if (k == pts.size()) {
      if (newton[k - 1] == 0 || lc % newton[k - 1] != 0) return;
      // expand Newton form
      ZPoly g{newton[k - 1]};
      for (std::size_t i = k - 1; i-- > 0;) {
        ZPoly ng(g.size() + 1, Integer(0));
        for (std::size_t j = 0; j < g.size(); ++j) {
          ng[j + 1] += g[j];
          ng[j] -= g[j] * pts[i].first;
        }
        ng[0] += newton[i];
        g = ng;
      }
      while (!g.empty() && g.back() == 0) g.pop_back();
      if (static_cast<int>(g.size()) - 1 != d) return;
      ZPoly q;
      if (zdiv(f, g, q)) {
        out = g;
        found = true;
      }
      return;
    }
    for (const auto& v : cands[k]) {
      table[k][0] = v;
      bool ok = true;
      for (std::size_t j = 1; j <= k; ++j) {
        const Integer num = table[k][j - 1] - table[k - 1][j - 1];
        const long den = pts[k].first - pts[k - j].first;
        if (num % den != 0) {
          ok = false;
          break;
        }
        table[k][j] = num / den;
      }
      if (!ok) continue;
      newton[k] = table[k][k];
      rec(k + 1);
      if (found) return;
    }
  };
  rec(0);
  return found;
}

// Full factorization into primitive irreducibles (positive leading coefficient),
// with multiplicity, sorted by the caller.
inline std::vector<ZPoly> kronecker_factor(ZPoly f) {
  std::vector<ZPoly> out;
  while (!f.empty() && f[0] == 0 && f.size() > 1) {
    out.push_back(ZPoly{Integer(0), Integer(1)});
    f.erase(f.begin());
  }
  Integer c(0);
  for (const auto& x : f) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
  if (f.back() < 0) c = -c;
  for (auto& x : f) x /= c;
  for (;;) {
    const int n = static_cast<int>(f.size()) - 1;
    if (n <= 0) break;
    bool split = false;
    for (int d = 1; 2 * d <= n && !split; ++d) {
      ZPoly g;
      if (kronecker_factor_of_degree(f, d, g)) {
        Integer gc(0);
        for (const auto& x : g) mpz_gcd(gc.get_mpz_t(), gc.get_mpz_t(), x.get_mpz_t());
        if (g.back() < 0) gc = -gc;
        for (auto& x : g) x /= gc;
        ZPoly q;
        zdiv(f, g, q);
        out.push_back(g);
        f = q;
        split = true;
      }
    }
    if (!split) {
      out.push_back(f);
      break;
    }
  }
  std::sort(out.begin(), out.end(), [](const ZPoly& a, const ZPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return out;
}

// Sylvester-matrix determinant by fraction-free elimination over Q.
inline Rational sylvester_resultant(const QPoly& f, const QPoly& g) {
  const int m = static_cast<int>(f.size()) - 1, n = static_cast<int>(g.size()) - 1;
  const int N = m + n;
  if (N == 0) return Rational(1);
  std::vector<std::vector<Rational>> M(N, std::vector<Rational>(N, Rational(0)));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) M[r][r + i] = f[m - i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) M[n + r][r + i] = g[n - i];
  Rational det(1);
  for (int c = 0; c < N; ++c) {
    int piv = -1;
    for (int r = c; r < N; ++r)
      if (M[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Rational(0);
    if (piv != c) {
      std::swap(M[piv], M[c]);
      det = -det;
    }
    det *= M[c][c];
    for (int r = c + 1; r < N; ++r) {
      if (M[r][c] == 0) continue;
      const Rational t = M[r][c] / M[c][c];
      for (int k = c; k < N; ++k) M[r][k] -= t * M[c][k];
    }
  }
  return det;
}

// Trial division over GF(q) by every monic polynomial of degree <= deg/2;
// returns monic irreducible factors with multiplicity, in canonical order.
inline std::vector<cftk::FqPoly> trial_division_factor(const cftk::FiniteField& F, cftk::FqPoly f) {
  namespace fq = cftk::fq;
  std::vector<cftk::FqPoly> out;
  f = fq::monic(F, f);
  for (int d = 1; 2 * d <= fq::deg(f); ++d) {
    cftk::FqPoly cand(static_cast<std::size_t>(d + 1), 0);
    cand[static_cast<std::size_t>(d)] = 1;
    do {
      for (;;) {
        cftk::FqPoly q, r;
        fq::divmod(F, f, cand, q, r);
        if (!r.empty()) break;
        out.push_back(cand);
        f = q;
      }
    } while (fq::next_monic(F, cand));
  }
  if (fq::deg(f) > 0) out.push_back(f);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return fq::compare(a, b) < 0; });
  return out;
}

// Fixed corpus: half random polynomials, half products of small factors.
inline std::vector<ZPoly> factor_corpus(std::size_t count) {
  std::mt19937_64 rng(20261019);
  std::vector<ZPoly> out;
  auto rnd = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)); };
  while (out.size() < count) {
    ZPoly f;
    if (out.size() % 2 == 0) {
      const long n = rnd(1, 6);
      for (long i = 0; i <= n; ++i) f.emplace_back(rnd(-20, 20));
      if (f.back() == 0) f.back() = rnd(1, 20);
    } else {
      f = ZPoly{Integer(1)};
      const long parts = rnd(2, 4);
      for (long k = 0; k < parts; ++k) {
        const long d = rnd(1, 3);
        ZPoly g;
        for (long i = 0; i <= d; ++i) g.emplace_back(rnd(-3, 3));
        if (g.back() == 0) g.back() = 1;
        ZPoly prod(f.size() + g.size() - 1, Integer(0));
        for (std::size_t i = 0; i < f.size(); ++i)
          for (std::size_t j = 0; j < g.size(); ++j) prod[i + j] += f[i] * g[j];
        f = prod;
      }
      while (!f.empty() && f.back() == 0) f.pop_back();
      if (f.size() < 2 || f.size() > 7) continue;
      bool small = true;
      for (const auto& c : f) small = small && abs(c) <= 20;
      if (!small) continue;
    }
    out.push_back(f);
  }
  return out;
}

/// Floating-point complex roots by Durand-Kerner iteration; independent of
/// the exact isolation code and only used as a numerical cross-check.
inline std::vector<std::complex<long double>> numeric_roots(const QPoly& p) {
  const std::size_t n = p.size() - 1;
  std::vector<std::complex<long double>> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = static_cast<long double>(p[i].get_d()) / static_cast<long double>(p[n].get_d());
  auto eval = [&](std::complex<long double> z) {
    std::complex<long double> acc = 0;
    for (std::size_t i = n + 1; i-- > 0;) acc = acc * z + c[i];
    return acc;
  };
  std::vector<std::complex<long double>> z(n);
  const std::complex<long double> seed(0.4L, 0.9L);
  for (std::size_t i = 0; i < n; ++i) z[i] = std::pow(seed, static_cast<int>(i));
  for (int it = 0; it < 2000; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      std::complex<long double> den = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) den *= z[i] - z[j];
      z[i] -= eval(z[i]) / den;
    }
  }
  return z;
}

}  // namespace oracle

#endif  // CFTK_TEST_ORACLES_HPP
