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

#include "cftk/qpoly.hpp"

#include <algorithm>
#include <sstream>

#include "cftk/error.hpp"

namespace cftk {
namespace qp {

void trim(QPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

void trim(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] += b[i];
  }
  trim(out);
  return out;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] -= b[i];
  }
  trim(out);
  return out;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

QPoly scale(const QPoly& a, const Rational& c) {
  if (sgn(c) == 0) return {};
  QPoly out(a);
  for (auto& x : out) x *= c;
  return out;
}

QPoly neg(const QPoly& a) { return scale(a, Rational(-1)); }

void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
  if (b.empty()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  rem = a;
  trim(rem);
  quot.clear();
  if (rem.size() < b.size()) return;
  quot.assign(rem.size() - b.size() + 1, Rational(0));
  const Rational inv_lc = 1 / b.back();
  for (std::size_t m = rem.size(); m >= b.size(); --m) {
    const std::size_t shift = m - b.size();
    if (sgn(rem[m - 1]) == 0) continue;
    const Rational c = rem[m - 1] * inv_lc;
    quot[shift] = c;
    for (std::size_t t = 0; t < b.size(); ++t) rem[shift + t] -= c * b[t];
  }
  trim(rem);
  trim(quot);
}

QPoly rem(const QPoly& a, const QPoly& b) {
  QPoly q, r;
  divmod(a, b, q, r);
  return r;
}

QPoly quo(const QPoly& a, const QPoly& b) {
  QPoly q, r;
  divmod(a, b, q, r);
  return q;
}

QPoly monic(const QPoly& a) {
  if (a.empty()) return a;
  return scale(a, 1 / a.back());
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = rem(a, b);
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

QPoly derivative(const QPoly& a) {
  if (a.size() <= 1) return {};
  QPoly out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * static_cast<long>(i);
  return out;
}

QPoly pow(const QPoly& a, unsigned e) {
  QPoly acc{Rational(1)};
  for (unsigned i = 0; i < e; ++i) acc = mul(acc, a);
  return acc;
}

Rational eval(const QPoly& a, const Rational& x) {
  Rational acc(0);
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
  return acc;
}

QPoly scale_var(const QPoly& a, const Rational& c) {
  QPoly out(a);
  Rational pw(1);
  for (auto& x : out) {
    x *= pw;
    pw *= c;
  }
  trim(out);
  return out;
}

QPoly shift(const QPoly& a, const Rational& c) {
  // Horner with (x + c)
  QPoly acc;
  const QPoly lin{c, Rational(1)};
  for (std::size_t i = a.size(); i-- > 0;) acc = add(mul(acc, lin), QPoly{a[i]});
  trim(acc);
  return acc;
}

QPoly reverse(const QPoly& a) {
  QPoly out(a.rbegin(), a.rend());
  trim(out);
  return out;
}

QPoly negate_var(const QPoly& a) { return scale_var(a, Rational(-1)); }

QPoly from_ints(std::initializer_list<long> coeffs) {
  QPoly out;
  for (long c : coeffs) out.emplace_back(c);
  trim(out);
  return out;
}

QPoly from_z(const ZPoly& a) {
  QPoly out;
  for (const auto& c : a) out.emplace_back(c);
  trim(out);
  return out;
}

Integer content(const ZPoly& a) {
  Integer g(0);
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive_part(const QPoly& a) {
  Integer l(1);
  for (const auto& c : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly out;
  for (const auto& c : a) out.push_back(Integer(c * l));
  trim(out);
  if (out.empty()) return out;
  Integer g = content(out);
  if (sgn(out.back()) < 0) g = -g;
  for (auto& c : out) c /= g;
  return out;
}

std::vector<std::pair<QPoly, int>> squarefree(const QPoly& a_in) {
  // Yun's algorithm.
  std::vector<std::pair<QPoly, int>> out;
  QPoly a = monic(a_in);
  if (deg(a) <= 0) return out;
  QPoly d = derivative(a);
  QPoly g = gcd(a, d);
  QPoly b = quo(a, g);
  QPoly c = sub(quo(d, g), derivative(b));
  int i = 1;
  while (deg(b) > 0) {
    QPoly h = gcd(b, c);
    if (deg(h) > 0) out.emplace_back(monic(h), i);
    b = quo(b, h);
    c = sub(quo(c, h), derivative(b));
    ++i;
  }
  return out;
}

QPoly squarefree_part(const QPoly& a) {
  if (deg(a) <= 0) return monic(a);
  return monic(quo(a, gcd(a, derivative(a))));
}

Rational resultant(const QPoly& f_in, const QPoly& g_in) {
  QPoly f = f_in, g = g_in;
  trim(f);
  trim(g);
  if (f.empty() || g.empty()) return Rational(0);
  Rational acc(1);
  for (;;) {
    const int m = deg(f), n = deg(g);
    if (n == 0) {
      Rational t(1);
      for (int i = 0; i < m; ++i) t *= g[0];
      return acc * t;
    }
    if (m == 0) {
      Rational t(1);
      for (int i = 0; i < n; ++i) t *= f[0];
      return acc * t;
    }
    QPoly r = rem(f, g);
    if (r.empty()) return Rational(0);
    if ((m % 2 == 1) && (n % 2 == 1)) acc = -acc;
    const int k = m - deg(r);
    for (int i = 0; i < k; ++i) acc *= g.back();
    f = std::move(g);
    g = std::move(r);
  }
}

QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> dd(ys);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  QPoly acc;
  for (std::size_t i = n; i-- > 0;) {
    acc = mul(acc, QPoly{-xs[i], Rational(1)});
    acc = add(acc, QPoly{dd[i]});
  }
  trim(acc);
  return acc;
}

int compare(const QPoly& a, const QPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string to_string(const QPoly& a, const std::string& var) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = a.size(); k-- > 0;) {
    const Rational& c = a[k];
    if (sgn(c) == 0) continue;
    const Rational mag = abs(c);
    if (sgn(c) < 0) os << "-";
    else if (!first) os << "+";
    first = false;
    const bool unit = mag == 1;
    if (k == 0) {
      os << mag.get_str();
    } else {
      if (!unit) os << mag.get_str() << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace qp

std::vector<QPoly> sturm_sequence(const QPoly& p) {
  std::vector<QPoly> seq{p, qp::derivative(p)};
  while (!seq.back().empty()) {
    QPoly r = qp::rem(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    // positive rescaling keeps sign information and tames coefficient growth
    const ZPoly z = qp::primitive_part(r);
    QPoly nr = qp::from_z(z);
    if (sgn(nr.back()) != sgn(r.back())) nr = qp::neg(nr);
    seq.push_back(qp::neg(nr));
  }
  if (seq.back().empty()) seq.pop_back();
  return seq;
}

int sign_variations(const std::vector<QPoly>& seq, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& f : seq) {
    const int s = sgn(qp::eval(f, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int count_real_roots(const std::vector<QPoly>& sturm, const Rational& a, const Rational& b) {
  return sign_variations(sturm, a) - sign_variations(sturm, b);
}

Rational root_bound(const QPoly& p) {
  Rational m(0);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, Rational(abs(p[i] / p.back())));
  return m + 1;
}

}  // namespace cftk
