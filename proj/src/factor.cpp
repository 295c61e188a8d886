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

#include "cftk/factor.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "cftk/error.hpp"
#include "cftk/primitive.hpp"

namespace cftk {

namespace {

QPoly to_qpoly(const std::vector<Scalar>& v) {
  QPoly out;
  for (const auto& s : v) out.push_back(s.rational());
  qp::trim(out);
  return out;
}

bool is_binomial(const KPoly& f, Elem& a) {
  const std::size_t n = f.size() - 1;
  for (std::size_t i = 1; i < n; ++i)
    if (!Tower::is_zero(f[i])) return false;
  a = f[0];
  for (auto& x : a) x = -x;
  return true;
}

bool power_of_two(std::size_t n) { return n >= 1 && (n & (n - 1)) == 0; }

void sort_factors(std::vector<std::pair<KPoly, int>>& fs) {
  std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
    const int c = compare_kpolys(a.first, b.first);
    return c != 0 ? c < 0 : a.second < b.second;
  });
}

// ---- Kummer cubics over GF(q)(t), q = 1 mod 3 ------------------------------

struct CubeData {
  const FiniteField* F = nullptr;
  std::uint64_t zeta = 0;   // primitive cube root of unity
  std::uint64_t gen = 0;    // generator of GF(q)^*
};

bool kummer_setting(const Tower& T, std::size_t level, CubeData& cd) {
  const BaseField* K = T.base();
  if (K->kind() != BaseField::Kind::Function) return false;
  const FiniteField& F = K->finite();
  if (F.order() % 3 != 1) return false;
  for (std::size_t i = 0; i < level; ++i) {
    const Stage& s = T.stage(i);
    Elem c;
    if (s.degree != 3 || !Tower::is_zero(s.minpoly[1]) || !Tower::is_zero(s.minpoly[2]) || !is_binomial(s.minpoly, c) ||
        !T.is_base(c))
      return false;
  }
  cd.F = &F;
  const std::uint64_t q = F.order();
  for (std::uint64_t g = 1; g < q; ++g) {
    bool prim = true;
    for (std::uint64_t r = 2; r <= q - 1; ++r) {
      if ((q - 1) % r != 0) continue;
      bool prime = true;
      for (std::uint64_t d = 2; d * d <= r; ++d) prime = prime && r % d != 0;
      if (prime && F.pow(g, (q - 1) / r) == 1) prim = false;
    }
    if (prim) {
      cd.gen = g;
      break;
    }
  }
  cd.zeta = F.pow(cd.gen, (q - 1) / 3);
  return true;
}

// Exponent vector mod 3 of a nonzero rational function: unit class first,
// then exponents on `primes` (extended as new primes appear).
std::vector<int> cube_vector(const CubeData& cd, const RatFunc& r, std::vector<FqPoly>& primes) {
  const FiniteField& F = *cd.F;
  std::vector<std::pair<FqPoly, int>> exps;
  auto absorb = [&](const FqPoly& p, int sign) {
    for (auto& [g, e] : fq::factor(F, fq::monic(F, p))) exps.emplace_back(g, sign * e);
  };
  absorb(r.num, 1);
  if (fq::deg(r.den) > 0) absorb(r.den, -1);
  const std::uint64_t u = r.num.back();
  const std::uint64_t cls = F.pow(u, (F.order() - 1) / 3);
  int unit = 0;
  for (std::uint64_t z = 1; z != cls; z = F.mul(z, cd.zeta)) ++unit;
  for (auto& [g, e] : exps)
    if (std::find(primes.begin(), primes.end(), g) == primes.end()) primes.push_back(g);
  std::vector<int> v(primes.size() + 1, 0);
  v[0] = unit % 3;
  for (auto& [g, e] : exps) {
    const auto idx = static_cast<std::size_t>(std::find(primes.begin(), primes.end(), g) - primes.begin());
    v[idx + 1] = ((v[idx + 1] + e) % 3 + 3) % 3;
  }
  return v;
}

// Solve sum e_i * basis_i = target over GF(3).
bool solve_mod3(std::vector<std::vector<int>> basis, std::vector<int> target, std::vector<int>& coeffs) {
  const std::size_t m = basis.size(), n = target.size();
  for (auto& b : basis) b.resize(n, 0);
  // augmented columns: rows are coordinates
  std::vector<std::vector<int>> A(n, std::vector<int>(m + 1, 0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < m; ++c) A[r][c] = basis[c][r];
    A[r][m] = target[r];
  }
  std::vector<std::size_t> pivcol;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m && row < n; ++c) {
    std::size_t p = row;
    while (p < n && A[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(A[p], A[row]);
    const int inv = A[row][c] == 1 ? 1 : 2;
    for (auto& x : A[row]) x = (x * inv) % 3;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || A[r][c] == 0) continue;
      const int f = A[r][c];
      for (std::size_t k = 0; k <= m; ++k) A[r][k] = ((A[r][k] - f * A[row][k]) % 3 + 3) % 3;
    }
    pivcol.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < n; ++r)
    if (A[r][m] != 0) return false;
  coeffs.assign(m, 0);
  for (std::size_t i = 0; i < pivcol.size(); ++i) coeffs[pivcol[i]] = A[i][m];
  return true;
}

// Roots of x^3 - a (a in the base) in a Kummer tower of cube roots.
std::vector<Elem> kummer_cube_roots(const Tower& T, std::size_t level, const CubeData& cd, const Scalar& a) {
  const FiniteField& F = *cd.F;
  const BaseField* K = T.base();
  std::vector<FqPoly> primes;
  std::vector<std::vector<int>> basis;
  std::vector<Scalar> cs;
  for (std::size_t i = 0; i < level; ++i) {
    Elem c;
    is_binomial(T.stage(i).minpoly, c);
    cs.push_back(c[0]);
    basis.push_back(cube_vector(cd, c[0].ratfunc(), primes));
  }
  std::vector<int> target = cube_vector(cd, a.ratfunc(), primes);
  for (auto& b : basis) b.resize(primes.size() + 1, 0);
  std::vector<int> e;
  if (!solve_mod3(basis, target, e)) return {};
  // a / prod c_i^e_i is a cube in the base field
  Scalar rest = a;
  for (std::size_t i = 0; i < level; ++i)
    for (int k = 0; k < e[i]; ++k) rest = rest / cs[i];
  const RatFunc& rr = rest.ratfunc();
  FqPoly wn{1}, wd{1};
  auto take_root = [&](const FqPoly& p, FqPoly& acc) {
    for (auto& [g, m] : fq::factor(F, fq::monic(F, p))) {
      if (m % 3 != 0) fail(ErrorKind::InvalidArgument, "cube class computation is inconsistent");
      for (int k = 0; k < m / 3; ++k) acc = fq::mul(F, acc, g);
    }
  };
  take_root(rr.num, wn);
  if (fq::deg(rr.den) > 0) take_root(rr.den, wd);
  std::uint64_t unit_root = 0;
  for (std::uint64_t u = 1; u < F.order(); ++u)
    if (F.mul(F.mul(u, u), u) == rr.num.back()) {
      unit_root = u;
      break;
    }
  const Scalar w = make_ratfunc(K, fq::scale(F, wn, unit_root), wd);
  Elem root = T.from_scalar(level, w);
  for (std::size_t i = 0; i < level; ++i)
    for (int k = 0; k < e[i]; ++k) root = T.mul(level, root, T.lift(T.gen(i), i + 1, level));
  std::vector<Elem> out;
  Scalar z = K->one();
  const Scalar zeta = make_ratfunc(K, FqPoly{cd.zeta}, FqPoly{1});
  for (int k = 0; k < 3; ++k) {
    out.push_back(T.scale(root, z));
    z = z * zeta;
  }
  return out;
}

// ---- finite towers ------------------------------------------------------------

KPoly powmod(const Tower& T, std::size_t level, KPoly base, mpz_class e, const KPoly& mod) {
  KPoly out{T.one(level)};
  base = kp::rem(T, level, base, mod);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) out = kp::rem(T, level, kp::mul(T, level, out, base), mod);
    e >>= 1;
    if (e > 0) base = kp::rem(T, level, kp::mul(T, level, base, base), mod);
  }
  return out;
}

KPoly random_kpoly(const Tower& T, std::size_t level, std::size_t len, std::mt19937_64& rng) {
  const FiniteField& F = T.base()->finite();
  std::uniform_int_distribution<std::uint64_t> pick(0, F.order() - 1);
  KPoly out(len, T.zero(level));
  for (auto& c : out)
    for (auto& s : c) s = Scalar(T.base(), pick(rng));
  kp::trim(out);
  return out;
}

void equal_degree(const Tower& T, std::size_t level, const KPoly& g, int d, const mpz_class& Q,
                  std::mt19937_64& rng, std::vector<KPoly>& out) {
  if (kp::deg(g) == d) {
    out.push_back(g);
    return;
  }
  mpz_class Qd;
  mpz_pow_ui(Qd.get_mpz_t(), Q.get_mpz_t(), static_cast<unsigned long>(d));
  const bool two = T.characteristic() == 2;
  const std::size_t bits = mpz_sizeinbase(Qd.get_mpz_t(), 2) - 1;
  for (;;) {
    const KPoly a = random_kpoly(T, level, static_cast<std::size_t>(kp::deg(g)), rng);
    if (kp::deg(a) < 1) continue;
    KPoly b;
    if (two) {
      KPoly term = a;
      for (std::size_t i = 0; i < bits; ++i) {
        b = kp::add(T, b, term);
        term = kp::rem(T, level, kp::mul(T, level, term, term), g);
      }
    } else {
      b = kp::sub(T, powmod(T, level, a, (Qd - 1) / 2, g), KPoly{T.one(level)});
    }
    const KPoly h = kp::gcd(T, level, g, b);
    if (kp::deg(h) <= 0 || kp::deg(h) == kp::deg(g)) continue;
    equal_degree(T, level, h, d, Q, rng, out);
    equal_degree(T, level, kp::quo(T, level, g, h), d, Q, rng, out);
    return;
  }
}

std::vector<KPoly> factor_finite_tower(const Tower& T, std::size_t level, KPoly f) {
  mpz_class Q;
  mpz_ui_pow_ui(Q.get_mpz_t(), T.base()->finite().order(), T.dim(level));
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  const KPoly x{T.zero(level), T.one(level)};
  std::vector<KPoly> out;
  KPoly h = x;
  for (int d = 1; 2 * d <= kp::deg(f); ++d) {
    h = powmod(T, level, h, Q, f);
    const KPoly g = kp::gcd(T, level, f, kp::sub(T, h, x));
    if (kp::deg(g) > 0) {
      equal_degree(T, level, g, d, Q, rng, out);
      f = kp::quo(T, level, f, g);
      h = kp::rem(T, level, h, f);
    }
  }
  if (kp::deg(f) > 0) out.push_back(f);
  return out;
}

// ---- quadratic and binomial paths ------------------------------------------

std::vector<KPoly> trager(const Tower& T, std::size_t level, const KPoly& f);

std::vector<KPoly> factor_binomial(const Tower& T, std::size_t level, std::size_t n, const Elem& a) {
  if (n == 1) return {kp::linear(T, level, a)};
  Elem s;
  if (tower_sqrt(T, level, a, s)) {
    auto left = factor_binomial(T, level, n / 2, s);
    auto right = factor_binomial(T, level, n / 2, T.neg(s));
    left.insert(left.end(), right.begin(), right.end());
    return left;
  }
  KPoly f(n + 1, T.zero(level));
  f[0] = T.neg(a);
  f[n] = T.one(level);
  if (n >= 4) {
    // x^n - a also splits when a lies in -4K^4
    const Elem q = T.scale(T.neg(a), T.base()->from_int(4).inv());
    Elem w, v;
    if (tower_sqrt(T, level, q, w) && (tower_sqrt(T, level, w, v) || tower_sqrt(T, level, T.neg(w), v))) {
      if (T.characteristic() == 0) return trager(T, level, f);
      fail(ErrorKind::UnsupportedDomain, "binomial factorization beyond square roots needs characteristic zero");
    }
  }
  return {f};
}

std::vector<KPoly> factor_quadratic(const Tower& T, std::size_t level, const KPoly& f) {
  const Elem& c = f[0];
  const Elem& b = f[1];
  const Elem disc = T.sub(T.mul(level, b, b), T.scale(c, T.base()->from_int(4)));
  Elem s;
  if (!tower_sqrt(T, level, disc, s)) return {f};
  const Scalar half = T.base()->from_int(2).inv();
  const Elem r1 = T.scale(T.add(T.neg(b), s), half);
  const Elem r2 = T.scale(T.sub(T.neg(b), s), half);
  return {kp::linear(T, level, r1), kp::linear(T, level, r2)};
}

std::vector<KPoly> trager(const Tower& T, std::size_t level, const KPoly& f) {
  const auto flat = flatten(T, level);
  const QPoly M = to_qpoly(flat->primitive().minpoly);
  const std::size_t n = static_cast<std::size_t>(kp::deg(f)), D = flat->degree();
  const Elem& gamma = flat->primitive().gamma;
  for (long step = 0; step < 64; ++step) {
    const long s = step == 0 ? 0 : (step % 2 == 1 ? (step + 1) / 2 : -(step / 2));
    const Elem sg = T.scale(gamma, T.base()->from_int(s));
    const KPoly G = kp::shift(T, level, f, T.neg(sg));
    std::vector<QPoly> Gy;
    for (const auto& c : G) Gy.push_back(to_qpoly(flat->to_power_basis(c)));
    std::vector<Rational> xs, ys;
    for (std::size_t k = 0; k <= n * D; ++k) {
      const Rational x0(static_cast<long>(k));
      QPoly g;
      Rational pw(1);
      for (const auto& c : Gy) {
        g = qp::add(g, qp::scale(c, pw));
        pw *= x0;
      }
      xs.push_back(x0);
      ys.push_back(qp::resultant(M, g));
    }
    const QPoly N = qp::interpolate(xs, ys);
    if (qp::deg(qp::gcd(N, qp::derivative(N))) > 0) continue;
    std::vector<KPoly> out;
    for (const auto& [Ni, mult] : factor_rational(N).factors) {
      KPoly h = kp::gcd(T, level, G, kpoly_from_q(T, level, Ni));
      if (kp::deg(h) <= 0) continue;
      out.push_back(kp::shift(T, level, h, sg));
    }
    return out;
  }
  fail(ErrorKind::InvalidArgument, "no squarefree norm found");
}

std::vector<KPoly> factor_squarefree(const Tower& T, std::size_t level, const KPoly& f) {
  const std::size_t n = static_cast<std::size_t>(kp::deg(f));
  if (n <= 1) return {f};
  const std::uint64_t ch = T.characteristic();
  if (ch != 2) {
    if (n == 2) return factor_quadratic(T, level, f);
    Elem a;
    if (power_of_two(n) && is_binomial(f, a)) return factor_binomial(T, level, n, a);
  }
  CubeData cd;
  Elem a;
  if (n == 3 && is_binomial(f, a) && T.is_base(a) && kummer_setting(T, level, cd)) {
    auto roots = kummer_cube_roots(T, level, cd, a[0]);
    if (roots.empty()) return {f};
    std::vector<KPoly> out;
    for (const auto& r : roots) out.push_back(kp::linear(T, level, r));
    return out;
  }
  if (ch == 0 && level > 0) return trager(T, level, f);
  if (T.base()->kind() == BaseField::Kind::Finite) return factor_finite_tower(T, level, f);
  fail(ErrorKind::UnsupportedDomain, "factorization over " + T.describe() +
                                         " is limited to quadratics, binomials x^(2^k)-a and Kummer cubics");
}

}  // namespace

KPoly kpoly_from_q(const Tower& T, std::size_t level, const QPoly& p) {
  KPoly out;
  for (const auto& c : p) out.push_back(T.from_scalar(level, T.base()->from_rational(c)));
  kp::trim(out);
  return out;
}

bool kpoly_to_q(const Tower& T, const KPoly& p, QPoly& out) {
  out.clear();
  if (T.base()->kind() != BaseField::Kind::Rational) return false;
  for (const auto& c : p) {
    if (!T.is_base(c)) return false;
    out.push_back(c[0].rational());
  }
  qp::trim(out);
  return true;
}

bool tower_sqrt(const Tower& T, std::size_t level, const Elem& a, Elem& root) {
  if (Tower::is_zero(a)) {
    root = a;
    return true;
  }
  if (level == 0) {
    Scalar r;
    if (!base_sqrt(a[0], r)) return false;
    root = Elem{r};
    return true;
  }
  const std::size_t s = level - 1, n = T.dim(s);
  const unsigned d = T.stage(s).degree;
  if (d == 1) return tower_sqrt(T, s, a, root);
  const std::uint64_t ch = T.characteristic();
  Elem low;
  const bool in_lower = T.lower(a, level, s, low);
  if (d % 2 == 1 && in_lower) {
    // odd degree: a square root of a lower element cannot first appear here
    Elem r;
    if (!tower_sqrt(T, s, low, r)) return false;
    root = T.lift(r, s, level);
    return true;
  }
  if (d == 2 && ch != 2) {
    const KPoly& m = T.stage(s).minpoly;
    const Elem &e = m[0], &b = m[1];
    const Scalar half = T.base()->from_int(2).inv();
    const Elem u(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n));
    const Elem v(a.begin() + static_cast<std::ptrdiff_t>(n), a.end());
    // a = U + V*delta with delta = 2t + b, delta^2 = D
    const Elem Dsc = T.sub(T.mul(s, b, b), T.scale(e, T.base()->from_int(4)));
    const Elem U = T.sub(u, T.scale(T.mul(s, v, b), half));
    const Elem V = T.scale(v, half);
    Elem X, Y;
    bool ok = false;
    if (Tower::is_zero(V)) {
      if (tower_sqrt(T, s, U, X)) {
        Y = T.zero(s);
        ok = true;
      } else if (tower_sqrt(T, s, T.div(s, U, Dsc), Y)) {
        X = T.zero(s);
        ok = true;
      }
    } else {
      Elem nr;
      const Elem N = T.sub(T.mul(s, U, U), T.mul(s, Dsc, T.mul(s, V, V)));
      if (tower_sqrt(T, s, N, nr)) {
        for (int sign = 0; sign < 2 && !ok; ++sign) {
          const Elem t = T.scale(sign == 0 ? T.add(U, nr) : T.sub(U, nr), half);
          if (Tower::is_zero(t) || !tower_sqrt(T, s, t, X)) continue;
          Y = T.div(s, V, T.scale(X, T.base()->from_int(2)));
          ok = true;
        }
      }
    }
    if (!ok) return false;
    // X + Y*delta = (X + Y b) + 2Y t
    Elem lo = T.add(X, T.mul(s, Y, b));
    Elem hi = T.scale(Y, T.base()->from_int(2));
    lo.insert(lo.end(), hi.begin(), hi.end());
    if (T.mul(level, lo, lo) != a) return false;
    root = lo;
    return true;
  }
  if (ch == 0) {
    KPoly f{T.neg(a), T.zero(level), T.one(level)};
    for (const auto& h : trager(T, level, f)) {
      if (kp::deg(h) == 1) {
        root = T.neg(h[0]);
        return true;
      }
    }
    return false;
  }
  fail(ErrorKind::UnsupportedDomain, "square roots over " + T.describe() + " need quadratic or odd stages");
}

KFactorization factor_over(const Tower& T, std::size_t level, const KPoly& f_in) {
  KPoly f = f_in;
  kp::trim(f);
  if (f.empty()) fail(ErrorKind::ZeroPolynomial, "cannot factor the zero polynomial");
  for (const auto& c : f)
    if (c.size() != T.dim(level)) fail(ErrorKind::MixedDomains, "polynomial coefficients do not belong to the level");
  KFactorization out;
  out.unit = f.back();
  f = kp::monic(T, level, f);
  const BaseField* K = T.base();
  if (level == 0 && K->kind() == BaseField::Kind::Rational) {
    QPoly q;
    kpoly_to_q(T, f, q);
    for (auto& [g, m] : factor_rational(q).factors) out.factors.emplace_back(kpoly_from_q(T, 0, g), m);
    return out;
  }
  if (level == 0 && K->kind() == BaseField::Kind::Finite) {
    FqPoly q;
    for (const auto& c : f) q.push_back(c[0].code());
    for (auto& [g, m] : fq::factor(K->finite(), q)) {
      KPoly h;
      for (auto c : g) h.push_back(Elem{Scalar(K, c)});
      out.factors.emplace_back(h, m);
    }
    return out;
  }
  if (kp::deg(f) == 0) return out;
  for (auto& [g, m] : kp::squarefree(T, level, f)) {
    for (auto& h : factor_squarefree(T, level, g)) out.factors.emplace_back(kp::monic(T, level, h), m);
  }
  sort_factors(out.factors);
  return out;
}

std::vector<Elem> roots_in(const Tower& T, std::size_t level, const KPoly& f) {
  std::vector<Elem> out;
  for (const auto& [g, m] : factor_over(T, level, f).factors)
    if (kp::deg(g) == 1) out.push_back(T.neg(g[0]));
  std::sort(out.begin(), out.end(), [](const Elem& a, const Elem& b) { return compare_elems(a, b) < 0; });
  return out;
}

TowerPtr adjoin(const TowerPtr& t, const KPoly& m_in, const std::string& name) {
  KPoly m = m_in;
  kp::trim(m);
  if (m.empty()) fail(ErrorKind::ZeroPolynomial, "cannot adjoin a root of the zero polynomial");
  if (kp::deg(m) < 1) fail(ErrorKind::InvalidArgument, "cannot adjoin a root of a constant");
  const auto fac = factor_over(*t, t->height(), m);
  if (!fac.irreducible()) {
    throw Error(ErrorKind::ReduciblePolynomial,
                format_kpoly(*t, m) + " is reducible over " + t->describe())
        .with_detail(format_kpoly(*t, fac.factors.front().first));
  }
  Stage s;
  s.name = name;
  s.minpoly = kp::monic(*t, t->height(), m);
  return t->extend_unchecked(std::move(s));
}

// ---- formatting ---------------------------------------------------------------

namespace {

std::size_t level_of(const Tower& T, const Elem& e) {
  for (std::size_t L = T.height() + 1; L-- > 0;)
    if (T.dim(L) == e.size()) return L;
  fail(ErrorKind::InvalidArgument, "element size matches no tower level");
}

std::string monomial(const Tower& T, std::size_t level, std::size_t index) {
  std::string out;
  for (std::size_t i = 0; i < level; ++i) {
    const unsigned d = T.stage(i).degree;
    const std::size_t e = index % d;
    index /= d;
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += T.stage(i).name;
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string scalar_text(const Scalar& s, bool& negative) {
  negative = false;
  if (s.field()->kind() == BaseField::Kind::Rational && sgn(s.rational()) < 0) {
    negative = true;
    return Rational(-s.rational()).get_str();
  }
  if (s.field()->kind() == BaseField::Kind::Function) {
    const RatFunc& r = s.ratfunc();
    if (r.num.size() == 1 && r.den.size() == 1) return std::to_string(r.num[0]);
    return "(" + s.to_string() + ")";
  }
  return s.to_string();
}

}  // namespace

std::string format_elem(const Tower& T, const Elem& e) {
  const std::size_t level = level_of(T, e);
  std::string out;
  for (std::size_t i = e.size(); i-- > 0;) {
    if (e[i].is_zero()) continue;
    bool neg = false;
    std::string c = scalar_text(e[i], neg);
    const std::string mono = monomial(T, level, i);
    std::string term;
    if (mono.empty()) term = c;
    else if (c == "1") term = mono;
    else term = c + "*" + mono;
    if (neg) out += "-";
    else if (!out.empty()) out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

std::string format_kpoly(const Tower& T, const KPoly& p, const std::string& var) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    const Elem& c = p[k];
    if (Tower::is_zero(c)) continue;
    std::string pw = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    std::size_t nonzero = 0;
    for (const auto& s : c) nonzero += s.is_zero() ? 0 : 1;
    bool neg = false;
    std::string coef;
    if (T.is_base(c)) {
      coef = scalar_text(c[0], neg);
    } else if (nonzero == 1) {
      coef = format_elem(T, c);
      if (coef[0] == '-') {
        neg = true;
        coef.erase(0, 1);
      }
    } else {
      coef = "(" + format_elem(T, c) + ")";
    }
    std::string term;
    if (pw.empty()) term = coef;
    else if (coef == "1") term = pw;
    else term = coef + "*" + pw;
    if (neg) out += "-";
    else if (!out.empty()) out += "+";
    out += term;
  }
  return out;
}

}  // namespace cftk
