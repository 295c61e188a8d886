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

#include "cftk/closure.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "cftk/error.hpp"

namespace cftk {

bool intersects(const Interval& a, const Interval& b) { return a.lo <= b.hi && b.lo <= a.hi; }
bool intersects(const Box& a, const Box& b) { return intersects(a.re, b.re) && intersects(a.im, b.im); }

namespace {

// ---- interval arithmetic ----------------------------------------------------------

Interval iadd(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval isub(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
Interval imul(const Interval& a, const Interval& b) {
  const Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}
Interval isquare(const Interval& a) {
  if (a.lo >= 0) return {a.lo * a.lo, a.hi * a.hi};
  if (a.hi <= 0) return {a.hi * a.hi, a.lo * a.lo};
  return {Rational(0), std::max(a.lo * a.lo, a.hi * a.hi)};
}

Box badd(const Box& a, const Box& b) { return {iadd(a.re, b.re), iadd(a.im, b.im)}; }
Box bneg(const Box& a) { return {{-a.re.hi, -a.re.lo}, {-a.im.hi, -a.im.lo}}; }
Box bmul(const Box& a, const Box& b) {
  return {isub(imul(a.re, b.re), imul(a.im, b.im)), iadd(imul(a.re, b.im), imul(a.im, b.re))};
}
std::optional<Box> binv(const Box& a) {
  const Interval d = iadd(isquare(a.re), isquare(a.im));
  if (d.lo <= 0) return std::nullopt;
  const Interval r{1 / d.hi, 1 / d.lo};
  const Box out{imul(a.re, r), imul(a.im, r)};
  return Box{out.re, {-out.im.hi, -out.im.lo}};
}
Box bconst(const Rational& q) { return {{q, q}, {Rational(0), Rational(0)}}; }

Box horner(const QPoly& h, const Box& x) {
  Box acc = bconst(Rational(0));
  for (std::size_t k = h.size(); k-- > 0;) acc = badd(bmul(acc, x), bconst(h[k]));
  return acc;
}

// ---- Sturm-type sequences -----------------------------------------------------------

QPoly positive_rescale(const QPoly& r) {
  QPoly nr = qp::from_z(qp::primitive_part(r));
  if (sgn(nr.back()) != sgn(r.back())) nr = qp::neg(nr);
  return nr;
}

std::vector<QPoly> remainder_sequence(const QPoly& P, const QPoly& Q) {
  std::vector<QPoly> seq{P};
  if (Q.empty()) return seq;
  seq.push_back(Q);
  for (;;) {
    QPoly r = qp::rem(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    seq.push_back(qp::neg(positive_rescale(r)));
  }
  return seq;
}

/// Roots of p in the open interval (lo, hi); p squarefree with Sturm sequence st.
int count_open(const std::vector<QPoly>& st, const QPoly& p, const Rational& lo, const Rational& hi) {
  if (lo >= hi) return 0;
  return count_real_roots(st, lo, hi) - (qp::eval(p, hi) == 0 ? 1 : 0);
}

// ---- real algebraic numbers ----------------------------------------------------------

/// The unique root of the squarefree polynomial p in (lo, hi), or the point lo == hi.
struct RealRoot {
  QPoly p;
  std::vector<QPoly> st;
  Rational lo, hi;

  bool exact() const { return lo == hi; }
  void refine() {
    if (exact()) return;
    const Rational mid = (lo + hi) / 2;
    if (qp::eval(p, mid) == 0) {
      lo = hi = mid;
    } else if (count_open(st, p, lo, mid) == 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
};

bool has_root_between(const QPoly& g, const RealRoot& a, const RealRoot& b) {
  // does g vanish somewhere in the intersection of the two isolating sets?
  if (a.exact() && b.exact()) return a.lo == b.lo && qp::eval(g, a.lo) == 0;
  if (a.exact()) return b.lo < a.lo && a.lo < b.hi && qp::eval(g, a.lo) == 0;
  if (b.exact()) return a.lo < b.lo && b.lo < a.hi && qp::eval(g, b.lo) == 0;
  const Rational lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
  if (lo >= hi) return false;
  return count_open(sturm_sequence(g), g, lo, hi) > 0;
}

int compare_real(RealRoot a, RealRoot b) {
  const QPoly g = qp::gcd(a.p, b.p);
  for (;;) {
    if (a.hi < b.lo || (a.hi == b.lo && !(a.exact() && b.exact()))) return -1;
    if (b.hi < a.lo || (b.hi == a.lo && !(a.exact() && b.exact()))) return 1;
    if (qp::deg(g) >= 1 && has_root_between(g, a, b)) return 0;
    if (a.exact() && b.exact()) return a.lo < b.lo ? -1 : (a.lo > b.lo ? 1 : 0);
    a.refine();
    b.refine();
  }
}

// ---- counting complex roots in rectangles ------------------------------------------------

struct Rect {
  Rational x0, x1, y0, y1;
};

void edge_polys(const QPoly& p, const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by, QPoly& R,
                QPoly& I) {
  const QPoly zr{ax, bx - ax}, zi{ay, by - ay};
  QPoly zr_t = zr, zi_t = zi;
  qp::trim(zr_t);
  qp::trim(zi_t);
  R.clear();
  I.clear();
  for (std::size_t k = p.size(); k-- > 0;) {
    QPoly nr = qp::sub(qp::mul(R, zr_t), qp::mul(I, zi_t));
    QPoly ni = qp::add(qp::mul(R, zi_t), qp::mul(I, zr_t));
    R = qp::add(nr, QPoly{p[k]});
    I = ni;
  }
}

/// Winding number of p around the rectangle boundary, or nothing if p has a
/// root on the boundary.
std::optional<int> count_rect(const QPoly& p, const Rect& r) {
  const Rational xs[4] = {r.x0, r.x1, r.x1, r.x0};
  const Rational ys[4] = {r.y0, r.y0, r.y1, r.y1};
  QPoly R[4], I[4];
  for (int e = 0; e < 4; ++e) {
    edge_polys(p, xs[e], ys[e], xs[(e + 1) % 4], ys[(e + 1) % 4], R[e], I[e]);
    const QPoly g = qp::gcd(R[e], I[e]);
    if (qp::deg(g) >= 1) {
      if (qp::eval(g, Rational(0)) == 0) return std::nullopt;
      if (count_real_roots(sturm_sequence(g), Rational(0), Rational(1)) > 0) return std::nullopt;
    }
  }
  static const long mult[][2] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}, {2, 1}, {1, -2}, {2, -1}, {1, 3}, {3, 1}, {1, -3}, {3, -1}};
  for (const auto& c : mult) {
    const Rational cr(c[0]), ci(c[1]);
    bool ok = true;
    QPoly Rc[4], Ic[4];
    for (int e = 0; e < 4 && ok; ++e) {
      Rc[e] = qp::sub(qp::scale(R[e], cr), qp::scale(I[e], ci));
      Ic[e] = qp::add(qp::scale(I[e], cr), qp::scale(R[e], ci));
      ok = qp::eval(Ic[e], Rational(0)) != 0 && qp::eval(Ic[e], Rational(1)) != 0;
    }
    if (!ok) continue;
    int total = 0;
    for (int e = 0; e < 4; ++e) {
      const auto seq = remainder_sequence(Ic[e], Rc[e]);
      total += sign_variations(seq, Rational(0)) - sign_variations(seq, Rational(1));
    }
    return total / 2;
  }
  return std::nullopt;
}

const Rational kSplits[] = {Rational(1, 2), Rational(7, 16), Rational(9, 16), Rational(3, 8), Rational(5, 8),
                            Rational(13, 32), Rational(19, 32), Rational(5, 16), Rational(11, 16), Rational(29, 64)};

/// Splits r into four rectangles whose boundaries avoid the roots of p.
std::vector<std::pair<Rect, int>> split_rect(const QPoly& p, const Rect& r) {
  for (const auto& t : kSplits) {
    const Rational xm = r.x0 + t * (r.x1 - r.x0), ym = r.y0 + t * (r.y1 - r.y0);
    const Rect parts[4] = {{r.x0, xm, r.y0, ym}, {xm, r.x1, r.y0, ym}, {r.x0, xm, ym, r.y1}, {xm, r.x1, ym, r.y1}};
    std::vector<std::pair<Rect, int>> out;
    bool ok = true;
    for (const auto& q : parts) {
      auto c = count_rect(p, q);
      if (!c) {
        ok = false;
        break;
      }
      out.emplace_back(q, *c);
    }
    if (ok) return out;
  }
  fail(ErrorKind::InvalidArgument, "could not subdivide a root rectangle");
}

Rational pow2_at_least(const Rational& b) {
  Rational x(1);
  while (x < b) x *= 2;
  return x;
}

// exact value of the resultant polynomial Res_y(f(y), g_x(y)) by interpolation
template <class Fn>
QPoly resultant_poly(const QPoly& f, std::size_t degree, Fn&& g_at) {
  std::vector<Rational> xs, ys;
  for (std::size_t k = 0; k <= degree; ++k) {
    const Rational x0(static_cast<long>(k));
    xs.push_back(x0);
    ys.push_back(qp::resultant(f, g_at(x0)));
  }
  return qp::interpolate(xs, ys);
}

}  // namespace

// ---- root sets -------------------------------------------------------------------------

class RootSet : public std::enable_shared_from_this<RootSet> {
 public:
  explicit RootSet(QPoly p);
  static std::shared_ptr<RootSet> get(const QPoly& monic);

  const QPoly& poly() const { return p_; }
  std::size_t size() const { return recs_.size(); }
  bool is_real(std::size_t i) const { return recs_[i].real; }
  std::size_t partner(std::size_t i) const { return recs_[i].partner; }
  Box box(std::size_t i, const Rational& width);
  /// Exact real part (times two) of root i as a real algebraic number.
  RealRoot double_real_part(std::size_t i);
  RealRoot real_root(std::size_t i);

 private:
  struct Rec {
    bool real = false;
    bool upper = false;
    std::size_t slot = 0;     // real slot or upper-rectangle slot
    std::size_t partner = 0;  // index of the complex conjugate
  };

  Box box_locked(std::size_t i, const Rational& width);
  void refine_upper(std::size_t slot);
  RealRoot double_real_part_locked(std::size_t slot);
  int compare_upper(std::size_t a, std::size_t b);

  QPoly p_;
  std::vector<QPoly> st_;
  std::vector<RealRoot> reals_;
  std::vector<Rect> uppers_;
  std::vector<Rec> recs_;
  std::optional<QPoly> re_poly_;
  std::vector<QPoly> re_st_;
  std::mutex mu_;
};

std::shared_ptr<RootSet> RootSet::get(const QPoly& monic) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<RootSet>> cache;
  const std::string key = qp::to_string(monic);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto set = std::make_shared<RootSet>(monic);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, set).first->second;
}

RootSet::RootSet(QPoly p) : p_(std::move(p)) {
  st_ = sturm_sequence(p_);
  const Rational B = pow2_at_least(root_bound(p_) + 1);
  // real roots by bisection
  std::vector<std::pair<Rational, Rational>> work{{-B, B}};
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    const int n = count_real_roots(st_, a, b);
    if (n == 0) continue;
    if (n == 1) {
      if (qp::eval(p_, b) == 0) reals_.push_back({p_, st_, b, b});
      else reals_.push_back({p_, st_, a, b});
      continue;
    }
    const Rational m = (a + b) / 2;
    work.emplace_back(a, m);
    work.emplace_back(m, b);
  }
  std::sort(reals_.begin(), reals_.end(), [](const RealRoot& x, const RealRoot& y) { return x.lo < y.lo; });
  // non-real roots in the upper half plane by subdivision
  const std::size_t nonreal = static_cast<std::size_t>(qp::deg(p_)) - reals_.size();
  if (nonreal > 0) {
    std::vector<std::pair<Rect, int>> rects{{Rect{-B, B, -B, B}, qp::deg(p_)}};
    while (!rects.empty()) {
      auto [r, k] = rects.back();
      rects.pop_back();
      if (k == 0 || r.y1 <= 0) continue;
      int real_in = 0;
      if (r.y0 < 0 && r.y1 > 0) real_in = count_open(st_, p_, r.x0, r.x1);
      if (k == real_in) continue;
      if (r.y0 >= 0 && k == 1) {
        uppers_.push_back(r);
        continue;
      }
      for (auto& q : split_rect(p_, r)) rects.push_back(q);
    }
  }
  for (std::size_t i = 0; i < reals_.size(); ++i) recs_.push_back({true, false, i, recs_.size()});
  // order upper roots by (Re, Im); the conjugates then mirror them
  std::vector<std::size_t> order(uppers_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (std::size_t i = 1; i < order.size(); ++i)
    for (std::size_t j = i; j > 0 && compare_upper(order[j], order[j - 1]) < 0; --j) std::swap(order[j], order[j - 1]);
  std::size_t g = 0;
  while (g < order.size()) {
    std::size_t h = g + 1;
    while (h < order.size() && compare_real(double_real_part_locked(order[g]), double_real_part_locked(order[h])) == 0) ++h;
    const std::size_t base = recs_.size(), len = h - g;
    for (std::size_t k = 0; k < len; ++k) recs_.push_back({false, false, order[h - 1 - k], base + 2 * len - 1 - k});
    for (std::size_t k = 0; k < len; ++k) recs_.push_back({false, true, order[g + k], base + len - 1 - k});
    g = h;
  }
}

void RootSet::refine_upper(std::size_t slot) {
  for (auto& [q, c] : split_rect(p_, uppers_[slot])) {
    if (c == 1) {
      uppers_[slot] = q;
      return;
    }
  }
  fail(ErrorKind::InvalidArgument, "lost track of an isolated root");
}

RealRoot RootSet::double_real_part_locked(std::size_t slot) {
  Rect& r = uppers_[slot];
  if (!re_poly_) {
    // 2 Re(z) = z + conj(z) is a real root of Res_y(p(y), p(x - y))
    const QPoly pneg = qp::negate_var(p_);
    const std::size_t n = static_cast<std::size_t>(qp::deg(p_));
    QPoly S = resultant_poly(p_, n * n, [&](const Rational& x0) { return qp::shift(pneg, -x0); });
    re_poly_ = qp::squarefree_part(qp::monic(S));
    re_st_ = sturm_sequence(*re_poly_);
  }
  while (count_open(re_st_, *re_poly_, 2 * r.x0, 2 * r.x1) != 1) refine_upper(slot);
  return RealRoot{*re_poly_, re_st_, 2 * r.x0, 2 * r.x1};
}

int RootSet::compare_upper(std::size_t a, std::size_t b) {
  for (int round = 0; round < 24; ++round) {
    const Rect &ra = uppers_[a], &rb = uppers_[b];
    if (ra.x1 < rb.x0) return -1;
    if (rb.x1 < ra.x0) return 1;
    refine_upper(a);
    refine_upper(b);
  }
  const int c = compare_real(double_real_part_locked(a), double_real_part_locked(b));
  if (c != 0) return c;
  for (;;) {
    const Rect &ra = uppers_[a], &rb = uppers_[b];
    if (ra.y1 < rb.y0) return -1;
    if (rb.y1 < ra.y0) return 1;
    refine_upper(a);
    refine_upper(b);
  }
}

Box RootSet::box_locked(std::size_t i, const Rational& width) {
  const Rec& rec = recs_[i];
  if (rec.real) {
    RealRoot& r = reals_[rec.slot];
    while (r.hi - r.lo > width) r.refine();
    return Box{{r.lo, r.hi}, {Rational(0), Rational(0)}};
  }
  while (uppers_[rec.slot].x1 - uppers_[rec.slot].x0 > width || uppers_[rec.slot].y1 - uppers_[rec.slot].y0 > width)
    refine_upper(rec.slot);
  const Rect& r = uppers_[rec.slot];
  if (rec.upper) return Box{{r.x0, r.x1}, {r.y0, r.y1}};
  return Box{{r.x0, r.x1}, {-r.y1, -r.y0}};
}

Box RootSet::box(std::size_t i, const Rational& width) {
  std::lock_guard<std::mutex> lock(mu_);
  return box_locked(i, width);
}

RealRoot RootSet::double_real_part(std::size_t i) {
  std::lock_guard<std::mutex> lock(mu_);
  return double_real_part_locked(recs_[i].slot);
}

RealRoot RootSet::real_root(std::size_t i) {
  std::lock_guard<std::mutex> lock(mu_);
  return reals_[recs_[i].slot];
}

// ---- algebraic numbers --------------------------------------------------------------------

AlgebraicNumber::AlgebraicNumber() : set_(RootSet::get(QPoly{Rational(0), Rational(1)})), index_(0) {}

AlgebraicNumber AlgebraicNumber::from_rational(const Rational& q) {
  return AlgebraicNumber(RootSet::get(QPoly{-q, Rational(1)}), 0);
}

std::vector<AlgebraicNumber> AlgebraicNumber::roots_of(const QPoly& p) {
  QPoly q = p;
  qp::trim(q);
  if (q.empty()) fail(ErrorKind::ZeroPolynomial, "the zero polynomial has every number as a root");
  std::vector<AlgebraicNumber> out;
  for (const auto& [f, m] : factor_rational(q).factors) {
    auto set = RootSet::get(f);
    for (std::size_t i = 0; i < set->size(); ++i) out.push_back(AlgebraicNumber(set, i));
  }
  for (std::size_t i = 1; i < out.size(); ++i)
    for (std::size_t j = i; j > 0 && compare(out[j], out[j - 1]) < 0; --j) std::swap(out[j], out[j - 1]);
  return out;
}

const QPoly& AlgebraicNumber::minpoly() const { return set_->poly(); }
std::size_t AlgebraicNumber::degree() const { return static_cast<std::size_t>(qp::deg(set_->poly())); }
Box AlgebraicNumber::box(const Rational& width) const { return set_->box(index_, width); }
Box AlgebraicNumber::box() const { return set_->box(index_, Rational(1, 1 << 10)); }
bool AlgebraicNumber::is_real() const { return set_->is_real(index_); }

Rational AlgebraicNumber::rational() const {
  if (!is_rational()) fail(ErrorKind::InvalidArgument, "algebraic number is not rational");
  return -minpoly()[0];
}

AlgebraicNumber AlgebraicNumber::conjugate() const { return AlgebraicNumber(set_, set_->partner(index_)); }

std::string AlgebraicNumber::to_string() const {
  if (is_rational()) return rational().get_str();
  return qp::to_string(minpoly()) + "#" + std::to_string(index_);
}

int compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a == b) return 0;
  if (a.minpoly() == b.minpoly()) return a.index() < b.index() ? -1 : 1;
  const bool ra = a.is_real(), rb = b.is_real();
  if (ra != rb) return ra ? -1 : 1;
  if (ra) return compare_real(a.set_->real_root(a.index()), b.set_->real_root(b.index()));
  Rational w(1);
  for (int round = 0; round < 24; ++round, w /= 2) {
    const Box x = a.box(w), y = b.box(w);
    if (x.re.hi < y.re.lo) return -1;
    if (y.re.hi < x.re.lo) return 1;
  }
  const int c = compare_real(a.set_->double_real_part(a.index()), b.set_->double_real_part(b.index()));
  if (c != 0) return c;
  for (;; w /= 2) {
    const Box x = a.box(w), y = b.box(w);
    if (x.im.hi < y.im.lo) return -1;
    if (y.im.hi < x.im.lo) return 1;
  }
}

AlgebraicNumber select_root(const std::vector<QPoly>& candidates, const std::function<Box(const Rational&)>& enclosure) {
  std::vector<AlgebraicNumber> roots;
  for (const auto& f : candidates) {
    auto set = RootSet::get(qp::monic(f));
    for (std::size_t i = 0; i < set->size(); ++i) roots.push_back(AlgebraicNumber(set, i));
  }
  Rational w(1);
  for (int round = 0; round < 400; ++round, w /= 2) {
    const Box E = enclosure(w);
    std::vector<std::size_t> alive;
    for (std::size_t i = 0; i < roots.size(); ++i)
      if (intersects(roots[i].box(w), E)) alive.push_back(i);
    if (alive.size() == 1) return roots[alive[0]];
    if (alive.empty() && round > 4) break;
  }
  fail(ErrorKind::InvalidArgument, "root selection did not converge");
}

namespace {

AlgebraicNumber negate(const AlgebraicNumber& a) {
  QPoly m = qp::negate_var(a.minpoly());
  return select_root({qp::monic(m)}, [&](const Rational& w) { return bneg(a.box(w)); });
}

AlgebraicNumber reciprocal(const AlgebraicNumber& a) {
  if (a.minpoly() == QPoly{Rational(0), Rational(1)}) fail(ErrorKind::DivisionByZero, "division by zero");
  const QPoly m = qp::monic(qp::reverse(a.minpoly()));
  return select_root({m}, [&](const Rational& w) {
    for (Rational v = w;; v /= 2)
      if (auto b = binv(a.box(v))) {
        if (b->re.width() <= w && b->im.width() <= w) return *b;
      }
  });
}

std::vector<QPoly> distinct_factors(const QPoly& R) {
  std::vector<QPoly> out;
  for (const auto& [f, m] : factor_rational(R).factors) out.push_back(f);
  return out;
}

}  // namespace

AlgebraicNumber alg_arith(const AlgebraicNumber& a, const AlgebraicNumber& b, ArithOp op) {
  switch (op) {
    case ArithOp::Sub:
      return alg_arith(a, negate(b), ArithOp::Add);
    case ArithOp::Div:
      return alg_arith(a, reciprocal(b), ArithOp::Mul);
    default:
      break;
  }
  const QPoly &ma = a.minpoly(), &mb = b.minpoly();
  if (a.is_rational() && b.is_rational())
    return AlgebraicNumber::from_rational(op == ArithOp::Add ? Rational(a.rational() + b.rational()) : Rational(a.rational() * b.rational()));
  const std::size_t n = a.degree() * b.degree();
  QPoly R;
  if (op == ArithOp::Add) {
    const QPoly mbneg = qp::negate_var(mb);
    R = resultant_poly(ma, n, [&](const Rational& x0) { return qp::shift(mbneg, -x0); });
  } else {
    if (a.is_rational() && a.rational() == 0) return a;
    if (b.is_rational() && b.rational() == 0) return b;
    const std::size_t m = b.degree();
    R = resultant_poly(ma, n, [&](const Rational& x0) {
      QPoly q(m + 1);
      Rational pw(1);
      for (std::size_t k = 0; k <= m; ++k) {
        q[m - k] = mb[k] * pw;
        pw *= x0;
      }
      qp::trim(q);
      return q;
    });
  }
  return select_root(distinct_factors(R), [&](const Rational& w) {
    for (Rational v = w;; v /= 2) {
      const Box x = a.box(v), y = b.box(v);
      const Box e = op == ArithOp::Add ? badd(x, y) : bmul(x, y);
      if (e.re.width() <= w && e.im.width() <= w) return e;
    }
  });
}

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) { return alg_arith(a, b, ArithOp::Add); }
AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) { return alg_arith(a, b, ArithOp::Sub); }
AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) { return alg_arith(a, b, ArithOp::Mul); }
AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) { return alg_arith(a, b, ArithOp::Div); }
AlgebraicNumber operator-(const AlgebraicNumber& a) { return negate(a); }

AlgebraicNumber evaluate(const QPoly& h_in, const AlgebraicNumber& x) {
  QPoly h = h_in;
  qp::trim(h);
  if (qp::deg(h) <= 0) return AlgebraicNumber::from_rational(h.empty() ? Rational(0) : h[0]);
  if (x.is_rational()) return AlgebraicNumber::from_rational(qp::eval(h, x.rational()));
  h = qp::rem(h, x.minpoly());
  if (qp::deg(h) <= 0) return AlgebraicNumber::from_rational(h.empty() ? Rational(0) : h[0]);
  const std::size_t n = x.degree();
  // h(x) is a root of Res_y(m(y), z - h(y))
  QPoly R = resultant_poly(x.minpoly(), n, [&](const Rational& z) { return qp::sub(QPoly{z}, h); });
  return select_root(distinct_factors(R), [&](const Rational& w) {
    for (Rational v = w;; v /= 2) {
      const Box e = horner(h, x.box(v));
      if (e.re.width() <= w && e.im.width() <= w) return e;
    }
  });
}

// ---- selectors -----------------------------------------------------------------------------

RootSelector RootSelector::parse(const std::string& text) {
  RootSelector s;
  if (text == "first") return s;
  if (text == "real-positive" || text == "first-real-positive") s.kind = Kind::RealPositive;
  else if (text == "real" || text == "first-real") s.kind = Kind::Real;
  else if (text == "upper" || text == "imaginary") s.kind = Kind::Upper;
  else if (text == "primitive" || text == "first-primitive") s.kind = Kind::Primitive;
  else if (text.rfind("index:", 0) == 0) {
    try {
      s.index = std::stoul(text.substr(6));
    } catch (const std::exception&) {
      fail(ErrorKind::ParseError, "bad root index in selector '" + text + "'");
    }
  } else {
    fail(ErrorKind::ParseError, "unknown root selector '" + text + "'");
  }
  return s;
}

std::string RootSelector::to_string() const {
  switch (kind) {
    case Kind::Index:
      return "index:" + std::to_string(index);
    case Kind::RealPositive:
      return "real-positive";
    case Kind::Real:
      return "real";
    case Kind::Upper:
      return "upper";
    case Kind::Primitive:
      return "primitive";
    case Kind::Value:
      return "value:" + (value ? value->to_string() : std::string("?"));
  }
  return "";
}

namespace {

int sign_of_real(const AlgebraicNumber& a) {
  if (a.is_rational()) return sgn(a.rational());
  for (Rational w(1);; w /= 2) {
    const Box b = a.box(w);
    if (b.re.lo > 0) return 1;
    if (b.re.hi < 0) return -1;
  }
}

// 0: positive real axis, 1: open upper half plane, 2: negative reals, 3: lower half plane
int half_plane(const AlgebraicNumber& a) {
  if (a.is_real()) return sign_of_real(a) > 0 ? 0 : 2;
  return a.box().im.lo > 0 ? 1 : 3;
}

/// Orders nonzero numbers by argument in [0, 2pi).
int compare_argument(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  const int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb ? -1 : 1;
  if (ha == 0 || ha == 2) return 0;
  // same open half plane: sign of Im(conj(a) * b)
  const AlgebraicNumber c = a.conjugate() * b;
  if (c.is_real()) return 0;
  return half_plane(c) == 1 ? -1 : 1;
}

}  // namespace

std::optional<std::size_t> apply_selector(const std::vector<AlgebraicNumber>& roots, const RootSelector& sel) {
  switch (sel.kind) {
    case RootSelector::Kind::Index:
      if (sel.index < roots.size()) return sel.index;
      return std::nullopt;
    case RootSelector::Kind::RealPositive:
      for (std::size_t i = 0; i < roots.size(); ++i)
        if (roots[i].is_real() && sign_of_real(roots[i]) > 0) return i;
      return std::nullopt;
    case RootSelector::Kind::Real:
      for (std::size_t i = 0; i < roots.size(); ++i)
        if (roots[i].is_real()) return i;
      return std::nullopt;
    case RootSelector::Kind::Upper:
      for (std::size_t i = 0; i < roots.size(); ++i)
        if (!roots[i].is_real() && half_plane(roots[i]) == 1) return i;
      return std::nullopt;
    case RootSelector::Kind::Primitive: {
      std::optional<std::size_t> best;
      for (std::size_t i = 0; i < roots.size(); ++i) {
        if (roots[i].is_rational() && roots[i].rational() == 0) continue;
        if (half_plane(roots[i]) == 0) continue;
        if (!best || compare_argument(roots[i], roots[*best]) < 0) best = i;
      }
      return best;
    }
    case RootSelector::Kind::Value:
      for (std::size_t i = 0; i < roots.size(); ++i)
        if (sel.value && roots[i] == *sel.value) return i;
      return std::nullopt;
  }
  return std::nullopt;
}

AlgebraicNumber designated_root(const QPoly& p, const RootSelector& sel) {
  const auto roots = AlgebraicNumber::roots_of(p);
  auto i = apply_selector(roots, sel);
  if (!i) fail(ErrorKind::NoSuchRoot, qp::to_string(p) + " has no root matching '" + sel.to_string() + "'");
  return roots[*i];
}

// ---- embeddings of towers --------------------------------------------------------------------

namespace {

QPoly to_q(const std::vector<Scalar>& v) {
  QPoly out;
  for (const auto& s : v) out.push_back(s.rational());
  qp::trim(out);
  return out;
}

void require_rational_tower(const Tower& T) {
  if (T.base()->kind() != BaseField::Kind::Rational)
    fail(ErrorKind::UnsupportedBase, "only towers over Q embed into the algebraic closure");
}

}  // namespace

ClosureEmbedding::ClosureEmbedding(TowerPtr tower, AlgebraicNumber theta)
    : tower_(std::move(tower)), flat_(flatten(*tower_, tower_->height())), theta_(std::move(theta)) {
  require_rational_tower(*tower_);
  const Tower& T = *tower_;
  const QPoly M = to_q(flat_->primitive().minpoly);
  bool ok = theta_.minpoly() == M;
  for (std::size_t j = 0; j < T.height(); ++j) {
    const Elem g = T.gen_top(j);
    gens_.push_back(image(g));
    ok = ok && gens_.back().minpoly() == to_q(minpoly_over_base(T, T.height(), g));
    // the stage relation holds for the images: sum c_k(theta) g(theta)^k = 0 mod M
    const QPoly gq = to_q(flat_->to_power_basis(g));
    QPoly acc, pw{Rational(1)};
    for (const auto& c : T.stage(j).minpoly) {
      const QPoly cq = to_q(flat_->to_power_basis(T.lift(c, j, T.height())));
      acc = qp::rem(qp::add(acc, qp::mul(cq, pw)), M);
      pw = qp::rem(qp::mul(pw, gq), M);
    }
    ok = ok && acc.empty();
  }
  verified_ = ok;
}

AlgebraicNumber ClosureEmbedding::image(const Elem& e) const {
  return evaluate(to_q(flat_->to_power_basis(e)), theta_);
}

std::vector<ClosureEmbedding> all_closure_embeddings(const TowerPtr& t) {
  require_rational_tower(*t);
  const auto flat = flatten(*t, t->height());
  std::vector<ClosureEmbedding> out;
  for (const auto& theta : AlgebraicNumber::roots_of(to_q(flat->primitive().minpoly))) out.emplace_back(t, theta);
  return out;
}

ClosureEmbedding embed_tower(const TowerPtr& t, const std::vector<RootSelector>& choices) {
  require_rational_tower(*t);
  const Tower& T = *t;
  const auto flat = flatten(T, T.height());
  std::vector<AlgebraicNumber> alive = AlgebraicNumber::roots_of(to_q(flat->primitive().minpoly));
  for (std::size_t j = 0; j < T.height(); ++j) {
    const QPoly h = to_q(flat->to_power_basis(T.gen_top(j)));
    std::vector<AlgebraicNumber> values;
    for (const auto& theta : alive) values.push_back(evaluate(h, theta));
    std::vector<AlgebraicNumber> distinct;
    for (const auto& v : values)
      if (std::find(distinct.begin(), distinct.end(), v) == distinct.end()) distinct.push_back(v);
    for (std::size_t i = 1; i < distinct.size(); ++i)
      for (std::size_t k = i; k > 0 && compare(distinct[k], distinct[k - 1]) < 0; --k) std::swap(distinct[k], distinct[k - 1]);
    const RootSelector sel = j < choices.size() ? choices[j] : RootSelector{};
    auto pick = apply_selector(distinct, sel);
    if (!pick) {
      if (sel.kind == RootSelector::Kind::Value)
        fail(ErrorKind::InconsistentChoice, "the chosen image of " + T.stage(j).name + " is not a root of its minimal polynomial "
                                                                                     "consistent with earlier choices");
      fail(ErrorKind::NoSuchRoot, "no image of " + T.stage(j).name + " matches '" + sel.to_string() + "'");
    }
    std::vector<AlgebraicNumber> next;
    for (std::size_t i = 0; i < alive.size(); ++i)
      if (values[i] == distinct[*pick]) next.push_back(alive[i]);
    alive = std::move(next);
  }
  if (alive.empty()) fail(ErrorKind::InconsistentChoice, "no embedding matches the choices");
  return ClosureEmbedding(t, alive.front());
}

// ---- enumeration -------------------------------------------------------------------------------

std::vector<ZPoly> integer_irreducibles_of_weight(unsigned weight) {
  const long s = weight;
  std::vector<ZPoly> out;
  for (long d = 1; d < s; ++d) {
    const long H = s - d;
    std::vector<ZPoly> polys;
    ZPoly c(static_cast<std::size_t>(d + 1), Integer(-H));
    for (;;) {
      bool valid = sgn(c.back()) > 0;
      Integer mx(0);
      for (const auto& v : c) mx = std::max<Integer>(mx, abs(v));
      valid = valid && mx == H && qp::content(c) == 1;
      if (valid && is_irreducible_rational(qp::from_z(c))) polys.push_back(c);
      std::size_t i = 0;
      while (i < c.size() && c[i] == H) c[i++] = -H;
      if (i == c.size()) break;
      c[i] += 1;
    }
    std::sort(polys.begin(), polys.end(),
              [](const ZPoly& a, const ZPoly& b) { return qp::compare(qp::from_z(a), qp::from_z(b)) < 0; });
    out.insert(out.end(), polys.begin(), polys.end());
  }
  return out;
}

std::vector<ZPoly> enumerate_integer_irreducibles(unsigned stage) {
  if (stage > 6) fail(ErrorKind::DegreeCapExceeded, "closure enumeration is capped at stage 6");
  std::vector<ZPoly> out;
  for (unsigned s = 2; s <= stage + 1; ++s) {
    auto w = integer_irreducibles_of_weight(s);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

std::vector<EnumeratedRoot> closure_enumeration(unsigned stage) {
  std::vector<EnumeratedRoot> out;
  for (const auto& p : enumerate_integer_irreducibles(stage))
    for (const auto& r : AlgebraicNumber::roots_of(qp::from_z(p))) out.push_back({p, r});
  return out;
}

}  // namespace cftk
