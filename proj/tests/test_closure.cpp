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

#include "doctest.h"

#include <cmath>

#include "cftk/closure.hpp"
#include "cftk/error.hpp"
#include "cftk/factor.hpp"
#include "oracles.hpp"

using namespace cftk;

namespace {

AlgebraicNumber root(std::initializer_list<long> p, const char* sel) {
  return designated_root(qp::from_ints(p), RootSelector::parse(sel));
}

long double mid(const Interval& i) { return static_cast<long double>(Rational((i.lo + i.hi) / 2).get_d()); }

}  // namespace

TEST_CASE("algebraic number arithmetic") {
  const auto s2 = root({-2, 0, 1}, "real-positive");
  const auto s3 = root({-3, 0, 1}, "real-positive");
  const auto two = s2 * s2;
  CHECK(two.is_rational());
  CHECK(two.rational() == 2);
  const auto sum = s2 + s3;
  CHECK(sum.minpoly() == qp::from_ints({1, 0, -10, 0, 1}));
  const Box b = sum.box(Rational(1, 1000));
  CHECK(b.re.lo <= Rational(3146, 1000));
  CHECK(b.re.hi >= Rational(3146, 1000));
  const auto z3 = root({1, 1, 1}, "primitive");
  const auto z3sq = z3 * z3;
  CHECK((z3 + z3sq).rational() == -1);
  CHECK((s2 - s2).rational() == 0);
  CHECK((s3 / s3).rational() == 1);
  CHECK_THROWS_AS(s2 / AlgebraicNumber(), Error);
  CHECK(-(-s2) == s2);
  CHECK((s2 * s3) == root({-6, 0, 1}, "real-positive"));
}

TEST_CASE("realness and designated roots") {
  const auto c = root({-2, 0, 0, 1}, "real");
  CHECK(c.is_real());
  const auto z3 = root({-1, 0, 0, 1}, "primitive");
  CHECK_FALSE(z3.is_real());
  CHECK_FALSE((z3 * c).is_real());
  CHECK(root({-2, 0, 1}, "real-positive").is_real());
  CHECK(root({-1, 0, 0, 0, 1}, "primitive").minpoly() == qp::from_ints({1, 0, 1}));
  CHECK(root({-1, 0, 0, 0, 1}, "primitive").box().im.lo > 0);
  CHECK_THROWS_AS(root({1, 0, 1}, "real-positive"), Error);
  // e^(2 pi i / 5)
  const auto z5 = root({-1, 0, 0, 0, 0, 1}, "primitive");
  CHECK(z5.box().re.lo > 0);
  CHECK(z5.box().im.lo > 0);
}

TEST_CASE("root isolation agrees with a numerical oracle") {
  const std::vector<QPoly> polys = {qp::from_ints({1, 0, 10, 0, 1}),  qp::from_ints({-2, 0, 0, 0, 0, 1}),
                                    qp::from_ints({1, 1, 1, 1, 1}),    qp::from_ints({3, -1, 0, 2, 0, 0, 1}),
                                    qp::from_ints({1, 0, 0, 0, 1}),    qp::from_ints({5, 0, 0, 0, 0, 0, 0, 1})};
  for (const auto& p : polys) {
    INFO(qp::to_string(p));
    const auto roots = AlgebraicNumber::roots_of(p);
    REQUIRE(roots.size() == static_cast<std::size_t>(qp::deg(p)));
    const auto approx = oracle::numeric_roots(p);
    for (const auto& r : roots) {
      const Box b = r.box(Rational(1, 1 << 20));
      std::size_t hits = 0;
      for (const auto& z : approx)
        if (std::abs(z - std::complex<long double>(mid(b.re), mid(b.im))) < 1e-5L) ++hits;
      CHECK(hits == 1);
      CHECK(r.conjugate().conjugate() == r);
      const Box cb = r.conjugate().box(Rational(1, 1 << 20));
      CHECK(intersects(cb.re, b.re));
      CHECK(std::fabs(static_cast<double>(mid(cb.im) + mid(b.im))) < 1e-5);
    }
    for (std::size_t i = 1; i < roots.size(); ++i) CHECK(compare(roots[i - 1], roots[i]) < 0);
  }
}

TEST_CASE("embedding towers into the closure") {
  TowerPtr t = Tower::make(rationals());
  t = adjoin(t, kpoly_from_q(*t, 0, qp::from_ints({-2, 0, 1})));
  auto e = embed_tower(t, {RootSelector::parse("real-positive")});
  CHECK(e.verified());
  CHECK(e.generator_images()[0] == root({-2, 0, 1}, "real-positive"));

  RootSelector one;
  one.kind = RootSelector::Kind::Value;
  one.value = AlgebraicNumber::from_rational(Rational(1));
  CHECK_THROWS_AS(embed_tower(t, {one}), Error);

  TowerPtr q = Tower::make(rationals());
  q = adjoin(q, kpoly_from_q(*q, 0, qp::from_ints({-2, 0, 0, 0, 1})));
  auto eq = embed_tower(q, {RootSelector::parse("upper")});
  CHECK(eq.verified());
  const auto img = eq.generator_images()[0];
  CHECK_FALSE(img.is_real());
  const auto sq = eq.image(q->mul(q->gen_top(0), q->gen_top(0)));
  CHECK(sq == -root({-2, 0, 1}, "real-positive"));

  CHECK(all_closure_embeddings(q).size() == 4);
}

TEST_CASE("closure enumeration is deterministic") {
  const auto a = closure_enumeration(3);
  const auto b = closure_enumeration(3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].root == b[i].root);
  CHECK(a.front().root.rational() == 1);
}
