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

#include <random>

#include "cftk/error.hpp"
#include "cftk/factor.hpp"
#include "cftk/primitive.hpp"

using namespace cftk;

namespace {

KPoly zpoly(const Tower& T, std::size_t level, std::initializer_list<long> c) {
  KPoly p;
  for (long v : c) p.push_back(T.from_int(level, v));
  return p;
}

TowerPtr q_tower(std::initializer_list<std::initializer_list<long>> minpolys) {
  TowerPtr t = Tower::make(rationals());
  for (auto m : minpolys) t = adjoin(t, zpoly(*t, t->height(), m));
  return t;
}

Elem random_elem(const Tower& T, std::size_t level, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-3, 3);
  Elem e = T.zero(level);
  for (auto& s : e) s = T.base()->from_int(d(rng));
  return e;
}

KPoly product(const Tower& T, std::size_t level, const KFactorization& f) {
  KPoly out{f.unit};
  for (const auto& [g, m] : f.factors)
    for (int k = 0; k < m; ++k) out = kp::mul(T, level, out, g);
  return out;
}

}  // namespace

TEST_CASE("adjoining roots builds towers of the expected degree") {
  auto t = q_tower({{-2, 0, 1}});
  CHECK(t->degree() == 2);
  t = adjoin(t, zpoly(*t, 1, {-3, 0, 1}));
  CHECK(t->degree() == 4);
  try {
    adjoin(Tower::make(rationals()), zpoly(*Tower::make(rationals()), 0, {-4, 0, 1}));
    FAIL("x^2-4 was accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ReduciblePolynomial);
    CHECK(e.detail() == "x-2");
  }
  auto s2 = q_tower({{-2, 0, 1}});
  CHECK_THROWS_AS(adjoin(s2, zpoly(*s2, 1, {-8, 0, 1})), Error);
}

TEST_CASE("primitive element of Q(sqrt2, sqrt3)") {
  auto t = q_tower({{-2, 0, 1}, {-3, 0, 1}});
  auto pe = primitive_element(*t);
  CHECK(pe.gamma == t->add(t->gen_top(0), t->gen_top(1)));
  std::vector<Scalar> expect;
  for (long v : {1, 0, -10, 0, 1}) expect.push_back(rationals()->from_int(v));
  CHECK(pe.minpoly == expect);
}

TEST_CASE("tower arithmetic satisfies the field axioms") {
  std::mt19937_64 rng(5);
  auto t = q_tower({{-2, 0, 1}, {-2, 0, 0, 1}, {1, 0, 1}});
  for (int trial = 0; trial < 40; ++trial) {
    Elem a = random_elem(*t, 3, rng), b = random_elem(*t, 3, rng), c = random_elem(*t, 3, rng);
    CHECK(t->mul(t->mul(a, b), c) == t->mul(a, t->mul(b, c)));
    CHECK(t->mul(a, t->add(b, c)) == t->add(t->mul(a, b), t->mul(a, c)));
    CHECK(t->mul(a, b) == t->mul(b, a));
    if (!Tower::is_zero(a)) CHECK(t->mul(a, t->inv(a)) == t->one(3));
  }
  auto f = Tower::make(BaseField::get("Fp:5"));
  f = adjoin(f, zpoly(*f, 0, {2, 0, 1}));
  f = adjoin(f, zpoly(*f, 1, {1, 1, 0, 1}));
  for (int trial = 0; trial < 40; ++trial) {
    Elem a = random_elem(*f, 2, rng);
    if (!Tower::is_zero(a)) CHECK(f->mul(a, f->inv(a)) == f->one(2));
  }
}

TEST_CASE("square roots in towers") {
  auto t = q_tower({{-2, 0, 1}, {-3, 0, 1}});
  const Elem s = t->add(t->gen_top(0), t->gen_top(1));
  Elem r;
  REQUIRE(tower_sqrt(*t, 2, t->mul(s, s), r));
  CHECK(t->mul(r, r) == t->mul(s, s));
  CHECK_FALSE(tower_sqrt(*t, 2, t->from_int(2, 5), r));
  CHECK(tower_sqrt(*t, 2, t->from_int(2, 6), r));
  CHECK(tower_sqrt(*t, 2, t->from_int(2, 24), r));
}

TEST_CASE("factoring over number field towers") {
  auto t = q_tower({{-2, 0, 0, 0, 1}});
  auto fac = factor_over(*t, zpoly(*t, 1, {-2, 0, 0, 0, 1}));
  REQUIRE(fac.factors.size() == 3);
  CHECK(format_kpoly(*t, fac.factors[0].first) == "x-a0");
  CHECK(format_kpoly(*t, fac.factors[1].first) == "x+a0");
  CHECK(format_kpoly(*t, fac.factors[2].first) == "x^2+a0^2");
  CHECK(product(*t, 1, fac) == zpoly(*t, 1, {-2, 0, 0, 0, 1}));

  auto cube = q_tower({{-2, 0, 0, 1}});
  CHECK(roots_in(*cube, zpoly(*cube, 1, {-2, 0, 0, 1})).size() == 1);
  fac = factor_over(*cube, zpoly(*cube, 1, {-2, 0, 0, 1}));
  CHECK(fac.factors.size() == 2);

  // products of random quadratics over Q(sqrt2, sqrt3) are recovered
  std::mt19937_64 rng(9);
  auto m = q_tower({{-2, 0, 1}, {-3, 0, 1}});
  for (int trial = 0; trial < 6; ++trial) {
    KPoly g{random_elem(*m, 2, rng), random_elem(*m, 2, rng), m->one(2)};
    KPoly h{random_elem(*m, 2, rng), random_elem(*m, 2, rng), random_elem(*m, 2, rng), m->one(2)};
    KPoly p = kp::mul(*m, 2, g, h);
    auto pf = factor_over(*m, p);
    CHECK(product(*m, 2, pf) == p);
    for (const auto& [q, e] : pf.factors) {
      CHECK(kp::rem(*m, 2, p, q).empty());
      CHECK(kp::deg(q) >= 1);
    }
  }
}

TEST_CASE("Kummer cubics over GF(4)(t)") {
  const BaseField* K = BaseField::get("RatFunc:2^2");
  auto t = Tower::make(K);
  const Scalar tt = make_ratfunc(K, FqPoly{0, 1}, FqPoly{1});
  KPoly m{t->from_scalar(0, -tt), t->zero(0), t->zero(0), t->one(0)};
  t = adjoin(t, m);
  KPoly f{t->from_scalar(1, -(tt * tt)), t->zero(1), t->zero(1), t->one(1)};
  auto roots = roots_in(*t, f);
  REQUIRE(roots.size() == 3);
  for (const auto& r : roots) CHECK(t->mul(t->mul(r, r), r) == t->from_scalar(1, tt * tt));
  KPoly g{t->from_scalar(1, -(tt + K->one())), t->zero(1), t->zero(1), t->one(1)};
  CHECK(factor_over(*t, g).irreducible());
  CHECK_THROWS_AS(adjoin(t, f), Error);
}

TEST_CASE("finite towers: factors agree with exhaustive root search") {
  auto f = Tower::make(BaseField::get("Fp:5"));
  f = adjoin(f, zpoly(*f, 0, {2, 0, 1}));
  std::vector<Elem> all;
  for (long a = 0; a < 5; ++a)
    for (long b = 0; b < 5; ++b) all.push_back(Elem{f->base()->from_int(a), f->base()->from_int(b)});
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    KPoly p{random_elem(*f, 1, rng), random_elem(*f, 1, rng), random_elem(*f, 1, rng), random_elem(*f, 1, rng),
            f->one(1)};
    std::size_t expected = 0;
    for (const auto& x : all) expected += Tower::is_zero(kp::eval(*f, 1, p, x)) ? 1 : 0;
    CHECK(roots_in(*f, p).size() == expected);
    CHECK(product(*f, 1, factor_over(*f, p)) == p);
  }
  // (x + 1)^5 (x + a0) keeps its multiplicities in characteristic 5
  KPoly q{f->one(1), f->one(1)};
  KPoly p = q;
  for (int k = 0; k < 4; ++k) p = kp::mul(*f, 1, p, q);
  p = kp::mul(*f, 1, p, KPoly{f->gen(0), f->one(1)});
  auto fac = factor_over(*f, p);
  REQUIRE(fac.factors.size() == 2);
  CHECK(fac.factors[1].second == 5);
}
