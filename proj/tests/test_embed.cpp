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

#include <random>

#include "cftk/embed.hpp"
#include "cftk/error.hpp"
#include "cftk/factor.hpp"
#include "doctest.h"

using namespace cftk;

namespace {

TowerPtr quad_tower(std::initializer_list<long> radicands) {
  TowerPtr t = Tower::make(rationals());
  for (long r : radicands) t = adjoin(t, kpoly_from_q(*t, t->height(), qp::from_ints({-r, 0, 1})));
  return t;
}

std::vector<Scalar> zpoly(std::initializer_list<long> c) {
  std::vector<Scalar> out;
  for (long v : c) out.push_back(rationals()->from_int(v));
  return out;
}

Elem qelem(std::initializer_list<long> c) {
  Elem out;
  for (long v : c) out.push_back(rationals()->from_int(v));
  return out;
}

}  // namespace

TEST_CASE("extending an isomorphism by one root") {
  const TowerPtr Q = Tower::make(rationals());
  const Embedding id = identity_embedding(Q);
  const TowerPtr target = quad_tower({2});
  const KPoly p = kpoly_from_q(*Q, 0, qp::from_ints({-2, 0, 1}));
  const Embedding conj = extend_iso_simple(id, p, target, target->neg(target->gen_top(0)));
  CHECK(verify(conj));

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-50, 50);
  for (int i = 0; i < 100; ++i) {
    const long a = d(rng), b = d(rng);
    CHECK(apply_to(conj, qelem({a, b})) == qelem({a, -b}));
  }

  const TowerPtr cube = adjoin(Q, kpoly_from_q(*Q, 0, qp::from_ints({-2, 0, 0, 1})));
  const Embedding same =
      extend_iso_simple(id, kpoly_from_q(*Q, 0, qp::from_ints({-2, 0, 0, 1})), cube, cube->gen_top(0));
  CHECK(same_map(same, identity_embedding(cube)));

  CHECK_THROWS_AS(extend_iso_simple(id, kpoly_from_q(*Q, 0, qp::from_ints({-4, 0, 1})), target, target->gen_top(0)),
                  Error);
  try {
    extend_iso_simple(id, kpoly_from_q(*Q, 0, qp::from_ints({-4, 0, 1})), target, target->gen_top(0));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotIrreducible);
  }
  try {
    extend_iso_simple(id, p, target, target->one(1));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotARoot);
  }
}

TEST_CASE("root moduli and embedding bounds") {
  const TowerPtr r3 = quad_tower({3});
  RootModulus r(r3);
  CHECK(r.roots(zpoly({-2, 0, 1})).empty());
  const auto roots = r.roots(zpoly({-3, 0, 1}));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == qelem({0, -1}));
  CHECK(roots[1] == qelem({0, 1}));
  RootModulus rq(Tower::make(rationals()));
  for (long p : {2, 3, 5, 7, 11}) CHECK(rq.roots(zpoly({-p, 0, 1})).empty());

  const TowerPtr r2 = quad_tower({2});
  CHECK(bound_from_modulus(RootModulus(r2), r2).candidates[0].size() == 2);
  CHECK(bound_from_modulus(RootModulus(r3), r2).candidates[0].empty());
  const auto b6 = bound_from_modulus(RootModulus(quad_tower({2, 3})), quad_tower({6}));
  REQUIRE(b6.candidates[0].size() == 2);
  for (const auto& c : b6.candidates[0]) {
    CHECK(c[0].is_zero());
    CHECK(c[1].is_zero());
    CHECK(c[2].is_zero());
    CHECK((c[3] == rationals()->one() || c[3] == -rationals()->one()));
  }
}

TEST_CASE("bounded embedding search") {
  const TowerPtr Q = Tower::make(rationals());
  const TowerPtr split = splitting_tower(Q, zpoly({-2, 0, 0, 1}));
  CHECK(split->degree() == 6);
  const auto all = search_embedding(split, split, SearchMode::All);
  CHECK(all.size() == 6);
  for (const auto& e : all) CHECK(verify(e));
  // closed under composition
  for (const auto& a : all)
    for (const auto& b : all) {
      const Embedding c = compose(a, b);
      CHECK(std::any_of(all.begin(), all.end(), [&](const Embedding& e) { return same_map(e, c); }));
    }
  CHECK(search_embedding(quad_tower({2}), quad_tower({3}), SearchMode::All).empty());
  const TowerPtr r2 = quad_tower({2});
  const auto two = search_embedding(r2, r2, SearchMode::All);
  REQUIRE(two.size() == 2);
  CHECK(std::any_of(two.begin(), two.end(), [&](const Embedding& e) { return same_map(e, identity_embedding(r2)); }));
  CHECK(search_embedding(r2, r2, SearchMode::First).size() == 1);
}

TEST_CASE("mutual embeddings give isomorphisms") {
  const TowerPtr a = quad_tower({2});
  const TowerPtr b = adjoin(Tower::make(rationals()), kpoly_from_q(*Tower::make(rationals()), 0, qp::from_ints({-8, 0, 1})));
  // sqrt(2) -> sqrt(8)/2 and back
  Embedding e1{a, b, {qelem({0, 1})}};
  e1.images[0][1] = rationals()->from_rational(Rational(1, 2));
  Embedding e2{b, a, {qelem({0, 2})}};
  const Isomorphism iso = iso_from_mutual(e1, e2);
  CHECK(same_map(compose(iso.forward, iso.backward), identity_embedding(a)));

  const TowerPtr k = quad_tower({2, 3});
  Embedding conj{k, k, {k->neg(k->gen_top(0)), k->gen_top(1)}};
  const Isomorphism inv = iso_from_mutual(conj, conj);
  CHECK(same_map(inv.backward, conj));

  Embedding up{a, k, {k->gen_top(0)}};
  Embedding down{k, a, {a->gen_top(0), a->gen_top(0)}};
  try {
    iso_from_mutual(up, down);
    FAIL("expected NotMutual");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotMutual);
  }
}

TEST_CASE("stagewise extension of an automorphism") {
  const TowerPtr r2 = quad_tower({2});
  const Embedding conj{r2, r2, {r2->neg(r2->gen_top(0))}};
  const auto one = extend_to_closure_stagewise(conj, 1, {zpoly({-3, 0, 1})});
  REQUIRE(one.tower->height() == 2);
  CHECK(one.map.images[0] == one.tower->neg(one.tower->gen_top(0)));
  CHECK(one.map.images[1] == one.tower->gen_top(1));

  const auto id = extend_to_closure_stagewise(identity_embedding(r2), 2);
  CHECK(same_map(id.map, identity_embedding(id.tower)));
  CHECK(id.stage_polys.size() == 2);

  const auto two = extend_to_closure_stagewise(conj, 2, {zpoly({-6, 0, 1}), zpoly({-10, 0, 1})});
  REQUIRE(two.tower->height() == 3);
  CHECK(verify(two.map));
  const Tower& T = *two.tower;
  CHECK(two.map.images[0] == T.neg(T.gen_top(0)));
  for (std::size_t j = 1; j < 3; ++j) CHECK(T.is_base(T.mul(two.map.images[j], T.gen_top(j))));
  // already split polynomials are skipped
  const auto skip = extend_to_closure_stagewise(conj, 1, {zpoly({-8, 0, 1}), zpoly({-5, 0, 1})});
  CHECK(skip.stage_polys.size() == 1);
  CHECK(skip.stage_polys[0] == zpoly({-5, 0, 1}));
}
