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

#include "cftk/error.hpp"
#include "cftk/factor.hpp"
#include "cftk/galois.hpp"
#include "cftk/subfield.hpp"
#include "doctest.h"

using namespace cftk;

namespace {

TowerPtr rat() { return Tower::make(rationals()); }

TowerPtr with(TowerPtr t, std::initializer_list<long> coeffs) {
  return adjoin(t, kpoly_from_q(*t, t->height(), qp::from_ints(coeffs)));
}

std::vector<Scalar> zpoly(std::initializer_list<long> c) {
  std::vector<Scalar> out;
  for (long v : c) out.push_back(rationals()->from_int(v));
  return out;
}

TowerPtr cubic_splitting() { return splitting_tower(rat(), zpoly({-2, 0, 0, 1})); }

// F(2^(1/4)) over F = Q(sqrt 3, sqrt 10), presented as F, sqrt 2, then y^2 = sqrt 2.
TowerPtr quartic_over_multiquadratic() {
  TowerPtr t = with(with(with(rat(), {-3, 0, 1}), {-10, 0, 1}), {-2, 0, 1});
  KPoly m{t->neg(t->gen_top(2)), t->zero(3), t->one(3)};
  return adjoin(t, m);
}

}  // namespace

TEST_CASE("automorphism groups") {
  const auto s3 = aut_group(cubic_splitting());
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.abelian());
  const auto v4 = aut_group(with(with(rat(), {-2, 0, 1}), {-3, 0, 1}));
  CHECK(v4.order() == 4);
  CHECK(v4.abelian());
  for (std::size_t a = 0; a < 4; ++a) CHECK(v4.inverse[a] == a);
  CHECK(aut_group(with(rat(), {-2, 0, 0, 1})).order() == 1);
}

TEST_CASE("normality predicates") {
  const TowerPtr cube = with(rat(), {-2, 0, 0, 1});
  const auto n1 = check_normal(cube, 0, NormalCheck::N1);
  CHECK_FALSE(n1.holds);
  CHECK(n1.certificate == "x^3-2");
  CHECK(check_normal(with(rat(), {-2, 0, 1}), 0, NormalCheck::Gal).holds);

  const TowerPtr q = quartic_over_multiquadratic();
  const auto r = check_normal(q, 2, NormalCheck::N1);
  CHECK_FALSE(r.holds);
  CHECK(r.certificate == "x^4-2");
  const auto n3 = check_normal(q, 2, NormalCheck::N3, 0);
  CHECK_FALSE(n3.holds);
  REQUIRE(n3.embedding.has_value());
  CHECK(verify(*n3.embedding));
  CHECK(fixes_prefix(*n3.embedding, 2));
  CHECK_FALSE(lands_in(*n3.embedding, q->height()));

  struct Case {
    TowerPtr t;
    std::size_t base;
  };
  const std::vector<Case> corpus{
      {with(rat(), {-2, 0, 1}), 0},
      {cube, 0},
      {cubic_splitting(), 0},
      {with(with(rat(), {-2, 0, 1}), {-3, 0, 1}), 0},
      {with(rat(), {1, 1, 1}), 0},
      {with(rat(), {-2, 0, 0, 0, 1}), 0},
  };
  for (const auto& c : corpus) {
    bool v[5];
    int k = 0;
    for (auto w : {NormalCheck::Gal, NormalCheck::N1, NormalCheck::N2, NormalCheck::N3, NormalCheck::N4})
      v[k++] = check_normal(c.t, c.base, w, 1).holds;
    CHECK(v[0] == v[1]);
    CHECK(v[1] == v[2]);
    CHECK(v[2] == v[3]);
    CHECK(v[3] == v[4]);
  }
}

TEST_CASE("fixed fields") {
  const TowerPtr K = cubic_splitting();
  const auto G = aut_group(K);
  CHECK(fixed_field(K, G.elements).dimension() == 1);
  CHECK(fixed_field(K, {G.elements[0]}).dimension() == 6);
  for (const auto& h : all_subgroups(G)) {
    if (h.elements.size() != 3) continue;
    std::vector<Embedding> maps;
    for (auto i : h.elements) maps.push_back(G.elements[i]);
    const auto E = fixed_field(K, maps);
    CHECK(E.dimension() == 2);
    REQUIRE(E.generators.size() == 1);
    const SubfieldSpan span(K, E.generators);
    for (const auto& z : roots_in(*K, kpoly_from_q(*K, K->height(), qp::from_ints({1, 1, 1})))) CHECK(span.express(z));
  }
}

TEST_CASE("galois correspondence") {
  const auto s3 = galois_correspondence(cubic_splitting());
  CHECK(s3.subgroups.size() == 6);
  CHECK(s3.fields.size() == 6);
  CHECK(s3.verified());
  std::vector<std::size_t> orders;
  for (const auto& h : s3.subgroups) orders.push_back(h.elements.size());
  CHECK(orders == std::vector<std::size_t>{1, 2, 2, 2, 3, 6});

  const auto v4 = galois_correspondence(with(with(rat(), {-2, 0, 1}), {-3, 0, 1}));
  CHECK(v4.subgroups.size() == 5);
  CHECK(v4.verified());
  const auto c2 = galois_correspondence(with(rat(), {-2, 0, 1}));
  CHECK(c2.subgroups.size() == 2);
  CHECK(c2.verified());
  try {
    galois_correspondence(with(rat(), {-2, 0, 0, 1}));
    FAIL("expected NotGalois");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotGalois);
  }
}

TEST_CASE("restriction homomorphisms") {
  const TowerPtr K = with(with(rat(), {-2, 0, 1}), {-3, 0, 1});
  const auto r = restriction_hom(aut_group(K), {K->gen_top(0)});
  CHECK(r.kernel.size() == 2);
  CHECK(r.image_size == 2);
  CHECK(r.surjective);
  CHECK(r.kernel_is_fixer);

  const TowerPtr S = cubic_splitting();
  const auto G = aut_group(S);
  try {
    restriction_hom(G, {S->gen_top(0)});
    FAIL("expected NotStable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotStable);
  }
  const auto w = roots_in(*S, kpoly_from_q(*S, S->height(), qp::from_ints({1, 1, 1})));
  const auto z = restriction_hom(G, {w.front()});
  CHECK(z.kernel.size() == 3);
  CHECK(z.kernel_normal);
  CHECK(z.surjective);
}

TEST_CASE("automorphism distance") {
  const TowerPtr r2 = with(rat(), {-2, 0, 1});
  const auto id = identity_embedding(r2);
  const Embedding conj{r2, r2, {r2->neg(r2->gen_top(0))}};
  CHECK_FALSE(aut_distance(id, id).has_value());
  CHECK(aut_distance(id, conj) == std::optional<std::size_t>(3));

  ElementEnumeration en(r2);
  CHECK(en.at(0) == r2->zero(1));
  CHECK(en.at(1) == r2->one(1));
  CHECK(en.at(3) == r2->gen_top(0));

  // the first four unit vectors of Q(sqrt 2, sqrt 3) come at indices 1, 3, 5, 7
  const TowerPtr K = with(with(rat(), {-2, 0, 1}), {-3, 0, 1});
  const auto G = aut_group(K);
  const auto d = distance_table(G);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t c = 0; c < 4; ++c) {
        auto val = [](const std::optional<std::size_t>& x) { return x ? 1.0 / double(1ULL << *x) : 0.0; };
        CHECK(val(d[a][c]) <= std::max(val(d[a][b]), val(d[b][c])));
      }
  // sqrt 3 is the first element moved by the map fixing sqrt 2
  for (std::size_t a = 1; a < 4; ++a)
    if (G.elements[a].images[0] == K->gen_top(0)) CHECK(d[0][a] == std::optional<std::size_t>(5));
}

TEST_CASE("dense sequences and subgroup trees") {
  const TowerPtr r2 = with(rat(), {-2, 0, 1});
  const auto g2 = aut_group(r2);
  const auto w2 = dense_sequence(g2, 4);
  CHECK(w2.sequence.size() == 2);
  CHECK(w2.bound.back() == 2);
  CHECK(check_dense(g2, w2));

  const auto g4 = aut_group(with(with(rat(), {-2, 0, 1}), {-3, 0, 1}));
  const auto w4 = dense_sequence(g4, 6);
  CHECK(w4.bound.back() == 4);
  CHECK(check_dense(g4, w4));
  const auto g1 = aut_group(rat());
  CHECK(dense_sequence(g1, 3).sequence.size() == 1);

  const auto t = subgroup_tree(g4, {1}, 6);
  CHECK(t.members.size() == 2);
  CHECK(t.levels[0].size() == 1);
  CHECK(t.levels.back().size() == 2);
}
