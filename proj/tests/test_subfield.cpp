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

#include "cftk/error.hpp"
#include "cftk/factor.hpp"
#include "cftk/subfield.hpp"

using namespace cftk;

namespace {

TowerPtr sqrt_tower(const BaseField* K, const std::vector<Scalar>& radicands) {
  TowerPtr t = Tower::make(K);
  for (const auto& r : radicands) {
    const std::size_t L = t->height();
    t = adjoin(t, KPoly{t->from_scalar(L, -r), t->zero(L), t->one(L)});
  }
  return t;
}

std::vector<Scalar> ints(std::initializer_list<long> v) {
  std::vector<Scalar> out;
  for (long x : v) out.push_back(rationals()->from_int(x));
  return out;
}

Elem product_of(const Tower& T, const std::vector<std::size_t>& idx) {
  Elem e = T.one(T.height());
  for (auto i : idx) e = T.mul(e, T.gen_top(i));
  return e;
}

}  // namespace

TEST_CASE("membership examples") {
  auto t = sqrt_tower(rationals(), ints({2, 3, 5}));
  CHECK_FALSE(member(t, t->gen_top(0), {t->gen_top(1), t->gen_top(2)}).member);
  auto m = member(t, product_of(*t, {0, 1}), {t->gen_top(0), t->gen_top(1)});
  REQUIRE(m.member);
  REQUIRE(m.expression.size() == 1);
  CHECK(m.expression[0].coeff.is_one());
  CHECK(m.expression[0].exponents == std::vector<unsigned>{1, 1});

  const BaseField* K = BaseField::get("RatFunc:3");
  const Scalar tt = make_ratfunc(K, FqPoly{0, 1}, FqPoly{1});
  auto f = sqrt_tower(K, {tt, tt + K->one()});
  CHECK_FALSE(member(f, f->gen_top(1), {f->gen_top(0)}).member);
}

TEST_CASE("membership agrees with square classes over Q") {
  // sqrt(q1...qr) lies in Q(sqrt p1, ..., sqrt pn) exactly when the squarefree
  // part of q1...qr is a product of some of the p_i.
  const std::vector<long> primes{2, 3, 5, 7, 11};
  auto t = sqrt_tower(rationals(), ints({2, 3, 5, 7, 11}));
  for (unsigned gens = 0; gens < 32; ++gens) {
    std::vector<Elem> g;
    for (std::size_t i = 0; i < 5; ++i)
      if (gens >> i & 1) g.push_back(t->gen_top(i));
    for (unsigned cand = 1; cand < 32; cand += 3) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < 5; ++i)
        if (cand >> i & 1) idx.push_back(i);
      const bool expected = (cand & ~gens) == 0;
      CHECK(member(t, product_of(*t, idx), g).member == expected);
    }
  }
}

TEST_CASE("transport onto generated subfields") {
  auto t = sqrt_tower(rationals(), ints({2, 3}));
  auto tr = transport(t, {product_of(*t, {0, 1})});
  CHECK(tr.verified);
  REQUIRE(tr.tower->height() == 1);
  CHECK(format_kpoly(*tr.tower, tr.tower->stage(0).minpoly) == "x^2-6");
  CHECK(apply_transport(tr, tr.tower->gen_top(0)) == product_of(*t, {0, 1}));

  tr = transport(t, {t->one(2)});
  CHECK(tr.verified);
  CHECK(tr.tower->height() == 0);

  auto s = sqrt_tower(rationals(), ints({2}));
  const Elem root8 = s->scale(s->gen_top(0), rationals()->from_int(2));
  tr = transport(s, {s->gen_top(0), root8});
  CHECK(tr.verified);
  CHECK(tr.tower->degree() == 2);
  CHECK(tr.sources == std::vector<std::size_t>{0});

  auto big = sqrt_tower(rationals(), ints({2, 3, 5}));
  tr = transport(big, {big->add(big->gen_top(0), big->gen_top(1)), big->gen_top(2)});
  CHECK(tr.verified);
  CHECK(tr.tower->degree() == 8);
}

TEST_CASE("cube root bases over GF(4)(t)") {
  auto rep = cube_root_basis_check({FqPoly{0, 1}});
  CHECK(rep.independent);
  CHECK(rep.basis == std::vector<std::string>{"1", "r0", "r0^2"});
  rep = cube_root_basis_check({FqPoly{0, 1}, FqPoly{1, 1}});
  CHECK(rep.independent);
  CHECK(rep.rank == 9);
  try {
    cube_root_basis_check({FqPoly{0, 1}, FqPoly{0, 1}});
    FAIL("duplicate primes were accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DuplicatePrimes);
  }
}
