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
#include "cftk/factor.hpp"
#include "cftk/witness.hpp"
#include "doctest.h"

using namespace cftk;

namespace {

bool has(const std::vector<std::size_t>& v, std::size_t x) { return std::find(v.begin(), v.end(), x) != v.end(); }

int sign_of(const SeparationCertificate& c, std::size_t k) {
  for (const auto& e : c.evidence)
    if (e.k == k) return e.image_sign;
  return 0;
}

}  // namespace

TEST_CASE("pairing") {
  CHECK(pair_code(0, 0) == 0);
  CHECK(pair_code(0, 1) == 1);
  CHECK(pair_code(1, 0) == 2);
  CHECK_FALSE(unpair(3).has_value());
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) CHECK(unpair(pair_code(i, j)) == std::make_pair(i, j));
}

TEST_CASE("diamond witness") {
  const auto c = diamond_witness({1, 3}, {2, 4});
  CHECK(c.valid());
  CHECK(c.homomorphism_checked);
  CHECK(has(c.S, 1));
  CHECK(has(c.S, 3));
  CHECK(sign_of(c, 2) == -1);
  CHECK(sign_of(c, 4) == -1);
  const Tower& T = *c.tower;
  CHECK(c.map->images[0] == T.neg(T.gen_top(0)));

  const auto one = diamond_witness({1}, {});
  CHECK(one.valid());
  CHECK(one.S == std::vector<std::size_t>{1});

  try {
    diamond_witness({1}, {1});
    FAIL("expected OverlappingRanges");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OverlappingRanges);
  }
  CHECK_THROWS_AS(diamond_witness({0}, {}), Error);
}

TEST_CASE("quartic witness") {
  const auto r = quartic_witness({1}, {2});
  CHECK(r.certificate.valid());
  CHECK(r.certificate.homomorphism_checked);
  CHECK(has(r.certificate.S, 1));
  CHECK_FALSE(has(r.certificate.S, 2));
  CHECK(r.non_automorphism);
  CHECK(r.squares_to_conjugate);
  const auto empty = quartic_witness({}, {});
  CHECK(empty.certificate.valid());
  CHECK(empty.non_automorphism);
}

TEST_CASE("characteristic p witness") {
  const auto c = charp_witness(3, {1}, {2});
  CHECK(c.valid());
  CHECK(c.homomorphism_checked);
  CHECK(has(c.S, 1));
  CHECK_FALSE(has(c.S, 2));
  const auto d = charp_witness(3, {}, {1});
  CHECK(sign_of(d, 1) == -1);
  CHECK_THROWS_AS(charp_witness(2, {1}, {2}), Error);
}

TEST_CASE("mn witness") {
  const auto one = mn_witness({}, {}, 1);
  REQUIRE(one.stages.size() == 1);
  CHECK(one.stages[0].degree == 2);
  CHECK(format_kpoly(*one.tower, one.tower->stage(0).minpoly) == "x^2-2");

  const auto two = mn_witness({}, {}, 2);
  CHECK(two.stages[1].source == "3");
  CHECK(two.stages[1].degree == 2);
  CHECK(two.basis_rank == 4);

  const auto r = mn_witness({1}, {2}, 3);
  CHECK(r.certificate.valid());
  CHECK(r.certificate.homomorphism_checked);
  CHECK(has(r.certificate.S, 1));
  CHECK_FALSE(has(r.certificate.S, 2));
  CHECK(r.basis_rank == r.tower->degree());

  const auto wide = mn_witness({1}, {2}, 6);
  CHECK(wide.certificate.valid());
  CHECK(wide.undecided.empty());
  CHECK(sign_of(wide.certificate, 2) == -1);
  CHECK_THROWS_AS(mn_witness({}, {}, 12, 64), Error);
}

TEST_CASE("root modulus witness") {
  const auto r = aca_root_modulus_witness({2, 5}, 6);
  CHECK(r.agrees());
  CHECK_FALSE(r.probes[2].roots.empty());
  CHECK(r.probes[3].roots.empty());
  CHECK_FALSE(r.probes[5].roots.empty());
  const auto e = aca_root_modulus_witness({}, 4);
  CHECK(e.agrees());
  for (const auto& p : e.probes) CHECK(p.roots.empty());
  const auto s = aca_root_modulus_witness({1}, 1);
  CHECK(s.probes[1].roots.size() == 2);
}

TEST_CASE("tower2 witness at the first odd prime") {
  const auto out = tower2_witness({}, 1);
  REQUIRE(out.probes.size() == 1);
  CHECK_FALSE(out.probes[0].real);
  CHECK(out.probes[0].roots_in_j == 1);
  CHECK(out.matches);
  const auto in = tower2_witness({0}, 1);
  CHECK(in.probes[0].real);
  CHECK(in.matches);
  CHECK_THROWS_AS(tower2_witness({1}, 2), Error);
}

TEST_CASE("roth suites") {
  const auto q = base_primes(rationals(), 4);
  CHECK(roth_suite(rationals(), q, 3, false).passed());
  CHECK(roth_suite(rationals(), q, 3, true).passed());
  const BaseField* K = BaseField::get("RatFunc:3");
  const auto t = base_primes(K, 3);
  CHECK(t[0].to_string() == "[0,1]");
  CHECK(roth_suite(K, t, 3, false).passed());
  CHECK_THROWS_AS(roth_membership(rationals(), {}, {rationals()->from_int(2), rationals()->from_int(2)}, false), Error);
  CHECK(roth_membership(rationals(), {rationals()->from_int(2)}, {rationals()->from_int(3)}, false).member == false);
}
