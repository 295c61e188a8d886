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

#include "cftk/qpoly.hpp"
#include "oracles.hpp"

using namespace cftk;

namespace {

std::vector<ZPoly> library_factors(const ZPoly& f) {
  auto fac = factor_rational(qp::from_z(f));
  std::vector<ZPoly> out;
  for (auto& [g, m] : fac.factors)
    for (int i = 0; i < m; ++i) out.push_back(qp::primitive_part(g));
  std::sort(out.begin(), out.end(), [](const ZPoly& a, const ZPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return out;
}

}  // namespace

TEST_CASE("basic polynomial arithmetic over Q") {
  CHECK(qp::gcd(qp::from_ints({-1, 0, 1}), qp::from_ints({1, -2, 1})) == qp::from_ints({-1, 1}));
  QPoly q, r;
  qp::divmod(qp::from_ints({1, 0, 1}), qp::from_ints({-1, 1}), q, r);
  CHECK(q == qp::from_ints({1, 1}));
  CHECK(r == qp::from_ints({2}));
  CHECK(qp::to_string(qp::from_ints({-2, 0, 0, 1})) == "x^3-2");
  CHECK(qp::to_string(qp::from_ints({1, -1, 0, 2})) == "2*x^3-x+1");
}

TEST_CASE("factoring over Q") {
  CHECK(is_irreducible_rational(qp::from_ints({-2, 0, 0, 0, 1})));
  auto fac = factor_rational(qp::from_ints({-4, 0, 1}));
  REQUIRE(fac.factors.size() == 2);
  CHECK(fac.factors[0].first == qp::from_ints({-2, 1}));
  CHECK(fac.factors[1].first == qp::from_ints({2, 1}));
  // x^4 + 4 = (x^2 - 2x + 2)(x^2 + 2x + 2)
  fac = factor_rational(qp::from_ints({4, 0, 0, 0, 1}));
  CHECK(fac.factors.size() == 2);
  // Swinnerton-Dyer polynomial for sqrt2, sqrt3, sqrt5 is irreducible
  QPoly sd = qp::from_ints({576, 0, -960, 0, 352, 0, -40, 0, 1});
  CHECK(is_irreducible_rational(sd));
  // repeated factors and a unit
  fac = factor_rational(qp::scale(qp::mul(qp::pow(qp::from_ints({1, 1}), 3), qp::from_ints({0, 1})), Rational(3)));
  CHECK(fac.unit == 3);
  REQUIRE(fac.factors.size() == 2);
  CHECK(fac.factors[0].first == qp::from_ints({0, 1}));
  CHECK(fac.factors[1].second == 3);
}

TEST_CASE("factoring agrees with the Kronecker oracle") {
  const auto corpus = oracle::factor_corpus(120);
  for (const auto& f : corpus) {
    INFO(qp::to_string(qp::from_z(f)));
    CHECK(library_factors(f) == oracle::kronecker_factor(f));
  }
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    QPoly f, g;
    const int m = 1 + static_cast<int>(rng() % 5), n = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i <= m; ++i) f.emplace_back(static_cast<long>(rng() % 11) - 5);
    for (int i = 0; i <= n; ++i) g.emplace_back(static_cast<long>(rng() % 11) - 5);
    if (f.back() == 0) f.back() = 1;
    if (g.back() == 0) g.back() = -2;
    CHECK(qp::resultant(f, g) == oracle::sylvester_resultant(f, g));
  }
}

TEST_CASE("Sturm counts real roots") {
  const QPoly p = qp::from_ints({-2, 0, 1});
  const auto s = sturm_sequence(p);
  CHECK(count_real_roots(s, Rational(-10), Rational(10)) == 2);
  CHECK(count_real_roots(s, Rational(0), Rational(10)) == 1);
  CHECK(count_real_roots(sturm_sequence(qp::from_ints({1, 0, 1})), Rational(-10), Rational(10)) == 0);
}

TEST_CASE("finite field factoring agrees with trial division") {
  std::mt19937_64 rng(5);
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3}, {3, 2}}) {
    const FiniteField F = k == 1 ? FiniteField(p) : FiniteField(p, k, canonical_modulus(p, k));
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 6);
      FqPoly f(static_cast<std::size_t>(n + 1));
      for (auto& c : f) c = rng() % F.order();
      f.back() = 1;
      std::vector<FqPoly> mine;
      for (auto& [g, e] : fq::factor(F, f))
        for (int i = 0; i < e; ++i) mine.push_back(g);
      CHECK(mine == oracle::trial_division_factor(F, f));
      bool irr = oracle::trial_division_factor(F, f).size() == 1;
      CHECK(fq::is_irreducible(F, f) == irr);
    }
  }
  // (x+1)^2 over GF(2)
  const FiniteField F2(2);
  CHECK(fq::mul(F2, FqPoly{1, 1}, FqPoly{1, 1}) == FqPoly{1, 0, 1});
}
