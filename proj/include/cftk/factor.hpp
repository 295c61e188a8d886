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

#ifndef CFTK_FACTOR_HPP
#define CFTK_FACTOR_HPP

#include <string>
#include <utility>
#include <vector>

#include "cftk/qpoly.hpp"
#include "cftk/tower.hpp"

namespace cftk {

struct KFactorization {
  Elem unit;
  /// Monic irreducible factors with multiplicities, canonical order.
  std::vector<std::pair<KPoly, int>> factors;

  bool irreducible() const { return factors.size() == 1 && factors[0].second == 1; }
};

/// Complete factorization of f over level `level` of T. Supported: Q and
/// finite fields directly; number-field towers over Q in general; other
/// towers when f is a quadratic, a binomial x^(2^k) - a, or a Kummer cubic.
KFactorization factor_over(const Tower& T, std::size_t level, const KPoly& f);
inline KFactorization factor_over(const Tower& T, const KPoly& f) { return factor_over(T, T.height(), f); }

/// The roots of f lying in the level, canonical order.
std::vector<Elem> roots_in(const Tower& T, std::size_t level, const KPoly& f);
inline std::vector<Elem> roots_in(const Tower& T, const KPoly& f) { return roots_in(T, T.height(), f); }

/// A square root of a in the level, if one exists.
bool tower_sqrt(const Tower& T, std::size_t level, const Elem& a, Elem& root);

/// t with one more stage defined by m, which must be irreducible over t.
/// Throws ReduciblePolynomial with a nontrivial factor as detail otherwise.
TowerPtr adjoin(const TowerPtr& t, const KPoly& m, const std::string& name = "");

/// Base-field polynomial helpers.
KPoly kpoly_from_q(const Tower& T, std::size_t level, const QPoly& p);
/// Succeeds iff every coefficient lies in the rational base.
bool kpoly_to_q(const Tower& T, const KPoly& p, QPoly& out);

/// Readable forms using the stage names, e.g. "x^2-a0" or "a0*a1+1/2".
std::string format_elem(const Tower& T, const Elem& e);
std::string format_kpoly(const Tower& T, const KPoly& p, const std::string& var = "x");

}  // namespace cftk

#endif  // CFTK_FACTOR_HPP
