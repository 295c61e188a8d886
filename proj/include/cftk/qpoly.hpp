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

#ifndef CFTK_QPOLY_HPP
#define CFTK_QPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "cftk/scalar.hpp"

namespace cftk {

/// Dense polynomial over Q, constant term first, no trailing zeros.
using QPoly = std::vector<Rational>;
/// Dense polynomial over Z, same conventions.
using ZPoly = std::vector<Integer>;

namespace qp {

void trim(QPoly& a);
void trim(ZPoly& a);
inline int deg(const QPoly& a) { return static_cast<int>(a.size()) - 1; }
inline int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }
inline bool is_zero(const QPoly& a) { return a.empty(); }

QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const Rational& c);
QPoly neg(const QPoly& a);
void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);
QPoly rem(const QPoly& a, const QPoly& b);
QPoly quo(const QPoly& a, const QPoly& b);
QPoly monic(const QPoly& a);
QPoly gcd(QPoly a, QPoly b);
QPoly derivative(const QPoly& a);
QPoly pow(const QPoly& a, unsigned e);
Rational eval(const QPoly& a, const Rational& x);
/// p(c*x)
QPoly scale_var(const QPoly& a, const Rational& c);
/// p(x + c)
QPoly shift(const QPoly& a, const Rational& c);
/// x^deg * p(1/x)
QPoly reverse(const QPoly& a);
/// p(-x)
QPoly negate_var(const QPoly& a);

QPoly from_ints(std::initializer_list<long> coeffs);
QPoly from_z(const ZPoly& a);
/// Content-free integer multiple with positive leading coefficient.
ZPoly primitive_part(const QPoly& a);
Integer content(const ZPoly& a);

/// Squarefree decomposition of a monic polynomial: (factor, multiplicity).
std::vector<std::pair<QPoly, int>> squarefree(const QPoly& a);
QPoly squarefree_part(const QPoly& a);

/// Res(f, g) by the Euclidean recurrence.
Rational resultant(const QPoly& f, const QPoly& g);

/// Newton interpolation through (xs[i], ys[i]).
QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// Canonical order: degree first, then lexicographic by value from the constant term.
int compare(const QPoly& a, const QPoly& b);

/// Human-readable form such as "x^3-2".
std::string to_string(const QPoly& a, const std::string& var = "x");

}  // namespace qp

struct QFactorization {
  Rational unit;
  std::vector<std::pair<QPoly, int>> factors;
};

/// Complete factorization over Q into monic irreducibles, canonical order.
QFactorization factor_rational(const QPoly& f);

/// Irreducible factors of a squarefree primitive integer polynomial with
/// positive leading coefficient (Zassenhaus: modular factoring, Hensel
/// lifting, subset recombination). Returned as primitive integer polys.
std::vector<ZPoly> zassenhaus(const ZPoly& f);

bool is_irreducible_rational(const QPoly& f);

/// Sturm sequence of p.
std::vector<QPoly> sturm_sequence(const QPoly& p);
/// Sign variations of a Sturm-type sequence at x.
int sign_variations(const std::vector<QPoly>& seq, const Rational& x);
/// Number of distinct real roots in (a, b].
int count_real_roots(const std::vector<QPoly>& sturm, const Rational& a, const Rational& b);
/// Bound on the modulus of every complex root.
Rational root_bound(const QPoly& p);

}  // namespace cftk

#endif  // CFTK_QPOLY_HPP
