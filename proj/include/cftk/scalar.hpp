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

#ifndef CFTK_SCALAR_HPP
#define CFTK_SCALAR_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "cftk/finite_field.hpp"

namespace cftk {

using Rational = mpq_class;
using Integer = mpz_class;

class Scalar;

/// Element of GF(q)(t): numerator over a monic denominator, coprime.
struct RatFunc {
  FqPoly num;
  FqPoly den{1};
};

/// A base field: Q, GF(p), GF(p^k) or a rational function field over a
/// finite field. Instances are interned; compare them by address.
class BaseField {
 public:
  enum class Kind { Rational, Finite, Function };

  Kind kind() const { return kind_; }
  const std::string& descriptor() const { return descriptor_; }
  std::uint64_t characteristic() const;
  /// The finite field itself (Finite) or the constant field (Function).
  const FiniteField& finite() const { return *ff_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_rational(const Rational& q) const;
  Scalar parse(const std::string& text) const;

  static const BaseField* get(const std::string& descriptor);

 private:
  BaseField() = default;
  Kind kind_ = Kind::Rational;
  std::string descriptor_;
  std::unique_ptr<FiniteField> ff_;
};

inline const BaseField* rationals() { return BaseField::get("Q"); }

/// The first monic irreducible polynomial of degree k over GF(p) in
/// canonical order; the modulus used for GF(p^k).
FqPoly canonical_modulus(std::uint64_t p, unsigned k);

class Scalar {
 public:
  using Value = std::variant<Rational, std::uint64_t, RatFunc>;

  Scalar() : field_(rationals()), value_(Rational(0)) {}
  Scalar(const BaseField* field, Value value);
  explicit Scalar(const Rational& q) : field_(rationals()), value_(q) {}

  const BaseField* field() const { return field_; }
  const Value& value() const { return value_; }
  const Rational& rational() const { return std::get<Rational>(value_); }
  std::uint64_t code() const { return std::get<std::uint64_t>(value_); }
  const RatFunc& ratfunc() const { return std::get<RatFunc>(value_); }

  bool is_zero() const;
  bool is_one() const;
  Scalar inv() const;
  Scalar operator-() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);

  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b);
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  /// this += a * b, or this -= a * b when `negate` is set; in place for rationals.
  void add_mul(const Scalar& a, const Scalar& b, bool negate = false);

  std::string to_string() const;

 private:
  const BaseField* field_;
  Value value_;
};

/// Canonical total order on scalars of one field: rationals by value,
/// finite-field elements by code, rational functions by (num, den).
int compare(const Scalar& a, const Scalar& b);

/// Canonical order on polynomials: degree, then lexicographic from the constant term.
int compare_coeffs(const std::vector<Scalar>& a, const std::vector<Scalar>& b);

/// Exact square root within the base field, if any (characteristic != 2 for
/// function fields and Q; any q for finite fields).
bool base_sqrt(const Scalar& a, Scalar& root);

/// Monic irreducibles in canonical order. "rational-primes" (or "Q") yields
/// the constant polynomials 2, 3, 5, ...; finite fields use the polynomial order.
std::vector<std::vector<Scalar>> enumerate_irreducibles(const std::string& descriptor, std::size_t count);

/// Build a rational function over `field` from numerator/denominator, reducing.
Scalar make_ratfunc(const BaseField* field, FqPoly num, FqPoly den);

}  // namespace cftk

#endif  // CFTK_SCALAR_HPP
