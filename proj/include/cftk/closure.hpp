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

#ifndef CFTK_CLOSURE_HPP
#define CFTK_CLOSURE_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cftk/primitive.hpp"
#include "cftk/qpoly.hpp"
#include "cftk/tower.hpp"

namespace cftk {

struct Interval {
  Rational lo, hi;
  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// Axis-parallel rectangle with rational corners. Real roots carry the
/// degenerate imaginary interval [0, 0].
struct Box {
  Interval re, im;
};

bool intersects(const Interval& a, const Interval& b);
bool intersects(const Box& a, const Box& b);

class RootSet;

/// A complex algebraic number: an irreducible minimal polynomial over Q and
/// the index of the root in the canonical order of its roots.
class AlgebraicNumber {
 public:
  AlgebraicNumber();  // zero
  static AlgebraicNumber from_rational(const Rational& q);
  /// All roots of the nonzero polynomial p, without repetition, in canonical order.
  static std::vector<AlgebraicNumber> roots_of(const QPoly& p);

  const QPoly& minpoly() const;
  std::size_t index() const { return index_; }
  std::size_t degree() const;
  /// A box around the number whose sides are at most `width`.
  Box box(const Rational& width) const;
  Box box() const;
  bool is_real() const;
  bool is_rational() const { return degree() == 1; }
  Rational rational() const;
  AlgebraicNumber conjugate() const;
  std::string to_string() const;

  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return a.set_ == b.set_ && a.index_ == b.index_;
  }
  friend bool operator!=(const AlgebraicNumber& a, const AlgebraicNumber& b) { return !(a == b); }

 private:
  AlgebraicNumber(std::shared_ptr<RootSet> set, std::size_t index) : set_(std::move(set)), index_(index) {}
  friend class RootSet;
  friend int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber select_root(const std::vector<QPoly>& candidates,
                                     const std::function<Box(const Rational&)>& enclosure);

  std::shared_ptr<RootSet> set_;
  std::size_t index_ = 0;
};

/// Canonical total order: real numbers first by value, then non-real ones
/// by real part and imaginary part.
int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);

enum class ArithOp { Add, Sub, Mul, Div };
AlgebraicNumber alg_arith(const AlgebraicNumber& a, const AlgebraicNumber& b, ArithOp op);
AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber operator-(const AlgebraicNumber& a);

/// Value of the polynomial h (rational coefficients) at x.
AlgebraicNumber evaluate(const QPoly& h, const AlgebraicNumber& x);

/// Picks the unique root among the roots of `candidates` lying in every
/// enclosure; enclosure(w) must contain the wanted value and shrink with w.
AlgebraicNumber select_root(const std::vector<QPoly>& candidates, const std::function<Box(const Rational&)>& enclosure);

struct RootSelector {
  enum class Kind { Index, RealPositive, Real, Upper, Primitive, Value } kind = Kind::Index;
  std::size_t index = 0;
  std::optional<AlgebraicNumber> value;

  /// "index:<k>", "real-positive", "real", "upper", "primitive" or "first".
  static RootSelector parse(const std::string& text);
  std::string to_string() const;
};

/// Applies the selector to a list of roots already in canonical order.
std::optional<std::size_t> apply_selector(const std::vector<AlgebraicNumber>& roots, const RootSelector& sel);

AlgebraicNumber designated_root(const QPoly& p, const RootSelector& sel);

/// A field embedding of a tower over Q into the algebraic closure.
class ClosureEmbedding {
 public:
  ClosureEmbedding(TowerPtr tower, AlgebraicNumber theta);

  const TowerPtr& tower() const { return tower_; }
  /// Image of the tower's primitive element.
  const AlgebraicNumber& theta() const { return theta_; }
  const std::vector<AlgebraicNumber>& generator_images() const { return gens_; }
  AlgebraicNumber image(const Elem& e) const;
  bool verified() const { return verified_; }

 private:
  TowerPtr tower_;
  std::shared_ptr<const Flattening> flat_;
  AlgebraicNumber theta_;
  std::vector<AlgebraicNumber> gens_;
  bool verified_ = false;
};

/// Embeds the tower by choosing, stage by stage, among the images of each
/// generator that are consistent with the earlier choices.
ClosureEmbedding embed_tower(const TowerPtr& t, const std::vector<RootSelector>& choices);
/// Every embedding of the tower into the closure, in canonical order of theta.
std::vector<ClosureEmbedding> all_closure_embeddings(const TowerPtr& t);

struct EnumeratedRoot {
  ZPoly poly;
  AlgebraicNumber root;
};

/// Stage n of the canonical enumeration: roots of irreducible primitive
/// integer polynomials with positive leading coefficient and
/// degree + height <= n + 1, ordered by (degree + height, degree, polynomial),
/// then by root order.
std::vector<EnumeratedRoot> closure_enumeration(unsigned stage);

/// Irreducible primitive integer polynomials with positive leading
/// coefficient and degree + height == weight, by degree and then canonically.
std::vector<ZPoly> integer_irreducibles_of_weight(unsigned weight);
/// The polynomials behind closure_enumeration(stage), in the same order.
std::vector<ZPoly> enumerate_integer_irreducibles(unsigned stage);

}  // namespace cftk

#endif  // CFTK_CLOSURE_HPP
