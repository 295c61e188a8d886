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

#ifndef CFTK_TOWER_HPP
#define CFTK_TOWER_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "cftk/scalar.hpp"

namespace cftk {

/// Coordinates of a tower element over the base field in the product basis
/// prod_i gen_i^{e_i}; the lowest stage varies fastest.
using Elem = std::vector<Scalar>;

/// Polynomial whose coefficients are elements of one tower level, constant first.
using KPoly = std::vector<Elem>;

struct Stage {
  std::string name;
  /// Monic, over the level below this stage.
  KPoly minpoly;
  unsigned degree = 0;
};

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

/// A base field together with a finite chain of simple extensions. Level k
/// is the field after the first k stages; level 0 is the base. Towers are
/// immutable once built.
class Tower : public std::enable_shared_from_this<Tower> {
 public:
  static TowerPtr make(const BaseField* base);
  static TowerPtr make(const BaseField* base, std::vector<Stage> stages);

  const BaseField* base() const { return base_; }
  std::size_t height() const { return stages_.size(); }
  const std::vector<Stage>& stages() const { return stages_; }
  const Stage& stage(std::size_t i) const { return stages_.at(i); }
  /// Dimension of level k over the base.
  std::size_t dim(std::size_t level) const { return dims_.at(level); }
  std::size_t degree() const { return dims_.back(); }
  TowerPtr prefix(std::size_t level) const;
  /// A tower with one more stage; no irreducibility check (see adjoin()).
  TowerPtr extend_unchecked(Stage stage) const;
  std::uint64_t characteristic() const { return base_->characteristic(); }

  Elem zero(std::size_t level) const;
  Elem one(std::size_t level) const;
  Elem from_scalar(std::size_t level, const Scalar& s) const;
  Elem from_int(std::size_t level, long long v) const { return from_scalar(level, base_->from_int(v)); }
  /// Generator of stage i as an element of level i+1.
  Elem gen(std::size_t stage) const;
  /// Generator of stage i as an element of the top level.
  Elem gen_top(std::size_t stage) const { return lift(gen(stage), stage + 1, height()); }
  /// Embed a level-`from` element into level `to` >= from.
  Elem lift(const Elem& a, std::size_t from, std::size_t to) const;
  /// Inverse of lift: succeeds iff a lies in level `to`.
  bool lower(const Elem& a, std::size_t from, std::size_t to, Elem& out) const;

  static bool is_zero(const Elem& a);
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem scale(const Elem& a, const Scalar& s) const;
  Elem mul(std::size_t level, const Elem& a, const Elem& b) const;
  Elem inv(std::size_t level, const Elem& a) const;
  Elem div(std::size_t level, const Elem& a, const Elem& b) const { return mul(level, a, inv(level, b)); }
  Elem pow(std::size_t level, const Elem& a, unsigned e) const;
  Elem mul(const Elem& a, const Elem& b) const { return mul(height(), a, b); }
  Elem inv(const Elem& a) const { return inv(height(), a); }

  /// True when the element lies in the base field.
  bool is_base(const Elem& a) const;

  std::string describe() const;

 private:
  /// out += a * b (or -= when negate), all three spans of dim(level) scalars.
  void mul_into(std::size_t level, const Scalar* a, const Scalar* b, Scalar* out, bool negate) const;

  explicit Tower(const BaseField* base) : base_(base) { dims_.push_back(1); }

  const BaseField* base_;
  std::vector<Stage> stages_;
  std::vector<std::size_t> dims_;
};

/// Canonical order on elements: lexicographic on coordinates.
int compare_elems(const Elem& a, const Elem& b);
/// Canonical order on polynomials over a level: degree, then lexicographic.
int compare_kpolys(const KPoly& a, const KPoly& b);

/// Polynomial arithmetic over a tower level.
namespace kp {

void trim(KPoly& a);
inline int deg(const KPoly& a) { return static_cast<int>(a.size()) - 1; }
KPoly add(const Tower& T, const KPoly& a, const KPoly& b);
KPoly sub(const Tower& T, const KPoly& a, const KPoly& b);
KPoly mul(const Tower& T, std::size_t level, const KPoly& a, const KPoly& b);
KPoly scale(const Tower& T, std::size_t level, const KPoly& a, const Elem& c);
void divmod(const Tower& T, std::size_t level, const KPoly& a, const KPoly& b, KPoly& quot, KPoly& rem);
KPoly rem(const Tower& T, std::size_t level, const KPoly& a, const KPoly& b);
KPoly quo(const Tower& T, std::size_t level, const KPoly& a, const KPoly& b);
KPoly monic(const Tower& T, std::size_t level, const KPoly& a);
KPoly gcd(const Tower& T, std::size_t level, KPoly a, KPoly b);
KPoly derivative(const Tower& T, const KPoly& a);
Elem eval(const Tower& T, std::size_t level, const KPoly& a, const Elem& x);
/// a(x + c)
KPoly shift(const Tower& T, std::size_t level, const KPoly& a, const Elem& c);
/// Move every coefficient from level `from` to level `to`.
KPoly lift(const Tower& T, const KPoly& a, std::size_t from, std::size_t to);
/// Base-field polynomial as a polynomial over a level.
KPoly from_base(const Tower& T, std::size_t level, const std::vector<Scalar>& coeffs);
/// x - r
KPoly linear(const Tower& T, std::size_t level, const Elem& r);
/// Yun squarefree decomposition (characteristic zero or degree below p).
std::vector<std::pair<KPoly, int>> squarefree(const Tower& T, std::size_t level, const KPoly& a);

}  // namespace kp

}  // namespace cftk

#endif  // CFTK_TOWER_HPP
