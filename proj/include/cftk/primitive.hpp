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

#ifndef CFTK_PRIMITIVE_HPP
#define CFTK_PRIMITIVE_HPP

#include <memory>
#include <vector>

#include "cftk/linalg.hpp"
#include "cftk/tower.hpp"

namespace cftk {

/// Monic minimal polynomial over the base of a level-`level` element,
/// by the first linear dependency among its powers.
std::vector<Scalar> minpoly_over_base(const Tower& T, std::size_t level, const Elem& a);

/// Minimal polynomial of `a` over the subfield spanned (over the base) by
/// `subfield_basis`, a basis of a subfield of the same level. Coefficients
/// are returned as elements of the level.
KPoly minpoly_over_subfield(const Tower& T, std::size_t level, const Elem& a,
                            const std::vector<Elem>& subfield_basis);

struct PrimitiveElement {
  Elem gamma;                   ///< at the requested level
  std::vector<long> weights;    ///< gamma = sum weights[i] * gen_i
  std::vector<Scalar> minpoly;  ///< over the base, monic, degree = dim(level)
};

/// gamma = sum c_i gen_i with c_0 = 1 and (c_1, ...) the first weight vector,
/// by maximum entry then lexicographically, whose minimal polynomial has
/// full degree.
PrimitiveElement primitive_element(const Tower& T, std::size_t level);
inline PrimitiveElement primitive_element(const Tower& T) { return primitive_element(T, T.height()); }

/// A level presented as base[y]/(M(y)) through its primitive element.
class Flattening {
 public:
  Flattening(const Tower& T, std::size_t level);

  const PrimitiveElement& primitive() const { return prim_; }
  std::size_t degree() const { return powers_.size(); }
  /// Coefficients h with e = sum h_j gamma^j.
  std::vector<Scalar> to_power_basis(const Elem& e) const;
  Elem from_power_basis(const std::vector<Scalar>& h) const;

 private:
  PrimitiveElement prim_;
  std::vector<Elem> powers_;
  Echelon echelon_;
};

/// Cached flattening of a tower level (keyed by the tower's structure).
std::shared_ptr<const Flattening> flatten(const Tower& T, std::size_t level);

}  // namespace cftk

#endif  // CFTK_PRIMITIVE_HPP
