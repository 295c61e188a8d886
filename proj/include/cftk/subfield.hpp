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

#ifndef CFTK_SUBFIELD_HPP
#define CFTK_SUBFIELD_HPP

#include <optional>
#include <string>
#include <vector>

#include "cftk/linalg.hpp"
#include "cftk/tower.hpp"

namespace cftk {

/// Vector-space model of the subfield of an ambient tower generated over the
/// base by a list of elements. The basis consists of generator monomials,
/// ordered with the first kept generator varying fastest.
class SubfieldSpan {
 public:
  SubfieldSpan(TowerPtr ambient, std::vector<Elem> generators);

  const Tower& ambient() const { return *ambient_; }
  const std::vector<Elem>& generators() const { return gens_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Elem>& basis() const { return basis_; }
  /// Exponent vector (one entry per listed generator) of each basis monomial.
  const std::vector<std::vector<unsigned>>& exponents() const { return exps_; }
  /// Generators that enlarged the span, with their relative degrees.
  const std::vector<std::size_t>& kept() const { return kept_; }
  const std::vector<unsigned>& relative_degrees() const { return rel_deg_; }

  /// Coordinates of x over basis(), or nothing if x lies outside the subfield.
  std::optional<std::vector<Scalar>> express(const Elem& x) const { return echelon_.express(x); }
  Elem combine(const std::vector<Scalar>& coords) const;

 private:
  TowerPtr ambient_;
  std::vector<Elem> gens_;
  std::vector<Elem> basis_;
  std::vector<std::vector<unsigned>> exps_;
  std::vector<std::size_t> kept_;
  std::vector<unsigned> rel_deg_;
  Echelon echelon_;
};

struct MemberTerm {
  Scalar coeff;
  std::vector<unsigned> exponents;
};

struct Membership {
  bool member = false;
  std::vector<MemberTerm> expression;
};

Membership member(const TowerPtr& ambient, const Elem& candidate, const std::vector<Elem>& generators);

struct Transport {
  TowerPtr tower;
  /// tau: images in the ambient tower of the new tower's stage generators.
  std::vector<Elem> images;
  /// Index of the listed generator each stage came from.
  std::vector<std::size_t> sources;
  /// Each listed generator expressed as an element of the new tower.
  std::vector<Elem> preimages;
  /// Ambient images of the new tower's coordinate basis.
  std::vector<Elem> basis;
  std::size_t homomorphism_checks = 0;
  bool verified = false;
};

Transport transport(const TowerPtr& ambient, const std::vector<Elem>& generators);

/// Image under tau of an element of the transported tower.
Elem apply_transport(const Transport& tr, const Elem& x);

struct CubeRootReport {
  bool independent = false;
  TowerPtr tower;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  std::vector<std::string> basis;
};

/// Builds GF(4)(t)(r_0, ..., r_n) with r_i^3 = primes[i] and checks that the
/// 3^(n+1) monomials in the r_i are linearly independent over GF(4)(t).
CubeRootReport cube_root_basis_check(const std::vector<FqPoly>& primes);

}  // namespace cftk

#endif  // CFTK_SUBFIELD_HPP
