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

#ifndef CFTK_GALOIS_HPP
#define CFTK_GALOIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "cftk/embed.hpp"

namespace cftk {

/// Automorphisms of a finite tower fixing its first `base_level` levels.
/// The identity comes first; the rest follow the search order.
struct AutGroup {
  TowerPtr field;
  std::size_t base_level = 0;
  std::vector<Embedding> elements;
  /// table[a][b] is the index of a after b.
  std::vector<std::vector<std::size_t>> table;
  std::vector<std::size_t> inverse;

  std::size_t order() const { return elements.size(); }
  bool abelian() const;
  std::optional<std::size_t> find(const Embedding& e) const;
  /// Closure of the given elements under the group law, as sorted indices.
  std::vector<std::size_t> generated(const std::vector<std::size_t>& gens) const;
};

AutGroup aut_group(const TowerPtr& field, std::size_t base_level = 0);

/// Minimal polynomial of a top-level element over level `level`, with
/// coefficients in that level.
KPoly minpoly_over_level(const Tower& T, std::size_t level, const Elem& a);

enum class NormalCheck { N1, N2, N3, N4, Gal };

std::string to_string(NormalCheck which);
NormalCheck parse_normal_check(const std::string& text);

struct NormalReport {
  NormalCheck which = NormalCheck::N1;
  bool holds = false;
  /// Failing polynomial, moved element or non-automorphism, in text form.
  std::string certificate;
  /// The polynomial list that was examined (n1, n2).
  std::vector<std::string> polynomials;
  /// A witnessing embedding for n3 and n4 failures.
  std::optional<Embedding> embedding;
  std::size_t closure_degree = 0;
  std::size_t maps_checked = 0;
};

/// A tower containing the field and every conjugate of it over the base,
/// followed by `stages` further stages split off the canonical enumeration
/// of integer polynomials (over Q only).
struct ClosureTower {
  TowerPtr tower;
  std::size_t field_height = 0;
  /// Height after the conjugates have been adjoined.
  std::size_t normal_height = 0;
  std::vector<std::vector<Scalar>> stage_polys;
};

ClosureTower closure_tower(const TowerPtr& field, std::size_t base_level, std::size_t stages);

NormalReport check_normal(const TowerPtr& field, std::size_t base_level, NormalCheck which, std::size_t stages = 1);

/// Subfield of the ambient tower given by a basis over the base field.
struct IntermediateField {
  std::vector<Elem> basis;
  /// Generators over the base sub-tower, in discovery order.
  std::vector<Elem> generators;
  std::size_t dimension() const { return basis.size(); }
};

IntermediateField fixed_field(const TowerPtr& field, const std::vector<Embedding>& group, std::size_t base_level = 0);
/// Whether every element of `small` lies in `big`.
bool field_contains(const TowerPtr& field, const IntermediateField& big, const IntermediateField& small);

struct Subgroup {
  std::vector<std::size_t> elements;
  std::vector<std::size_t> generators;
};

/// All subgroups, ordered by size and then by element list.
std::vector<Subgroup> all_subgroups(const AutGroup& group);

struct GaloisCorrespondence {
  AutGroup group;
  std::vector<Subgroup> subgroups;
  /// fields[i] is the fixed field of subgroups[i].
  std::vector<IntermediateField> fields;
  /// Degree of each field over the base sub-tower.
  std::vector<std::size_t> field_degrees;
  /// Pairs (i, j) with subgroups[i] inside subgroups[j].
  std::vector<std::pair<std::size_t, std::size_t>> subgroup_inclusions;
  /// Pairs (i, j) with fields[i] inside fields[j].
  std::vector<std::pair<std::size_t, std::size_t>> field_inclusions;
  bool fields_distinct = false;
  bool mutually_inverse = false;
  bool inclusion_reversing = false;
  bool degree_formula = false;
  bool verified() const { return fields_distinct && mutually_inverse && inclusion_reversing && degree_formula; }
};

GaloisCorrespondence galois_correspondence(const TowerPtr& field, std::size_t base_level = 0);

struct RestrictionReport {
  std::size_t field_order = 0;
  /// |Aut(L/F)| computed on a transported copy of L.
  std::size_t sub_order = 0;
  /// For each element of Aut(K/F), the index of its restriction class.
  std::vector<std::size_t> restriction;
  std::size_t image_size = 0;
  std::vector<std::size_t> kernel;
  bool kernel_is_fixer = false;
  bool surjective = false;
  bool kernel_normal = false;
};

/// Restriction Aut(K/F) -> Aut(L/F) for the subfield L generated over the
/// base sub-tower by `sub_generators`. Throws NotStable if some automorphism
/// moves L off itself.
RestrictionReport restriction_hom(const AutGroup& group, const std::vector<Elem>& sub_generators);

/// Canonical enumeration of the elements of a tower: coordinate vectors
/// ordered by total height, then colexicographically. Over Q the scalar
/// order is 0, 1, -1, 2, -2, 1/2, -1/2, 3, ...; over finite fields it is by code.
class ElementEnumeration {
 public:
  explicit ElementEnumeration(TowerPtr tower) : tower_(std::move(tower)) {}
  const Elem& at(std::size_t index);
  /// Number of elements listed before every basis vector has appeared.
  std::size_t basis_cover() const { return 1 + tower_->degree() * (tower_->base()->kind() == BaseField::Kind::Rational ? 2 : 1); }

 private:
  void next_tier();
  TowerPtr tower_;
  std::vector<Elem> list_;
  unsigned tier_ = 0;
};

/// Exponent n of d(phi, psi) = 2^-n, or nothing when the maps are equal.
std::optional<std::size_t> aut_distance(const Embedding& phi, const Embedding& psi);
std::optional<std::size_t> aut_distance(const Embedding& phi, const Embedding& psi, ElementEnumeration& en);

/// Pairwise distance exponents for a group.
std::vector<std::vector<std::optional<std::size_t>>> distance_table(const AutGroup& group);

struct SeparabilityWitness {
  /// Indices into the group, a dense prefix of the automorphisms.
  std::vector<std::size_t> sequence;
  /// bound[n]: every automorphism is within 2^-n of sequence[i] for some i < bound[n].
  std::vector<std::size_t> bound;
};

SeparabilityWitness dense_sequence(const AutGroup& group, std::size_t stages);
bool check_dense(const AutGroup& group, const SeparabilityWitness& w);

/// Levels of distinct automorphism prefixes of the subgroup generated by
/// `generators`: level n holds one representative per class of elements
/// agreeing on the first n enumerated elements and their inverses.
struct SubgroupTree {
  std::vector<std::size_t> members;
  std::vector<std::vector<std::size_t>> levels;
};

SubgroupTree subgroup_tree(const AutGroup& group, const std::vector<std::size_t>& generators, std::size_t depth);

}  // namespace cftk

#endif  // CFTK_GALOIS_HPP
