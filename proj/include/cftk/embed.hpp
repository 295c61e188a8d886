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

#ifndef CFTK_EMBED_HPP
#define CFTK_EMBED_HPP

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "cftk/tower.hpp"

namespace cftk {

/// A field homomorphism between towers over the same base field, given by
/// the images of the source generators in the top level of the target.
struct Embedding {
  TowerPtr source;
  TowerPtr target;
  std::vector<Elem> images;
};

Embedding identity_embedding(const TowerPtr& t);
/// Image of an element of the given source level.
Elem apply_to(const Embedding& e, const Elem& x, std::size_t level);
inline Elem apply_to(const Embedding& e, const Elem& x) { return apply_to(e, x, e.source->height()); }
/// Images of the coefficients of a polynomial over the given source level.
KPoly apply_poly(const Embedding& e, const KPoly& p, std::size_t level);
/// Exact check that every generator image is a root of the image of its stage polynomial.
bool verify(const Embedding& e);
/// True when the first `levels` generators are sent to the matching target generators.
bool fixes_prefix(const Embedding& e, std::size_t levels);
/// second after first.
Embedding compose(const Embedding& first, const Embedding& second);
/// Inverse of a bijective embedding (equal degrees).
Embedding inverse(const Embedding& e);
bool same_map(const Embedding& a, const Embedding& b);
/// Whether e maps every element into the first `level` levels of the target.
bool lands_in(const Embedding& e, std::size_t level);

/// Extension of an isomorphism: given tau from F to the tower G, an irreducible p
/// over F and a root beta of tau(p) in `target` (a tower extending G), returns
/// the embedding of F(alpha) = F[x]/(p) that extends tau and sends alpha to beta.
Embedding extend_iso_simple(const Embedding& tau, const KPoly& p, const TowerPtr& target, const Elem& beta);

class RootModulus {
 public:
  explicit RootModulus(TowerPtr target) : target_(std::move(target)) {}
  const TowerPtr& target() const { return target_; }
  /// Roots in the target of a polynomial over the base field.
  std::vector<Elem> roots(const std::vector<Scalar>& p) const;

 private:
  TowerPtr target_;
  mutable std::mutex mu_;
  mutable std::map<std::string, std::vector<Elem>> memo_;
};

struct EmbeddingBound {
  /// Candidate images of each source generator.
  std::vector<std::vector<Elem>> candidates;
  /// The annihilating polynomial used for each generator.
  std::vector<std::vector<Scalar>> polys;
};

EmbeddingBound bound_from_modulus(const RootModulus& r, const TowerPtr& source);

enum class SearchMode { First, All };

/// Depth-first search for embeddings source -> target that fix the first
/// `fixed` levels, which both towers must share.
std::vector<Embedding> search_embedding(const TowerPtr& source, const TowerPtr& target, const EmbeddingBound& bound,
                                        SearchMode mode, std::size_t fixed = 0);
std::vector<Embedding> search_embedding(const TowerPtr& source, const TowerPtr& target, SearchMode mode,
                                        std::size_t fixed = 0);

struct Isomorphism {
  Embedding forward;
  Embedding backward;
  /// Root counts of each source generator's minimal polynomial in both towers.
  std::vector<std::pair<std::size_t, std::size_t>> root_counts;
};

Isomorphism iso_from_mutual(const Embedding& e1, const Embedding& e2);

struct StagewiseExtension {
  TowerPtr tower;
  Embedding map;
  std::size_t original_height = 0;
  /// Polynomials over the base whose roots were adjoined, one per stage.
  std::vector<std::vector<Scalar>> stage_polys;
};

/// Splits `polys` in order (skipping those that already split) over the
/// source of phi, extending the automorphism phi stage by stage. With no
/// polynomials given, the first `stages` non-split polynomials of the
/// canonical integer-polynomial enumeration are used.
StagewiseExtension extend_to_closure_stagewise(const Embedding& phi, std::size_t stages,
                                               const std::vector<std::vector<Scalar>>& polys = {});

/// Adjoins all roots of p (over the base) to t.
TowerPtr splitting_tower(const TowerPtr& t, const std::vector<Scalar>& p, const std::string& prefix = "a");

}  // namespace cftk

#endif  // CFTK_EMBED_HPP
