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

#ifndef CFTK_LINALG_HPP
#define CFTK_LINALG_HPP

#include <optional>
#include <vector>

#include "cftk/scalar.hpp"

namespace cftk {

/// Incremental row echelon form over a base field. Vectors are inserted one
/// at a time; dependent vectors are rejected, and any vector in the span can
/// be expressed in terms of the accepted ones (in insertion order).
class Echelon {
 public:
  Echelon(const BaseField* field, std::size_t dim) : field_(field), dim_(dim) {}

  /// Appends v if it is independent of the current span.
  bool insert(const std::vector<Scalar>& v);

  /// Coefficients of v over the accepted vectors, or nullopt if v is outside the span.
  std::optional<std::vector<Scalar>> express(const std::vector<Scalar>& v) const;

  bool contains(const std::vector<Scalar>& v) const { return express(v).has_value(); }
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

 private:
  // Reduces v in place, accumulating the combination of accepted vectors
  // that was subtracted.
  void reduce(std::vector<Scalar>& v, std::vector<Scalar>& combo) const;

  const BaseField* field_;
  std::size_t dim_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<Scalar>> combos_;
};

/// Rank of a list of vectors.
std::size_t rank_of(const BaseField* field, const std::vector<std::vector<Scalar>>& vectors);

/// Basis of the solution space {x : M x = 0} where M is given by rows.
std::vector<std::vector<Scalar>> kernel(const BaseField* field, std::vector<std::vector<Scalar>> rows, std::size_t ncols);

}  // namespace cftk

#endif  // CFTK_LINALG_HPP
