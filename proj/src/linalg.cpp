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

#include "cftk/linalg.hpp"

#include "cftk/error.hpp"

namespace cftk {

void Echelon::reduce(std::vector<Scalar>& v, std::vector<Scalar>& combo) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar c = v[pivots_[r]];
    if (c.is_zero()) continue;
    const auto& row = rows_[r];
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!row[j].is_zero()) v[j] -= c * row[j];
    }
    const auto& cr = combos_[r];
    for (std::size_t j = 0; j < cr.size(); ++j) {
      if (!cr[j].is_zero()) combo[j] -= c * cr[j];
    }
  }
}

bool Echelon::insert(const std::vector<Scalar>& v_in) {
  if (v_in.size() != dim_) fail(ErrorKind::InvalidArgument, "vector length mismatch in linear algebra");
  std::vector<Scalar> v = v_in;
  const std::size_t k = rows_.size();
  std::vector<Scalar> combo(k + 1, field_->zero());
  combo[k] = field_->one();
  // combo tracks v_in - (subtracted rows); the sign is folded in below
  std::vector<Scalar> sub(k + 1, field_->zero());
  reduce(v, sub);
  std::size_t piv = dim_;
  for (std::size_t j = 0; j < dim_; ++j) {
    if (!v[j].is_zero()) {
      piv = j;
      break;
    }
  }
  if (piv == dim_) return false;
  const Scalar inv = v[piv].inv();
  for (auto& x : v) x *= inv;
  for (std::size_t j = 0; j < combo.size(); ++j) combo[j] = (combo[j] + sub[j]) * inv;
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  combos_.push_back(std::move(combo));
  return true;
}

std::optional<std::vector<Scalar>> Echelon::express(const std::vector<Scalar>& v_in) const {
  if (v_in.size() != dim_) fail(ErrorKind::InvalidArgument, "vector length mismatch in linear algebra");
  std::vector<Scalar> v = v_in;
  std::vector<Scalar> sub(rows_.size(), field_->zero());
  reduce(v, sub);
  for (const auto& x : v)
    if (!x.is_zero()) return std::nullopt;
  for (auto& x : sub) x = -x;
  return sub;
}

std::size_t rank_of(const BaseField* field, const std::vector<std::vector<Scalar>>& vectors) {
  if (vectors.empty()) return 0;
  Echelon e(field, vectors[0].size());
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

std::vector<std::vector<Scalar>> kernel(const BaseField* field, std::vector<std::vector<Scalar>> rows, std::size_t ncols) {
  // Reduced row echelon form, then read off the free variables.
  std::vector<std::size_t> pivcols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Scalar inv = rows[r][c].inv();
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Scalar f = rows[i][c];
      for (std::size_t j = 0; j < ncols; ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
    }
    pivcols.push_back(c);
    ++r;
  }
  std::vector<bool> is_piv(ncols, false);
  for (auto c : pivcols) is_piv[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    std::vector<Scalar> x(ncols, field->zero());
    x[f] = field->one();
    for (std::size_t i = 0; i < pivcols.size(); ++i) x[pivcols[i]] = -rows[i][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace cftk
