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

#include "cftk/primitive.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "cftk/error.hpp"

namespace cftk {

std::vector<Scalar> minpoly_over_base(const Tower& T, std::size_t level, const Elem& a) {
  const BaseField* K = T.base();
  Echelon ech(K, T.dim(level));
  Elem p = T.one(level);
  for (std::size_t n = 0;; ++n) {
    if (auto c = ech.express(p)) {
      std::vector<Scalar> out(n + 1, K->zero());
      for (std::size_t j = 0; j < n; ++j) out[j] = -(*c)[j];
      out[n] = K->one();
      return out;
    }
    ech.insert(p);
    p = T.mul(level, p, a);
  }
}

KPoly minpoly_over_subfield(const Tower& T, std::size_t level, const Elem& a, const std::vector<Elem>& sub) {
  const BaseField* K = T.base();
  Echelon ech(K, T.dim(level));
  // columns b_i * a^j in order (j major), tracked so coefficients regroup by j
  std::vector<Elem> apow{T.one(level)};
  for (std::size_t n = 0;; ++n) {
    std::vector<Elem> row;
    for (const auto& b : sub) row.push_back(T.mul(level, b, apow[n]));
    // test whether a^n lies in the span of the previous rows
    if (n > 0) {
      if (auto c = ech.express(apow[n])) {
        KPoly out(n + 1, T.zero(level));
        for (std::size_t j = 0; j < n; ++j) {
          Elem coef = T.zero(level);
          for (std::size_t i = 0; i < sub.size(); ++i) coef = T.add(coef, T.scale(sub[i], (*c)[j * sub.size() + i]));
          out[j] = T.neg(coef);
        }
        out[n] = T.one(level);
        return out;
      }
    }
    for (const auto& v : row) {
      if (!ech.insert(v)) fail(ErrorKind::InvalidArgument, "subfield basis is not linearly independent");
    }
    apow.push_back(T.mul(level, apow[n], a));
  }
}

PrimitiveElement primitive_element(const Tower& T, std::size_t level) {
  const BaseField* K = T.base();
  const std::size_t n = level, D = T.dim(level);
  for (std::size_t i = 0; i < n; ++i) {
    if (kp::derivative(T, T.stage(i).minpoly).empty())
      fail(ErrorKind::InseparableTower, "stage " + T.stage(i).name + " is inseparable");
  }
  std::vector<Elem> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(T.lift(T.gen(i), i + 1, level));
  auto try_weights = [&](const std::vector<long>& w, PrimitiveElement& out) {
    Elem g = T.zero(level);
    for (std::size_t i = 0; i < n; ++i)
      if (w[i] != 0) g = T.add(g, T.scale(gens[i], K->from_int(w[i])));
    if (n == 0) g = T.zero(level);
    auto mp = minpoly_over_base(T, level, g);
    if (mp.size() == D + 1) {
      out = PrimitiveElement{g, w, mp};
      return true;
    }
    return false;
  };
  PrimitiveElement out;
  if (n == 0) {
    out.gamma = T.zero(level);
    out.minpoly = {K->zero(), K->one()};
    return out;
  }
  const std::uint64_t p = K->characteristic();
  const long cap = p == 0 ? 64 : static_cast<long>(std::min<std::uint64_t>(p - 1, 64));
  std::vector<long> w(n, 0);
  w[0] = 1;
  if (n == 1) {
    if (try_weights(w, out)) return out;
  }
  for (long bound = 0; n > 1 && bound <= cap; ++bound) {
    // all (w_1..w_{n-1}) in [0,bound]^{n-1} with maximum bound, lexicographic
    std::fill(w.begin() + 1, w.end(), 0);
    for (;;) {
      const long mx = *std::max_element(w.begin() + 1, w.end());
      if (mx == bound && try_weights(w, out)) return out;
      std::size_t i = n;
      while (i > 1 && w[i - 1] == bound) w[--i] = 0;
      if (i == 1) break;
      ++w[i - 1];
    }
  }
  fail(ErrorKind::InseparableTower, "no primitive element with small integer weights");
}

Flattening::Flattening(const Tower& T, std::size_t level)
    : prim_(primitive_element(T, level)), echelon_(T.base(), T.dim(level)) {
  Elem p = T.one(level);
  for (std::size_t j = 0; j < T.dim(level); ++j) {
    powers_.push_back(p);
    echelon_.insert(p);
    p = T.mul(level, p, prim_.gamma);
  }
}

std::vector<Scalar> Flattening::to_power_basis(const Elem& e) const {
  auto c = echelon_.express(e);
  if (!c) fail(ErrorKind::InvalidArgument, "element outside the flattened level");
  return *c;
}

Elem Flattening::from_power_basis(const std::vector<Scalar>& h) const {
  Elem out(powers_[0].size(), powers_[0][0].field()->zero());
  for (std::size_t j = 0; j < h.size() && j < powers_.size(); ++j) {
    if (h[j].is_zero()) continue;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += h[j] * powers_[j][i];
  }
  return out;
}

std::shared_ptr<const Flattening> flatten(const Tower& T, std::size_t level) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const Flattening>> cache;
  std::string key = T.base()->descriptor();
  for (std::size_t i = 0; i < level; ++i) {
    key += "|";
    for (const auto& c : T.stage(i).minpoly) {
      key += "(";
      for (const auto& s : c) key += s.to_string() + ",";
      key += ")";
    }
  }
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto f = std::make_shared<const Flattening>(T, level);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, f).first->second;
}

}  // namespace cftk
