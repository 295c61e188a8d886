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

#include "cftk/embed.hpp"

#include <algorithm>

#include "cftk/closure.hpp"
#include "cftk/error.hpp"
#include "cftk/factor.hpp"
#include "cftk/linalg.hpp"
#include "cftk/primitive.hpp"

namespace cftk {

namespace {

void same_base(const Tower& a, const Tower& b) {
  if (a.base() != b.base()) fail(ErrorKind::MixedFields, "towers over different base fields");
}

std::string poly_key(const std::vector<Scalar>& p) {
  std::string k;
  for (const auto& s : p) k += s.to_string() + ",";
  return k;
}

}  // namespace

Embedding identity_embedding(const TowerPtr& t) {
  Embedding e{t, t, {}};
  for (std::size_t j = 0; j < t->height(); ++j) e.images.push_back(t->gen_top(j));
  return e;
}

namespace {

// pows[j][k] caches images[j]^k. Walks the nonzero blocks from the top
// stage down, carrying the product of the powers chosen so far, and adds
// coefficient * product into `out` at the base.
void apply_rec(const Embedding& e, const Scalar* x, std::size_t level, const Elem* factor,
               std::vector<std::vector<Elem>>& pows, Elem& out) {
  const Tower &S = *e.source, &T = *e.target;
  if (level == 0) {
    if (x[0].is_zero()) return;
    if (!factor) {
      out[0] += x[0];
      return;
    }
    for (std::size_t i = 0; i < out.size(); ++i)
      if (!(*factor)[i].is_zero()) out[i].add_mul(x[0], (*factor)[i]);
    return;
  }
  const std::size_t low = S.dim(level - 1);
  const unsigned d = S.stage(level - 1).degree;
  auto& pw = pows[level - 1];
  for (unsigned k = 0; k < d; ++k) {
    const Scalar* block = x + k * low;
    if (std::all_of(block, block + low, [](const Scalar& c) { return c.is_zero(); })) continue;
    if (k == 0) {
      apply_rec(e, block, level - 1, factor, pows, out);
      continue;
    }
    while (pw.size() <= k) pw.push_back(pw.empty() ? T.one(T.height()) : T.mul(pw.back(), e.images[level - 1]));
    if (!factor) {
      apply_rec(e, block, level - 1, &pw[k], pows, out);
    } else {
      const Elem next = T.mul(*factor, pw[k]);
      apply_rec(e, block, level - 1, &next, pows, out);
    }
  }
}

}  // namespace

Elem apply_to(const Embedding& e, const Elem& x, std::size_t level) {
  if (x.size() != e.source->dim(level)) fail(ErrorKind::MixedDomains, "element does not belong to the source level");
  std::vector<std::vector<Elem>> pows(level);
  Elem out = e.target->zero(e.target->height());
  apply_rec(e, x.data(), level, nullptr, pows, out);
  return out;
}

KPoly apply_poly(const Embedding& e, const KPoly& p, std::size_t level) {
  KPoly out;
  for (const auto& c : p) out.push_back(apply_to(e, c, level));
  kp::trim(out);
  return out;
}

bool verify(const Embedding& e) {
  const Tower &S = *e.source, &T = *e.target;
  if (S.base() != T.base() || e.images.size() != S.height()) return false;
  for (std::size_t j = 0; j < S.height(); ++j) {
    if (e.images[j].size() != T.degree()) return false;
    const KPoly m = apply_poly(e, S.stage(j).minpoly, j);
    if (!Tower::is_zero(kp::eval(T, T.height(), m, e.images[j]))) return false;
  }
  return true;
}

bool fixes_prefix(const Embedding& e, std::size_t levels) {
  for (std::size_t j = 0; j < levels; ++j)
    if (e.images[j] != e.target->gen_top(j)) return false;
  return true;
}

Embedding compose(const Embedding& first, const Embedding& second) {
  Embedding out{first.source, second.target, {}};
  for (const auto& img : first.images) out.images.push_back(apply_to(second, img));
  return out;
}

Embedding inverse(const Embedding& e) {
  const Tower &S = *e.source, &T = *e.target;
  if (S.degree() != T.degree()) fail(ErrorKind::InvalidArgument, "only bijective embeddings have inverses");
  Echelon ech(T.base(), T.degree());
  for (std::size_t i = 0; i < S.degree(); ++i) {
    Elem unit = S.zero(S.height());
    unit[i] = S.base()->one();
    if (!ech.insert(apply_to(e, unit))) fail(ErrorKind::InvalidArgument, "embedding is not injective");
  }
  Embedding out{e.target, e.source, {}};
  for (std::size_t j = 0; j < T.height(); ++j) out.images.push_back(*ech.express(T.gen_top(j)));
  return out;
}

bool same_map(const Embedding& a, const Embedding& b) { return a.images == b.images; }

bool lands_in(const Embedding& e, std::size_t level) {
  Elem low;
  for (const auto& img : e.images)
    if (!e.target->lower(img, e.target->height(), level, low)) return false;
  return true;
}

Embedding extend_iso_simple(const Embedding& tau, const KPoly& p, const TowerPtr& target, const Elem& beta) {
  const Tower& F = *tau.source;
  same_base(F, *target);
  const std::size_t gh = tau.target->height();
  if (target->height() < gh) fail(ErrorKind::InvalidArgument, "target must extend the codomain of tau");
  for (std::size_t j = 0; j < gh; ++j)
    if (compare_kpolys(target->stage(j).minpoly, tau.target->stage(j).minpoly) != 0)
      fail(ErrorKind::InvalidArgument, "target must extend the codomain of tau");
  if (!factor_over(F, F.height(), p).irreducible())
    fail(ErrorKind::NotIrreducible, format_kpoly(F, p) + " is not irreducible over " + F.describe());
  // tau viewed as a map into the larger target
  Embedding lifted{tau.source, target, {}};
  for (const auto& img : tau.images) lifted.images.push_back(target->lift(img, gh, target->height()));
  const KPoly tp = apply_poly(lifted, p, F.height());
  if (beta.size() != target->degree() || !Tower::is_zero(kp::eval(*target, target->height(), tp, beta)))
    fail(ErrorKind::NotARoot, format_elem(*target, beta) + " is not a root of " + format_kpoly(*target, tp));
  Stage st;
  st.minpoly = kp::monic(F, F.height(), p);
  Embedding out{F.extend_unchecked(std::move(st)), target, lifted.images};
  out.images.push_back(beta);
  if (!verify(out)) fail(ErrorKind::NotARoot, "extension failed verification");
  return out;
}

std::vector<Elem> RootModulus::roots(const std::vector<Scalar>& p) const {
  const std::string key = poly_key(p);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  auto r = roots_in(*target_, target_->height(), kp::from_base(*target_, target_->height(), p));
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.emplace(key, std::move(r)).first->second;
}

EmbeddingBound bound_from_modulus(const RootModulus& r, const TowerPtr& source) {
  same_base(*source, *r.target());
  EmbeddingBound b;
  for (std::size_t j = 0; j < source->height(); ++j) {
    auto m = minpoly_over_base(*source, source->height(), source->gen_top(j));
    b.candidates.push_back(r.roots(m));
    b.polys.push_back(std::move(m));
  }
  return b;
}

namespace {

void search(const Tower& S, const Tower& T, const EmbeddingBound& bound, SearchMode mode, Embedding& cur,
            std::vector<Embedding>& out) {
  const std::size_t j = cur.images.size();
  if (j == S.height()) {
    out.push_back(cur);
    return;
  }
  const KPoly m = apply_poly(cur, S.stage(j).minpoly, j);
  for (const auto& c : bound.candidates[j]) {
    if (!Tower::is_zero(kp::eval(T, T.height(), m, c))) continue;
    cur.images.push_back(c);
    search(S, T, bound, mode, cur, out);
    cur.images.pop_back();
    if (mode == SearchMode::First && !out.empty()) return;
  }
}

}  // namespace

std::vector<Embedding> search_embedding(const TowerPtr& source, const TowerPtr& target, const EmbeddingBound& bound,
                                        SearchMode mode, std::size_t fixed) {
  same_base(*source, *target);
  if (fixed > source->height() || fixed > target->height())
    fail(ErrorKind::InvalidArgument, "fixed prefix is longer than a tower");
  for (std::size_t j = 0; j < fixed; ++j)
    if (compare_kpolys(source->stage(j).minpoly, target->stage(j).minpoly) != 0)
      fail(ErrorKind::InvalidArgument, "source and target do not share the fixed prefix");
  Embedding cur{source, target, {}};
  for (std::size_t j = 0; j < fixed; ++j) cur.images.push_back(target->gen_top(j));
  std::vector<Embedding> out;
  for (std::size_t j = fixed; j < source->height(); ++j)
    if (bound.candidates[j].empty()) return out;
  search(*source, *target, bound, mode, cur, out);
  return out;
}

std::vector<Embedding> search_embedding(const TowerPtr& source, const TowerPtr& target, SearchMode mode,
                                        std::size_t fixed) {
  same_base(*source, *target);
  if (fixed > source->height() || fixed > target->height())
    fail(ErrorKind::InvalidArgument, "fixed prefix is longer than a tower");
  for (std::size_t j = 0; j < fixed; ++j)
    if (compare_kpolys(source->stage(j).minpoly, target->stage(j).minpoly) != 0)
      fail(ErrorKind::InvalidArgument, "source and target do not share the fixed prefix");
  const Tower &S = *source, &T = *target;
  Embedding cur{source, target, {}};
  for (std::size_t j = 0; j < fixed; ++j) cur.images.push_back(T.gen_top(j));
  std::vector<Embedding> out;
  // candidates for each stage are the roots of its mapped stage polynomial
  auto dfs = [&](auto&& self) -> void {
    const std::size_t j = cur.images.size();
    if (j == S.height()) {
      out.push_back(cur);
      return;
    }
    for (const auto& c : roots_in(T, T.height(), apply_poly(cur, S.stage(j).minpoly, j))) {
      cur.images.push_back(c);
      self(self);
      cur.images.pop_back();
      if (mode == SearchMode::First && !out.empty()) return;
    }
  };
  dfs(dfs);
  return out;
}

Isomorphism iso_from_mutual(const Embedding& e1, const Embedding& e2) {
  if (e1.source != e2.target || e1.target != e2.source)
    fail(ErrorKind::NotMutual, "the embeddings do not run in opposite directions");
  if (!verify(e1) || !verify(e2)) fail(ErrorKind::NotMutual, "an input map is not an embedding");
  const TowerPtr &J = e1.source, &K = e1.target;
  Isomorphism iso;
  RootModulus rj(J), rk(K);
  for (std::size_t j = 0; j < J->height(); ++j) {
    const auto m = minpoly_over_base(*J, J->height(), J->gen_top(j));
    const std::size_t a = rj.roots(m).size(), b = rk.roots(m).size();
    iso.root_counts.emplace_back(a, b);
    if (a != b) fail(ErrorKind::NotMutual, "root counts differ, so one of the maps cannot exist");
  }
  if (J->degree() != K->degree()) fail(ErrorKind::NotMutual, "degrees differ, so the maps are not mutual embeddings");
  iso.forward = e1;
  iso.backward = inverse(e1);
  return iso;
}

TowerPtr splitting_tower(const TowerPtr& t, const std::vector<Scalar>& p, const std::string& prefix) {
  TowerPtr cur = t;
  for (;;) {
    const std::size_t L = cur->height();
    const auto fac = factor_over(*cur, L, kp::from_base(*cur, L, p));
    const KPoly* next = nullptr;
    for (const auto& [g, m] : fac.factors)
      if (kp::deg(g) >= 2) {
        next = &g;
        break;
      }
    if (!next) return cur;
    Stage st;
    st.name = prefix + std::to_string(L);
    st.minpoly = *next;
    cur = cur->extend_unchecked(std::move(st));
  }
}

StagewiseExtension extend_to_closure_stagewise(const Embedding& phi, std::size_t stages,
                                               const std::vector<std::vector<Scalar>>& polys) {
  if (phi.source != phi.target) fail(ErrorKind::InvalidArgument, "stagewise extension needs an automorphism");
  StagewiseExtension out;
  out.original_height = phi.source->height();
  TowerPtr cur = phi.source;
  Embedding map = phi;
  const BaseField* K = cur->base();
  std::size_t next_poly = 0;
  unsigned weight = 2;
  std::vector<ZPoly> pending;
  auto next_candidate = [&](std::vector<Scalar>& p) {
    if (!polys.empty()) {
      if (next_poly >= polys.size()) return false;
      p = polys[next_poly++];
      return true;
    }
    if (K->kind() != BaseField::Kind::Rational)
      fail(ErrorKind::UnsupportedBase, "the default polynomial enumeration is over Q");
    while (next_poly >= pending.size()) {
      if (weight > 7) return false;
      pending = integer_irreducibles_of_weight(weight++);
      next_poly = 0;
    }
    p.clear();
    for (const auto& c : pending[next_poly]) p.push_back(K->from_rational(Rational(c)));
    ++next_poly;
    return true;
  };
  std::vector<Scalar> p;
  while (out.stage_polys.size() < stages && next_candidate(p)) {
    const TowerPtr ext = splitting_tower(cur, p);
    if (ext->height() == cur->height()) continue;
    Embedding lifted{ext, ext, {}};
    for (const auto& img : map.images) lifted.images.push_back(ext->lift(img, cur->height(), ext->height()));
    for (std::size_t j = cur->height(); j < ext->height(); ++j) {
      const KPoly m = apply_poly(lifted, ext->stage(j).minpoly, j);
      const auto roots = roots_in(*ext, ext->height(), m);
      if (roots.empty()) fail(ErrorKind::InvalidArgument, "stagewise extension found no image");
      const Elem g = ext->gen_top(j);
      lifted.images.push_back(std::find(roots.begin(), roots.end(), g) != roots.end() ? g : roots.front());
    }
    cur = ext;
    map = lifted;
    out.stage_polys.push_back(p);
  }
  map.source = cur;
  map.target = cur;
  if (!verify(map)) fail(ErrorKind::InvalidArgument, "stagewise extension failed verification");
  out.tower = cur;
  out.map = map;
  return out;
}

}  // namespace cftk
