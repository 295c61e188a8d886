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

#include "cftk/subfield.hpp"

#include <algorithm>

#include "cftk/error.hpp"
#include "cftk/factor.hpp"

namespace cftk {

SubfieldSpan::SubfieldSpan(TowerPtr ambient, std::vector<Elem> generators)
    : ambient_(std::move(ambient)), gens_(std::move(generators)), echelon_(ambient_->base(), ambient_->degree()) {
  const Tower& T = *ambient_;
  for (const auto& g : gens_)
    if (g.size() != T.degree()) fail(ErrorKind::MixedDomains, "generator does not belong to the ambient tower");
  basis_.push_back(T.one(T.height()));
  exps_.emplace_back(gens_.size(), 0u);
  echelon_.insert(basis_.front());
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const std::size_t prev = basis_.size();
    Elem gk = gens_[i];
    unsigned k = 1;
    while (!echelon_.contains(gk)) {
      for (std::size_t j = 0; j < prev; ++j) {
        Elem v = T.mul(basis_[(k - 1) * prev + j], gens_[i]);
        if (!echelon_.insert(v)) fail(ErrorKind::InvalidArgument, "subfield span lost independence");
        auto e = exps_[(k - 1) * prev + j];
        ++e[i];
        basis_.push_back(std::move(v));
        exps_.push_back(std::move(e));
      }
      gk = T.mul(gk, gens_[i]);
      ++k;
    }
    if (k > 1) {
      kept_.push_back(i);
      rel_deg_.push_back(k);
    }
  }
}

Elem SubfieldSpan::combine(const std::vector<Scalar>& coords) const {
  Elem out = ambient_->zero(ambient_->height());
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) out = ambient_->add(out, ambient_->scale(basis_[i], coords[i]));
  return out;
}

Membership member(const TowerPtr& ambient, const Elem& candidate, const std::vector<Elem>& generators) {
  if (candidate.size() != ambient->degree()) fail(ErrorKind::MixedDomains, "candidate does not belong to the ambient tower");
  SubfieldSpan span(ambient, generators);
  Membership out;
  auto coords = span.express(candidate);
  if (!coords) return out;
  out.member = true;
  for (std::size_t i = 0; i < coords->size(); ++i)
    if (!(*coords)[i].is_zero()) out.expression.push_back({(*coords)[i], span.exponents()[i]});
  return out;
}

Elem apply_transport(const Transport& tr, const Elem& x) {
  if (x.size() != tr.basis.size()) fail(ErrorKind::MixedDomains, "element does not belong to the transported tower");
  Elem out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    Elem term = tr.basis[i];
    for (auto& s : term) s = s * x[i];
    if (out.empty()) out = std::move(term);
    else
      for (std::size_t k = 0; k < out.size(); ++k) out[k] = out[k] + term[k];
  }
  if (out.empty() && !tr.basis.empty()) {
    out = tr.basis.front();
    for (auto& s : out) s = s.field()->zero();
  }
  return out;
}

Transport transport(const TowerPtr& ambient, const std::vector<Elem>& generators) {
  const Tower& T = *ambient;
  SubfieldSpan span(ambient, generators);
  Transport tr;
  tr.basis = span.basis();
  TowerPtr G = Tower::make(T.base());
  for (std::size_t s = 0; s < span.kept().size(); ++s) {
    const std::size_t idx = span.kept()[s];
    const unsigned d = span.relative_degrees()[s];
    const std::size_t low = G->dim(s);
    const auto c = span.express(T.pow(T.height(), generators[idx], d));
    KPoly m(d + 1, G->zero(s));
    for (unsigned j = 0; j < d; ++j)
      for (std::size_t k = 0; k < low; ++k) m[j][k] = -(*c)[j * low + k];
    m[d] = G->one(s);
    Stage st;
    st.name = "a" + std::to_string(s);
    st.minpoly = std::move(m);
    G = G->extend_unchecked(std::move(st));
    tr.images.push_back(generators[idx]);
    tr.sources.push_back(idx);
  }
  tr.tower = G;
  const std::size_t top = G->height();
  bool ok = true;
  // minimal polynomials are respected by tau
  for (std::size_t s = 0; s < top; ++s) {
    Elem acc = T.zero(T.height());
    Elem pw = T.one(T.height());
    for (const auto& coef : G->stage(s).minpoly) {
      acc = T.add(acc, T.mul(apply_transport(tr, G->lift(coef, s, top)), pw));
      pw = T.mul(pw, tr.images[s]);
    }
    ok = ok && Tower::is_zero(acc);
    ++tr.homomorphism_checks;
  }
  std::vector<Elem> gens;
  for (std::size_t s = 0; s < top; ++s) gens.push_back(G->gen_top(s));
  for (const auto& g : generators) {
    auto c = span.express(g);
    tr.preimages.push_back(*c);
    ok = ok && apply_transport(tr, *c) == g;
  }
  gens.insert(gens.end(), tr.preimages.begin(), tr.preimages.end());
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a; b < gens.size(); ++b) {
      ok = ok && apply_transport(tr, G->mul(gens[a], gens[b])) == T.mul(apply_transport(tr, gens[a]), apply_transport(tr, gens[b]));
      ok = ok && apply_transport(tr, G->add(gens[a], gens[b])) == T.add(apply_transport(tr, gens[a]), apply_transport(tr, gens[b]));
      tr.homomorphism_checks += 2;
    }
  }
  tr.verified = ok;
  return tr;
}

CubeRootReport cube_root_basis_check(const std::vector<FqPoly>& primes) {
  const BaseField* K = BaseField::get("RatFunc:2^2");
  const FiniteField& F = K->finite();
  for (std::size_t i = 0; i < primes.size(); ++i) {
    FqPoly p = primes[i];
    fq::trim(p);
    if (p.empty() || p.back() != 1 || !fq::is_irreducible(F, p))
      fail(ErrorKind::InvalidArgument, "cube-root primes must be monic irreducible polynomials over GF(4)");
    for (std::size_t j = 0; j < i; ++j) {
      FqPoly q = primes[j];
      fq::trim(q);
      if (q == p) fail(ErrorKind::DuplicatePrimes, "prime " + fq::to_string(p) + " is listed twice");
    }
  }
  CubeRootReport rep;
  TowerPtr T = Tower::make(K);
  try {
    for (std::size_t i = 0; i < primes.size(); ++i) {
      FqPoly p = primes[i];
      fq::trim(p);
      const Scalar c = make_ratfunc(K, p, FqPoly{1});
      const std::size_t L = T->height();
      KPoly m{T->from_scalar(L, -c), T->zero(L), T->zero(L), T->one(L)};
      T = adjoin(T, m, "r" + std::to_string(i));
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ReduciblePolynomial) throw;
    rep.tower = T;
    return rep;
  }
  rep.tower = T;
  std::size_t n = 1;
  for (std::size_t i = 0; i < primes.size(); ++i) n *= 3;
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t idx = 0; idx < n; ++idx) {
    Elem mono = T->one(T->height());
    std::size_t r = idx;
    for (std::size_t i = 0; i < primes.size(); ++i, r /= 3)
      for (std::size_t k = 0; k < r % 3; ++k) mono = T->mul(mono, T->gen_top(i));
    rep.basis.push_back(format_elem(*T, mono));
    rows.push_back(mono);
  }
  rep.rows = n;
  rep.cols = T->degree();
  rep.rank = rank_of(K, rows);
  rep.independent = rep.rank == n && rep.cols == n;
  return rep;
}

}  // namespace cftk
