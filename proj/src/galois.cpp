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

#include "cftk/galois.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cftk/closure.hpp"
#include "cftk/error.hpp"
#include "cftk/factor.hpp"
#include "cftk/linalg.hpp"
#include "cftk/primitive.hpp"
#include "cftk/subfield.hpp"

namespace cftk {

namespace {

Elem unit_vector(const Tower& T, std::size_t i) {
  Elem e = T.zero(T.height());
  e[i] = T.base()->one();
  return e;
}

std::vector<Elem> base_generators(const Tower& T, std::size_t base_level) {
  std::vector<Elem> out;
  for (std::size_t j = 0; j < base_level; ++j) out.push_back(T.gen_top(j));
  return out;
}

std::string describe_map(const Embedding& e) {
  std::string s;
  const Tower &S = *e.source, &T = *e.target;
  for (std::size_t j = 0; j < S.height(); ++j) {
    if (j) s += ", ";
    s += S.stage(j).name + " -> " + format_elem(T, e.images[j]);
  }
  return s;
}

bool splits(const Tower& T, const KPoly& f) {
  for (const auto& [g, m] : factor_over(T, T.height(), f).factors)
    if (kp::deg(g) > 1) return false;
  return true;
}

}  // namespace

bool AutGroup::abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (table[a][b] != table[b][a]) return false;
  return true;
}

std::optional<std::size_t> AutGroup::find(const Embedding& e) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (same_map(elements[i], e)) return i;
  return std::nullopt;
}

std::vector<std::size_t> AutGroup::generated(const std::vector<std::size_t>& gens) const {
  std::set<std::size_t> seen{0};
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t a : frontier)
      for (std::size_t g : gens) {
        const std::size_t c = table[g][a];
        if (seen.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

AutGroup aut_group(const TowerPtr& field, std::size_t base_level) {
  AutGroup g;
  g.field = field;
  g.base_level = base_level;
  auto found = search_embedding(field, field, SearchMode::All, base_level);
  const Embedding id = identity_embedding(field);
  g.elements.push_back(id);
  for (auto& e : found)
    if (!same_map(e, id)) g.elements.push_back(std::move(e));
  const std::size_t n = g.order();
  g.table.assign(n, std::vector<std::size_t>(n, 0));
  g.inverse.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto c = g.find(compose(g.elements[b], g.elements[a]));
      if (!c) fail(ErrorKind::InvalidArgument, "automorphisms are not closed under composition");
      g.table[a][b] = *c;
      if (*c == 0) g.inverse[a] = b;
    }
  return g;
}

KPoly minpoly_over_level(const Tower& T, std::size_t level, const Elem& a) {
  std::vector<Elem> sub;
  for (std::size_t i = 0; i < T.dim(level); ++i) sub.push_back(unit_vector(T, i));
  KPoly m = minpoly_over_subfield(T, T.height(), a, sub);
  KPoly out;
  for (const auto& c : m) {
    Elem low;
    T.lower(c, T.height(), level, low);
    out.push_back(std::move(low));
  }
  return out;
}

std::string to_string(NormalCheck which) {
  switch (which) {
    case NormalCheck::N1: return "n1";
    case NormalCheck::N2: return "n2";
    case NormalCheck::N3: return "n3";
    case NormalCheck::N4: return "n4";
    case NormalCheck::Gal: return "gal";
  }
  return "";
}

NormalCheck parse_normal_check(const std::string& text) {
  for (auto w : {NormalCheck::N1, NormalCheck::N2, NormalCheck::N3, NormalCheck::N4, NormalCheck::Gal})
    if (to_string(w) == text) return w;
  fail(ErrorKind::ParseError, "unknown normality check '" + text + "'");
}

ClosureTower closure_tower(const TowerPtr& field, std::size_t base_level, std::size_t stages) {
  ClosureTower c;
  c.field_height = field->height();
  TowerPtr cur = field;
  for (std::size_t j = base_level; j < field->height(); ++j) {
    const KPoly m = minpoly_over_level(*field, base_level, field->gen_top(j));
    for (;;) {
      const std::size_t L = cur->height();
      const auto fac = factor_over(*cur, L, kp::lift(*cur, m, base_level, L));
      auto it = std::find_if(fac.factors.begin(), fac.factors.end(), [](const auto& f) { return kp::deg(f.first) > 1; });
      if (it == fac.factors.end()) break;
      Stage st;
      st.name = "c" + std::to_string(L);
      st.minpoly = it->first;
      cur = cur->extend_unchecked(std::move(st));
    }
  }
  c.normal_height = cur->height();
  if (stages > 0 && field->base()->kind() == BaseField::Kind::Rational) {
    const BaseField* K = field->base();
    for (unsigned w = 2; c.stage_polys.size() < stages && w <= 7; ++w)
      for (const auto& z : integer_irreducibles_of_weight(w)) {
        if (c.stage_polys.size() >= stages) break;
        std::vector<Scalar> p;
        for (const auto& v : z) p.push_back(K->from_rational(Rational(v)));
        const TowerPtr next = splitting_tower(cur, p, "c");
        if (next->height() == cur->height()) continue;
        cur = next;
        c.stage_polys.push_back(std::move(p));
      }
  }
  c.tower = cur;
  return c;
}

NormalReport check_normal(const TowerPtr& field, std::size_t base_level, NormalCheck which, std::size_t stages) {
  const Tower& K = *field;
  if (base_level > K.height()) fail(ErrorKind::InvalidArgument, "base level exceeds the tower height");
  NormalReport r;
  r.which = which;
  const TowerPtr F = K.prefix(base_level);
  switch (which) {
    case NormalCheck::N1:
    case NormalCheck::N2: {
      r.holds = true;
      std::vector<Elem> gens = base_generators(K, base_level);
      for (std::size_t j = base_level; j < K.height(); ++j) {
        const KPoly m = minpoly_over_level(K, base_level, K.gen_top(j));
        r.polynomials.push_back(format_kpoly(*F, m));
        const KPoly lifted = kp::lift(K, m, base_level, K.height());
        if (which == NormalCheck::N1) {
          if (r.holds && !splits(K, lifted)) {
            r.holds = false;
            r.certificate = r.polynomials.back();
          }
          continue;
        }
        const auto roots = roots_in(K, K.height(), lifted);
        if (r.holds && roots.size() != static_cast<std::size_t>(kp::deg(m))) {
          r.holds = false;
          r.certificate = r.polynomials.back();
        }
        gens.insert(gens.end(), roots.begin(), roots.end());
      }
      if (which == NormalCheck::N2 && r.holds && SubfieldSpan(field, gens).dimension() != K.degree()) {
        r.holds = false;
        r.certificate = "roots do not generate the field";
      }
      return r;
    }
    case NormalCheck::N3: {
      const ClosureTower c = closure_tower(field, base_level, stages);
      r.closure_degree = c.tower->degree();
      const auto maps = search_embedding(field, c.tower, SearchMode::All, base_level);
      r.maps_checked = maps.size();
      r.holds = true;
      for (const auto& e : maps)
        if (!lands_in(e, K.height())) {
          r.holds = false;
          r.certificate = describe_map(e);
          r.embedding = e;
          break;
        }
      return r;
    }
    case NormalCheck::N4: {
      const ClosureTower c = closure_tower(field, base_level, stages);
      r.closure_degree = c.tower->degree();
      const TowerPtr N = c.tower->prefix(c.normal_height);
      const auto auts = search_embedding(N, N, SearchMode::All, base_level);
      r.holds = true;
      for (const auto& sigma : auts) {
        const auto ext = extend_to_closure_stagewise(sigma, c.stage_polys.size(), c.stage_polys);
        ++r.maps_checked;
        for (std::size_t j = base_level; j < K.height(); ++j) {
          Elem low;
          if (!ext.tower->lower(ext.map.images[j], ext.tower->height(), K.height(), low)) {
            r.holds = false;
            r.certificate = describe_map(ext.map);
            r.embedding = ext.map;
            return r;
          }
        }
      }
      return r;
    }
    case NormalCheck::Gal: {
      const AutGroup g = aut_group(field, base_level);
      const IntermediateField fixed = fixed_field(field, g.elements, base_level);
      r.maps_checked = g.order();
      r.holds = fixed.dimension() == K.dim(base_level);
      if (!r.holds) r.certificate = format_elem(K, fixed.generators.front());
      return r;
    }
  }
  return r;
}

IntermediateField fixed_field(const TowerPtr& field, const std::vector<Embedding>& group, std::size_t base_level) {
  const Tower& T = *field;
  const std::size_t D = T.degree();
  std::vector<std::vector<Scalar>> rows;
  for (const auto& s : group) {
    std::vector<Elem> cols;
    for (std::size_t i = 0; i < D; ++i) cols.push_back(T.sub(apply_to(s, unit_vector(T, i)), unit_vector(T, i)));
    for (std::size_t r = 0; r < D; ++r) {
      std::vector<Scalar> row;
      for (std::size_t i = 0; i < D; ++i) row.push_back(cols[i][r]);
      rows.push_back(std::move(row));
    }
  }
  IntermediateField out;
  if (rows.empty()) {
    for (std::size_t i = 0; i < D; ++i) out.basis.push_back(unit_vector(T, i));
  } else {
    out.basis = kernel(T.base(), std::move(rows), D);
  }
  std::vector<Elem> gens = base_generators(T, base_level);
  SubfieldSpan span(field, gens);
  for (const auto& v : out.basis) {
    if (span.express(v)) continue;
    gens.push_back(v);
    out.generators.push_back(v);
    span = SubfieldSpan(field, gens);
  }
  return out;
}

bool field_contains(const TowerPtr& field, const IntermediateField& big, const IntermediateField& small) {
  Echelon ech(field->base(), field->degree());
  for (const auto& v : big.basis) ech.insert(v);
  return std::all_of(small.basis.begin(), small.basis.end(), [&](const Elem& v) { return ech.contains(v); });
}

std::vector<Subgroup> all_subgroups(const AutGroup& group) {
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> found;
  found[{0}] = {};
  std::vector<std::vector<std::size_t>> frontier{{0}};
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& h : frontier) {
      const auto& hg = found[h];
      for (std::size_t g = 1; g < group.order(); ++g) {
        if (std::binary_search(h.begin(), h.end(), g)) continue;
        auto gens = hg;
        gens.push_back(g);
        auto k = group.generated(gens);
        if (found.emplace(k, gens).second) next.push_back(std::move(k));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  for (auto& [elems, gens] : found) out.push_back(Subgroup{elems, gens});
  std::stable_sort(out.begin(), out.end(),
                   [](const Subgroup& a, const Subgroup& b) { return a.elements.size() < b.elements.size(); });
  return out;
}

GaloisCorrespondence galois_correspondence(const TowerPtr& field, std::size_t base_level) {
  GaloisCorrespondence gc;
  gc.group = aut_group(field, base_level);
  const Tower& K = *field;
  const std::size_t rel = K.degree() / K.dim(base_level);
  if (gc.group.order() != rel)
    fail(ErrorKind::NotGalois, "the extension has " + std::to_string(gc.group.order()) +
                                   " automorphisms but relative degree " + std::to_string(rel));
  gc.subgroups = all_subgroups(gc.group);
  const std::size_t n = gc.subgroups.size();
  for (const auto& h : gc.subgroups) {
    std::vector<Embedding> maps;
    for (std::size_t i : h.elements) maps.push_back(gc.group.elements[i]);
    gc.fields.push_back(fixed_field(field, maps, base_level));
    gc.field_degrees.push_back(gc.fields.back().dimension() / K.dim(base_level));
  }
  gc.degree_formula = true;
  for (std::size_t i = 0; i < n; ++i)
    if (gc.subgroups[i].elements.size() * gc.field_degrees[i] != rel) gc.degree_formula = false;
  // Aut(K/E) for each field E recovers the subgroup it came from
  gc.mutually_inverse = true;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> fixer;
    for (std::size_t a = 0; a < gc.group.order(); ++a) {
      const auto& s = gc.group.elements[a];
      if (std::all_of(gc.fields[i].basis.begin(), gc.fields[i].basis.end(),
                      [&](const Elem& v) { return apply_to(s, v) == v; }))
        fixer.push_back(a);
    }
    if (fixer != gc.subgroups[i].elements) gc.mutually_inverse = false;
  }
  gc.fields_distinct = true;
  gc.inclusion_reversing = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto &a = gc.subgroups[i].elements, &b = gc.subgroups[j].elements;
      const bool sub = std::includes(b.begin(), b.end(), a.begin(), a.end());
      const bool fsub = field_contains(field, gc.fields[i], gc.fields[j]);
      if (i != j && sub) gc.subgroup_inclusions.emplace_back(i, j);
      if (i != j && fsub) gc.field_inclusions.emplace_back(j, i);
      if (sub != fsub) gc.inclusion_reversing = false;
      if (i != j && fsub && field_contains(field, gc.fields[j], gc.fields[i])) gc.fields_distinct = false;
    }
  return gc;
}

RestrictionReport restriction_hom(const AutGroup& group, const std::vector<Elem>& sub_generators) {
  const TowerPtr& field = group.field;
  const Tower& K = *field;
  std::vector<Elem> gens = base_generators(K, group.base_level);
  gens.insert(gens.end(), sub_generators.begin(), sub_generators.end());
  const SubfieldSpan L(field, gens);
  RestrictionReport r;
  r.field_order = group.order();
  std::vector<std::vector<Elem>> classes;
  for (const auto& s : group.elements) {
    std::vector<Elem> imgs;
    for (const auto& g : sub_generators) {
      Elem im = apply_to(s, g);
      if (!L.express(im))
        throw Error(ErrorKind::NotStable, "an automorphism moves the subfield off itself")
            .with_detail(describe_map(s));
      imgs.push_back(std::move(im));
    }
    auto it = std::find(classes.begin(), classes.end(), imgs);
    r.restriction.push_back(static_cast<std::size_t>(it - classes.begin()));
    if (it == classes.end()) classes.push_back(std::move(imgs));
  }
  r.image_size = classes.size();
  for (std::size_t a = 0; a < group.order(); ++a)
    if (r.restriction[a] == 0) r.kernel.push_back(a);
  std::vector<std::size_t> fixer;
  for (std::size_t a = 0; a < group.order(); ++a)
    if (std::all_of(L.basis().begin(), L.basis().end(),
                    [&](const Elem& v) { return apply_to(group.elements[a], v) == v; }))
      fixer.push_back(a);
  r.kernel_is_fixer = fixer == r.kernel;
  r.kernel_normal = true;
  for (std::size_t g = 0; g < group.order(); ++g)
    for (std::size_t k : r.kernel) {
      const std::size_t c = group.table[group.table[g][k]][group.inverse[g]];
      if (!std::binary_search(r.kernel.begin(), r.kernel.end(), c)) r.kernel_normal = false;
    }
  const Transport tr = transport(field, gens);
  std::size_t sub_base = 0;
  for (std::size_t s : tr.sources)
    if (s < group.base_level) ++sub_base;
  r.sub_order = aut_group(tr.tower, sub_base).order();
  r.surjective = r.image_size == r.sub_order;
  return r;
}

namespace {

// Scalars of height w in enumeration order.
std::vector<Scalar> scalar_tier(const BaseField* K, unsigned w) {
  std::vector<Scalar> out;
  if (w == 0) {
    out.push_back(K->zero());
    return out;
  }
  switch (K->kind()) {
    case BaseField::Kind::Rational:
      for (unsigned b = 1; b <= w; ++b) {
        const unsigned a = w + 1 - b;
        if (Integer(a) == 0 || gcd(Integer(a), Integer(b)) != 1) continue;
        out.push_back(K->from_rational(Rational(Integer(a), Integer(b))));
        out.push_back(K->from_rational(Rational(-Integer(a), Integer(b))));
      }
      break;
    case BaseField::Kind::Finite:
      if (w < K->finite().order()) out.push_back(Scalar(K, static_cast<std::uint64_t>(w)));
      break;
    case BaseField::Kind::Function:
      fail(ErrorKind::UnsupportedBase, "no element enumeration over function fields");
  }
  return out;
}

}  // namespace

void ElementEnumeration::next_tier() {
  const Tower& T = *tower_;
  const std::size_t D = T.degree();
  const unsigned W = tier_++;
  std::vector<std::vector<Scalar>> tiers;
  for (unsigned w = 0; w <= W; ++w) tiers.push_back(scalar_tier(T.base(), w));
  // (weight, position) per coordinate; sorted colexicographically
  using Key = std::vector<std::pair<unsigned, std::size_t>>;
  std::vector<Key> keys;
  Key cur(D);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i == D) {
      if (left == 0) keys.push_back(cur);
      return;
    }
    for (unsigned w = 0; w <= left; ++w)
      for (std::size_t p = 0; p < tiers[w].size(); ++p) {
        cur[i] = {w, p};
        self(self, i + 1, left - w);
      }
  };
  rec(rec, 0, W);
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  for (const auto& k : keys) {
    Elem e;
    for (const auto& [w, p] : k) e.push_back(tiers[w][p]);
    list_.push_back(std::move(e));
  }
}

const Elem& ElementEnumeration::at(std::size_t index) {
  while (list_.size() <= index) next_tier();
  return list_[index];
}

std::optional<std::size_t> aut_distance(const Embedding& phi, const Embedding& psi, ElementEnumeration& en) {
  if (phi.source != psi.source || phi.target != psi.target)
    fail(ErrorKind::MixedDomains, "automorphisms of different towers");
  if (same_map(phi, psi)) return std::nullopt;
  const Embedding pi = inverse(phi), si = inverse(psi);
  for (std::size_t i = 0;; ++i) {
    const Elem& x = en.at(i);
    if (apply_to(phi, x) != apply_to(psi, x) || apply_to(pi, x) != apply_to(si, x)) return i;
  }
}

std::optional<std::size_t> aut_distance(const Embedding& phi, const Embedding& psi) {
  ElementEnumeration en(phi.source);
  return aut_distance(phi, psi, en);
}

std::vector<std::vector<std::optional<std::size_t>>> distance_table(const AutGroup& group) {
  ElementEnumeration en(group.field);
  const std::size_t n = group.order();
  std::vector<std::vector<std::optional<std::size_t>>> d(n, std::vector<std::optional<std::size_t>>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) d[a][b] = d[b][a] = aut_distance(group.elements[a], group.elements[b], en);
  return d;
}

namespace {

bool within(const std::optional<std::size_t>& d, std::size_t n) { return !d || *d >= n; }

}  // namespace

SeparabilityWitness dense_sequence(const AutGroup& group, std::size_t stages) {
  const auto d = distance_table(group);
  SeparabilityWitness w;
  for (std::size_t n = 0; n <= stages; ++n) {
    for (std::size_t s = 0; s < group.order(); ++s)
      if (std::none_of(w.sequence.begin(), w.sequence.end(), [&](std::size_t i) { return within(d[i][s], n); }))
        w.sequence.push_back(s);
    w.bound.push_back(w.sequence.size());
  }
  return w;
}

bool check_dense(const AutGroup& group, const SeparabilityWitness& w) {
  const auto d = distance_table(group);
  for (std::size_t n = 0; n < w.bound.size(); ++n)
    for (std::size_t psi = 0; psi < group.order(); ++psi) {
      bool ok = false;
      for (std::size_t i = 0; i < w.bound[n] && i < w.sequence.size() && !ok; ++i) ok = within(d[w.sequence[i]][psi], n);
      if (!ok) return false;
    }
  return true;
}

SubgroupTree subgroup_tree(const AutGroup& group, const std::vector<std::size_t>& generators, std::size_t depth) {
  SubgroupTree t;
  t.members = group.generated(generators);
  const auto d = distance_table(group);
  for (std::size_t n = 0; n <= depth; ++n) {
    std::vector<std::size_t> reps;
    for (std::size_t s : t.members)
      if (std::none_of(reps.begin(), reps.end(), [&](std::size_t r) { return within(d[r][s], n); })) reps.push_back(s);
    t.levels.push_back(std::move(reps));
  }
  return t;
}

}  // namespace cftk
