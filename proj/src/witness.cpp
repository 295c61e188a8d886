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

#include "cftk/witness.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

#include "cftk/error.hpp"
#include "cftk/factor.hpp"
#include "cftk/galois.hpp"
#include "cftk/linalg.hpp"

namespace cftk {

void validate_prefixes(const InjectionPrefix& f, const InjectionPrefix& g, bool allow_zero) {
  for (const auto* v : {&f, &g}) {
    std::set<std::size_t> seen;
    for (std::size_t x : *v) {
      if (x == 0 && !allow_zero) fail(ErrorKind::InvalidArgument, "injection prefixes must not take the value 0");
      if (!seen.insert(x).second) fail(ErrorKind::InvalidArgument, "injection prefix repeats " + std::to_string(x));
    }
  }
  for (std::size_t x : f)
    if (std::find(g.begin(), g.end(), x) != g.end())
      fail(ErrorKind::OverlappingRanges, "both prefixes take the value " + std::to_string(x));
}

bool SeparationCertificate::valid() const {
  for (std::size_t x : f)
    if (!std::binary_search(S.begin(), S.end(), x)) return false;
  for (std::size_t x : g)
    if (std::binary_search(S.begin(), S.end(), x)) return false;
  return true;
}

TowerPtr sqrt_tower(const BaseField* base, const std::vector<Scalar>& radicands, const std::string& prefix) {
  TowerPtr t = Tower::make(base);
  for (const auto& r : radicands) {
    const std::size_t L = t->height();
    t = adjoin(t, KPoly{t->from_scalar(L, -r), t->zero(L), t->one(L)}, prefix + std::to_string(L));
  }
  return t;
}

namespace {

// Towers are immutable, so equal presentations can be shared between witnesses.
TowerPtr cached_tower(const std::string& key, const std::function<TowerPtr()>& build) {
  static std::mutex mu;
  static std::map<std::string, TowerPtr> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  TowerPtr t = build();
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, t).first->second;
}

std::size_t lowest_level(const Tower& T, const Elem& e) {
  Elem low;
  for (std::size_t l = 0; l < T.height(); ++l)
    if (T.lower(e, T.height(), l, low)) return l;
  return T.height();
}

// Depth-first choice of generator images from per-stage candidates; each
// element of `keep` must be fixed once every stage it involves is assigned.
std::optional<Embedding> constrained_search(const TowerPtr& T, const std::vector<std::vector<Elem>>& candidates,
                                            const std::vector<Elem>& keep) {
  // (element lowered to its level, element at the top)
  std::vector<std::vector<std::pair<Elem, Elem>>> by_level(T->height() + 1);
  for (const auto& e : keep) {
    const std::size_t l = lowest_level(*T, e);
    Elem low;
    T->lower(e, T->height(), l, low);
    by_level[l].emplace_back(low, e);
  }
  Embedding cur{T, T, {}};
  auto dfs = [&](auto&& self) -> bool {
    const std::size_t j = cur.images.size();
    if (j == T->height()) return verify(cur);
    for (const auto& c : candidates[j]) {
      cur.images.push_back(c);
      bool ok = true;
      for (const auto& [low, top] : by_level[j + 1])
        if (apply_to(cur, low, j + 1) != top) {
          ok = false;
          break;
        }
      if (ok && self(self)) return true;
      cur.images.pop_back();
    }
    return false;
  };
  if (!dfs(dfs)) return std::nullopt;
  return cur;
}

// Multiplicativity and additivity on all pairs of generators.
bool homomorphism_on_generators(const Embedding& e, std::size_t& pairs) {
  const Tower& T = *e.source;
  pairs = 0;
  std::vector<Elem> gens;
  for (std::size_t a = 0; a < T.height(); ++a) gens.push_back(T.gen_top(a));
  for (std::size_t a = 0; a < T.height(); ++a)
    for (std::size_t b = a; b < T.height(); ++b) {
      const Elem &x = gens[a], &y = gens[b];
      ++pairs;
      if (apply_to(e, T.mul(x, y)) != T.mul(e.images[a], e.images[b])) return false;
      if (apply_to(e, T.add(x, y)) != T.add(e.images[a], e.images[b])) return false;
    }
  return true;
}

std::vector<std::size_t> probes_of(const InjectionPrefix& f, const InjectionPrefix& g) {
  std::vector<std::size_t> p(f.begin(), f.end());
  p.insert(p.end(), g.begin(), g.end());
  std::sort(p.begin(), p.end());
  return p;
}

struct SignSetup {
  TowerPtr tower;
  std::vector<std::size_t> probes;
  std::vector<Elem> field_gens;
};

// The ambient tower with the square root of radicand(0) first and then one
// square root per probed k; F is generated by sqrt r_f and sqrt(r_0 r_g).
SignSetup sign_setup(const BaseField* K, const std::function<Scalar(std::size_t)>& radicand,
                     const std::function<std::string(std::size_t)>& name, const InjectionPrefix& f,
                     const InjectionPrefix& g) {
  SignSetup s;
  s.probes = probes_of(f, g);
  std::string key = "sign|" + K->descriptor();
  for (std::size_t k : s.probes) key += "|" + name(k) + "=" + radicand(k).to_string();
  const TowerPtr t = cached_tower(key, [&] {
    TowerPtr u = Tower::make(K);
    auto add = [&](std::size_t k) {
      const std::size_t L = u->height();
      u = adjoin(u, KPoly{u->from_scalar(L, -radicand(k)), u->zero(L), u->one(L)}, name(k));
    };
    add(0);
    for (std::size_t k : s.probes) add(k);
    return u;
  });
  s.tower = t;
  auto stage_of = [&](std::size_t k) {
    return 1 + static_cast<std::size_t>(std::lower_bound(s.probes.begin(), s.probes.end(), k) - s.probes.begin());
  };
  for (std::size_t k : f) s.field_gens.push_back(t->gen_top(stage_of(k)));
  for (std::size_t k : g) s.field_gens.push_back(t->mul(t->gen_top(0), t->gen_top(stage_of(k))));
  if (member(t, t->gen_top(0), s.field_gens).member)
    fail(ErrorKind::InvalidArgument, "the square root of " + radicand(0).to_string() + " already lies in F");
  return s;
}

std::vector<std::vector<Elem>> sign_candidates(const Tower& T, std::size_t stages) {
  std::vector<std::vector<Elem>> c;
  c.push_back({T.neg(T.gen_top(0))});
  for (std::size_t j = 1; j < stages; ++j) c.push_back({T.gen_top(j), T.neg(T.gen_top(j))});
  return c;
}

void fill_certificate(SeparationCertificate& c, const SignSetup& s, const Embedding& map, const InjectionPrefix& f,
                      const InjectionPrefix& g) {
  const Tower& T = *s.tower;
  c.f = f;
  c.g = g;
  c.tower = s.tower;
  c.field_generators = s.field_gens;
  c.map = map;
  for (std::size_t i = 0; i < s.probes.size(); ++i) {
    const bool fixed = map.images[i + 1] == T.gen_top(i + 1);
    c.evidence.push_back(SignEvidence{s.probes[i], fixed ? 1 : -1});
    if (fixed) c.S.push_back(s.probes[i]);
  }
  bool ok = homomorphism_on_generators(map, c.generator_pairs_checked);
  for (const auto& e : s.field_gens) ok = ok && apply_to(map, e) == e;
  c.homomorphism_checked = ok;
}

SeparationCertificate sign_witness(const BaseField* K, const std::function<Scalar(std::size_t)>& radicand,
                                   const std::function<std::string(std::size_t)>& name, const InjectionPrefix& f,
                                   const InjectionPrefix& g) {
  validate_prefixes(f, g);
  const SignSetup s = sign_setup(K, radicand, name, f, g);
  const auto map = constrained_search(s.tower, sign_candidates(*s.tower, s.tower->height()), s.field_gens);
  if (!map) fail(ErrorKind::InvalidArgument, "no sign assignment fixes F");
  SeparationCertificate c;
  fill_certificate(c, s, *map, f, g);
  return c;
}

Scalar rational_prime(std::size_t k) { return rationals()->from_int(static_cast<long long>(nth_prime(k))); }

}  // namespace

SeparationCertificate diamond_witness(const InjectionPrefix& f, const InjectionPrefix& g) {
  return sign_witness(
      rationals(), rational_prime, [](std::size_t k) { return "sqrt" + std::to_string(nth_prime(k)); }, f, g);
}

QuarticReport quartic_witness(const InjectionPrefix& f, const InjectionPrefix& g) {
  validate_prefixes(f, g);
  const SignSetup base = sign_setup(
      rationals(), rational_prime, [](std::size_t k) { return "sqrt" + std::to_string(nth_prime(k)); }, f, g);
  const std::size_t h = base.tower->height();
  const TowerPtr t = cached_tower("quartic|" + base.tower->describe(), [&] {
    TowerPtr u = adjoin(base.tower, KPoly{base.tower->neg(base.tower->gen_top(0)), base.tower->zero(h), base.tower->one(h)},
                        "qrt2");
    return adjoin(u, KPoly{u->one(h + 1), u->zero(h + 1), u->one(h + 1)}, "i");
  });
  SignSetup s = base;
  s.tower = t;
  for (auto& e : s.field_gens) e = t->lift(e, h, t->height());
  auto cand = sign_candidates(*t, h);
  const Elem i = t->gen_top(h + 1), q = t->gen_top(h);
  cand.push_back({t->mul(i, q)});
  cand.push_back({i});
  const auto map = constrained_search(t, cand, s.field_gens);
  if (!map) fail(ErrorKind::InvalidArgument, "no sign assignment fixes F");
  QuarticReport r;
  fill_certificate(r.certificate, s, *map, f, g);
  const Elem img = map->images[h];
  Elem low;
  r.non_automorphism = !t->lower(img, t->height(), h + 1, low);
  r.squares_to_conjugate = t->mul(img, img) == t->neg(t->gen_top(0));
  r.image_of_quartic_root = format_elem(*t, img);
  return r;
}

SeparationCertificate charp_witness(std::uint64_t p, const InjectionPrefix& f, const InjectionPrefix& g) {
  if (p == 2) fail(ErrorKind::InvalidArgument, "the sign witness needs an odd characteristic");
  const auto primes = first_primes(64);
  if (std::find(primes.begin(), primes.end(), p) == primes.end())
    fail(ErrorKind::InvalidArgument, std::to_string(p) + " is not a supported odd prime");
  const BaseField* K = BaseField::get("RatFunc:" + std::to_string(p));
  const auto probes = probes_of(f, g);
  const std::size_t need = 1 + (probes.empty() ? 0 : probes.back());
  const auto irr = base_primes(K, need);
  return sign_witness(
      K, [&](std::size_t k) { return irr[k]; }, [](std::size_t k) { return "r" + std::to_string(k); }, f, g);
}

std::size_t pair_code(std::size_t i, std::size_t j) { return (i + j) * (i + j) + i; }

std::optional<std::pair<std::size_t, std::size_t>> unpair(std::size_t code) {
  std::size_t s = 0;
  while ((s + 1) * (s + 1) <= code) ++s;
  const std::size_t i = code - s * s;
  if (i > s) return std::nullopt;
  return std::make_pair(i, s - i);
}

namespace {

// x^2 - 2 first, then the canonical enumeration of integer irreducibles.
class PolyStream {
 public:
  ZPoly next() {
    if (!started_) {
      started_ = true;
      return first_;
    }
    for (;;) {
      while (pos_ >= batch_.size()) {
        batch_ = integer_irreducibles_of_weight(weight_++);
        pos_ = 0;
      }
      ZPoly z = batch_[pos_++];
      if (z != first_) return z;
    }
  }

 private:
  ZPoly first_{Integer(-2), Integer(0), Integer(1)};
  bool started_ = false;
  std::vector<ZPoly> batch_;
  std::size_t pos_ = 0;
  unsigned weight_ = 2;
};

KPoly kpoly_from_z(const Tower& T, const ZPoly& z) {
  KPoly out;
  for (const auto& c : z) out.push_back(T.from_scalar(T.height(), T.base()->from_rational(Rational(c))));
  return out;
}

std::string zpoly_text(const ZPoly& z) {
  QPoly q;
  for (const auto& c : z) q.push_back(Rational(c));
  return qp::to_string(q);
}

}  // namespace

MnReport mn_witness(const InjectionPrefix& f, const InjectionPrefix& g, std::size_t stages, std::size_t max_degree) {
  validate_prefixes(f, g);
  MnReport r;
  TowerPtr Q = Tower::make(rationals());
  std::vector<std::optional<std::size_t>> stage_of(stages);
  PolyStream polys;
  for (std::size_t i = 0; i < stages; ++i) {
    MnStage st;
    st.index = i;
    const auto u = unpair(i);
    if (u && (u->second == 0 || stage_of[u->first])) {
      st.coded = true;
      st.j = u->first;
      st.n = u->second;
      const std::size_t h = Q->height();
      Stage next;
      next.name = "v" + std::to_string(i);
      if (st.n == 0) {
        ZPoly z;
        for (;;) {
          z = polys.next();
          bool split = true;
          for (const auto& [fac, m] : factor_over(*Q, h, kpoly_from_z(*Q, z)).factors)
            if (kp::deg(fac) > 1) split = false;
          if (!split) break;
        }
        std::vector<Scalar> coeffs;
        for (const auto& c : z) coeffs.push_back(rationals()->from_rational(Rational(c)));
        const TowerPtr S = splitting_tower(Q, coeffs, "s");
        if (S->degree() > max_degree)
          fail(ErrorKind::DegreeCapExceeded, "stage " + std::to_string(i) + " exceeds degree " + std::to_string(max_degree));
        const std::size_t rel = S->degree() / Q->degree();
        Elem v = S->gen_top(h);
        for (long w = 1; minpoly_over_level(*S, h, v).size() != rel + 1; ++w) {
          v = S->gen_top(h);
          for (std::size_t k = h + 1; k < S->height(); ++k)
            v = S->add(v, S->scale(S->gen_top(k), rationals()->from_int(w * static_cast<long>(k - h))));
          if (w > 64) fail(ErrorKind::InseparableTower, "no primitive element for the splitting field");
        }
        next.minpoly = minpoly_over_level(*S, h, v);
        st.source = zpoly_text(z);
      } else {
        const Elem vj = Q->gen_top(*stage_of[st.j]);
        const std::size_t dj = minpoly_over_base(*Q, h, vj).size() - 1;
        std::uint64_t p = 0;
        for (std::size_t k = 0;; ++k) {
          p = nth_prime(k);
          KPoly b(dj + 1, Q->zero(h));
          b[0] = Q->from_int(h, -static_cast<long long>(p));
          b[dj] = Q->one(h);
          if (factor_over(*Q, h, b).irreducible()) break;
        }
        KPoly m(dj + 1, Q->zero(h));
        m[0] = Q->neg(Q->scale(Q->inv(Q->pow(h, vj, static_cast<unsigned>(dj))), rationals()->from_int(static_cast<long long>(p))));
        m[dj] = Q->one(h);
        next.minpoly = m;
        st.source = std::to_string(p);
      }
      if (Q->degree() * (next.minpoly.size() - 1) > max_degree)
        fail(ErrorKind::DegreeCapExceeded, "stage " + std::to_string(i) + " exceeds degree " + std::to_string(max_degree));
      st.degree = next.minpoly.size() - 1;
      st.stage = h;
      stage_of[i] = h;
      Q = Q->extend_unchecked(std::move(next));
    }
    r.stages.push_back(st);
  }
  r.tower = Q;
  const Tower& T = *Q;
  // basis claim: the monomials in the v_i span a space of full dimension
  std::vector<Elem> monos{T.one(T.height())};
  for (std::size_t s = 0; s < T.height(); ++s) {
    std::vector<Elem> next;
    Elem pw = T.one(T.height());
    for (unsigned e = 0; e < T.stage(s).degree; ++e) {
      for (const auto& m : monos) next.push_back(T.mul(m, pw));
      pw = T.mul(pw, T.gen_top(s));
    }
    monos = std::move(next);
  }
  r.basis_rank = rank_of(T.base(), monos);

  auto v = [&](std::size_t idx) -> std::optional<Elem> {
    if (idx >= stages || !stage_of[idx]) return std::nullopt;
    return T.gen_top(*stage_of[idx]);
  };
  for (std::size_t i = 0; i < stages; ++i) {
    if (!stage_of[i]) continue;
    for (std::size_t k : f)
      if (auto e = v(pair_code(i, k))) r.field_generators.push_back(*e);
    for (std::size_t k : g)
      if (auto e = v(pair_code(i, k))) r.field_generators.push_back(T.mul(*e, *v(i)));
  }
  // the nontrivial automorphism fixing F whose first moved v_i comes earliest
  std::optional<Embedding> best;
  std::size_t best_i = stages;
  for (auto& e : search_embedding(Q, Q, SearchMode::All)) {
    if (std::any_of(r.field_generators.begin(), r.field_generators.end(),
                    [&](const Elem& x) { return apply_to(e, x) != x; }))
      continue;
    for (std::size_t i = 0; i < stages && i < best_i; ++i)
      if (auto vi = v(i); vi && apply_to(e, *vi) != *vi) {
        best_i = i;
        best = e;
        break;
      }
  }
  if (!best) fail(ErrorKind::InvalidArgument, "no nontrivial automorphism fixes F on this prefix");
  r.moved_index = best_i;
  SeparationCertificate& c = r.certificate;
  c.f = f;
  c.g = g;
  c.tower = Q;
  c.map = best;
  c.field_generators = r.field_generators;
  for (std::size_t k : probes_of(f, g)) {
    const auto vk = v(pair_code(best_i, k));
    if (!vk) {
      r.undecided.push_back(k);
      continue;
    }
    const bool fixed = apply_to(*best, *vk) == *vk;
    c.evidence.push_back(SignEvidence{k, fixed ? 1 : -1});
    if (fixed) c.S.push_back(k);
  }
  bool ok = homomorphism_on_generators(*best, c.generator_pairs_checked);
  for (const auto& e : r.field_generators) ok = ok && apply_to(*best, e) == e;
  c.homomorphism_checked = ok;
  return r;
}

bool AcaReport::agrees() const {
  return std::all_of(probes.begin(), probes.end(), [](const RootModulusProbe& p) { return p.agrees; });
}

AcaReport aca_root_modulus_witness(const InjectionPrefix& g, std::size_t probe) {
  validate_prefixes({}, g);
  AcaReport r;
  std::vector<Scalar> rad;
  for (std::size_t k : g) rad.push_back(rational_prime(k));
  TowerPtr t = Tower::make(rationals());
  for (std::size_t k : g) {
    const std::size_t L = t->height();
    t = adjoin(t, KPoly{t->from_scalar(L, -rational_prime(k)), t->zero(L), t->one(L)}, "sqrt" + std::to_string(nth_prime(k)));
  }
  r.tower = t;
  RootModulus rm(t);
  for (std::size_t k = 0; k <= probe; ++k) {
    RootModulusProbe p;
    p.k = k;
    p.in_range = std::find(g.begin(), g.end(), k) != g.end();
    const auto roots = rm.roots({-rational_prime(k), rationals()->zero(), rationals()->one()});
    for (const auto& x : roots) p.roots.push_back(format_elem(*t, x));
    p.agrees = p.in_range == !roots.empty();
    r.probes.push_back(std::move(p));
  }
  return r;
}

Tower2Report tower2_witness(const InjectionPrefix& g, std::size_t stages, std::size_t max_degree) {
  validate_prefixes({}, g, true);
  auto odd_prime = [](std::size_t m) { return nth_prime(m + 1); };
  std::vector<std::size_t> in_range;
  for (std::size_t n : g)
    if (n < stages) in_range.push_back(n);
  std::sort(in_range.begin(), in_range.end());
  std::size_t degree = 1;
  for (std::size_t n = 0; n < stages; ++n) {
    const std::size_t p = odd_prime(n);
    degree *= std::binary_search(in_range.begin(), in_range.end(), n) ? p * (p - 1) : p;
  }
  if (degree > max_degree)
    fail(ErrorKind::DegreeCapExceeded, "the prefix has degree " + std::to_string(degree) + ", above the cap " +
                                           std::to_string(max_degree));
  const BaseField* Qb = rationals();
  auto binomial = [&](const TowerPtr& t, std::uint64_t p) {
    const std::size_t L = t->height();
    KPoly m(p + 1, t->zero(L));
    m[0] = t->from_int(L, -2);
    m[p] = t->one(L);
    return m;
  };
  TowerPtr F = Tower::make(Qb);
  std::vector<RootSelector> sel_f;
  for (std::size_t n : in_range) {
    const std::uint64_t p = odd_prime(n);
    const std::size_t L = F->height();
    KPoly cyc(p, F->one(L));
    F = adjoin(F, cyc, "z" + std::to_string(p));
    F = adjoin(F, binomial(F, p), "t" + std::to_string(p));
    sel_f.push_back(RootSelector::parse("primitive"));
    sel_f.push_back(RootSelector::parse("real"));
  }
  TowerPtr K = F, J = F;
  std::vector<RootSelector> sel_k = sel_f, sel_j = sel_f;
  for (std::size_t m = 0; m < stages; ++m) {
    if (std::binary_search(in_range.begin(), in_range.end(), m)) continue;
    const std::uint64_t p = odd_prime(m);
    K = adjoin(K, binomial(K, p), "y" + std::to_string(p));
    Stage st;
    st.name = "w" + std::to_string(p);
    st.minpoly = K->stage(K->height() - 1).minpoly;
    J = J->extend_unchecked(std::move(st));
    sel_k.push_back(RootSelector::parse("real"));
    QPoly xp(p + 1, Rational(0)), cyc(p, Rational(1));
    xp[0] = -2;
    xp[p] = 1;
    RootSelector v;
    v.kind = RootSelector::Kind::Value;
    v.value = designated_root(cyc, RootSelector::parse("primitive")) * designated_root(xp, RootSelector::parse("real"));
    sel_j.push_back(v);
  }
  Tower2Report r;
  r.field = F;
  r.k_tower = K;
  r.j_tower = J;
  const auto maps = search_embedding(K, J, SearchMode::First, F->height());
  if (maps.empty()) fail(ErrorKind::InvalidArgument, "no F-embedding of K into J on this prefix");
  r.map = maps.front();
  const ClosureEmbedding tk = embed_tower(K, sel_k), tj = embed_tower(J, sel_j);
  for (std::size_t s = 0; s < F->height(); ++s)
    if (tk.generator_images()[s] != tj.generator_images()[s])
      fail(ErrorKind::InconsistentChoice, "K and J place F differently in the closure");
  std::size_t next_y = F->height();
  for (std::size_t n = 0; n < stages; ++n) {
    Tower2Probe pr;
    pr.n = n;
    pr.prime = odd_prime(n);
    pr.in_range = std::binary_search(in_range.begin(), in_range.end(), n);
    std::size_t stage;
    if (pr.in_range) {
      stage = 2 * static_cast<std::size_t>(std::lower_bound(in_range.begin(), in_range.end(), n) - in_range.begin()) + 1;
    } else {
      stage = next_y++;
    }
    const Elem x = K->gen_top(stage);
    QPoly xp(pr.prime + 1, Rational(0));
    xp[0] = -2;
    xp[pr.prime] = 1;
    if (tk.image(x) != designated_root(xp, RootSelector::parse("real")))
      fail(ErrorKind::InconsistentChoice, "K does not contain the real root at the expected stage");
    const AlgebraicNumber img = tj.image(apply_to(r.map, x));
    pr.image = img.to_string();
    pr.real = img.is_real();
    pr.roots_in_j = roots_in(*J, kpoly_from_q(*J, J->height(), xp)).size();
    if (pr.real) r.decoded.push_back(n);
    r.probes.push_back(pr);
  }
  r.matches = r.decoded == in_range;
  return r;
}

std::vector<Scalar> base_primes(const BaseField* base, std::size_t count) {
  std::vector<Scalar> out;
  switch (base->kind()) {
    case BaseField::Kind::Rational:
      for (auto p : first_primes(count)) out.push_back(base->from_int(static_cast<long long>(p)));
      return out;
    case BaseField::Kind::Function: {
      const std::string d = base->descriptor().substr(base->descriptor().find(':') + 1);
      const std::string constants = (d.find('^') == std::string::npos ? "Fp:" : "Fq:") + d;
      for (const auto& poly : enumerate_irreducibles(constants, count)) {
        FqPoly num;
        for (const auto& c : poly) num.push_back(c.code());
        out.push_back(make_ratfunc(base, num, FqPoly{1}));
      }
      return out;
    }
    case BaseField::Kind::Finite:
      break;
  }
  fail(ErrorKind::UnsupportedBase, "no primes to enumerate in " + base->descriptor());
}

Membership roth_membership(const BaseField* base, const std::vector<Scalar>& ps, const std::vector<Scalar>& qs,
                           bool corollary) {
  if (qs.empty()) fail(ErrorKind::InvalidArgument, "the q list must be nonempty");
  std::vector<Scalar> all = ps;
  all.insert(all.end(), qs.begin(), qs.end());
  const TowerPtr t = sqrt_tower(base, all);
  const Tower& T = *t;
  std::vector<Elem> gens;
  for (std::size_t i = 0; i < ps.size(); ++i) gens.push_back(T.gen_top(i));
  const std::size_t q0 = ps.size();
  Elem cand = T.gen_top(q0);
  for (std::size_t j = 1; j < qs.size(); ++j) {
    if (corollary) {
      gens.push_back(T.mul(T.gen_top(q0), T.gen_top(q0 + j)));
    } else {
      cand = T.mul(cand, T.gen_top(q0 + j));
    }
  }
  return member(t, cand, gens);
}

RothSuite roth_suite(const BaseField* base, const std::vector<Scalar>& primes, std::size_t max_total, bool corollary) {
  RothSuite s;
  const std::size_t n = primes.size();
  std::vector<int> role(n, 0);  // 0 unused, 1 in p, 2 in q
  for (;;) {
    std::vector<Scalar> ps, qs;
    for (std::size_t i = 0; i < n; ++i) {
      if (role[i] == 1) ps.push_back(primes[i]);
      if (role[i] == 2) qs.push_back(primes[i]);
    }
    if (!qs.empty() && ps.size() + qs.size() <= max_total) {
      const std::size_t rotations = corollary ? qs.size() : 1;
      for (std::size_t r = 0; r < rotations; ++r) {
        std::rotate(qs.begin(), qs.begin() + static_cast<std::ptrdiff_t>(r ? 1 : 0), qs.end());
        ++s.cases;
        if (!roth_membership(base, ps, qs, corollary).member) ++s.non_members;
      }
    }
    std::size_t i = 0;
    while (i < n && role[i] == 2) role[i++] = 0;
    if (i == n) break;
    ++role[i];
  }
  return s;
}

}  // namespace cftk
