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

// Acceptance driver: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cftk/embed.hpp"
#include "cftk/factor.hpp"
#include "cftk/galois.hpp"
#include "cftk/subfield.hpp"
#include "cftk/witness.hpp"
#include "oracles.hpp"

using namespace cftk;

namespace {

struct Result {
  bool ok = true;
  std::string detail;
};

TowerPtr rat() { return Tower::make(rationals()); }

TowerPtr with(const TowerPtr& t, std::initializer_list<long> coeffs) {
  return adjoin(t, kpoly_from_q(*t, t->height(), qp::from_ints(coeffs)));
}

std::vector<Scalar> zpoly(std::initializer_list<long> c) {
  std::vector<Scalar> out;
  for (long v : c) out.push_back(rationals()->from_int(v));
  return out;
}

std::vector<ZPoly> library_factors(const ZPoly& f) {
  auto fac = factor_rational(qp::from_z(f));
  std::vector<ZPoly> out;
  for (auto& [g, m] : fac.factors)
    for (int i = 0; i < m; ++i) out.push_back(qp::primitive_part(g));
  std::sort(out.begin(), out.end(), [](const ZPoly& a, const ZPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return out;
}

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Result factoring_corpus() {
  const auto corpus = oracle::factor_corpus(500);
  std::size_t agree = 0, nontrivial = 0;
  for (const auto& f : corpus) {
    const auto lib = library_factors(f);
    if (lib == oracle::kronecker_factor(f)) ++agree;
    if (lib.size() > 1) ++nontrivial;
  }
  return {agree == corpus.size(), std::to_string(agree) + "/" + std::to_string(corpus.size()) + " agree, " +
                                      std::to_string(nontrivial) + " reducible"};
}

Result roth() {
  const auto primes = base_primes(rationals(), 6);
  const auto plain = roth_suite(rationals(), primes, 5, false);
  const auto cor = roth_suite(rationals(), primes, 4, true);
  // disjoint (P, Q) with Q nonempty: choose the support, then Q inside it
  std::size_t want_plain = 0, want_cor = 0;
  for (std::size_t t = 1; t <= 5; ++t) want_plain += binom(6, t) * ((std::size_t{1} << t) - 1);
  for (std::size_t t = 1; t <= 4; ++t) want_cor += binom(6, t) * t * (std::size_t{1} << (t - 1));
  const bool ok = plain.passed() && cor.passed() && plain.cases == want_plain && cor.cases == want_cor;
  return {ok, std::to_string(plain.non_members) + "/" + std::to_string(plain.cases) + " non-members, corollary " +
                  std::to_string(cor.non_members) + "/" + std::to_string(cor.cases)};
}

Result hungerford() {
  const TowerPtr Q = rat();
  const TowerPtr target = with(Q, {-2, 0, 1});
  const KPoly p = kpoly_from_q(*Q, 0, qp::from_ints({-2, 0, 1}));
  const Embedding phi = extend_iso_simple(identity_embedding(Q), p, target, target->neg(target->gen_top(0)));
  std::mt19937_64 rng(42);
  auto q = [&]() { return rationals()->from_rational(Rational(long(rng() % 201) - 100, long(rng() % 9) + 1)); };
  std::vector<Elem> xs;
  for (int i = 0; i < 100; ++i) xs.push_back({q(), q()});
  std::size_t formula = 0, hom = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Elem& x = xs[i];
    const Elem& y = xs[(i + 1) % xs.size()];
    if (apply_to(phi, x) == Elem{x[0], -x[1]}) ++formula;
    const bool add = apply_to(phi, target->add(x, y)) == target->add(apply_to(phi, x), apply_to(phi, y));
    const bool mul = apply_to(phi, target->mul(x, y)) == target->mul(apply_to(phi, x), apply_to(phi, y));
    if (add && mul) ++hom;
  }
  return {verify(phi) && formula == 100 && hom == 100,
          "formula " + std::to_string(formula) + "/100, homomorphism " + std::to_string(hom) + "/100"};
}

std::vector<InjectionPrefix> subsets_up_to(const std::vector<std::size_t>& pool, std::size_t max_size) {
  std::vector<InjectionPrefix> out{{}};
  for (std::size_t v : pool) {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i)
      if (out[i].size() < max_size) {
        auto s = out[i];
        s.push_back(v);
        out.push_back(s);
      }
  }
  return out;
}

bool certificate_holds(const SeparationCertificate& c) {
  for (std::size_t x : c.f)
    if (std::find(c.S.begin(), c.S.end(), x) == c.S.end()) return false;
  for (std::size_t x : c.g)
    if (std::find(c.S.begin(), c.S.end(), x) != c.S.end()) return false;
  return c.homomorphism_checked && c.map && verify(*c.map);
}

Result witnesses() {
  std::vector<std::size_t> pool{1, 2, 3, 4, 5, 6, 7, 8};
  const auto sets = subsets_up_to(pool, 3);
  std::size_t pairs = 0, diamond = 0, quartic = 0, charp = 0;
  for (const auto& f : sets)
    for (const auto& g : sets) {
      bool disjoint = true;
      for (auto x : f) disjoint = disjoint && std::find(g.begin(), g.end(), x) == g.end();
      if (!disjoint) continue;
      ++pairs;
      if (certificate_holds(diamond_witness(f, g))) ++diamond;
      const auto q = quartic_witness(f, g);
      if (certificate_holds(q.certificate) && q.non_automorphism) ++quartic;
      if (certificate_holds(charp_witness(3, f, g))) ++charp;
    }
  const bool ok = pairs == 3237 && diamond == pairs && quartic == pairs && charp == pairs;
  return {ok, std::to_string(pairs) + " pairs; diamond " + std::to_string(diamond) + ", quartic " +
                  std::to_string(quartic) + ", charp " + std::to_string(charp)};
}

Result galois() {
  const auto s3 = galois_correspondence(splitting_tower(rat(), zpoly({-2, 0, 0, 1})));
  const auto v4 = galois_correspondence(with(with(rat(), {-2, 0, 1}), {-3, 0, 1}));
  auto degrees_match = [](const GaloisCorrespondence& gc) {
    for (std::size_t i = 0; i < gc.subgroups.size(); ++i)
      if (gc.field_degrees[i] * gc.subgroups[i].elements.size() != gc.group.order()) return false;
    return true;
  };
  const bool ok = s3.group.order() == 6 && s3.subgroups.size() == 6 && s3.fields.size() == 6 && s3.verified() &&
                  v4.group.order() == 4 && v4.subgroups.size() == 5 && v4.fields.size() == 5 && v4.verified() &&
                  degrees_match(s3) && degrees_match(v4);
  return {ok, "S3 " + std::to_string(s3.subgroups.size()) + "<->" + std::to_string(s3.fields.size()) + ", V4 " +
                  std::to_string(v4.subgroups.size()) + "<->" + std::to_string(v4.fields.size())};
}

Result normality() {
  struct Case {
    TowerPtr t;
    std::size_t base;
  };
  TowerPtr quartic = with(with(with(rat(), {-3, 0, 1}), {-10, 0, 1}), {-2, 0, 1});
  quartic = adjoin(quartic, KPoly{quartic->neg(quartic->gen_top(2)), quartic->zero(3), quartic->one(3)});
  const std::vector<Case> corpus{
      {with(rat(), {-2, 0, 1}), 0},
      {with(rat(), {-2, 0, 0, 1}), 0},
      {splitting_tower(rat(), zpoly({-2, 0, 0, 1})), 0},
      {with(with(rat(), {-2, 0, 1}), {-3, 0, 1}), 0},
      {with(rat(), {1, 1, 1}), 0},
      {with(rat(), {-2, 0, 0, 0, 1}), 0},
      {with(rat(), {1, -3, 0, 1}), 0},
      {with(rat(), {-1, 0, -2, 0, 1}), 0},
      {with(rat(), {1, 1, 1, 1, 1}), 0},
      {with(with(rat(), {-2, 0, 1}), {-3, 0, 1}), 1},
      {quartic, 2},
  };
  std::size_t chains = 0;
  for (const auto& c : corpus) {
    bool v[5];
    int k = 0;
    for (auto w : {NormalCheck::Gal, NormalCheck::N1, NormalCheck::N2, NormalCheck::N3, NormalCheck::N4})
      v[k++] = check_normal(c.t, c.base, w, 1).holds;
    if ((!v[0] || v[1]) && v[1] == v[2] && (!v[2] || v[3]) && (!v[3] || v[4])) ++chains;
  }
  const auto n1 = check_normal(quartic, 2, NormalCheck::N1);
  const auto n3 = check_normal(quartic, 2, NormalCheck::N3, 0);
  const bool witness = !n1.holds && n1.certificate == "x^4-2" && !n3.holds && n3.embedding && verify(*n3.embedding) &&
                       fixes_prefix(*n3.embedding, 2) && !lands_in(*n3.embedding, quartic->height());
  return {chains == corpus.size() && witness,
          std::to_string(chains) + "/" + std::to_string(corpus.size()) + " chains, quartic certificate " +
              n1.certificate + (witness ? " with non-automorphism" : " without non-automorphism")};
}

Result tower2() {
  const auto out = tower2_witness({}, 1);
  const auto in = tower2_witness({0}, 1);
  const bool ok = out.probes.size() == 1 && in.probes.size() == 1 && out.probes[0].prime == 3 &&
                  !out.probes[0].in_range && !out.probes[0].real && in.probes[0].in_range && in.probes[0].real &&
                  out.matches && in.matches;
  return {ok, "0 outside ran(g): " + out.probes[0].image + (out.probes[0].real ? " real" : " non-real") +
                  "; 0 in ran(g): " + in.probes[0].image + (in.probes[0].real ? " real" : " non-real")};
}

bool within(const std::optional<std::size_t>& d, std::size_t n) { return !d || *d >= n; }

Result metric() {
  const auto G = aut_group(with(with(rat(), {-2, 0, 1}), {-3, 0, 1}));
  const auto d = distance_table(G);
  std::size_t triples = 0, good = 0;
  // exponents: larger means closer; nothing means equal
  auto le = [](const std::optional<std::size_t>& x, const std::optional<std::size_t>& y) {
    if (!x) return true;
    if (!y) return false;
    return *x >= *y;
  };
  for (std::size_t a = 0; a < G.order(); ++a)
    for (std::size_t b = 0; b < G.order(); ++b)
      for (std::size_t c = 0; c < G.order(); ++c) {
        ++triples;
        const auto& m = le(d[a][b], d[b][c]) ? d[b][c] : d[a][b];
        const bool sym = d[a][b] == d[b][a] && (!d[a][b]) == (a == b);
        if (le(d[a][c], m) && sym) ++good;
      }
  std::size_t stages_ok = 0;
  for (const auto& group : {G, aut_group(splitting_tower(rat(), zpoly({-2, 0, 0, 1})))}) {
    const auto w = dense_sequence(group, 6);
    for (std::size_t n = 0; n < w.bound.size() && n <= 6; ++n) {
      bool all = true;
      for (const auto& psi : group.elements) {
        bool near = false;
        for (std::size_t i = 0; i < w.bound[n] && !near; ++i)
          near = within(aut_distance(psi, group.elements[w.sequence[i]]), n);
        all = all && near;
      }
      if (all) ++stages_ok;
    }
    if (!check_dense(group, w) || w.bound.size() != 7) stages_ok = 0;
  }
  return {triples == 64 && good == 64 && stages_ok == 14,
          std::to_string(good) + "/" + std::to_string(triples) + " ultrametric triples, " +
              std::to_string(stages_ok) + "/14 dense stages"};
}

Result carro_rothalt() {
  const auto one = cube_root_basis_check({FqPoly{0, 1}});
  const auto two = cube_root_basis_check({FqPoly{0, 1}, FqPoly{1, 1}});
  const BaseField* K = BaseField::get("RatFunc:3");
  const auto primes = base_primes(K, 4);
  const auto s = roth_suite(K, primes, 4, false);
  std::size_t want = 0;
  for (std::size_t t = 1; t <= 4; ++t) want += binom(4, t) * ((std::size_t{1} << t) - 1);
  const bool ok = one.independent && one.rank == 3 && two.independent && two.rank == 9 && s.passed() && s.cases == want;
  return {ok, "ranks " + std::to_string(one.rank) + " and " + std::to_string(two.rank) + ", GF(3)(t) suite " +
                  std::to_string(s.non_members) + "/" + std::to_string(s.cases)};
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

std::pair<int, std::string> run_cli_process(const std::vector<std::string>& args) {
  std::string cmd = shell_quote(CFTK_CLI_PATH);
  for (const auto& a : args) cmd += " " + shell_quote(a);
  cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Result determinism() {
  const std::string dir = CFTK_GOLDEN_DIR;
  std::ifstream in(dir + "/cases.json");
  const auto cases = nlohmann::json::parse(in);
  std::size_t same = 0, golden = 0;
  for (const auto& c : cases) {
    const auto args = c["args"].get<std::vector<std::string>>();
    const auto a = run_cli_process(args), b = run_cli_process(args);
    if (a == b && a.first == c["exit"].get<int>()) ++same;
    std::ifstream g(dir + "/" + c["name"].get<std::string>() + ".json");
    std::stringstream ss;
    ss << g.rdbuf();
    if (ss.str() == a.second) ++golden;
  }
  return {same == cases.size() && golden == cases.size(),
          std::to_string(same) + "/" + std::to_string(cases.size()) + " identical across runs, " +
              std::to_string(golden) + " match golden files"};
}

}  // namespace

int main(int argc, char** argv) {
  // optional arguments restrict the run to the listed criteria
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  struct Criterion {
    int id;
    const char* name;
    double limit;  // seconds, 0 for none
    std::function<Result()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "factorization oracle equivalence", 60, factoring_corpus},
      {2, "Roth suite over Q", 30, roth},
      {3, "isomorphism extension", 0, hungerford},
      {4, "separating-set witnesses", 120, witnesses},
      {5, "Galois correspondence counts", 0, galois},
      {6, "normality corpus", 0, normality},
      {7, "tower2 desk check", 0, tower2},
      {8, "metric suite", 0, metric},
      {9, "cube roots and Roth over GF(3)(t)", 60, carro_rothalt},
      {10, "CLI determinism", 0, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.limit == 0 || secs < c.limit;
    const bool pass = r.ok && in_time;
    failures += pass ? 0 : 1;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << "criterion " << c.id << " [" << c.name << "]: " << (pass ? "PASS" : "FAIL") << " (" << timing
              << (in_time ? "" : ", over the time limit") << ") " << r.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
