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

#include "cftk/cli.hpp"

#include <CLI11.hpp>

#include "cftk/factor.hpp"
#include "cftk/galois.hpp"
#include "cftk/json_io.hpp"
#include "cftk/primitive.hpp"
#include "cftk/subfield.hpp"
#include "cftk/witness.hpp"

namespace cftk {

namespace {

using io::Json;

struct Options {
  std::string field = "Q", source, target, poly, elem, gens, base = "Q", check = "n1", name, map, phi, psi, kind;
  std::string f, g, p_list, q_list, restrict_to;
  std::size_t level = std::numeric_limits<std::size_t>::max();
  std::size_t stages = 0, fixed = 0, count = 6, max_total = 5, probe = 4, dense = 0;
  std::size_t max_degree = 0;
  std::uint64_t prime = 3;
  bool all = false, closure = false, corollary = false, suite = false, table = false;
};

struct Outcome {
  Json json;
  int code = 0;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

InjectionPrefix parse_prefix(const std::string& text) {
  InjectionPrefix out;
  for (const auto& s : split_list(text)) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit) || s.size() > 9)
      fail(ErrorKind::ParseError, "injection values must be natural numbers, got \"" + s + "\"");
    out.push_back(std::stoul(s));
  }
  return out;
}

Json parse_json_arg(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error&) {
    fail(ErrorKind::ParseError, "malformed JSON for " + what);
  }
}

/// "Q" or a base descriptor names level 0; otherwise a level number or a stage name.
std::size_t parse_level(const Tower& T, const std::string& text) {
  if (text == T.base()->descriptor() || text == "Q") return 0;
  for (std::size_t i = 0; i < T.height(); ++i)
    if (T.stage(i).name == text) return i + 1;
  if (!text.empty() && std::all_of(text.begin(), text.end(), ::isdigit) && text.size() < 6) {
    const std::size_t k = std::stoul(text);
    if (k <= T.height()) return k;
  }
  fail(ErrorKind::InvalidArgument, "no level \"" + text + "\" in " + T.describe());
}

std::size_t top_or(const Tower& T, std::size_t level) {
  if (level == std::numeric_limits<std::size_t>::max()) return T.height();
  if (level > T.height()) fail(ErrorKind::InvalidArgument, "level beyond the tower height");
  return level;
}

std::vector<Elem> parse_elems(const Tower& T, const std::string& text) {
  std::vector<Elem> out;
  if (!text.empty() && text.front() == '[') {
    Json j = parse_json_arg(text, "element list");
    if (j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_array() || x.is_string(); })) {
      for (const auto& x : j)
        out.push_back(x.is_string() ? io::parse_elem(T, x.get<std::string>()) : io::elem_from_json(T, T.height(), x));
      return out;
    }
  }
  for (const auto& s : split_list(text)) out.push_back(io::parse_elem(T, s));
  return out;
}

std::vector<Scalar> parse_scalars(const BaseField* K, const std::string& text) {
  std::vector<Scalar> out;
  for (const auto& s : split_list(text)) out.push_back(K->parse(s));
  return out;
}

Outcome cmd_factor(const Options& o) {
  TowerPtr T = io::parse_field(o.field);
  const std::size_t level = top_or(*T, o.level);
  KPoly f = io::kpoly_from_json(*T, level, parse_json_arg(o.poly, "--poly"));
  Json out = io::to_json(factor_over(*T, level, kp::lift(*T, f, level, level)), *T);
  out["field"] = T->describe();
  return {out};
}

Outcome cmd_roots(const Options& o) {
  TowerPtr T = io::parse_field(o.field);
  if (o.closure) {
    if (T->base() != rationals() || T->height() != 0)
      fail(ErrorKind::UnsupportedDomain, "closure roots are available for polynomials over Q");
    QPoly p;
    for (const auto& c : parse_json_arg(o.poly, "--poly")) p.push_back(rationals()->parse(c.is_string() ? c.get<std::string>() : c.dump()).rational());
    qp::trim(p);
    if (p.empty()) fail(ErrorKind::ZeroPolynomial, "zero polynomial");
    Json roots = Json::array();
    for (const auto& r : AlgebraicNumber::roots_of(p)) roots.push_back(io::to_json(r));
    return {{{"roots", roots}, {"count", roots.size()}}};
  }
  const std::size_t level = top_or(*T, o.level);
  KPoly f = io::kpoly_from_json(*T, level, parse_json_arg(o.poly, "--poly"));
  Json roots = Json::array(), texts = Json::array();
  for (const auto& r : roots_in(*T, level, f)) {
    roots.push_back(io::to_json(r));
    texts.push_back(format_elem(*T, T->lift(r, level, T->height())));
  }
  return {{{"roots", roots}, {"text", texts}, {"count", roots.size()}, {"field", T->describe()}}};
}

Outcome cmd_minpoly(const Options& o) {
  TowerPtr T = io::parse_field(o.field);
  const std::size_t h = T->height();
  const Elem a = io::parse_elem(*T, o.elem);
  const std::size_t level = o.level == std::numeric_limits<std::size_t>::max() ? 0 : top_or(*T, o.level);
  KPoly m = minpoly_over_level(*T, level, a);
  return {{{"minpoly", io::to_json(m)},
           {"text", format_kpoly(*T, kp::lift(*T, m, level, h))},
           {"degree", m.size() - 1},
           {"level", level}}};
}

Outcome cmd_primitive(const Options& o) {
  TowerPtr T = io::parse_field(o.field);
  const auto pe = primitive_element(*T, T->height());
  Json mp = Json::array();
  for (const auto& c : pe.minpoly) mp.push_back(io::to_json(c));
  return {{{"gamma", io::to_json(pe.gamma)},
           {"text", format_elem(*T, pe.gamma)},
           {"weights", pe.weights},
           {"minpoly", mp}}};
}

Outcome cmd_adjoin(const Options& o) {
  TowerPtr T = io::parse_field(o.field);
  KPoly m = io::kpoly_from_json(*T, T->height(), parse_json_arg(o.poly, "--poly"));
  if (m.size() < 2) fail(ErrorKind::InvalidArgument, "stage polynomial must be nonconstant");
  m = kp::monic(*T, T->height(), m);
  return {io::to_json(*adjoin(T, m, o.name.empty() ? "a" + std::to_string(T->height()) : o.name))};
}

Outcome cmd_member(const Options& o) {
  TowerPtr T = io::parse_field(o.field);
  return {io::to_json(member(T, io::parse_elem(*T, o.elem), parse_elems(*T, o.gens)))};
}

Outcome cmd_embed(const Options& o) {
  TowerPtr S = io::parse_field(o.source.empty() ? o.field : o.source);
  TowerPtr T = o.target.empty() ? S : io::parse_field(o.target);
  if (!o.map.empty()) {
    Embedding e = io::embedding_from_json(S, T, parse_json_arg(o.map, "--map"));
    const bool ok = verify(e);
    return {{{"verified", ok}, {"fixes", fixes_prefix(e, std::min(o.fixed, S->height()))}}, 0};
  }
  auto found = search_embedding(S, T, o.all ? SearchMode::All : SearchMode::First, o.fixed);
  Json list = Json::array();
  for (const auto& e : found) list.push_back(io::to_json(e));
  return {{{"count", found.size()}, {"embeddings", list}, {"exists", !found.empty()}}};
}

Outcome cmd_aut(const Options& o) {
  TowerPtr T = io::parse_field(o.field);
  return {io::to_json(aut_group(T, parse_level(*T, o.base)))};
}

Outcome cmd_normal(const Options& o) {
  TowerPtr T = io::parse_field(o.field);
  return {io::to_json(check_normal(T, parse_level(*T, o.base), parse_normal_check(o.check), o.stages ? o.stages : 1))};
}

Outcome cmd_galois(const Options& o) {
  TowerPtr T = io::parse_field(o.field);
  const std::size_t base = parse_level(*T, o.base);
  if (!o.restrict_to.empty()) {
    auto r = restriction_hom(aut_group(T, base), parse_elems(*T, o.restrict_to));
    return {io::to_json(r), r.kernel_is_fixer && r.surjective && r.kernel_normal ? 0 : 1};
  }
  auto gc = galois_correspondence(T, base);
  return {io::to_json(gc), gc.verified() ? 0 : 1};
}

Json exponent_json(const std::optional<std::size_t>& n) { return n ? Json(*n) : Json(nullptr); }

Outcome cmd_distance(const Options& o) {
  if (!o.phi.empty() && o.phi.front() == '{') {
    Embedding phi = io::embedding_from_json(nullptr, nullptr, parse_json_arg(o.phi, "--phi"));
    Embedding psi = io::embedding_from_json(phi.source, phi.target, parse_json_arg(o.psi, "--psi"));
    if (phi.source->degree() != phi.target->degree() || !verify(phi) || !verify(psi))
      fail(ErrorKind::InvalidArgument, "distance needs automorphisms of one field");
    const auto n = aut_distance(phi, psi);
    return {{{"exponent", exponent_json(n)}, {"distance", n ? "2^-" + std::to_string(*n) : "0"}}};
  }
  TowerPtr T = io::parse_field(o.field);
  const AutGroup G = aut_group(T, parse_level(*T, o.base));
  Json out = {{"order", G.order()}};
  if (o.table) {
    Json rows = Json::array();
    for (const auto& row : distance_table(G)) {
      Json r = Json::array();
      for (const auto& n : row) r.push_back(exponent_json(n));
      rows.push_back(r);
    }
    out["table"] = rows;
  }
  if (o.dense > 0) {
    const auto w = dense_sequence(G, o.dense);
    out["dense"] = {{"sequence", w.sequence}, {"bound", w.bound}, {"checked", check_dense(G, w)}};
  }
  if (!o.phi.empty() || !o.psi.empty()) {
    auto index = [&](const std::string& s) {
      if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit) || s.size() > 6 || std::stoul(s) >= G.order())
        fail(ErrorKind::InvalidArgument, "automorphism index out of range: \"" + s + "\"");
      return std::stoul(s);
    };
    const auto n = aut_distance(G.elements[index(o.phi)], G.elements[index(o.psi)]);
    out["exponent"] = exponent_json(n);
    out["distance"] = n ? "2^-" + std::to_string(*n) : "0";
  }
  const bool dense_ok = !out.contains("dense") || out["dense"]["checked"].get<bool>();
  return {out, dense_ok ? 0 : 1};
}

Outcome cmd_witness(const Options& o) {
  const InjectionPrefix f = parse_prefix(o.f), g = parse_prefix(o.g);
  if (o.kind == "diamond") {
    auto c = diamond_witness(f, g);
    return {io::to_json(c), c.valid() ? 0 : 1};
  }
  if (o.kind == "quartic") {
    auto r = quartic_witness(f, g);
    return {io::to_json(r), r.certificate.valid() && r.non_automorphism ? 0 : 1};
  }
  if (o.kind == "charp") {
    auto c = charp_witness(o.prime, f, g);
    return {io::to_json(c), c.valid() ? 0 : 1};
  }
  if (o.kind == "mn") {
    const std::size_t cap = o.max_degree ? o.max_degree : 256;
    MnReport r = mn_witness(f, g, o.stages ? o.stages : 1, cap);
    for (std::size_t n = 2; o.stages == 0 && !r.undecided.empty(); ++n) r = mn_witness(f, g, n, cap);
    if (!r.undecided.empty()) {
      std::string vals;
      for (auto v : r.undecided) vals += (vals.empty() ? "" : ",") + std::to_string(v);
      throw Error(ErrorKind::InvalidArgument, "too few stages to decide every value of f and g").with_detail(vals);
    }
    return {io::to_json(r), r.certificate.valid() ? 0 : 1};
  }
  if (o.kind == "aca") {
    auto r = aca_root_modulus_witness(g, o.probe);
    return {io::to_json(r), r.agrees() ? 0 : 1};
  }
  if (o.kind == "tower2") {
    auto r = tower2_witness(g, o.stages ? o.stages : 1, o.max_degree ? o.max_degree : 30);
    return {io::to_json(r), r.matches ? 0 : 1};
  }
  fail(ErrorKind::InvalidArgument, "unknown witness kind: " + o.kind);
}

Outcome cmd_roth(const Options& o) {
  const BaseField* K = BaseField::get(o.base);
  if (o.suite) {
    auto s = roth_suite(K, base_primes(K, o.count), o.max_total, o.corollary);
    return {{{"cases", s.cases}, {"non_members", s.non_members}, {"passed", s.passed()}}, s.passed() ? 0 : 1};
  }
  auto qs = parse_scalars(K, o.q_list);
  if (qs.empty()) fail(ErrorKind::InvalidArgument, "roth needs at least one q");
  Json out = io::to_json(roth_membership(K, parse_scalars(K, o.p_list), qs, o.corollary));
  out["corollary"] = o.corollary;
  return {out};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cftk: exact computations with explicit field towers", "cftk"};
  app.require_subcommand(1);
  Options o;
  auto field_opt = [&](CLI::App* c) {
    c->add_option("--field", o.field, "field: JSON tower, or a base descriptor and generators such as Q,sqrt:2,zeta:3");
  };
  auto base_opt = [&](CLI::App* c) { c->add_option("--base", o.base, "base level: Q, a level number or a stage name"); };

  auto* factor = app.add_subcommand("factor", "factor a polynomial over a field");
  field_opt(factor);
  factor->add_option("--poly", o.poly, "coefficients, constant first")->required();
  factor->add_option("--level", o.level, "tower level holding the coefficients");

  auto* roots = app.add_subcommand("roots", "roots of a polynomial in a field or in the algebraic closure");
  field_opt(roots);
  roots->add_option("--poly", o.poly, "coefficients, constant first")->required();
  roots->add_option("--level", o.level, "tower level holding the coefficients");
  roots->add_flag("--closure", o.closure, "all complex roots of a rational polynomial");

  auto* minpoly = app.add_subcommand("minpoly", "minimal polynomial of an element");
  field_opt(minpoly);
  minpoly->add_option("--elem", o.elem, "coordinates, a stage name or gen:<i>")->required();
  minpoly->add_option("--level", o.level, "coefficient level (default 0)");

  auto* primitive = app.add_subcommand("primitive", "primitive element of a tower");
  field_opt(primitive);

  auto* adj = app.add_subcommand("adjoin", "adjoin a root of an irreducible polynomial");
  field_opt(adj);
  adj->add_option("--poly", o.poly, "coefficients over the top level, constant first")->required();
  adj->add_option("--name", o.name, "name of the new generator");

  auto* mem = app.add_subcommand("member", "membership in the subfield generated by elements");
  field_opt(mem);
  mem->add_option("--elem", o.elem, "candidate element")->required();
  mem->add_option("--gens", o.gens, "generators: JSON list or comma-separated names")->required();

  auto* emb = app.add_subcommand("embed", "search for or verify embeddings between towers");
  field_opt(emb);
  emb->add_option("--source", o.source, "source field (default --field)");
  emb->add_option("--target", o.target, "target field (default the source)");
  emb->add_option("--fixed", o.fixed, "number of shared levels to fix");
  emb->add_option("--map", o.map, "embedding JSON to verify instead of searching");
  emb->add_flag("--all", o.all, "list every embedding");

  auto* aut = app.add_subcommand("aut", "automorphism group over a base level");
  field_opt(aut);
  base_opt(aut);

  auto* normal = app.add_subcommand("normal", "one of the normality conditions");
  field_opt(normal);
  base_opt(normal);
  normal->add_option("--check", o.check, "n1, n2, n3, n4 or gal");
  normal->add_option("--stages", o.stages, "closure stages beyond the conjugates (default 1)");

  auto* gal = app.add_subcommand("galois", "Galois correspondence lattice");
  field_opt(gal);
  base_opt(gal);
  gal->add_option("--restrict", o.restrict_to, "generators of a stable subfield for the restriction map");

  auto* dist = app.add_subcommand("distance", "metric on automorphisms");
  field_opt(dist);
  base_opt(dist);
  dist->add_option("--phi", o.phi, "automorphism index or embedding JSON");
  dist->add_option("--psi", o.psi, "automorphism index or embedding JSON");
  dist->add_flag("--table", o.table, "all pairwise distances");
  dist->add_option("--dense", o.dense, "dense sequence checked to this many stages");

  auto* wit = app.add_subcommand("witness", "separating-set and reversal witnesses");
  wit->add_option("kind", o.kind, "diamond, quartic, charp, mn, aca or tower2")->required();
  wit->add_option("--f", o.f, "prefix of f, comma-separated");
  wit->add_option("--g", o.g, "prefix of g, comma-separated");
  wit->add_option("--p", o.prime, "characteristic for charp");
  wit->add_option("--stages", o.stages, "stages to build (mn: smallest that decides f and g; tower2: 1)");
  wit->add_option("--max-degree", o.max_degree, "degree cap (mn 256, tower2 30)");
  wit->add_option("--probe", o.probe, "largest probed value (aca)");

  auto* roth = app.add_subcommand("roth", "square roots of prime products");
  roth->add_option("--base", o.base, "base field descriptor");
  roth->add_option("--p", o.p_list, "primes whose roots generate the field");
  roth->add_option("--q", o.q_list, "primes in the tested product");
  roth->add_flag("--corollary", o.corollary, "test sqrt q1 against sqrt p_i and sqrt(q1 q_j)");
  roth->add_flag("--suite", o.suite, "every disjoint split of the first primes");
  roth->add_option("--count", o.count, "number of primes in the suite");
  roth->add_option("--max-total", o.max_total, "largest n + r in the suite");

  std::vector<std::string> argv_store{"cftk"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    out << io::dump({{"error", "ParseError"}, {"message", e.what()}});
    err << app.help();
    return 2;
  }

  const std::vector<std::pair<CLI::App*, Outcome (*)(const Options&)>> table{
      {factor, cmd_factor}, {roots, cmd_roots},   {minpoly, cmd_minpoly}, {primitive, cmd_primitive},
      {adj, cmd_adjoin},    {mem, cmd_member},    {emb, cmd_embed},       {aut, cmd_aut},
      {normal, cmd_normal}, {gal, cmd_galois},    {dist, cmd_distance},   {wit, cmd_witness},
      {roth, cmd_roth}};
  try {
    for (const auto& [sub, handler] : table) {
      if (!sub->parsed()) continue;
      Outcome r = handler(o);
      out << io::dump(r.json);
      return r.code;
    }
  } catch (const Error& e) {
    out << io::dump(io::to_json(e));
    return 2;
  }
  return 2;
}

}  // namespace cftk
