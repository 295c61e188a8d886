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

#include "cftk/json_io.hpp"

#include <algorithm>
#include <limits>

#include "cftk/factor.hpp"

namespace cftk::io {

namespace {

std::string text_of(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  fail(ErrorKind::ParseError, "expected a scalar, found " + j.dump());
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

std::vector<std::string> split_top(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '[' || c == '{') ++depth;
    if (c == ']' || c == '}') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

bool is_descriptor(const std::string& s) {
  return s == "Q" || s.rfind("Fp:", 0) == 0 || s.rfind("Fq:", 0) == 0 || s.rfind("RatFunc:", 0) == 0;
}

unsigned parse_count(const std::string& s, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit) || s.size() > 6)
    fail(ErrorKind::ParseError, "bad " + what + ": " + s);
  return static_cast<unsigned>(std::stoul(s));
}

QPoly cyclotomic(unsigned m) {
  QPoly p(m + 1, Rational(0));
  p[0] = -1;
  p[m] = 1;
  for (unsigned d = 1; d < m; ++d)
    if (m % d == 0) p = qp::quo(p, cyclotomic(d));
  return p;
}

std::string name_for(const std::string& kind, const std::string& arg) {
  std::string out = kind;
  for (char c : arg) {
    if (std::isalnum(static_cast<unsigned char>(c))) out += c;
    else if (c == '-') out += 'm';
    else if (c == ':') out += '_';
    else return "";
  }
  return out;
}

/// x^k - n over the base, for a base-field scalar n.
std::vector<Scalar> binomial(const BaseField* K, unsigned k, const Scalar& n) {
  std::vector<Scalar> p(k + 1, K->zero());
  p[0] = -n;
  p[k] = K->one();
  return p;
}

TowerPtr apply_generator(const TowerPtr& t, const std::string& token) {
  const BaseField* K = t->base();
  const std::size_t h = t->height();
  auto adjoin_base = [&](const std::vector<Scalar>& p, const std::string& name) {
    return adjoin(t, kp::from_base(*t, h, p), name.empty() ? "a" + std::to_string(h) : name);
  };
  if (token.rfind("sqrt:", 0) == 0) {
    const std::string arg = token.substr(5);
    return adjoin_base(binomial(K, 2, K->parse(arg)), name_for("sqrt", arg));
  }
  if (token.rfind("root:", 0) == 0) {
    const auto colon = token.find(':', 5);
    if (colon == std::string::npos) fail(ErrorKind::ParseError, "expected root:<k>:<n>, got " + token);
    const unsigned k = parse_count(token.substr(5, colon - 5), "root degree");
    if (k < 2) fail(ErrorKind::InvalidArgument, "root degree must be at least 2");
    const std::string arg = token.substr(colon + 1);
    return adjoin_base(binomial(K, k, K->parse(arg)), name_for("root" + std::to_string(k) + "_", arg));
  }
  if (token.rfind("zeta:", 0) == 0) {
    const unsigned m = parse_count(token.substr(5), "cyclotomic index");
    if (m < 3) fail(ErrorKind::InvalidArgument, "zeta:m needs m >= 3");
    std::vector<Scalar> p;
    for (const auto& c : cyclotomic(m)) p.push_back(K->from_rational(c));
    return adjoin_base(p, "zeta" + std::to_string(m));
  }
  if (token.rfind("split:", 0) == 0) {
    std::vector<Scalar> p;
    for (const auto& c : split_top(token.substr(6), ';')) p.push_back(K->parse(c));
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    if (p.size() < 2) fail(ErrorKind::ZeroPolynomial, "split: needs a nonconstant polynomial");
    return splitting_tower(t, p, "a" + std::to_string(h) + "_");
  }
  fail(ErrorKind::ParseError, "unknown generator expression: " + token);
}

Json texts(const Tower& T, const std::vector<Elem>& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(format_elem(T, e));
  return out;
}

Json embedding_texts(const Embedding& e) {
  Json out = Json::array();
  for (const auto& img : e.images) out.push_back(format_elem(*e.target, img));
  return out;
}

Json interval_json(const Interval& i) { return Json::array({i.lo.get_str(), i.hi.get_str()}); }

Json qpoly_json(const QPoly& p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(c.get_str());
  return out;
}

std::string pair_name(char kind, std::size_t i) { return std::string(1, kind) + std::to_string(i); }

}  // namespace

Json to_json(const Scalar& s) {
  if (s.field()->kind() == BaseField::Kind::Finite) return s.code();
  return s.to_string();
}

Scalar scalar_from_json(const BaseField* K, const Json& j) { return K->parse(text_of(j)); }

Json to_json(const Elem& e) {
  Json out = Json::array();
  for (const auto& s : e) out.push_back(to_json(s));
  return out;
}

Elem elem_from_json(const Tower& T, std::size_t level, const Json& j) {
  if (!j.is_array()) return T.from_scalar(level, scalar_from_json(T.base(), j));
  if (j.size() != T.dim(level))
    fail(ErrorKind::ParseError, "element needs " + std::to_string(T.dim(level)) + " coordinates, got " +
                                    std::to_string(j.size()));
  Elem out;
  for (const auto& c : j) out.push_back(scalar_from_json(T.base(), c));
  return out;
}

Json to_json(const KPoly& p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(c.size() == 1 ? to_json(c[0]) : to_json(c));
  return out;
}

KPoly kpoly_from_json(const Tower& T, std::size_t level, const Json& j) {
  if (!j.is_array()) fail(ErrorKind::ParseError, "polynomial must be a JSON array");
  KPoly out;
  for (const auto& c : j) out.push_back(elem_from_json(T, level, c));
  kp::trim(out);
  return out;
}

Json to_json(const Tower& T) {
  Json stages = Json::array();
  for (const auto& s : T.stages()) stages.push_back({{"name", s.name}, {"minpoly", to_json(s.minpoly)}});
  return {{"base", T.base()->descriptor()}, {"stages", stages}};
}

TowerPtr tower_from_json(const Json& j) {
  if (j.is_string()) return parse_field(j.get<std::string>());
  if (!j.is_object() || !j.contains("base")) fail(ErrorKind::ParseError, "tower JSON needs a \"base\" entry");
  TowerPtr t = Tower::make(BaseField::get(text_of(j.at("base"))));
  if (!j.contains("stages")) return t;
  for (const auto& st : j.at("stages")) {
    if (st.is_string()) {
      t = apply_generator(t, st.get<std::string>());
      continue;
    }
    if (!st.is_object() || !st.contains("minpoly")) fail(ErrorKind::ParseError, "stage needs a \"minpoly\" entry");
    const std::string name = st.contains("name") ? st.at("name").get<std::string>() : "a" + std::to_string(t->height());
    KPoly m = kpoly_from_json(*t, t->height(), st.at("minpoly"));
    if (m.size() < 2) fail(ErrorKind::InvalidArgument, "stage polynomial must be nonconstant");
    m = kp::monic(*t, t->height(), m);
    t = adjoin(t, m, name);
  }
  return t;
}

TowerPtr parse_field(const std::string& raw) {
  std::string text = raw;
  text.erase(std::remove_if(text.begin(), text.end(), ::isspace), text.end());
  if (text.empty()) fail(ErrorKind::ParseError, "empty field description");
  if (text[0] == '{') return tower_from_json(parse_json_text(text));
  auto tokens = split_top(text, ',');
  std::size_t i = 0;
  const BaseField* K = rationals();
  if (is_descriptor(tokens[0])) K = BaseField::get(tokens[i++]);
  TowerPtr t = Tower::make(K);
  for (; i < tokens.size(); ++i) t = apply_generator(t, tokens[i]);
  return t;
}

Elem parse_elem(const Tower& T, const std::string& raw) {
  std::string text = raw;
  text.erase(std::remove_if(text.begin(), text.end(), ::isspace), text.end());
  const std::size_t h = T.height();
  if (text.rfind("gen:", 0) == 0) {
    const unsigned i = parse_count(text.substr(4), "generator index");
    if (i >= h) fail(ErrorKind::InvalidArgument, "no generator " + text);
    return T.gen_top(i);
  }
  for (std::size_t i = 0; i < h; ++i)
    if (T.stage(i).name == text) return T.gen_top(i);
  if (!text.empty() && text[0] == '[') {
    // a coordinate array, unless the base is a function field and this is one scalar
    Json j = parse_json_text(text);
    if (j.size() == T.dim(h) || T.base()->kind() != BaseField::Kind::Function) return elem_from_json(T, h, j);
  }
  return T.from_scalar(h, T.base()->parse(text));
}

Json to_json(const Embedding& e) {
  Json imgs = Json::array();
  for (const auto& img : e.images) imgs.push_back(to_json(img));
  return {{"gen_images", imgs}, {"source", to_json(*e.source)}, {"target", to_json(*e.target)}};
}

Embedding embedding_from_json(const TowerPtr& source, const TowerPtr& target, const Json& j) {
  if (!j.is_object() || !j.contains("gen_images")) fail(ErrorKind::ParseError, "embedding JSON needs \"gen_images\"");
  TowerPtr src = source ? source : (j.contains("source") ? tower_from_json(j.at("source")) : nullptr);
  TowerPtr tgt = target ? target : (j.contains("target") ? tower_from_json(j.at("target")) : nullptr);
  if (!src || !tgt) fail(ErrorKind::ParseError, "embedding needs a source and a target field");
  if (src->base() != tgt->base()) fail(ErrorKind::MixedFields, "source and target have different bases");
  const auto& imgs = j.at("gen_images");
  if (!imgs.is_array() || imgs.size() != src->height())
    fail(ErrorKind::ParseError, "need one image per source generator");
  Embedding e{src, tgt, {}};
  for (const auto& img : imgs) e.images.push_back(elem_from_json(*tgt, tgt->height(), img));
  return e;
}

Json to_json(const KFactorization& f, const Tower& T) {
  Json factors = Json::array();
  for (const auto& [p, m] : f.factors)
    factors.push_back({{"coeffs", to_json(p)}, {"multiplicity", m}, {"text", format_kpoly(T, p)}});
  return {{"factors", factors}, {"irreducible", f.irreducible()}, {"unit", format_elem(T, f.unit)}};
}

Json to_json(const AlgebraicNumber& a) {
  const Box b = a.box();
  return {{"minpoly", qpoly_json(a.minpoly())},
          {"index", a.index()},
          {"real", a.is_real()},
          {"box", {{"re", interval_json(b.re)}, {"im", interval_json(b.im)}}}};
}

Json to_json(const AutGroup& g) {
  Json elements = Json::array();
  for (std::size_t i = 0; i < g.order(); ++i) {
    const auto& e = g.elements[i];
    Json imgs = Json::array();
    for (const auto& img : e.images) imgs.push_back(to_json(img));
    elements.push_back({{"index", i}, {"gen_images", imgs}, {"images", embedding_texts(e)}, {"inverse", g.inverse[i]}});
  }
  return {{"field", to_json(*g.field)},
          {"base_level", g.base_level},
          {"order", g.order()},
          {"abelian", g.abelian()},
          {"elements", elements},
          {"table", g.table}};
}

Json to_json(const NormalReport& r) {
  Json out = {{"check", to_string(r.which)}, {"holds", r.holds}, {"certificate", r.certificate}};
  if (!r.polynomials.empty()) out["polynomials"] = r.polynomials;
  if (r.embedding) out["embedding"] = embedding_texts(*r.embedding);
  if (r.closure_degree) out["closure_degree"] = r.closure_degree;
  if (r.maps_checked) out["maps_checked"] = r.maps_checked;
  return out;
}

Json to_json(const GaloisCorrespondence& gc) {
  const Tower& T = *gc.group.field;
  Json nodes = Json::array(), edges = Json::array(), pairing = Json::array();
  for (std::size_t i = 0; i < gc.subgroups.size(); ++i)
    nodes.push_back({{"id", pair_name('H', i)},
                     {"kind", "subgroup"},
                     {"order", gc.subgroups[i].elements.size()},
                     {"elements", gc.subgroups[i].elements},
                     {"generators", gc.subgroups[i].generators}});
  for (std::size_t i = 0; i < gc.fields.size(); ++i)
    nodes.push_back({{"id", pair_name('F', i)},
                     {"kind", "field"},
                     {"degree", gc.field_degrees[i]},
                     {"generators", texts(T, gc.fields[i].generators)}});
  for (const auto& [a, b] : gc.subgroup_inclusions)
    if (a != b) edges.push_back({{"from", pair_name('H', a)}, {"to", pair_name('H', b)}});
  for (const auto& [a, b] : gc.field_inclusions)
    if (a != b) edges.push_back({{"from", pair_name('F', a)}, {"to", pair_name('F', b)}});
  for (std::size_t i = 0; i < gc.subgroups.size(); ++i)
    pairing.push_back(Json::array({pair_name('H', i), pair_name('F', i)}));
  return {{"group_order", gc.group.order()},
          {"abelian", gc.group.abelian()},
          {"nodes", nodes},
          {"edges", edges},
          {"pairing", pairing},
          {"checks",
           {{"fields_distinct", gc.fields_distinct},
            {"mutually_inverse", gc.mutually_inverse},
            {"inclusion_reversing", gc.inclusion_reversing},
            {"degree_formula", gc.degree_formula}}},
          {"verified", gc.verified()}};
}

Json to_json(const RestrictionReport& r) {
  return {{"field_order", r.field_order},   {"sub_order", r.sub_order},
          {"restriction", r.restriction},   {"image_size", r.image_size},
          {"kernel", r.kernel},             {"kernel_is_fixer", r.kernel_is_fixer},
          {"surjective", r.surjective},     {"kernel_normal", r.kernel_normal}};
}

Json to_json(const SeparationCertificate& c) {
  Json evidence = Json::array();
  for (const auto& e : c.evidence) evidence.push_back({{"k", e.k}, {"image_sign", e.image_sign}});
  Json out = {{"S", c.S},
              {"f", c.f},
              {"g", c.g},
              {"evidence", evidence},
              {"homomorphism_checked", c.homomorphism_checked},
              {"generator_pairs_checked", c.generator_pairs_checked},
              {"valid", c.valid()}};
  if (c.tower) {
    out["tower"] = c.tower->describe();
    out["field_generators"] = texts(*c.tower, c.field_generators);
  }
  if (c.map) out["map"] = embedding_texts(*c.map);
  return out;
}

Json to_json(const QuarticReport& r) {
  return {{"certificate", to_json(r.certificate)},
          {"non_automorphism", r.non_automorphism},
          {"squares_to_conjugate", r.squares_to_conjugate},
          {"image_of_quartic_root", r.image_of_quartic_root}};
}

Json to_json(const MnReport& r) {
  Json stages = Json::array();
  for (const auto& s : r.stages) {
    Json st = {{"index", s.index}, {"coded", s.coded}};
    if (s.coded)
      st.update({{"j", s.j}, {"n", s.n}, {"degree", s.degree}, {"source", s.source}, {"stage", s.stage}});
    stages.push_back(st);
  }
  return {{"stages", stages},
          {"tower", r.tower ? r.tower->describe() : ""},
          {"basis_rank", r.basis_rank},
          {"moved_index", r.moved_index},
          {"undecided", r.undecided},
          {"certificate", to_json(r.certificate)}};
}

Json to_json(const AcaReport& r) {
  Json probes = Json::array();
  for (const auto& p : r.probes)
    probes.push_back({{"k", p.k}, {"in_range", p.in_range}, {"roots", p.roots}, {"agrees", p.agrees}});
  return {{"tower", r.tower ? r.tower->describe() : ""}, {"probes", probes}, {"agrees", r.agrees()}};
}

Json to_json(const Tower2Report& r) {
  Json probes = Json::array();
  for (const auto& p : r.probes)
    probes.push_back({{"n", p.n},
                      {"prime", p.prime},
                      {"in_range", p.in_range},
                      {"image", p.image},
                      {"real", p.real},
                      {"roots_in_j", p.roots_in_j}});
  return {{"field", r.field->describe()},
          {"k_tower", r.k_tower->describe()},
          {"j_tower", r.j_tower->describe()},
          {"map", embedding_texts(r.map)},
          {"probes", probes},
          {"decoded", r.decoded},
          {"matches", r.matches}};
}

Json to_json(const Membership& m) {
  Json terms = Json::array();
  for (const auto& t : m.expression) terms.push_back({{"coeff", to_json(t.coeff)}, {"exponents", t.exponents}});
  return {{"member", m.member}, {"expression", terms}};
}

Json to_json(const Error& e) {
  Json out = {{"error", std::string(error_name(e.kind()))}, {"message", e.what()}};
  if (!e.detail().empty()) out["detail"] = e.detail();
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cftk::io
