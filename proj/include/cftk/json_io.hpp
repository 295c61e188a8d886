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

#ifndef CFTK_JSON_IO_HPP
#define CFTK_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "cftk/closure.hpp"
#include "cftk/embed.hpp"
#include "cftk/error.hpp"
#include "cftk/factor.hpp"
#include "cftk/galois.hpp"
#include "cftk/witness.hpp"

namespace cftk::io {

using Json = nlohmann::json;

/// Integers that fit in 64 bits and finite-field codes become JSON numbers;
/// every other scalar is written as its text form.
Json to_json(const Scalar& s);
Scalar scalar_from_json(const BaseField* K, const Json& j);

Json to_json(const Elem& e);
/// Accepts a coordinate array of the right length, or a single scalar.
Elem elem_from_json(const Tower& T, std::size_t level, const Json& j);

Json to_json(const KPoly& p);
/// Coefficients constant first; each is an element of the level or a base scalar.
KPoly kpoly_from_json(const Tower& T, std::size_t level, const Json& j);

/// {"base": descriptor, "stages": [{"name": ..., "minpoly": [...]}]}
Json to_json(const Tower& T);
/// The object form above (stages are re-verified with adjoin), or a compact
/// text form: an optional base descriptor followed by comma-separated
/// generators sqrt:n, root:k:n, zeta:m and split:c0;c1;...;cn.
TowerPtr tower_from_json(const Json& j);
TowerPtr parse_field(const std::string& text);

/// Tower element from text: a JSON coordinate array or scalar, "gen:<i>",
/// or one of the generator shorthands when it names a root present in T.
Elem parse_elem(const Tower& T, const std::string& text);

/// {"gen_images": [[coords]...]}
Json to_json(const Embedding& e);
Embedding embedding_from_json(const TowerPtr& source, const TowerPtr& target, const Json& j);

Json to_json(const KFactorization& f, const Tower& T);
Json to_json(const AlgebraicNumber& a);
Json to_json(const AutGroup& g);
Json to_json(const NormalReport& r);
Json to_json(const GaloisCorrespondence& gc);
Json to_json(const RestrictionReport& r);
Json to_json(const SeparationCertificate& c);
Json to_json(const QuarticReport& r);
Json to_json(const MnReport& r);
Json to_json(const AcaReport& r);
Json to_json(const Tower2Report& r);
Json to_json(const Membership& m);
Json to_json(const Error& e);

/// Pretty-printed with sorted keys and a trailing newline.
std::string dump(const Json& j);

}  // namespace cftk::io

#endif  // CFTK_JSON_IO_HPP
