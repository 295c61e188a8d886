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

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cftk/cli.hpp"
#include "cftk/json_io.hpp"
#include "doctest.h"

using namespace cftk;
using io::Json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str()};
}

Json run_json(const std::vector<std::string>& args, int expected = 0) {
  Run r = run(args);
  CHECK(r.code == expected);
  return Json::parse(r.out);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool contains(const Json& arr, std::size_t v) {
  for (const auto& x : arr)
    if (x.get<std::size_t>() == v) return true;
  return false;
}

}  // namespace

TEST_CASE("cli examples") {
  Json f = run_json({"factor", "--field", "Q", "--poly", "[-2,0,0,0,1]"});
  CHECK(f["irreducible"] == true);
  CHECK(f["factors"][0]["coeffs"] == Json::array({"-2", "0", "0", "0", "1"}));

  Json d = run_json({"witness", "diamond", "--f", "1,3", "--g", "2,4"});
  CHECK(contains(d["S"], 1));
  CHECK(contains(d["S"], 3));
  CHECK_FALSE(contains(d["S"], 2));
  CHECK(d["homomorphism_checked"] == true);

  Json cubic = run_json({"adjoin", "--field", "Q", "--poly", "[-2,0,0,1]"});
  Json n1 = run_json({"normal", "--field", cubic.dump(), "--base", "Q", "--check", "n1"});
  CHECK(n1["holds"] == false);
  CHECK(n1["certificate"] == "x^3-2");
}

TEST_CASE("cli round trips") {
  Json t = run_json({"adjoin", "--field", "Q,sqrt:2", "--poly", "[-3,0,1]", "--name", "s3"});
  TowerPtr T = io::tower_from_json(t);
  CHECK(T->height() == 2);
  CHECK(io::to_json(*T) == t);

  Json all = run_json({"embed", "--field", t.dump(), "--all"});
  REQUIRE(all["count"] == 4);
  for (const auto& e : all["embeddings"]) {
    Json v = run_json({"embed", "--source", e["source"].dump(), "--target", e["target"].dump(), "--map", e.dump()});
    CHECK(v["verified"] == true);
  }
  Json dist = run_json({"distance", "--phi", all["embeddings"][0].dump(), "--psi", all["embeddings"][0].dump()});
  CHECK(dist["distance"] == "0");
  dist = run_json({"distance", "--phi", all["embeddings"][0].dump(), "--psi", all["embeddings"][3].dump()});
  CHECK(dist["exponent"].is_number());

  const Scalar half = rationals()->parse("-1/2");
  CHECK(io::scalar_from_json(rationals(), io::to_json(half)) == half);
  const BaseField* F9 = BaseField::get("Fq:3^2");
  CHECK(io::to_json(F9->from_int(2)).is_number());
  const BaseField* R = BaseField::get("RatFunc:3");
  const Scalar r = R->parse("[1,1]/[0,1]");
  CHECK(io::scalar_from_json(R, io::to_json(r)) == r);
}

TEST_CASE("cli errors") {
  Json e = run_json({"adjoin", "--field", "Q,sqrt:2", "--poly", "[-8,0,1]"}, 2);
  CHECK(e["error"] == "ReduciblePolynomial");
  e = run_json({"factor", "--poly", "[1,"}, 2);
  CHECK(e["error"] == "ParseError");
  e = run_json({"frobnicate"}, 2);
  CHECK(e["error"] == "ParseError");
  e = run_json({"witness", "diamond", "--f", "1,2", "--g", "2"}, 2);
  CHECK(e["error"] == "OverlappingRanges");
  e = run_json({"factor", "--field", "Q,sqrt:4", "--poly", "[1,1]"}, 2);
  CHECK(e["error"] == "ReduciblePolynomial");
  e = run_json({"aut", "--field", "Q,sqrt:2", "--base", "7"}, 2);
  CHECK(e["error"] == "InvalidArgument");
}

TEST_CASE("cli golden outputs") {
  const std::string dir = CFTK_GOLDEN_DIR;
  const bool update = std::getenv("CFTK_UPDATE_GOLDEN") != nullptr;
  const Json cases = Json::parse(slurp(dir + "/cases.json"));
  REQUIRE(cases.size() >= 20);
  for (const auto& c : cases) {
    const std::string name = c["name"];
    CAPTURE(name);
    const auto args = c["args"].get<std::vector<std::string>>();
    const Run a = run(args), b = run(args);
    CHECK(a.code == c["exit"].get<int>());
    CHECK(a.out == b.out);
    const std::string path = dir + "/" + name + ".json";
    if (update) std::ofstream(path) << a.out;
    CHECK(slurp(path) == a.out);
  }
}
