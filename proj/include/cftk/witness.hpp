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

#ifndef CFTK_WITNESS_HPP
#define CFTK_WITNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "cftk/closure.hpp"
#include "cftk/embed.hpp"
#include "cftk/subfield.hpp"

namespace cftk {

/// Finite prefix of an injection N -> N.
using InjectionPrefix = std::vector<std::size_t>;

/// Rejects repeated values, zero values (unless allowed) and common values.
void validate_prefixes(const InjectionPrefix& f, const InjectionPrefix& g, bool allow_zero = false);

struct SignEvidence {
  std::size_t k = 0;
  int image_sign = 0;
};

struct SeparationCertificate {
  InjectionPrefix f;
  InjectionPrefix g;
  std::vector<std::size_t> S;
  std::vector<SignEvidence> evidence;
  bool homomorphism_checked = false;
  std::size_t generator_pairs_checked = 0;
  /// The ambient tower, the map that separates, and the generators of F in it.
  TowerPtr tower;
  std::optional<Embedding> map;
  std::vector<Elem> field_generators;

  bool valid() const;
};

/// Sign propagation over Q(sqrt 2, sqrt p_k) for the probed k.
SeparationCertificate diamond_witness(const InjectionPrefix& f, const InjectionPrefix& g);

struct QuarticReport {
  SeparationCertificate certificate;
  /// psi(2^(1/4)) lies outside the level below i, hence outside F(2^(1/4)).
  bool non_automorphism = false;
  /// psi(2^(1/4))^2 = -sqrt 2.
  bool squares_to_conjugate = false;
  std::string image_of_quartic_root;
};

/// F(2^(1/4)) inside Q(sqrt 2, sqrt p_k, 2^(1/4), i) with psi(2^(1/4)) = i 2^(1/4).
QuarticReport quartic_witness(const InjectionPrefix& f, const InjectionPrefix& g);

/// Sign propagation over GF(p)(t) with the monic irreducibles as primes; the
/// 0-th irreducible plays the role of 2. p must be an odd prime.
SeparationCertificate charp_witness(std::uint64_t p, const InjectionPrefix& f, const InjectionPrefix& g);

/// The pairing (i, j) -> (i + j)^2 + i.
std::size_t pair_code(std::size_t i, std::size_t j);
/// Inverse of pair_code on its image.
std::optional<std::pair<std::size_t, std::size_t>> unpair(std::size_t code);

struct MnStage {
  std::size_t index = 0;
  /// Whether the index is a pair code; other indices contribute no stage.
  bool coded = false;
  std::size_t j = 0, n = 0;
  /// Degree of v_i over the previous stages.
  std::size_t degree = 1;
  /// The polynomial split (n == 0) or the prime p with v_i = p^(1/d_j) / v_j.
  std::string source;
  /// Position of v_i among the tower stages.
  std::size_t stage = 0;
};

struct MnReport {
  std::vector<MnStage> stages;
  TowerPtr tower;
  std::vector<Elem> field_generators;
  std::size_t basis_rank = 0;
  std::size_t moved_index = 0;
  /// Values of f and g whose code (i, k) lies beyond the built prefix.
  std::vector<std::size_t> undecided;
  SeparationCertificate certificate;
};

MnReport mn_witness(const InjectionPrefix& f, const InjectionPrefix& g, std::size_t stages, std::size_t max_degree = 256);

struct RootModulusProbe {
  std::size_t k = 0;
  bool in_range = false;
  std::vector<std::string> roots;
  bool agrees = false;
};

struct AcaReport {
  TowerPtr tower;
  std::vector<RootModulusProbe> probes;
  bool agrees() const;
};

AcaReport aca_root_modulus_witness(const InjectionPrefix& g, std::size_t probe);

struct Tower2Probe {
  std::size_t n = 0;
  std::uint64_t prime = 0;
  bool in_range = false;
  std::string image;
  bool real = false;
  /// Roots of x^p - 2 in the J prefix.
  std::size_t roots_in_j = 0;
};

struct Tower2Report {
  TowerPtr field;
  TowerPtr k_tower;
  TowerPtr j_tower;
  Embedding map;
  std::vector<Tower2Probe> probes;
  std::vector<std::size_t> decoded;
  bool matches = false;
};

/// The odd primes here start at p_0 = 3, and g may take the value 0.
Tower2Report tower2_witness(const InjectionPrefix& g, std::size_t stages = 1, std::size_t max_degree = 30);

/// Square root tower over a base field with the given radicands.
TowerPtr sqrt_tower(const BaseField* base, const std::vector<Scalar>& radicands, const std::string& prefix = "r");

/// Is sqrt(q_1 ... q_r) in the field generated by sqrt p_1, ..., sqrt p_n?
/// The corollary form asks for sqrt q_1 against sqrt p_i and sqrt(q_1 q_j), j > 1.
Membership roth_membership(const BaseField* base, const std::vector<Scalar>& ps, const std::vector<Scalar>& qs,
                           bool corollary);

struct RothSuite {
  std::size_t cases = 0;
  std::size_t non_members = 0;
  bool passed() const { return cases == non_members; }
};

/// Every pair of disjoint sublists (q nonempty) of `primes` with total size at most max_total.
RothSuite roth_suite(const BaseField* base, const std::vector<Scalar>& primes, std::size_t max_total, bool corollary);

/// The first `count` primes of the base: rational primes over Q, monic
/// irreducibles over GF(q)(t).
std::vector<Scalar> base_primes(const BaseField* base, std::size_t count);

}  // namespace cftk

#endif  // CFTK_WITNESS_HPP
