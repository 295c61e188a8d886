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

#ifndef CFTK_FINITE_FIELD_HPP
#define CFTK_FINITE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cftk {

bool is_prime(std::uint64_t n);

/// The first `count` rational primes, 2 first.
std::vector<std::uint64_t> first_primes(std::size_t count);

/// Zero-based: nth_prime(0) == 2.
std::uint64_t nth_prime(std::size_t n);

/// Dense polynomial over a finite field, element codes, constant term first.
/// The empty vector is the zero polynomial.
using FqPoly = std::vector<std::uint64_t>;

/// GF(p^k) with elements encoded as integers 0..q-1: the base-p digits of a
/// code are the coefficients of its residue modulo `modulus` (constant first).
class FiniteField {
 public:
  /// Prime field GF(p).
  explicit FiniteField(std::uint64_t p);
  /// GF(p^k) modulo the given monic irreducible polynomial over GF(p).
  FiniteField(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint64_t order() const { return q_; }
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t from_int(long long v) const;

  /// Square root if one exists; q odd.
  bool sqrt(std::uint64_t a, std::uint64_t& root) const;

 private:
  std::uint64_t slow_mul(std::uint64_t a, std::uint64_t b) const;
  void build_tables();

  std::uint64_t p_;
  unsigned k_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

namespace fq {

void trim(FqPoly& a);
inline int deg(const FqPoly& a) { return static_cast<int>(a.size()) - 1; }
inline std::uint64_t lc(const FqPoly& a) { return a.empty() ? 0 : a.back(); }
FqPoly add(const FiniteField& F, const FqPoly& a, const FqPoly& b);
FqPoly sub(const FiniteField& F, const FqPoly& a, const FqPoly& b);
FqPoly mul(const FiniteField& F, const FqPoly& a, const FqPoly& b);
FqPoly scale(const FiniteField& F, const FqPoly& a, std::uint64_t c);
void divmod(const FiniteField& F, const FqPoly& a, const FqPoly& b, FqPoly& quot, FqPoly& rem);
FqPoly rem(const FiniteField& F, const FqPoly& a, const FqPoly& b);
FqPoly quo(const FiniteField& F, const FqPoly& a, const FqPoly& b);
FqPoly monic(const FiniteField& F, const FqPoly& a);
FqPoly gcd(const FiniteField& F, FqPoly a, FqPoly b);
FqPoly derivative(const FiniteField& F, const FqPoly& a);
FqPoly powmod(const FiniteField& F, const FqPoly& base, const mpz_class& e, const FqPoly& modulus);
FqPoly powmod(const FiniteField& F, const FqPoly& base, std::uint64_t e, const FqPoly& modulus);
FqPoly mulmod(const FiniteField& F, const FqPoly& a, const FqPoly& b, const FqPoly& modulus);
std::uint64_t eval(const FiniteField& F, const FqPoly& a, std::uint64_t x);
bool is_irreducible(const FiniteField& F, const FqPoly& f);

/// Canonical order: degree, then lexicographic on codes from the constant term.
int compare(const FqPoly& a, const FqPoly& b);

/// All monic polynomials of the given degree in canonical order, streamed.
/// Returns false once the sequence is exhausted.
bool next_monic(const FiniteField& F, FqPoly& poly);

/// Squarefree decomposition: pairs (squarefree factor, multiplicity), f monic.
std::vector<std::pair<FqPoly, int>> squarefree(const FiniteField& F, const FqPoly& f);

/// Complete factorization of a monic polynomial into monic irreducibles
/// (Cantor-Zassenhaus), sorted canonically. The random stream is seeded
/// from the input so results are reproducible.
std::vector<std::pair<FqPoly, int>> factor(const FiniteField& F, const FqPoly& f);

/// Exact square root of a polynomial, if it is a square.
bool sqrt(const FiniteField& F, const FqPoly& a, FqPoly& root);

std::string to_string(const FqPoly& a);

}  // namespace fq

}  // namespace cftk

#endif  // CFTK_FINITE_FIELD_HPP
