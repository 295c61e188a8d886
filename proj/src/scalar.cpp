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

#include "cftk/scalar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "cftk/error.hpp"

namespace cftk {

namespace {

std::uint64_t parse_u64(const std::string& s, const std::string& context) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    fail(ErrorKind::ParseError, "expected a natural number in " + context);
  return std::stoull(s);
}

// "p" or "p^k"
std::pair<std::uint64_t, unsigned> parse_prime_power(const std::string& s, const std::string& context) {
  const auto hat = s.find('^');
  if (hat == std::string::npos) return {parse_u64(s, context), 1};
  return {parse_u64(s.substr(0, hat), context), static_cast<unsigned>(parse_u64(s.substr(hat + 1), context))};
}

std::unique_ptr<FiniteField> make_finite(std::uint64_t p, unsigned k) {
  if (!is_prime(p)) fail(ErrorKind::UnsupportedBase, std::to_string(p) + " is not prime");
  if (k == 0) fail(ErrorKind::UnsupportedBase, "field degree must be positive");
  if (k == 1) return std::make_unique<FiniteField>(p);
  return std::make_unique<FiniteField>(p, k, canonical_modulus(p, k));
}

std::string canonical_descriptor(const std::string& d) {
  if (d == "Q" || d == "rational-primes") return "Q";
  auto tail = [&](std::size_t n) { return d.substr(n); };
  if (d.rfind("Fp:", 0) == 0) {
    auto [p, k] = parse_prime_power(tail(3), d);
    if (k != 1) fail(ErrorKind::UnsupportedBase, "Fp takes a prime, use Fq for prime powers");
    return "Fp:" + std::to_string(p);
  }
  if (d.rfind("Fq:", 0) == 0) {
    auto [p, k] = parse_prime_power(tail(3), d);
    return k == 1 ? "Fp:" + std::to_string(p) : "Fq:" + std::to_string(p) + "^" + std::to_string(k);
  }
  if (d.rfind("RatFunc:", 0) == 0) {
    auto [p, k] = parse_prime_power(tail(8), d);
    return k == 1 ? "RatFunc:" + std::to_string(p) : "RatFunc:" + std::to_string(p) + "^" + std::to_string(k);
  }
  fail(ErrorKind::UnsupportedBase, "unknown base field descriptor '" + d + "'");
}

FqPoly parse_fq_list(const FiniteField& F, std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') fail(ErrorKind::ParseError, "expected [c0,c1,...], got " + s);
  FqPoly out;
  std::stringstream ss(s.substr(1, s.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const std::uint64_t c = parse_u64(item, s);
    if (c >= F.order()) fail(ErrorKind::ParseError, "coefficient " + item + " out of range");
    out.push_back(c);
  }
  fq::trim(out);
  return out;
}

}  // namespace

FqPoly canonical_modulus(std::uint64_t p, unsigned k) {
  FiniteField Fp(p);
  FqPoly cand(k + 1, 0);
  cand[k] = 1;
  do {
    if (fq::is_irreducible(Fp, cand)) return cand;
  } while (fq::next_monic(Fp, cand));
  fail(ErrorKind::UnsupportedBase, "no irreducible modulus found");
}

const BaseField* BaseField::get(const std::string& descriptor) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<BaseField>> registry;
  const std::string key = canonical_descriptor(descriptor);
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(key);
  if (it != registry.end()) return it->second.get();
  std::unique_ptr<BaseField> F(new BaseField());
  F->descriptor_ = key;
  if (key == "Q") {
    F->kind_ = Kind::Rational;
  } else {
    const auto colon = key.find(':');
    auto [p, k] = parse_prime_power(key.substr(colon + 1), key);
    F->ff_ = make_finite(p, k);
    F->kind_ = key.rfind("RatFunc", 0) == 0 ? Kind::Function : Kind::Finite;
  }
  return registry.emplace(key, std::move(F)).first->second.get();
}

std::uint64_t BaseField::characteristic() const { return ff_ ? ff_->characteristic() : 0; }

Scalar BaseField::zero() const { return from_int(0); }
Scalar BaseField::one() const { return from_int(1); }

Scalar BaseField::from_int(long long v) const {
  switch (kind_) {
    case Kind::Rational: return Scalar(this, Rational(static_cast<long>(v)));
    case Kind::Finite: return Scalar(this, ff_->from_int(v));
    case Kind::Function: {
      FqPoly num{ff_->from_int(v)};
      fq::trim(num);
      return Scalar(this, RatFunc{num, FqPoly{1}});
    }
  }
  return {};
}

Scalar BaseField::from_rational(const Rational& q) const {
  if (kind_ == Kind::Rational) return Scalar(this, q);
  const std::uint64_t p = characteristic();
  const Integer nm = q.get_num() % p, dn = q.get_den() % p;
  if (dn == 0) fail(ErrorKind::DivisionByZero, "denominator vanishes in characteristic " + std::to_string(p));
  return from_int(static_cast<long long>(Integer((nm + p) % p).get_ui())) /
         from_int(static_cast<long long>(dn.get_ui()));
}

Scalar BaseField::parse(const std::string& raw) const {
  std::string text = raw;
  text.erase(std::remove_if(text.begin(), text.end(), [](char c) { return c == ' '; }), text.end());
  if (text.empty()) fail(ErrorKind::ParseError, "empty scalar");
  switch (kind_) {
    case Kind::Rational: {
      Rational q;
      if (text[0] == '+') text.erase(0, 1);
      if (q.set_str(text, 10) != 0) fail(ErrorKind::ParseError, "not a rational number: " + raw);
      if (q.get_den() == 0) fail(ErrorKind::DivisionByZero, "zero denominator in " + raw);
      q.canonicalize();
      return Scalar(this, q);
    }
    case Kind::Finite: {
      const bool negative = text[0] == '-';
      const std::uint64_t v = parse_u64(negative ? text.substr(1) : text, raw);
      if (ff_->degree() > 1 && v >= ff_->order()) fail(ErrorKind::ParseError, "element code out of range: " + raw);
      const std::uint64_t c = ff_->degree() > 1 ? v : v % ff_->order();
      return Scalar(this, negative ? ff_->neg(c) : c);
    }
    case Kind::Function: {
      if (text[0] != '[') {
        const bool negative = text[0] == '-';
        const std::uint64_t v = parse_u64(negative ? text.substr(1) : text, raw);
        Scalar s = from_int(static_cast<long long>(v % ff_->characteristic()));
        return negative ? -s : s;
      }
      const auto slash = text.find("]/[");
      if (slash == std::string::npos) return make_ratfunc(this, parse_fq_list(*ff_, text), FqPoly{1});
      return make_ratfunc(this, parse_fq_list(*ff_, text.substr(0, slash + 1)),
                          parse_fq_list(*ff_, text.substr(slash + 2)));
    }
  }
  return {};
}

Scalar make_ratfunc(const BaseField* field, FqPoly num, FqPoly den) {
  const FiniteField& F = field->finite();
  fq::trim(num);
  fq::trim(den);
  if (den.empty()) fail(ErrorKind::DivisionByZero, "rational function with zero denominator");
  if (num.empty()) return Scalar(field, RatFunc{{}, FqPoly{1}});
  const FqPoly g = fq::gcd(F, num, den);
  if (fq::deg(g) > 0) {
    num = fq::quo(F, num, g);
    den = fq::quo(F, den, g);
  }
  const std::uint64_t lc_inv = F.inv(den.back());
  return Scalar(field, RatFunc{fq::scale(F, num, lc_inv), fq::scale(F, den, lc_inv)});
}

Scalar::Scalar(const BaseField* field, Value value) : field_(field), value_(std::move(value)) {}

bool Scalar::is_zero() const {
  switch (value_.index()) {
    case 0: return sgn(rational()) == 0;
    case 1: return code() == 0;
    default: return ratfunc().num.empty();
  }
}

bool Scalar::is_one() const {
  switch (value_.index()) {
    case 0: return rational() == 1;
    case 1: return code() == 1;
    default: return ratfunc().num == FqPoly{1} && ratfunc().den == FqPoly{1};
  }
}

namespace {

void same_field(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field())
    fail(ErrorKind::MixedFields, "scalars from " + a.field()->descriptor() + " and " + b.field()->descriptor());
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  same_field(a, b);
  switch (a.value_.index()) {
    case 0: return Scalar(a.field_, Rational(a.rational() + b.rational()));
    case 1: return Scalar(a.field_, a.field_->finite().add(a.code(), b.code()));
    default: {
      const FiniteField& F = a.field_->finite();
      const RatFunc &x = a.ratfunc(), &y = b.ratfunc();
      if (x.den == y.den) return make_ratfunc(a.field_, fq::add(F, x.num, y.num), x.den);
      return make_ratfunc(a.field_, fq::add(F, fq::mul(F, x.num, y.den), fq::mul(F, y.num, x.den)),
                          fq::mul(F, x.den, y.den));
    }
  }
}

Scalar Scalar::operator-() const {
  switch (value_.index()) {
    case 0: return Scalar(field_, Rational(-rational()));
    case 1: return Scalar(field_, field_->finite().neg(code()));
    default: {
      const FiniteField& F = field_->finite();
      return Scalar(field_, RatFunc{fq::scale(F, ratfunc().num, F.neg(1)), ratfunc().den});
    }
  }
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar& Scalar::operator+=(const Scalar& b) {
  if (value_.index() == 0 && b.value_.index() == 0 && field_ == b.field_) {
    mpq_ptr r = std::get<Rational>(value_).get_mpq_t();
    mpq_add(r, r, b.rational().get_mpq_t());
    return *this;
  }
  return *this = *this + b;
}

Scalar& Scalar::operator-=(const Scalar& b) {
  if (value_.index() == 0 && b.value_.index() == 0 && field_ == b.field_) {
    mpq_ptr r = std::get<Rational>(value_).get_mpq_t();
    mpq_sub(r, r, b.rational().get_mpq_t());
    return *this;
  }
  return *this = *this - b;
}

void Scalar::add_mul(const Scalar& a, const Scalar& b, bool negate) {
  same_field(a, b);
  same_field(*this, a);
  if (value_.index() == 0) {
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), a.rational().get_mpq_t(), b.rational().get_mpq_t());
    mpq_ptr r = std::get<Rational>(value_).get_mpq_t();
    if (negate) mpq_sub(r, r, tmp.get_mpq_t());
    else mpq_add(r, r, tmp.get_mpq_t());
    return;
  }
  *this = negate ? *this - a * b : *this + a * b;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  same_field(a, b);
  switch (a.value_.index()) {
    case 0: return Scalar(a.field_, Rational(a.rational() * b.rational()));
    case 1: return Scalar(a.field_, a.field_->finite().mul(a.code(), b.code()));
    default: {
      const FiniteField& F = a.field_->finite();
      const RatFunc &x = a.ratfunc(), &y = b.ratfunc();
      return make_ratfunc(a.field_, fq::mul(F, x.num, y.num), fq::mul(F, x.den, y.den));
    }
  }
}

Scalar Scalar::inv() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "division by zero in " + field_->descriptor());
  switch (value_.index()) {
    case 0: return Scalar(field_, Rational(1 / rational()));
    case 1: return Scalar(field_, field_->finite().inv(code()));
    default: return make_ratfunc(field_, ratfunc().den, ratfunc().num);
  }
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  same_field(a, b);
  return a * b.inv();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  switch (a.value_.index()) {
    case 0: return a.rational() == b.rational();
    case 1: return a.code() == b.code();
    default: return a.ratfunc().num == b.ratfunc().num && a.ratfunc().den == b.ratfunc().den;
  }
}

std::string Scalar::to_string() const {
  switch (value_.index()) {
    case 0: return rational().get_str();
    case 1: return std::to_string(code());
    default: {
      const RatFunc& r = ratfunc();
      if (r.den == FqPoly{1}) return fq::to_string(r.num);
      return fq::to_string(r.num) + "/" + fq::to_string(r.den);
    }
  }
}

int compare(const Scalar& a, const Scalar& b) {
  same_field(a, b);
  switch (a.value().index()) {
    case 0: {
      const int c = cmp(a.rational(), b.rational());
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case 1: return a.code() < b.code() ? -1 : (a.code() > b.code() ? 1 : 0);
    default: {
      const int c = fq::compare(a.ratfunc().num, b.ratfunc().num);
      return c != 0 ? c : fq::compare(a.ratfunc().den, b.ratfunc().den);
    }
  }
}

int compare_coeffs(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int c = compare(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

bool base_sqrt(const Scalar& a, Scalar& root) {
  const BaseField* K = a.field();
  switch (K->kind()) {
    case BaseField::Kind::Rational: {
      const Rational& q = a.rational();
      if (sgn(q) < 0) return false;
      if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return false;
      Integer n, d;
      mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
      mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
      root = Scalar(K, Rational(n, d));
      return true;
    }
    case BaseField::Kind::Finite: {
      std::uint64_t r;
      if (!K->finite().sqrt(a.code(), r)) return false;
      root = Scalar(K, r);
      return true;
    }
    case BaseField::Kind::Function: {
      const FiniteField& F = K->finite();
      const RatFunc& x = a.ratfunc();
      FqPoly r;
      if (!fq::sqrt(F, fq::mul(F, x.num, x.den), r)) return false;
      root = make_ratfunc(K, r, x.den);
      return true;
    }
  }
  return false;
}

std::vector<std::vector<Scalar>> enumerate_irreducibles(const std::string& descriptor, std::size_t count) {
  const BaseField* K = BaseField::get(descriptor);
  std::vector<std::vector<Scalar>> out;
  if (K->kind() == BaseField::Kind::Rational) {
    for (auto p : first_primes(count)) out.push_back({K->from_int(static_cast<long long>(p))});
    return out;
  }
  if (K->kind() != BaseField::Kind::Finite)
    fail(ErrorKind::UnsupportedBase, "irreducibles are enumerated over Q (primes) or finite fields only");
  const FiniteField& F = K->finite();
  for (unsigned d = 1; out.size() < count; ++d) {
    FqPoly cand(d + 1, 0);
    cand[d] = 1;
    do {
      if (fq::is_irreducible(F, cand)) {
        std::vector<Scalar> poly;
        for (auto c : cand) poly.emplace_back(K, c);
        out.push_back(std::move(poly));
        if (out.size() == count) break;
      }
    } while (fq::next_monic(F, cand));
  }
  return out;
}

}  // namespace cftk
