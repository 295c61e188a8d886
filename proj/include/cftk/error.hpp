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

#ifndef CFTK_ERROR_HPP
#define CFTK_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace cftk {

enum class ErrorKind {
  MixedFields,
  MixedDomains,
  DivisionByZero,
  UnsupportedBase,
  UnsupportedDomain,
  ZeroPolynomial,
  ReduciblePolynomial,
  InseparableTower,
  DuplicatePrimes,
  NoSuchRoot,
  InconsistentChoice,
  NotIrreducible,
  NotARoot,
  NotMutual,
  NotGalois,
  NotStable,
  OverlappingRanges,
  DegreeCapExceeded,
  InvalidArgument,
  ParseError,
};

std::string_view error_name(ErrorKind kind);

/// Every domain failure in the library is reported as an Error carrying a
/// machine-readable kind; the CLI maps these onto exit code 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Optional structured payload, e.g. the nontrivial factor that makes a
  /// polynomial reducible. Serialized by the JSON layer when present.
  const std::string& detail() const noexcept { return detail_; }
  Error& with_detail(std::string detail) {
    detail_ = std::move(detail);
    return *this;
  }

 private:
  ErrorKind kind_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace cftk

#endif  // CFTK_ERROR_HPP
