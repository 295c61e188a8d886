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

#include "cftk/error.hpp"

namespace cftk {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MixedFields: return "MixedFields";
    case ErrorKind::MixedDomains: return "MixedDomains";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::UnsupportedBase: return "UnsupportedBase";
    case ErrorKind::UnsupportedDomain: return "UnsupportedDomain";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorKind::InseparableTower: return "InseparableTower";
    case ErrorKind::DuplicatePrimes: return "DuplicatePrimes";
    case ErrorKind::NoSuchRoot: return "NoSuchRoot";
    case ErrorKind::InconsistentChoice: return "InconsistentChoice";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::NotARoot: return "NotARoot";
    case ErrorKind::NotMutual: return "NotMutual";
    case ErrorKind::NotGalois: return "NotGalois";
    case ErrorKind::NotStable: return "NotStable";
    case ErrorKind::OverlappingRanges: return "OverlappingRanges";
    case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace cftk
