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

#ifndef CFTK_CLI_HPP
#define CFTK_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace cftk {

/// Runs one command line (without the program name) and writes a JSON
/// document to `out`. Returns 0 on success, 1 when a produced certificate
/// fails its own check, and 2 for usage and domain errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cftk

#endif  // CFTK_CLI_HPP
