// Copyright 2026 The mwpsas Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MWPSAS_TOOLS_CLI_HPP_
#define MWPSAS_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace mwpsas {

/// Runs one CLI invocation. `args` excludes the program name. Reports go to
/// `out` as flat "key value" lines, diagnostics to `err`. Returns 0 on
/// success, 1 on domain errors, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mwpsas

#endif  // MWPSAS_TOOLS_CLI_HPP_
