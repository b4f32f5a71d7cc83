// Copyright 2026 The hocat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HOCAT_CLI_HPP_
#define HOCAT_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace hocat {

  // Process exit codes.
  inline constexpr int kExitOk         = 0;
  inline constexpr int kExitParse      = 2;
  inline constexpr int kExitValidation = 3;

  // Runs the command line tool on args (without the program name).
  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace hocat

#endif  // HOCAT_CLI_HPP_
