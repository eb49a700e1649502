/*
   Copyright 2026 The apolar authors

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

#ifndef APOLAR_CLI_HPP
#define APOLAR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace apolar {

/// Command-line surface. Exit codes: 0 success, 1 verification failure,
/// 2 usage or parse error, 3 resource budget exceeded.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace apolar

#endif  // APOLAR_CLI_HPP
