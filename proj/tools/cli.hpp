/*
*   Copyright 2026 The kapteyn-queue Authors
*
*   Licensed under the Apache License, Version 2.0 (the "License");
*   you may not use this file except in compliance with the License.
*   You may obtain a copy of the License at
*
*       http://www.apache.org/licenses/LICENSE-2.0
*
*   Unless required by applicable law or agreed to in writing, software
*   distributed under the License is distributed on an "AS IS" BASIS,
*   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
*   See the License for the specific language governing permissions and
*   limitations under the License.
*/

#ifndef KAPTEYN_TOOLS_CLI_HPP
#define KAPTEYN_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>

namespace kapteyn::cli {

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

// Shortest decimal string that reads back to the same double; "nan",
// "inf" and "-inf" for non-finite values. Independent of the C locale.
std::string format_double(double x);

// Entry point shared by the executable and the tests. Reports go to `out`
// unless --out names a file; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace kapteyn::cli

#endif // KAPTEYN_TOOLS_CLI_HPP
