/* Copyright 2026 The cocycle-forge Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
 // Command-line front end: validate, killing, cartan, rmatrix, lift, table, verify.

#ifndef COCYCLE_FORGE_CLI_HPP
#define COCYCLE_FORGE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cforge {

    /* Runs one command. args excludes the program name. Results go to out, progress and errors to err.
     * Returns 0 iff every requested check passed, 1 on check failures and 2 on usage or input errors. */
    int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cforge

#endif  // COCYCLE_FORGE_CLI_HPP
