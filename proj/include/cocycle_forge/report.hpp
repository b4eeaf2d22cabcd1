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
 // Failure rows shared by every verification routine.

#ifndef COCYCLE_FORGE_REPORT_HPP
#define COCYCLE_FORGE_REPORT_HPP

#include <string>
#include <vector>

namespace cforge {

    struct Failure {
        std::string condition;  // e.g. "a", "b", "c", "compat", "lift", "pr_idempotent"
        std::string generator;
        std::string monomial;
        std::string lhs;
        std::string rhs;

        friend bool operator==(const Failure&, const Failure&) = default;
    };

    using Report = std::vector<Failure>;

    inline void append(Report& into, const Report& from) { into.insert(into.end(), from.begin(), from.end()); }

}  // namespace cforge

#endif  // COCYCLE_FORGE_REPORT_HPP
