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
 // JSON text formats for algebras, constant cocycles, r-matrices and failure reports.

#ifndef COCYCLE_FORGE_ALGEBRA_IO_HPP
#define COCYCLE_FORGE_ALGEBRA_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "cocycle_forge/forms.hpp"
#include "cocycle_forge/lie_algebra.hpp"
#include "cocycle_forge/report.hpp"

namespace cforge {

    // Malformed JSON text or a document that does not match the expected shape.
    struct SchemaError : ParseError {
        using ParseError::ParseError;
    };

    struct AlgebraSpec {
        std::string name;
        std::vector<std::string> basis;
        StructureTable table;
    };

    /* {"name": text, "basis": [text...], "brackets": [{"i": int, "j": int, "terms": [{"k": int, "c": "p/q"}...]}...]}
     * with 0 <= i < j < dim; a pair may be listed once. Parsing does not check Jacobi. */
    AlgebraSpec parse_algebra_spec(std::string_view text);
    // parse_algebra_spec followed by LieAlgebra::create, so a Jacobi failure throws AlgebraError.
    LieAlgebra parse_algebra(std::string_view text);
    std::string algebra_to_json(const LieAlgebra& L);

    // {"terms": [{"i": int, "j": int, "k": int, "c": "p/q"}...]} on strictly increasing triples.
    Cochain parse_cocycle(std::string_view text, int dim);
    std::string cocycle_to_json(const Cochain& f);

    // {"terms": [{"i": int, "j": int, "c": "p/q"}...]}; repeated pairs add up.
    Tensor2 parse_rmatrix(std::string_view text, int dim);
    std::string rmatrix_to_json(const Tensor2& r);

    // Array of {"condition", "generator", "monomial", "lhs", "rhs"} objects, keys sorted.
    std::string report_to_json(const Report& report);

    std::string read_text_file(const std::string& path);  // throws std::runtime_error

}  // namespace cforge

#endif  // COCYCLE_FORGE_ALGEBRA_IO_HPP
