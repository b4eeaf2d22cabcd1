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
 // Exact Gaussian elimination over the rationals.

#ifndef COCYCLE_FORGE_LINALG_HPP
#define COCYCLE_FORGE_LINALG_HPP

#include <optional>
#include <vector>

#include "cocycle_forge/rational.hpp"

namespace cforge {

    using RationalMatrix = std::vector<std::vector<Rational>>;

    RationalMatrix zero_matrix(std::size_t rows, std::size_t cols);

    // Reduced row echelon form in place; returns the pivot columns.
    std::vector<std::size_t> row_reduce(RationalMatrix& m);

    std::size_t rank(RationalMatrix m);

    // nullopt when m is singular (or not square).
    std::optional<RationalMatrix> inverse(const RationalMatrix& m);

    // Basis of { x : m x = 0 }.
    std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m, std::size_t cols);

    // Some x with m x = b, or nullopt if inconsistent.
    std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& b,
                                               std::size_t cols);

}  // namespace cforge

#endif  // COCYCLE_FORGE_LINALG_HPP
