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
 // Helpers shared by the test binaries: small dense matrices, monomial lookup and test cocycles.

#ifndef COCYCLE_FORGE_TEST_SUPPORT_HPP
#define COCYCLE_FORGE_TEST_SUPPORT_HPP

#include <string>
#include <vector>

#include "cocycle_forge/enveloping.hpp"
#include "cocycle_forge/forms.hpp"

namespace cforge::testing {

    using Matrix = std::vector<std::vector<Rational>>;

    inline Matrix zeros(std::size_t n) { return Matrix(n, std::vector<Rational>(n)); }

    inline Matrix identity(std::size_t n) {
        Matrix m = zeros(n);
        for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
        return m;
    }

    inline Matrix matmul(const Matrix& a, const Matrix& b) {
        Matrix out = zeros(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t k = 0; k < a.size(); ++k) {
                if (a[i][k].is_zero()) continue;
                for (std::size_t j = 0; j < a.size(); ++j) out[i][j] += a[i][k] * b[k][j];
            }
        return out;
    }

    inline Matrix add(Matrix a, const Matrix& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a.size(); ++j) a[i][j] += b[i][j];
        return a;
    }

    inline Matrix scale(Matrix a, const Rational& s) {
        for (auto& row : a)
            for (auto& v : row) v *= s;
        return a;
    }

    // ad(x_k)[i][j] = coefficient of x_i in [x_k, x_j]
    inline std::vector<Matrix> adjoint_matrices(const LieAlgebra& L) {
        const auto n = static_cast<std::size_t>(L.dim());
        std::vector<Matrix> out;
        for (int k = 0; k < L.dim(); ++k) {
            Matrix m = zeros(n);
            for (int j = 0; j < L.dim(); ++j) {
                for (const auto& [i, c] : L.bracket_basis(k, j)) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c;
            }
            out.push_back(std::move(m));
        }
        return out;
    }

    // The PBW monomial written by text, which must straighten to a single monomial.
    inline PBWMonomial mono(const Enveloping& env, const std::string& text) {
        const UEAElement u = env.parse(text);
        if (u.size() != 1) throw std::invalid_argument("not a single monomial: " + text);
        return u.begin()->first;
    }

    // The volume form x_0 ^ x_1 ^ x_2 on a 3-dimensional algebra, closed for dimension reasons.
    inline Cochain volume_cocycle(int dim = 3) {
        Cochain f(dim, 3);
        if (dim >= 3) f.set(std::vector<int>{0, 1, 2}, Rational(1));
        return f;
    }

    // The cocycle used for each built-in algebra: Cartan of the Killing form, or the volume form where that vanishes.
    inline Cochain test_cocycle(const LieAlgebra& L) {
        Cochain f = cartan_cocycle(L, killing_form(L));
        if (f.is_zero()) return volume_cocycle(L.dim());
        return f;
    }

}  // namespace cforge::testing

#endif  // COCYCLE_FORGE_TEST_SUPPORT_HPP
