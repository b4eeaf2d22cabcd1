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

#include "cocycle_forge/linalg.hpp"

namespace cforge {

    RationalMatrix zero_matrix(std::size_t rows, std::size_t cols) {
        return RationalMatrix(rows, std::vector<Rational>(cols, Rational(0)));
    }

    std::vector<std::size_t> row_reduce(RationalMatrix& m) {
        std::vector<std::size_t> pivots;
        if (m.empty()) return pivots;
        const std::size_t rows = m.size();
        const std::size_t cols = m[0].size();
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols && r < rows; ++c) {
            std::size_t p = r;
            while (p < rows && m[p][c].is_zero()) ++p;
            if (p == rows) continue;
            std::swap(m[p], m[r]);
            Rational inv = Rational(1) / m[r][c];
            for (auto& x : m[r]) x *= inv;
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == r || m[i][c].is_zero()) continue;
                Rational factor = m[i][c];
                for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank(RationalMatrix m) { return row_reduce(m).size(); }

    std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
        const std::size_t n = m.size();
        for (const auto& row : m) {
            if (row.size() != n) return std::nullopt;
        }
        RationalMatrix aug = zero_matrix(n, 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
            aug[i][n + i] = Rational(1);
        }
        auto pivots = row_reduce(aug);
        if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
        RationalMatrix out = zero_matrix(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
        }
        return out;
    }

    std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m, std::size_t cols) {
        RationalMatrix a = m;
        auto pivots = row_reduce(a);
        std::vector<bool> is_pivot(cols, false);
        for (auto p : pivots) is_pivot[p] = true;
        std::vector<std::vector<Rational>> basis;
        for (std::size_t free = 0; free < cols; ++free) {
            if (is_pivot[free]) continue;
            std::vector<Rational> v(cols, Rational(0));
            v[free] = Rational(1);
            for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
            basis.push_back(std::move(v));
        }
        return basis;
    }

    std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& b,
                                               std::size_t cols) {
        RationalMatrix aug = zero_matrix(m.size(), cols + 1);
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (std::size_t j = 0; j < cols; ++j) aug[i][j] = m[i][j];
            aug[i][cols] = b[i];
        }
        auto pivots = row_reduce(aug);
        if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
        std::vector<Rational> x(cols, Rational(0));
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
        return x;
    }

}  // namespace cforge
