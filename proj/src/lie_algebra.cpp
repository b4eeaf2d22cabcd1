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

#include "cocycle_forge/lie_algebra.hpp"

#include <set>
#include <sstream>

namespace cforge {

    namespace {
        std::vector<LieElement> complete_table(const StructureTable& table) {
            const int n = table.dim;
            std::vector<LieElement> full(static_cast<std::size_t>(n * n));
            for (const auto& [ij, value] : table.brackets) {
                auto [i, j] = ij;
                full[static_cast<std::size_t>(i * n + j)] = value;
                full[static_cast<std::size_t>(j * n + i)] = -value;
            }
            return full;
        }

        LieElement bracket_with(const std::vector<LieElement>& full, int n, const LieElement& a, const LieElement& b) {
            LieElement out;
            for (const auto& [i, ci] : a) {
                for (const auto& [j, cj] : b) {
                    if (i == j) continue;
                    out.axpy(ci * cj, full[static_cast<std::size_t>(i * n + j)]);
                }
            }
            return out;
        }

        void check_table_shape(const StructureTable& table) {
            if (table.dim <= 0) throw AlgebraError("algebra dimension must be positive");
            for (const auto& [ij, value] : table.brackets) {
                auto [i, j] = ij;
                if (i < 0 || j >= table.dim || i >= j) {
                    throw AlgebraError("bracket entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                       ") must satisfy 0 <= i < j < dim");
                }
                for (const auto& [k, c] : value) {
                    if (k < 0 || k >= table.dim) {
                        throw AlgebraError("bracket entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                           ") refers to basis index " + std::to_string(k));
                    }
                }
            }
        }
    }  // namespace

    std::vector<JacobiViolation> validate_jacobi(const StructureTable& table) {
        check_table_shape(table);
        const int n = table.dim;
        auto full = complete_table(table);
        auto br = [&](const LieElement& a, const LieElement& b) { return bracket_with(full, n, a, b); };
        std::vector<JacobiViolation> out;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                for (int k = j + 1; k < n; ++k) {
                    auto xi = LieElement::basis(i), xj = LieElement::basis(j), xk = LieElement::basis(k);
                    LieElement sum = br(xi, br(xj, xk));
                    sum += br(xj, br(xk, xi));
                    sum += br(xk, br(xi, xj));
                    if (!sum.is_zero()) out.push_back({i, j, k, sum});
                }
            }
        }
        return out;
    }

    LieAlgebra LieAlgebra::create(std::string name, std::vector<std::string> basis_names, StructureTable table) {
        if (static_cast<int>(basis_names.size()) != table.dim) {
            throw AlgebraError("basis has " + std::to_string(basis_names.size()) + " names but dimension is " +
                               std::to_string(table.dim));
        }
        std::set<std::string> seen;
        for (const auto& b : basis_names) {
            if (b.empty()) throw AlgebraError("empty basis name");
            if (!seen.insert(b).second) throw AlgebraError("duplicate basis name '" + b + "'");
        }
        auto violations = validate_jacobi(table);
        if (!violations.empty()) {
            const auto& v = violations.front();
            throw AlgebraError("Jacobi identity fails on basis triple (" + basis_names[v.i] + ", " +
                               basis_names[v.j] + ", " + basis_names[v.k] + ")");
        }
        // drop explicit zero brackets so equality is structural
        for (auto it = table.brackets.begin(); it != table.brackets.end();) {
            it = it->second.is_zero() ? table.brackets.erase(it) : std::next(it);
        }
        LieAlgebra L;
        L.name_ = std::move(name);
        L.dim_ = table.dim;
        L.basis_names_ = std::move(basis_names);
        L.full_ = complete_table(table);
        L.table_ = std::move(table);
        return L;
    }

    std::optional<int> LieAlgebra::index_of(const std::string& basis_name) const {
        for (int i = 0; i < dim_; ++i) {
            if (basis_names_[static_cast<std::size_t>(i)] == basis_name) return i;
        }
        return std::nullopt;
    }

    LieElement LieAlgebra::bracket(const LieElement& a, const LieElement& b) const {
        return bracket_with(full_, dim_, a, b);
    }

    bool LieAlgebra::is_abelian() const { return table_.brackets.empty(); }

    std::string LieAlgebra::format(const LieElement& x) const {
        if (x.is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : x) {
            if (!first) os << " + ";
            first = false;
            if (!c.is_one()) os << c << "*";
            os << basis_name(k);
        }
        return os.str();
    }

    bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.basis_names_ == b.basis_names_ && a.table_.dim == b.table_.dim &&
               a.table_.brackets == b.table_.brackets;
    }

    LieElement iterated_bracket(const LieAlgebra& L, std::span<const LieElement> seq) {
        if (seq.empty()) throw std::invalid_argument("iterated bracket of an empty sequence");
        LieElement acc = seq.back();
        for (std::size_t i = seq.size() - 1; i-- > 0;) acc = L.bracket(seq[i], acc);
        return acc;
    }

    namespace builtin {

        LieAlgebra sl2() {
            StructureTable t{3, {}};
            t.brackets[{0, 1}] = LieElement::basis(2);                // [X,Y] = H
            t.brackets[{0, 2}] = LieElement::basis(0, Rational(-2));  // [X,H] = -2X
            t.brackets[{1, 2}] = LieElement::basis(1, Rational(2));   // [Y,H] = 2Y
            return LieAlgebra::create("sl2", {"X", "Y", "H"}, std::move(t));
        }

        LieAlgebra heisenberg3() {
            StructureTable t{3, {}};
            t.brackets[{0, 1}] = LieElement::basis(2);
            return LieAlgebra::create("heisenberg3", {"x", "y", "z"}, std::move(t));
        }

        LieAlgebra abelian(int n) {
            if (n < 1 || n > 3) throw AlgebraError("built-in abelian algebras have dimension 1..3");
            std::vector<std::string> names;
            for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
            return LieAlgebra::create("abelian" + std::to_string(n), std::move(names), StructureTable{n, {}});
        }

        LieAlgebra sl2xsl2() {
            StructureTable t{6, {}};
            for (int off : {0, 3}) {
                t.brackets[{off + 0, off + 1}] = LieElement::basis(off + 2);
                t.brackets[{off + 0, off + 2}] = LieElement::basis(off + 0, Rational(-2));
                t.brackets[{off + 1, off + 2}] = LieElement::basis(off + 1, Rational(2));
            }
            return LieAlgebra::create("sl2xsl2", {"X1", "Y1", "H1", "X2", "Y2", "H2"}, std::move(t));
        }

        LieAlgebra by_name(const std::string& name) {
            if (name == "sl2") return sl2();
            if (name == "heisenberg3") return heisenberg3();
            if (name == "sl2xsl2") return sl2xsl2();
            if (name == "abelian1") return abelian(1);
            if (name == "abelian2") return abelian(2);
            if (name == "abelian3") return abelian(3);
            throw AlgebraError("unknown built-in algebra '" + name + "'");
        }

        std::vector<std::string> names() { return {"sl2", "heisenberg3", "abelian1", "abelian2", "abelian3", "sl2xsl2"}; }

    }  // namespace builtin

}  // namespace cforge
