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
 // Finite-dimensional Lie algebras given by rational structure constants.

#ifndef COCYCLE_FORGE_LIE_ALGEBRA_HPP
#define COCYCLE_FORGE_LIE_ALGEBRA_HPP

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cocycle_forge/free_combo.hpp"

namespace cforge {

    // An element sum_k c_k x_k of the Lie algebra, keyed by basis index.
    using LieElement = FreeCombo<int>;

    struct AlgebraError : std::runtime_error {
        using std::runtime_error::runtime_error;
    };

    /* Brackets [x_i, x_j] for i < j only; pairs that are not listed bracket to zero. */
    struct StructureTable {
        int dim = 0;
        std::map<std::pair<int, int>, LieElement> brackets;
    };

    struct JacobiViolation {
        int i, j, k;
        LieElement residual;  // [x_i,[x_j,x_k]] + [x_j,[x_k,x_i]] + [x_k,[x_i,x_j]]
    };

    // Every basis triple i < j < k whose cyclic Jacobi sum is nonzero. Empty means the table is a Lie algebra.
    std::vector<JacobiViolation> validate_jacobi(const StructureTable& table);

    class LieAlgebra {
    public:
        // Throws AlgebraError on malformed data or a Jacobi failure (the message names the offending triple).
        static LieAlgebra create(std::string name, std::vector<std::string> basis_names, StructureTable table);

        const std::string& name() const { return name_; }
        int dim() const { return dim_; }
        const std::vector<std::string>& basis_names() const { return basis_names_; }
        const std::string& basis_name(int i) const { return basis_names_.at(static_cast<std::size_t>(i)); }
        std::optional<int> index_of(const std::string& basis_name) const;
        const StructureTable& table() const { return table_; }

        LieElement generator(int i) const { return LieElement::basis(i); }
        const LieElement& bracket_basis(int i, int j) const { return full_[static_cast<std::size_t>(i * dim_ + j)]; }
        LieElement bracket(const LieElement& a, const LieElement& b) const;

        bool is_abelian() const;
        std::string format(const LieElement& x) const;

        friend bool operator==(const LieAlgebra& a, const LieAlgebra& b);

    private:
        LieAlgebra() = default;

        std::string name_;
        int dim_ = 0;
        std::vector<std::string> basis_names_;
        StructureTable table_;
        std::vector<LieElement> full_;  // dim*dim, antisymmetric completion of table_
    };

    inline LieElement bracket(const LieAlgebra& L, const LieElement& a, const LieElement& b) { return L.bracket(a, b); }

    // Right-nested [h_1,[h_2,[...,[h_{n-1},h_n]...]]]; throws std::invalid_argument on an empty sequence.
    LieElement iterated_bracket(const LieAlgebra& L, std::span<const LieElement> seq);

    namespace builtin {
        LieAlgebra sl2();           // basis X, Y, H with [X,Y]=H, [H,X]=2X, [H,Y]=-2Y
        LieAlgebra heisenberg3();   // basis x, y, z with [x,y]=z
        LieAlgebra abelian(int n);  // basis x1..xn, 1 <= n <= 3
        LieAlgebra sl2xsl2();       // basis X1, Y1, H1, X2, Y2, H2

        // "sl2" | "heisenberg3" | "abelian1".."abelian3" | "sl2xsl2"
        LieAlgebra by_name(const std::string& name);
        std::vector<std::string> names();
    }  // namespace builtin

}  // namespace cforge

#endif  // COCYCLE_FORGE_LIE_ALGEBRA_HPP
