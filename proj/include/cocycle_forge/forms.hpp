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
 // Bilinear forms, scalar-valued cochains and 2-tensors on a Lie algebra.

#ifndef COCYCLE_FORGE_FORMS_HPP
#define COCYCLE_FORGE_FORMS_HPP

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "cocycle_forge/lie_algebra.hpp"
#include "cocycle_forge/linalg.hpp"

namespace cforge {

    struct BilinearForm {
        RationalMatrix matrix;  // dim x dim, matrix[i][j] = kappa(x_i, x_j)

        static BilinearForm zero(int dim);
        static BilinearForm identity(int dim);

        int dim() const { return static_cast<int>(matrix.size()); }
        Rational operator()(const LieElement& a, const LieElement& b) const;
        bool is_symmetric() const;
        bool is_nondegenerate() const;
    };

    // kappa(x_i, x_j) = tr(ad x_i . ad x_j)
    BilinearForm killing_form(const LieAlgebra& L);

    struct InvarianceViolation {
        int i, j, k;
        Rational lhs;  // kappa([x_i,x_j], x_k)
        Rational rhs;  // kappa(x_i, [x_j,x_k])
    };

    std::vector<InvarianceViolation> check_invariant_form(const LieAlgebra& L, const BilinearForm& kappa);

    /* A totally antisymmetric scalar k-cochain on a Lie algebra. Values are stored densely over all
     * index tuples; setting one tuple sets every permutation with its sign. */
    class Cochain {
    public:
        Cochain(int dim, int arity);

        int dim() const { return dim_; }
        int arity() const { return arity_; }

        // Throws std::invalid_argument if idx repeats an index and v != 0.
        void set(std::span<const int> idx, const Rational& v);
        const Rational& at(std::span<const int> idx) const { return values_[offset(idx)]; }

        // Multilinear evaluation on Lie elements (args.size() == arity).
        Rational operator()(std::span<const LieElement> args) const;
        Rational operator()(const LieElement& a, const LieElement& b, const LieElement& c) const;

        // Values on strictly increasing tuples, zeros omitted.
        std::map<std::vector<int>, Rational> canonical_values() const;
        bool is_zero() const;
        Cochain scaled(const Rational& s) const;

        friend bool operator==(const Cochain& a, const Cochain& b) {
            return a.dim_ == b.dim_ && a.arity_ == b.arity_ && a.values_ == b.values_;
        }

    private:
        std::size_t offset(std::span<const int> idx) const;

        int dim_;
        int arity_;
        std::vector<Rational> values_;
    };

    using Cochain3 = Cochain;

    // f(g1, g2, g3) = kappa(g1, [g2, g3]); throws AlgebraError if kappa is not invariant.
    Cochain cartan_cocycle(const LieAlgebra& L, const BilinearForm& kappa);

    // Chevalley-Eilenberg differential with trivial coefficients:
    // (dc)(g_0..g_k) = sum_{i<j} (-1)^{i+j} c([g_i,g_j], g_0, .., ^g_i, .., ^g_j, .., g_k)
    Cochain ce_diff_constant(const LieAlgebra& L, const Cochain& c);

    struct DegenerateFormError : AlgebraError {
        DegenerateFormError() : AlgebraError("degenerate form") {}
    };

    // The basis (x^j) with kappa(x_i, x^j) = delta_ij, for the given basis (defaults to the standard one).
    std::vector<LieElement> dual_basis(const LieAlgebra& L, const BilinearForm& kappa);
    std::vector<LieElement> dual_basis(const LieAlgebra& L, const BilinearForm& kappa, std::span<const LieElement> basis);

    // sum_{(i,j)} c_ij x_i (x) x_j
    using Tensor2 = FreeCombo<std::pair<int, int>>;

    Tensor2 tensor_product(const LieElement& a, const LieElement& b);
    bool is_symmetric(const Tensor2& r);
    Tensor2 swap_factors(const Tensor2& r);

    // r = 1/2 sum_i (x_i (x) x^i + x^i (x) x_i)
    Tensor2 standard_r_matrix(const LieAlgebra& L, const BilinearForm& kappa);
    Tensor2 standard_r_matrix(const LieAlgebra& L, const BilinearForm& kappa, std::span<const LieElement> basis);

    // g.(a (x) b) = [g,a] (x) b + a (x) [g,b]
    Tensor2 tensor_action(const LieAlgebra& L, const LieElement& g, const Tensor2& r);

    std::string format_tensor(const LieAlgebra& L, const Tensor2& r);

}  // namespace cforge

#endif  // COCYCLE_FORGE_FORMS_HPP
