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
 // The lifted 2-cochain alpha~ on (Ug)^v, its Chevalley-Eilenberg differential and the sl2 B-tables.

#ifndef COCYCLE_FORGE_LIFTING_HPP
#define COCYCLE_FORGE_LIFTING_HPP

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

#include "cocycle_forge/forms.hpp"
#include "cocycle_forge/homotopy.hpp"
#include "cocycle_forge/report.hpp"

namespace cforge {

    /*
     * alpha~(x, g1, g2) = sum_(x) int_0^1 f(pr(x_(1)), A_t(x_(2), g1), A_t(x_(3), g2)) dt
     *
     * Values are memoized per (monomial, i, j). f may be any antisymmetric 3-cochain; only
     * verify_lift requires it to be closed.
     */
    class LiftedCochain {
    public:
        LiftedCochain(LieAlgebra algebra, Cochain cocycle);

        const Homotopy& homotopy() const { return homotopy_; }
        const Enveloping& enveloping() const { return homotopy_.enveloping(); }
        const LieAlgebra& algebra() const { return homotopy_.algebra(); }
        const Cochain& cocycle() const { return f_; }

        // The t-integrand before integration.
        TPoly integrand(const PBWMonomial& m, int i, int j) const;

        Rational value(const PBWMonomial& m, int i, int j) const;
        Rational value(const UEAElement& x, const LieElement& g1, const LieElement& g2) const;

        /* d(alpha~)(x, g1, g2, g3) with (g.phi)(u) = phi(u g):
         *   a(x g1, g2, g3) - a(x g2, g1, g3) + a(x g3, g1, g2)
         *   - a(x, [g1,g2], g3) + a(x, [g1,g3], g2) + a(x, g1, [g2,g3])                    */
        Rational ce_diff(const UEAElement& x, const LieElement& g1, const LieElement& g2, const LieElement& g3) const;

    private:
        struct Key {
            PBWMonomial m;
            int i, j;
            friend bool operator==(const Key&, const Key&) = default;
        };
        struct KeyHash {
            std::size_t operator()(const Key& k) const noexcept {
                return PBWMonomialHash{}(k.m) * 1315423911u + static_cast<std::size_t>(k.i * 64 + k.j);
            }
        };

        Homotopy homotopy_;
        Cochain f_;
        mutable std::unordered_map<Key, Rational, KeyHash> cache_;
    };

    inline Rational alpha_tilde(const LiftedCochain& lc, const UEAElement& x, const LieElement& g1, const LieElement& g2) {
        return lc.value(x, g1, g2);
    }

    inline Rational ce_diff_dual(const LiftedCochain& lc, const UEAElement& x, const LieElement& g1,
                                 const LieElement& g2, const LieElement& g3) {
        return lc.ce_diff(x, g1, g2, g3);
    }

    /* Checks d(alpha~)(m, x_i, x_j, x_k) = eps(m) f(x_i, x_j, x_k) for every monomial of degree <= D and
     * every i < j < k. If f is not closed the report holds the single row "input is not a 3-cocycle".
     * progress, when set, is called once per finished degree. */
    Report verify_lift(const LiftedCochain& lc, int max_degree,
                       const std::function<void(int degree, std::size_t monomials)>& progress = {});

    // 1/3 f(x_1, g1, g2) with x_1 the degree-one part of x. Throws AlgebraError unless the algebra is abelian.
    Rational abelian_closed_form(const LiftedCochain& lc, const UEAElement& x, const LieElement& g1, const LieElement& g2);

    enum class BPair { XY, XH, YH };

    std::string to_string(BPair p);
    BPair parse_bpair(const std::string& text);  // throws std::invalid_argument

    struct BEntry {
        std::array<int, 3> abc;
        Rational value;
    };

    // B_pair(a,b,c) = alpha~(X^a Y^b H^c, first, second) for 1 <= a+b+c <= Dmax, in graded-lex order.
    struct BTable {
        BPair pair;
        int max_degree = 0;
        std::vector<BEntry> entries;
    };

    // Requires the algebra to be sl2 with basis (X, Y, H); throws AlgebraError otherwise.
    BTable b_table(const LiftedCochain& lc, BPair pair, int max_degree);

    // B_XY vanishes unless a = b, B_XH unless a = b - 1, B_YH unless a = b + 1.
    Report check_vanishing(const BTable& table);

}  // namespace cforge

#endif  // COCYCLE_FORGE_LIFTING_HPP
