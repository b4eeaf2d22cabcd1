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
 // The Eulerian idempotent pr, the coalgebra maps phi_t = exp*(t pr) and the connection A_t.

#ifndef COCYCLE_FORGE_HOMOTOPY_HPP
#define COCYCLE_FORGE_HOMOTOPY_HPP

#include <span>
#include <string>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "cocycle_forge/enveloping.hpp"
#include "cocycle_forge/tpoly.hpp"

namespace cforge {

    using TPolyUEA = TPolyOf<UEAElement>;
    using TPolyLie = TPolyOf<LieElement>;

    // Raised when a value that must lie in the Lie algebra has components of another PBW degree.
    struct ConventionError : std::logic_error {
        using std::logic_error::logic_error;
    };

    /*
     * pr     = sum_{k>=1} (-1)^{k+1}/k (Id - eta eps)^{*k}      (convolution logarithm of Id)
     * phi_t  = sum_{n>=0} t^n/n! pr^{*n}                         (so phi_0 = eta eps, phi_1 = Id)
     * A_t(x, g) = sum_(x) phi_{-t}(x_(1)) phi_t(x_(2) g)
     *
     * All sums are finite on a monomial of degree d: (Id - eta eps)^{*k} and pr^{*k} vanish for k > d.
     * Values are memoized per PBW monomial; like Enveloping, an instance belongs to one worker.
     */
    class Homotopy {
    public:
        explicit Homotopy(LieAlgebra algebra);

        const Enveloping& enveloping() const { return env_; }
        const LieAlgebra& algebra() const { return env_.algebra(); }

        // (Id - eta eps)^{*k}(m)
        UEAElement augmentation_power(int k, const PBWMonomial& m) const;

        // The series value of pr(m) before projecting to the Lie algebra.
        UEAElement pr_raw(const PBWMonomial& m) const;
        // Throws ConventionError("pr left the Lie algebra") if pr_raw has a non-linear component.
        LieElement pr(const PBWMonomial& m) const;
        LieElement pr(const UEAElement& u) const;

        // pr^{*n}(m); pr^{*0} = eta eps
        UEAElement pr_power(int n, const PBWMonomial& m) const;

        TPolyUEA phi(const PBWMonomial& m) const;
        TPolyUEA phi(const UEAElement& u) const;

        // Throws ConventionError("A_t left the Lie algebra") on a non-linear t-coefficient.
        TPolyLie a_map(const PBWMonomial& m, int generator) const;
        TPolyLie a_map(const UEAElement& u, const LieElement& g) const;
        // -sum_(x) phi_{-t}(x_(1) g) phi_t(x_(2)), computed independently of a_map
        TPolyLie a_map_alternative(const UEAElement& u, const LieElement& g) const;

        // Products of t-polynomials through the enveloping algebra / the Lie bracket.
        TPolyUEA multiply(const TPolyUEA& a, const TPolyUEA& b) const;
        TPolyLie bracket(const TPolyLie& a, const TPolyLie& b) const;
        TPolyLie to_lie(const TPolyUEA& p, const char* what) const;

    private:
        using MonoMap = std::unordered_map<PBWMonomial, UEAElement, PBWMonomialHash>;

        Enveloping env_;
        mutable std::vector<MonoMap> augmentation_powers_;  // index k
        mutable std::vector<MonoMap> pr_powers_;            // index n
        mutable std::unordered_map<PBWMonomial, LieElement, PBWMonomialHash> pr_cache_;
        mutable std::unordered_map<PBWMonomial, TPolyUEA, PBWMonomialHash> phi_cache_;
        mutable std::vector<std::unordered_map<PBWMonomial, TPolyLie, PBWMonomialHash>> a_cache_;
    };

    /* pr(g_1 ... g_n) = 1/n^2 sum_{s in S_n} (-1)^{d(s)} C(n-1, d(s))^{-1} [g_{s(1)}, ..., g_{s(n)}]
     * with d(s) the number of descents of s and [..] the right-nested bracket.
     * Throws std::invalid_argument for an empty word or n > 5. */
    LieElement pr_closed_form(const LieAlgebra& L, std::span<const LieElement> word);

    // "c0 + c1 t + ..." with each coefficient parenthesized, "0" for the zero polynomial.
    std::string format_tpoly(const Enveloping& env, const TPolyUEA& p);
    std::string format_tpoly(const LieAlgebra& L, const TPolyLie& p);

}  // namespace cforge

#endif  // COCYCLE_FORGE_HOMOTOPY_HPP
