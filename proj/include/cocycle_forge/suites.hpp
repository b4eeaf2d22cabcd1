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
 // Exhaustive identity sweeps over PBW monomials up to a degree bound. Each returns its failure rows.

#ifndef COCYCLE_FORGE_SUITES_HPP
#define COCYCLE_FORGE_SUITES_HPP

#include <functional>
#include <string>

#include "cocycle_forge/homotopy.hpp"
#include "cocycle_forge/lifting.hpp"
#include "cocycle_forge/report.hpp"

namespace cforge {

    // Called after each degree stratum: (suite name, degree, monomials in the stratum).
    using Progress = std::function<void(const std::string&, int, std::size_t)>;

    /* Associativity and Delta(uv) = Delta(u)Delta(v) on monomial tuples of total degree <= D; coassociativity,
     * counit and cocommutativity of Delta, the filtration (Id - eta eps)^{*k}(m) = 0 for k > deg m and the
     * convolution unit on monomials of degree <= D. */
    Report hopf_suite(const Enveloping& env, int max_degree, const Progress& progress = {});

    /* pr idempotent with image in g; series pr against the closed form on basis words of length <= min(D, 4);
     * phi_t a coalgebra map with phi_0 = eta eps, phi_1 = Id and phi_t * phi_{-t} = eta eps; the antipode
     * phi_{-1}; A_t in g, its alternative formula, endpoints, and the bracket and derivative identities. */
    Report homotopy_suite(const Homotopy& h, int max_degree, const Progress& progress = {});

    /* verify_lift, antisymmetry of alpha~ in its Lie slots, alpha~(g, g1, g2) = 1/3 f(g, g1, g2), the abelian
     * closed form on abelian algebras and, for sl2, the three vanishing tables. */
    Report lift_suite(const LiftedCochain& lc, int max_degree, const Progress& progress = {});

}  // namespace cforge

#endif  // COCYCLE_FORGE_SUITES_HPP
