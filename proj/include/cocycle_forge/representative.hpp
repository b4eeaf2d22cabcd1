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
 // The abelian representative  C -> (Ug)^v -> (Ug+)^v x_alpha g -> g  and the quasi-invariant tensor on it.

#ifndef COCYCLE_FORGE_REPRESENTATIVE_HPP
#define COCYCLE_FORGE_REPRESENTATIVE_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "cocycle_forge/lifting.hpp"
#include "cocycle_forge/report.hpp"

namespace cforge {

    /* A functional on Ug. The base is the counit, the dual of a PBW monomial, or the slice
     * alpha~(-, x_i, x_j); suffix (k_1, ..., k_r) records the action x_{k_1} . ... . x_{k_r} . base,
     * which evaluates at m as base(m x_{k_1} ... x_{k_r}). */
    struct Atom {
        enum class Kind { counit, dual_monomial, omega_slice };

        Kind kind = Kind::counit;
        PBWMonomial monomial;  // dual_monomial only
        int i = 0, j = 0;      // omega_slice only, i < j
        std::vector<int> suffix;

        static Atom counit() { return {}; }
        static Atom dual_monomial(PBWMonomial m) { return {Kind::dual_monomial, std::move(m), 0, 0, {}}; }
        static Atom omega_slice(int i, int j) { return {Kind::omega_slice, {}, i, j, {}}; }

        friend bool operator==(const Atom&, const Atom&) = default;
        friend std::strong_ordering operator<=>(const Atom&, const Atom&) = default;
    };

    // V2 = (Ug)^v; elements of V3 = (Ug+)^v are DualElements whose value at 1 is ignored.
    using DualElement = FreeCombo<Atom>;

    // (h, X) in E = V3 x_alpha g
    struct ExtElement {
        DualElement h;
        LieElement x;

        static ExtElement lie(LieElement x) { return {{}, std::move(x)}; }
        static ExtElement v3(DualElement h) { return {std::move(h), {}}; }

        ExtElement& operator+=(const ExtElement& o) { h += o.h; x += o.x; return *this; }
        ExtElement& operator-=(const ExtElement& o) { h -= o.h; x -= o.x; return *this; }
        ExtElement& operator*=(const Rational& s) { h *= s; x *= s; return *this; }
        friend ExtElement operator+(ExtElement a, const ExtElement& b) { return a += b; }
        friend ExtElement operator-(ExtElement a, const ExtElement& b) { return a -= b; }
        friend ExtElement operator*(ExtElement a, const Rational& s) { return a *= s; }
    };

    // v (x) e in V2 (x) E and e (x) v in E (x) V2; a MixedTensor lives in (V2 (x) E) + (E (x) V2).
    struct MixedTensor {
        std::vector<std::pair<DualElement, ExtElement>> left;
        std::vector<std::pair<ExtElement, DualElement>> right;

        MixedTensor& operator+=(const MixedTensor& o);
        MixedTensor& operator*=(const Rational& s);
        friend MixedTensor operator+(MixedTensor a, const MixedTensor& b) { return a += b; }
        friend MixedTensor operator-(MixedTensor a, MixedTensor b) { return a += (b *= Rational(-1)); }
    };

    // Sum of pure tensors a (x) b in E (x) E.
    struct ExtTensor {
        std::vector<std::pair<ExtElement, ExtElement>> terms;
    };

    DualElement counit_functional();
    DualElement dual_monomial(const PBWMonomial& m);
    DualElement omega_cochain(int i, int j);
    DualElement omega_cochain(const LieElement& a, const LieElement& b);  // bilinear, antisymmetric
    // (x_k . v)(m) = v(m x_k)
    DualElement g_action_dual(int k, const DualElement& v);
    DualElement g_action_dual(const LieElement& g, const DualElement& v);
    // Phi(a,b,c) = a.w(b,c) + b.w(c,a) + c.w(a,b) - w([a,b],c) - w([b,c],a) - w([c,a],b)
    DualElement phi_cochain(const LieAlgebra& L, const LieElement& a, const LieElement& b, const LieElement& c);
    DualElement phi_cochain(const LieAlgebra& L, int i, int j, int k);

    /* Evaluation of functionals and the crossed module structure for one lifted cocycle.
     * Atom values are memoized per (atom, monomial); an instance belongs to one worker. */
    class Representative {
    public:
        explicit Representative(LiftedCochain lifted);

        const LiftedCochain& lifted() const { return lc_; }
        const LieAlgebra& algebra() const { return lc_.algebra(); }
        const Enveloping& enveloping() const { return lc_.enveloping(); }

        Rational eval(const DualElement& v, const PBWMonomial& m) const;
        Rational eval(const Atom& a, const PBWMonomial& m) const;

        // Q(h) = h - h(1) counit, so Q(h)(1) = 0 and d(Q(h)) = h.
        DualElement section_q(const DualElement& h) const;
        ExtElement mu(const DualElement& v) const { return ExtElement::v3(v); }
        // alpha(a, b) as a functional on Ug+
        DualElement alpha(const LieElement& a, const LieElement& b) const { return omega_cochain(a, b); }

        // [(h1,X1),(h2,X2)] = (X1.h2 - X2.h1 + alpha(X1,X2), [X1,X2])
        ExtElement bracket(const ExtElement& a, const ExtElement& b) const;
        // (h, X) . v = X . v
        DualElement act(const ExtElement& e, const DualElement& v) const { return g_action_dual(e.x, v); }

        // Lie coordinates followed by the V3 values on monomials of degree 1..D.
        std::vector<Rational> probe(const ExtElement& e, int max_degree) const;
        // Values on monomials of degree 0..D.
        std::vector<Rational> probe(const DualElement& v, int max_degree) const;

    private:
        struct EvalKey {
            Atom atom;
            PBWMonomial m;
            friend bool operator==(const EvalKey&, const EvalKey&) = default;
            friend std::strong_ordering operator<=>(const EvalKey&, const EvalKey&) = default;
        };

        LiftedCochain lc_;
        mutable std::map<EvalKey, Rational> cache_;
    };

    inline Rational eval_dual(const Representative& rep, const DualElement& v, const PBWMonomial& m) {
        return rep.eval(v, m);
    }
    inline DualElement section_q(const Representative& rep, const DualElement& h) { return rep.section_q(h); }
    inline ExtElement mu(const Representative& rep, const DualElement& v) { return rep.mu(v); }
    inline ExtElement ext_bracket(const Representative& rep, const ExtElement& a, const ExtElement& b) {
        return rep.bracket(a, b);
    }

    // Components (s_q, t_q) of r with the coefficient folded into s_q.
    std::vector<std::pair<LieElement, LieElement>> components(const Tensor2& r);

    // r-bar = sum s_q-bar (x) t_q-bar
    ExtTensor lift_r(const Tensor2& r);

    // xi0(X-bar) + xi0(h-bar) for e = (h, X)
    MixedTensor xi0(const Representative& rep, const Tensor2& r, const ExtElement& e);
    // C(h, X) = 1 (x) X-bar + X-bar (x) 1
    MixedTensor c_term(const ExtElement& e);
    // xi = -xi0 - C
    MixedTensor xi(const Representative& rep, const Tensor2& r, const ExtElement& e);
    // c = 1_{V2}
    DualElement c_element();

    // Diagonal actions: e on E (x) E by brackets, e on mixed tensors by brackets and X . v.
    ExtTensor act(const Representative& rep, const ExtElement& e, const ExtTensor& t);
    MixedTensor act(const Representative& rep, const ExtElement& e, const MixedTensor& t);
    // u . r-bar = -sum (s.u) (x) t-bar - sum s-bar (x) (t.u)
    MixedTensor act_on_r(const Tensor2& r, const DualElement& u);
    // beta applies mu to the V2 slot
    ExtTensor beta(const Representative& rep, const MixedTensor& t);

    // Contracts the V2 slots against m: (sum_left v(m) e, sum_right v(m) e).
    std::pair<ExtElement, ExtElement> evaluate_v2_slots(const Representative& rep, const MixedTensor& t,
                                                        const PBWMonomial& m);

    /* (i) sum_q f(s_q, X, Y) t_q = [X, Y] and sum_q s_q f(t_q, X, Y) = [X, Y] for all basis pairs;
     * (ii) sum_q Phi(s_q, X, Y)(m) t_q = eps(m) [X, Y] and its mirror for all monomials of degree <= D. */
    Report compat_check(const Representative& rep, const Tensor2& r, int max_degree);

    /* Conditions (a), (b), (c) of a quasi-invariant tensor for (r-bar, xi, c), every functional probed on
     * monomials of degree <= D. Generators: the basis X-bar and h-bar = d(m*) for 1 <= deg m <= D;
     * u in (b) ranges over m* for deg m <= D and the counit. Condition (c) compares modulo
     * mu(u) (x) v = u (x) mu(v). Preconditions (compatibility, r symmetric and invariant) are checked first. */
    Report verify_quasi_invariance(const Representative& rep, const Tensor2& r, int max_degree,
                                   const std::function<void(const std::string&, std::size_t)>& progress = {});

    /* The standard r-matrix is the unique symmetric tensor in g (x) g whose product in Ug is its
     * Casimir element: the symmetric tensors inject into Ug, the symmetric solution of mult(s) = Omega is r,
     * and adding any x_a (x) x_b - x_b (x) x_a with [x_a, x_b] != 0 changes the image. */
    Report casimir_uniqueness_check(const LieAlgebra& L, const BilinearForm& kappa);

    // Product in Ug of a tensor in g (x) g.
    UEAElement multiply_tensor(const Enveloping& env, const Tensor2& t);

}  // namespace cforge

#endif  // COCYCLE_FORGE_REPRESENTATIVE_HPP
