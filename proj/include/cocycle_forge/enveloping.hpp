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
 // The universal enveloping algebra in the PBW basis of a fixed ordered Lie algebra basis.

#ifndef COCYCLE_FORGE_ENVELOPING_HPP
#define COCYCLE_FORGE_ENVELOPING_HPP

#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cocycle_forge/lie_algebra.hpp"

namespace cforge {

    /* x_1^{a_1} ... x_n^{a_n} in the basis order of the algebra. Ordered graded-lex: lower total degree
     * first, then larger exponents on earlier generators first (so X < Y < H in degree one for sl2). */
    struct PBWMonomial {
        std::vector<int> exponents;

        static PBWMonomial unit(int dim) { return {std::vector<int>(static_cast<std::size_t>(dim), 0)}; }
        static PBWMonomial generator(int dim, int k, int power = 1);

        int dim() const { return static_cast<int>(exponents.size()); }
        int degree() const;
        bool is_unit() const { return degree() == 0; }

        friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;
        friend std::strong_ordering operator<=>(const PBWMonomial& a, const PBWMonomial& b);
    };

    struct PBWMonomialHash {
        std::size_t operator()(const PBWMonomial& m) const noexcept;
    };

    using UEAElement = FreeCombo<PBWMonomial>;

    // sum c * m_1 (x) ... (x) m_n
    using TensorWord = FreeCombo<std::vector<PBWMonomial>>;

    // All monomials with min_degree <= degree <= max_degree, in graded-lex order.
    std::vector<PBWMonomial> monomials_up_to(int dim, int max_degree, int min_degree = 0);

    // epsilon(u): coefficient of the unit monomial.
    Rational augmentation(const UEAElement& u);

    // Degree-one part of u as a Lie element; nullopt if u has a component of any other degree.
    std::optional<LieElement> as_lie_element(const UEAElement& u);
    UEAElement from_lie_element(int dim, const LieElement& g);

    /* Arithmetic in U(g) for one Lie algebra. Products of PBW monomials are straightened with
     * x_j x_i = x_i x_j + [x_j, x_i] (j > i) and memoized, so an instance is meant to be owned by a
     * single worker; it is not safe to share one across threads. */
    class Enveloping {
    public:
        explicit Enveloping(LieAlgebra algebra);

        const LieAlgebra& algebra() const { return algebra_; }
        int dim() const { return algebra_.dim(); }

        UEAElement one() const { return UEAElement::basis(PBWMonomial::unit(dim())); }
        UEAElement monomial(const PBWMonomial& m) const { return UEAElement::basis(m); }
        UEAElement lie(const LieElement& g) const { return from_lie_element(dim(), g); }

        // PBW normal form of the free word x_{w_1} x_{w_2} ... x_{w_k}.
        UEAElement straighten_word(std::span<const int> word) const;

        UEAElement multiply(const PBWMonomial& a, const PBWMonomial& b) const;
        UEAElement multiply(const UEAElement& u, const UEAElement& v) const;
        UEAElement times_generator(const PBWMonomial& m, int k) const;  // m * x_k
        UEAElement times_lie(const UEAElement& u, const LieElement& g) const;  // u * g

        /* Iterated coproduct in Sweedler form: calls fn(coefficient, parts) for each term of
         * Delta^n(m) = sum prod_i multinomial(a_i; b_i1..b_in) x^{b_1} (x) ... (x) x^{b_n}.
         * Every part is an ordered sub-monomial of m. */
        void for_each_split(const PBWMonomial& m, int n,
                            const std::function<void(const Rational&, std::span<const PBWMonomial>)>& fn) const;

        TensorWord coproduct(const PBWMonomial& m) const { return iterated_coproduct(m, 2); }
        TensorWord coproduct(const UEAElement& u) const;
        TensorWord iterated_coproduct(const PBWMonomial& m, int n) const;

        // Slot-wise product in U(g)^{(x) n}; both words must have the same arity.
        TensorWord multiply(const TensorWord& a, const TensorWord& b) const;

        /* Parses the monomial grammar: factors "name" or "name^k" (k >= 1) separated by whitespace or '*',
         * read as a free word and straightened; "1" is the unit. Throws ParseError. */
        UEAElement parse(std::string_view text) const;

        std::string format(const PBWMonomial& m) const;
        std::string format(const UEAElement& u) const;

    private:
        struct PairKey {
            PBWMonomial a, b;
            friend bool operator==(const PairKey&, const PairKey&) = default;
        };
        struct PairKeyHash {
            std::size_t operator()(const PairKey& k) const noexcept;
        };

        LieAlgebra algebra_;
        mutable std::vector<std::unordered_map<PBWMonomial, UEAElement, PBWMonomialHash>> generator_products_;
        mutable std::unordered_map<PairKey, UEAElement, PairKeyHash> products_;
    };

    // A linear endomorphism of U(g), given by its values on PBW monomials.
    using LinearMap = std::function<UEAElement(const PBWMonomial&)>;

    UEAElement apply(const LinearMap& F, const UEAElement& u);

    LinearMap identity_map();
    LinearMap unit_counit_map(int dim);       // eta . epsilon
    LinearMap augmentation_projection();      // Id - eta . epsilon

    // (F * G)(x) = sum_(x) F(x_(1)) G(x_(2)). The returned map refers to env, which must outlive it.
    LinearMap convolution(const Enveloping& env, LinearMap F, LinearMap G);

}  // namespace cforge

#endif  // COCYCLE_FORGE_ENVELOPING_HPP
