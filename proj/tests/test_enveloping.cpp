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

#include <gtest/gtest.h>

#include <random>

#include "cocycle_forge/enveloping.hpp"
#include "cocycle_forge/suites.hpp"
#include "test_support.hpp"

using namespace cforge;
using namespace cforge::testing;

namespace {

constexpr int X = 0, Y = 1, H = 2;

// u as a matrix under a representation given by one matrix per basis generator.
Matrix represent(const std::vector<Matrix>& rho, const UEAElement& u) {
    const std::size_t n = rho.front().size();
    Matrix out = zeros(n);
    for (const auto& [m, c] : u) {
        Matrix p = identity(n);
        for (int k = 0; k < m.dim(); ++k) {
            for (int e = 0; e < m.exponents[static_cast<std::size_t>(k)]; ++e) p = matmul(p, rho[static_cast<std::size_t>(k)]);
        }
        out = add(out, scale(p, c));
    }
    return out;
}

// The defining representation of sl2 on Q^2.
std::vector<Matrix> sl2_fundamental() {
    return {{{0, 1}, {0, 0}}, {{0, 0}, {1, 0}}, {{1, 0}, {0, -1}}};
}

}  // namespace

TEST(Enveloping, StraighteningExamples) {
    Enveloping env(builtin::sl2());
    EXPECT_EQ(env.straighten_word(std::vector{Y, X}), env.parse("X Y") - env.parse("H"));
    EXPECT_EQ(env.straighten_word(std::vector{X, Y}), env.monomial(mono(env, "X Y")));
    EXPECT_EQ(env.straighten_word(std::vector{H, X}), env.parse("X H") + env.parse("X") * Rational(2));
    const UEAElement u = env.parse("X Y^2 H");
    EXPECT_EQ(env.multiply(u, env.one()), u);
    EXPECT_EQ(env.multiply(env.one(), u), u);
    EXPECT_EQ(env.multiply(env.parse("Y"), env.parse("X")), env.parse("X Y") - env.parse("H"));
    EXPECT_EQ(env.multiply(env.parse("X"), env.parse("Y H")), env.monomial(mono(env, "X Y H")));
}

TEST(Enveloping, MonomialGrammar) {
    Enveloping env(builtin::sl2());
    EXPECT_EQ(env.parse("Y X"), env.parse("X*Y") - env.parse("H"));
    EXPECT_EQ(env.parse("1"), env.one());
    EXPECT_EQ(env.parse("X^2"), env.parse("X X"));
    EXPECT_EQ(env.format(env.parse("H X")), "2*X + X H");
    EXPECT_THROW(env.parse("Z"), ParseError);
    EXPECT_THROW(env.parse("X^0"), ParseError);
    EXPECT_THROW(env.parse("X^"), ParseError);
    EXPECT_THROW(env.parse(""), ParseError);
}

TEST(Enveloping, GradedLexOrder) {
    Enveloping env(builtin::sl2());
    std::vector<std::string> names;
    for (const auto& m : monomials_up_to(3, 2)) names.push_back(env.format(m));
    EXPECT_EQ(names, (std::vector<std::string>{"1", "X", "Y", "H", "X^2", "X Y", "X H", "Y^2", "Y H", "H^2"}));
    EXPECT_EQ(monomials_up_to(3, 4).size(), 35u);
    EXPECT_EQ(monomials_up_to(3, 4, 1).size(), 34u);
}

TEST(Enveloping, Augmentation) {
    Enveloping env(builtin::sl2());
    EXPECT_EQ(augmentation(env.one()), Rational(1));
    EXPECT_EQ(augmentation(env.parse("X Y")), Rational(0));
    EXPECT_EQ(augmentation(env.one() * Rational(3) + env.parse("X Y") * Rational(2)), Rational(3));
}

TEST(Enveloping, CoproductExamples) {
    Enveloping env(builtin::sl2());
    const auto one = mono(env, "1"), x = mono(env, "X"), y = mono(env, "Y"), xy = mono(env, "X Y"), x2 = mono(env, "X^2");
    TensorWord dx;
    dx.add_term({x, one}, 1);
    dx.add_term({one, x}, 1);
    EXPECT_EQ(env.coproduct(x), dx);

    TensorWord dxy;
    for (auto parts : {std::vector{xy, one}, {x, y}, {y, x}, {one, xy}}) dxy.add_term(parts, 1);
    EXPECT_EQ(env.coproduct(xy), dxy);

    TensorWord dx2;
    dx2.add_term({x2, one}, 1);
    dx2.add_term({x, x}, 2);
    dx2.add_term({one, x2}, 1);
    EXPECT_EQ(env.coproduct(x2), dx2);
}

TEST(Enveloping, IteratedCoproductExamples) {
    Enveloping env(builtin::sl2());
    const auto one = mono(env, "1"), x = mono(env, "X");
    TensorWord d3;
    d3.add_term({x, one, one}, 1);
    d3.add_term({one, x, one}, 1);
    d3.add_term({one, one, x}, 1);
    EXPECT_EQ(env.iterated_coproduct(x, 3), d3);
    for (int n = 1; n <= 4; ++n) {
        EXPECT_EQ(env.iterated_coproduct(one, n), TensorWord::basis(std::vector<PBWMonomial>(static_cast<std::size_t>(n), one)));
    }
    EXPECT_EQ(env.iterated_coproduct(mono(env, "X Y"), 3).size(), 9u);
    EXPECT_EQ(env.iterated_coproduct(x, 1), TensorWord::basis({x}));
}

TEST(Enveloping, ConvolutionExamples) {
    Enveloping env(builtin::sl2());
    const LinearMap id = identity_map();
    const LinearMap plus = augmentation_projection();
    EXPECT_EQ(cforge::apply(convolution(env, id, id), env.parse("X")), env.parse("X") * Rational(2));
    EXPECT_EQ(cforge::apply(convolution(env, plus, plus), env.parse("X Y")), env.parse("X Y") * Rational(2) - env.parse("H"));
    const LinearMap unit = unit_counit_map(3);
    for (const auto& m : monomials_up_to(3, 3)) {
        EXPECT_EQ(convolution(env, unit, plus)(m), plus(m));
        EXPECT_EQ(convolution(env, plus, unit)(m), plus(m));
    }
}

TEST(Enveloping, ConvolutionAssociative) {
    Enveloping env(builtin::sl2());
    const LinearMap id = identity_map(), plus = augmentation_projection(), unit = unit_counit_map(3);
    const std::vector<LinearMap> maps{id, plus, unit, convolution(env, id, plus)};
    for (const auto& F : maps)
        for (const auto& G : maps)
            for (const auto& K : maps) {
                const LinearMap left = convolution(env, convolution(env, F, G), K);
                const LinearMap right = convolution(env, F, convolution(env, G, K));
                for (const auto& m : monomials_up_to(3, 3)) EXPECT_EQ(left(m), right(m));
            }
}

TEST(Enveloping, StraighteningMatchesAdjointRepresentation) {
    std::mt19937 rng(11);
    for (const auto& name : builtin::names()) {
        const LieAlgebra L = builtin::by_name(name);
        const Enveloping env(L);
        const auto rho = adjoint_matrices(L);
        std::uniform_int_distribution<int> letter(0, L.dim() - 1), length(1, 5);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<int> word(static_cast<std::size_t>(length(rng)));
            for (auto& w : word) w = letter(rng);
            Matrix expected = identity(static_cast<std::size_t>(L.dim()));
            for (int w : word) expected = matmul(expected, rho[static_cast<std::size_t>(w)]);
            EXPECT_EQ(represent(rho, env.straighten_word(word)), expected) << name;
        }
    }
}

TEST(Enveloping, StraighteningMatchesFundamentalSl2) {
    const Enveloping env(builtin::sl2());
    const auto rho = sl2_fundamental();
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> letter(0, 2), length(1, 6);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<int> word(static_cast<std::size_t>(length(rng)));
        for (auto& w : word) w = letter(rng);
        Matrix expected = identity(2);
        for (int w : word) expected = matmul(expected, rho[static_cast<std::size_t>(w)]);
        EXPECT_EQ(represent(rho, env.straighten_word(word)), expected);
    }
}

TEST(Enveloping, RandomAssociativityAndMultiplicativeCoproduct) {
    const Enveloping env(builtin::sl2());
    const auto monos = monomials_up_to(3, 3);
    std::mt19937 rng(3);
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
        const UEAElement a = env.monomial(monos[pick(rng)]), b = env.monomial(monos[pick(rng)]), c = env.monomial(monos[pick(rng)]);
        EXPECT_EQ(env.multiply(env.multiply(a, b), c), env.multiply(a, env.multiply(b, c)));
        EXPECT_EQ(env.coproduct(env.multiply(a, b)), env.multiply(env.coproduct(a), env.coproduct(b)));
    }
}

TEST(Enveloping, HopfSuite) {
    EXPECT_EQ(hopf_suite(Enveloping(builtin::sl2()), 4), Report{});
    EXPECT_EQ(hopf_suite(Enveloping(builtin::heisenberg3()), 4), Report{});
    EXPECT_EQ(hopf_suite(Enveloping(builtin::sl2xsl2()), 3), Report{});
}
