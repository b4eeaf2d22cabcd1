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
 // Polynomials in a formal variable t with coefficients in a rational vector space.

#ifndef COCYCLE_FORGE_TPOLY_HPP
#define COCYCLE_FORGE_TPOLY_HPP

#include <limits>
#include <map>
#include <utility>

#include "cocycle_forge/rational.hpp"

namespace cforge {

    namespace detail {
        inline bool coeff_is_zero(const Rational& r) { return r.is_zero(); }
        template <class V> bool coeff_is_zero(const V& v) { return v.is_zero(); }
    }  // namespace detail

    /* sum_n c_n t^n. Coeff must be a rational vector space: +=, -=, *= Rational, is_zero().
     * Zero coefficients are never stored. */
    template <class Coeff>
    class TPolyOf {
    public:
        static constexpr int zero_degree = std::numeric_limits<int>::min();

        TPolyOf() = default;

        static TPolyOf monomial(int n, Coeff c) {
            TPolyOf out;
            out.add_term(n, c);
            return out;
        }

        bool is_zero() const { return coeffs_.empty(); }
        int degree() const { return coeffs_.empty() ? zero_degree : coeffs_.rbegin()->first; }
        const std::map<int, Coeff>& coeffs() const { return coeffs_; }

        Coeff coeff(int n) const {
            auto it = coeffs_.find(n);
            return it == coeffs_.end() ? Coeff() : it->second;
        }

        void add_term(int n, const Coeff& c) {
            if (detail::coeff_is_zero(c)) return;
            auto [it, inserted] = coeffs_.try_emplace(n, c);
            if (!inserted) {
                it->second += c;
                if (detail::coeff_is_zero(it->second)) coeffs_.erase(it);
            }
        }

        TPolyOf& operator+=(const TPolyOf& o) {
            for (const auto& [n, c] : o.coeffs_) add_term(n, c);
            return *this;
        }

        TPolyOf& operator-=(const TPolyOf& o) {
            for (const auto& [n, c] : o.coeffs_) {
                Coeff neg = c;
                neg *= Rational(-1);
                add_term(n, neg);
            }
            return *this;
        }

        TPolyOf& operator*=(const Rational& s) {
            if (s.is_zero()) {
                coeffs_.clear();
                return *this;
            }
            for (auto& kv : coeffs_) kv.second *= s;
            return *this;
        }

        friend TPolyOf operator+(TPolyOf a, const TPolyOf& b) { return a += b; }
        friend TPolyOf operator-(TPolyOf a, const TPolyOf& b) { return a -= b; }
        friend TPolyOf operator*(TPolyOf a, const Rational& s) { return a *= s; }
        friend bool operator==(const TPolyOf& a, const TPolyOf& b) { return a.coeffs_ == b.coeffs_; }

        // p(t) -> p(-t)
        TPolyOf negate_variable() const {
            TPolyOf out(*this);
            for (auto& [n, c] : out.coeffs_) {
                if (n % 2 != 0) c *= Rational(-1);
            }
            return out;
        }

        TPolyOf derivative() const {
            TPolyOf out;
            for (const auto& [n, c] : coeffs_) {
                if (n == 0) continue;
                Coeff d = c;
                d *= Rational(n);
                out.add_term(n - 1, d);
            }
            return out;
        }

        Coeff evaluate(const Rational& lambda) const {
            Coeff out{};
            for (const auto& [n, c] : coeffs_) {
                Rational p(1);
                for (int i = 0; i < n; ++i) p *= lambda;
                Coeff term = c;
                term *= p;
                out += term;
            }
            return out;
        }

        // Integral over [0, 1].
        Coeff integrate_unit_interval() const {
            Coeff out{};
            for (const auto& [n, c] : coeffs_) {
                Coeff term = c;
                term *= Rational(1, n + 1);
                out += term;
            }
            return out;
        }

        /* Product with another t-polynomial given a bilinear pairing of coefficients,
         * e.g. multiplication in the enveloping algebra or the Lie bracket. */
        template <class Other, class Pairing>
        auto pair_with(const TPolyOf<Other>& other, Pairing&& pairing) const {
            using Out = decltype(pairing(std::declval<const Coeff&>(), std::declval<const Other&>()));
            TPolyOf<Out> out;
            for (const auto& [p, a] : coeffs_) {
                for (const auto& [q, b] : other.coeffs()) out.add_term(p + q, pairing(a, b));
            }
            return out;
        }

    private:
        std::map<int, Coeff> coeffs_;
    };

    using TPoly = TPolyOf<Rational>;

    inline Rational integrate_unit_interval(const TPoly& p) { return p.integrate_unit_interval(); }
    inline Rational evaluate_tpoly(const TPoly& p, const Rational& lambda) { return p.evaluate(lambda); }

}  // namespace cforge

#endif  // COCYCLE_FORGE_TPOLY_HPP
