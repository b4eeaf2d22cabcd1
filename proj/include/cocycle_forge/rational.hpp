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
 // Exact rational scalars backed by GMP.

#ifndef COCYCLE_FORGE_RATIONAL_HPP
#define COCYCLE_FORGE_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cforge {

    struct ParseError : std::runtime_error {
        using std::runtime_error::runtime_error;
    };

    /* Arbitrary-precision rational number, always in lowest terms with a positive denominator.
     * Text form is "p/q", or "p" when q == 1. */
    class Rational {
    public:
        Rational() = default;
        Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
        Rational(std::int64_t num, std::int64_t den);

        static Rational parse(std::string_view text);

        bool is_zero() const { return sgn(value_) == 0; }
        bool is_one() const { return value_ == 1; }
        int sign() const { return sgn(value_); }

        std::string numerator() const { return value_.get_num().get_str(); }
        std::string denominator() const { return value_.get_den().get_str(); }
        std::string str() const;

        Rational operator-() const;
        Rational& operator+=(const Rational& o);
        Rational& operator-=(const Rational& o);
        Rational& operator*=(const Rational& o);
        Rational& operator/=(const Rational& o);

        friend Rational operator+(Rational a, const Rational& b) { return a += b; }
        friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
        friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
        friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

        friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
        friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

        friend std::ostream& operator<<(std::ostream& os, const Rational& r);

    private:
        explicit Rational(mpq_class v) : value_(std::move(v)) {}
        mpq_class value_;
    };

    Rational binomial(int n, int k);
    Rational factorial(int n);

}  // namespace cforge

#endif  // COCYCLE_FORGE_RATIONAL_HPP
