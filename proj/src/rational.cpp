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

#include "cocycle_forge/rational.hpp"

#include <cctype>
#include <ostream>

namespace cforge {

    namespace {
        bool is_integer_text(std::string_view s) {
            if (s.empty()) return false;
            std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
            if (start == s.size()) return false;
            for (std::size_t i = start; i < s.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
            }
            return true;
        }

        mpz_class to_mpz(std::string_view s) {
            std::string text(s);
            if (!text.empty() && text[0] == '+') text.erase(0, 1);
            return mpz_class(text, 10);
        }
    }  // namespace

    Rational::Rational(std::int64_t n) : value_(static_cast<long>(n)) {}

    Rational::Rational(std::int64_t num, std::int64_t den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
        value_.canonicalize();
    }

    Rational Rational::parse(std::string_view text) {
        auto slash = text.find('/');
        std::string_view num = text.substr(0, slash);
        if (!is_integer_text(num)) throw ParseError("malformed rational '" + std::string(text) + "'");
        if (slash == std::string_view::npos) return Rational(mpq_class(to_mpz(num)));
        std::string_view den = text.substr(slash + 1);
        if (!is_integer_text(den) || den[0] == '-' || den[0] == '+') {
            throw ParseError("malformed rational '" + std::string(text) + "'");
        }
        mpz_class d = to_mpz(den);
        if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        mpq_class q(to_mpz(num), d);
        q.canonicalize();
        return Rational(std::move(q));
    }

    std::string Rational::str() const {
        if (value_.get_den() == 1) return value_.get_num().get_str();
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

    Rational& Rational::operator+=(const Rational& o) {
        value_ += o.value_;
        return *this;
    }

    Rational& Rational::operator-=(const Rational& o) {
        value_ -= o.value_;
        return *this;
    }

    Rational& Rational::operator*=(const Rational& o) {
        value_ *= o.value_;
        return *this;
    }

    Rational& Rational::operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        value_ /= o.value_;
        return *this;
    }

    std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    Rational binomial(int n, int k) {
        if (k < 0 || k > n) return Rational(0);
        mpz_class out;
        mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return Rational(out.get_si());
    }

    Rational factorial(int n) {
        Rational out(1);
        for (int i = 2; i <= n; ++i) out *= Rational(i);
        return out;
    }

}  // namespace cforge
