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
 // Sparse finite rational linear combinations over an ordered key alphabet.

#ifndef COCYCLE_FORGE_FREE_COMBO_HPP
#define COCYCLE_FORGE_FREE_COMBO_HPP

#include <map>
#include <utility>

#include "cocycle_forge/rational.hpp"

namespace cforge {

    /* A finite sum  sum_k c_k * k  with c_k rational. Zero coefficients are never stored, so two combos
     * are equal exactly when their term maps are equal. Keys are kept ordered, which makes iteration
     * (and hence any serialization) deterministic. */
    template <class Key, class Compare = std::less<Key>>
    class FreeCombo {
    public:
        using key_type = Key;
        using map_type = std::map<Key, Rational, Compare>;
        using const_iterator = typename map_type::const_iterator;

        FreeCombo() = default;

        static FreeCombo basis(Key k, Rational c = Rational(1)) {
            FreeCombo out;
            out.add_term(std::move(k), c);
            return out;
        }

        bool is_zero() const { return terms_.empty(); }
        std::size_t size() const { return terms_.size(); }
        const map_type& terms() const { return terms_; }
        const_iterator begin() const { return terms_.begin(); }
        const_iterator end() const { return terms_.end(); }

        Rational coeff(const Key& k) const {
            auto it = terms_.find(k);
            return it == terms_.end() ? Rational(0) : it->second;
        }

        void add_term(const Key& k, const Rational& c) {
            if (c.is_zero()) return;
            auto [it, inserted] = terms_.try_emplace(k, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) terms_.erase(it);
            }
        }

        // this += s * other
        FreeCombo& axpy(const Rational& s, const FreeCombo& other) {
            if (s.is_zero()) return *this;
            for (const auto& [k, c] : other.terms_) add_term(k, s * c);
            return *this;
        }

        FreeCombo& operator+=(const FreeCombo& o) { return axpy(Rational(1), o); }
        FreeCombo& operator-=(const FreeCombo& o) { return axpy(Rational(-1), o); }

        FreeCombo& operator*=(const Rational& s) {
            if (s.is_zero()) {
                terms_.clear();
            } else {
                for (auto& kv : terms_) kv.second *= s;
            }
            return *this;
        }

        FreeCombo operator-() const {
            FreeCombo out(*this);
            out *= Rational(-1);
            return out;
        }

        friend FreeCombo operator+(FreeCombo a, const FreeCombo& b) { return a += b; }
        friend FreeCombo operator-(FreeCombo a, const FreeCombo& b) { return a -= b; }
        friend FreeCombo operator*(FreeCombo a, const Rational& s) { return a *= s; }
        friend FreeCombo operator*(const Rational& s, FreeCombo a) { return a *= s; }

        friend bool operator==(const FreeCombo& a, const FreeCombo& b) { return a.terms_ == b.terms_; }

    private:
        map_type terms_;
    };

    // a + s * b
    template <class K, class C>
    FreeCombo<K, C> combo_arith(const FreeCombo<K, C>& a, const FreeCombo<K, C>& b, const Rational& s) {
        FreeCombo<K, C> out(a);
        out.axpy(s, b);
        return out;
    }

}  // namespace cforge

#endif  // COCYCLE_FORGE_FREE_COMBO_HPP
