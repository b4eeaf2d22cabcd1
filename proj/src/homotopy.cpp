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

#include "cocycle_forge/homotopy.hpp"

#include <algorithm>
#include <numeric>

namespace cforge {

    namespace {
        template <class Cache>
        Cache& slot(std::vector<Cache>& caches, int index) {
            if (static_cast<int>(caches.size()) <= index) caches.resize(static_cast<std::size_t>(index) + 1);
            return caches[static_cast<std::size_t>(index)];
        }
    }  // namespace

    Homotopy::Homotopy(LieAlgebra algebra)
        : env_(std::move(algebra)), a_cache_(static_cast<std::size_t>(env_.dim())) {}

    UEAElement Homotopy::augmentation_power(int k, const PBWMonomial& m) const {
        if (k == 0) return m.is_unit() ? env_.one() : UEAElement();
        if (m.degree() < k) return {};
        if (k == 1) return env_.monomial(m);
        if (auto& cache = slot(augmentation_powers_, k); cache.count(m)) return cache.at(m);

        UEAElement out;
        env_.for_each_split(m, 2, [&](const Rational& c, std::span<const PBWMonomial> parts) {
            if (parts[0].is_unit() || parts[1].degree() < k - 1) return;
            UEAElement rest = augmentation_power(k - 1, parts[1]);
            if (rest.is_zero()) return;
            out.axpy(c, env_.multiply(env_.monomial(parts[0]), rest));
        });
        slot(augmentation_powers_, k).emplace(m, out);
        return out;
    }

    UEAElement Homotopy::pr_raw(const PBWMonomial& m) const {
        UEAElement out;
        for (int k = 1; k <= m.degree(); ++k) {
            Rational coef(k % 2 == 1 ? 1 : -1, k);
            out.axpy(coef, augmentation_power(k, m));
        }
        return out;
    }

    LieElement Homotopy::pr(const PBWMonomial& m) const {
        if (auto it = pr_cache_.find(m); it != pr_cache_.end()) return it->second;
        auto lie = as_lie_element(pr_raw(m));
        if (!lie) throw ConventionError("pr left the Lie algebra at " + env_.format(m));
        pr_cache_.emplace(m, *lie);
        return *lie;
    }

    LieElement Homotopy::pr(const UEAElement& u) const {
        LieElement out;
        for (const auto& [m, c] : u) out.axpy(c, pr(m));
        return out;
    }

    UEAElement Homotopy::pr_power(int n, const PBWMonomial& m) const {
        if (n == 0) return m.is_unit() ? env_.one() : UEAElement();
        if (m.degree() < n) return {};
        if (n == 1) return env_.lie(pr(m));
        if (auto& cache = slot(pr_powers_, n); cache.count(m)) return cache.at(m);

        UEAElement out;
        env_.for_each_split(m, 2, [&](const Rational& c, std::span<const PBWMonomial> parts) {
            if (parts[0].is_unit() || parts[1].degree() < n - 1) return;
            LieElement head = pr(parts[0]);
            if (head.is_zero()) return;
            UEAElement rest = pr_power(n - 1, parts[1]);
            if (rest.is_zero()) return;
            out.axpy(c, env_.multiply(env_.lie(head), rest));
        });
        slot(pr_powers_, n).emplace(m, out);
        return out;
    }

    TPolyUEA Homotopy::phi(const PBWMonomial& m) const {
        if (auto it = phi_cache_.find(m); it != phi_cache_.end()) return it->second;
        TPolyUEA out;
        for (int n = 0; n <= m.degree(); ++n) {
            UEAElement term = pr_power(n, m);
            term *= Rational(1) / factorial(n);
            out.add_term(n, term);
        }
        phi_cache_.emplace(m, out);
        return out;
    }

    TPolyUEA Homotopy::phi(const UEAElement& u) const {
        TPolyUEA out;
        for (const auto& [m, c] : u) out += phi(m) * c;
        return out;
    }

    TPolyUEA Homotopy::multiply(const TPolyUEA& a, const TPolyUEA& b) const {
        return a.pair_with(b, [this](const UEAElement& x, const UEAElement& y) { return env_.multiply(x, y); });
    }

    TPolyLie Homotopy::bracket(const TPolyLie& a, const TPolyLie& b) const {
        const auto& L = algebra();
        return a.pair_with(b, [&L](const LieElement& x, const LieElement& y) { return L.bracket(x, y); });
    }

    TPolyLie Homotopy::to_lie(const TPolyUEA& p, const char* what) const {
        TPolyLie out;
        for (const auto& [n, u] : p.coeffs()) {
            auto lie = as_lie_element(u);
            if (!lie) throw ConventionError(what);
            out.add_term(n, *lie);
        }
        return out;
    }

    TPolyLie Homotopy::a_map(const PBWMonomial& m, int generator) const {
        auto& cache = a_cache_[static_cast<std::size_t>(generator)];
        if (auto it = cache.find(m); it != cache.end()) return it->second;

        TPolyUEA acc;
        const LieElement g = algebra().generator(generator);
        env_.for_each_split(m, 2, [&](const Rational& c, std::span<const PBWMonomial> parts) {
            TPolyUEA left = phi(parts[0]).negate_variable();
            TPolyUEA right = phi(env_.times_lie(env_.monomial(parts[1]), g));
            acc += multiply(left, right) * c;
        });
        TPolyLie out = to_lie(acc, "A_t left the Lie algebra");
        a_cache_[static_cast<std::size_t>(generator)].emplace(m, out);
        return out;
    }

    TPolyLie Homotopy::a_map(const UEAElement& u, const LieElement& g) const {
        TPolyLie out;
        for (const auto& [m, c] : u) {
            for (const auto& [k, ck] : g) out += a_map(m, k) * (c * ck);
        }
        return out;
    }

    TPolyLie Homotopy::a_map_alternative(const UEAElement& u, const LieElement& g) const {
        TPolyUEA acc;
        for (const auto& [m, c] : u) {
            env_.for_each_split(m, 2, [&](const Rational& s, std::span<const PBWMonomial> parts) {
                TPolyUEA left = phi(env_.times_lie(env_.monomial(parts[0]), g)).negate_variable();
                TPolyUEA right = phi(parts[1]);
                acc -= multiply(left, right) * (c * s);
            });
        }
        return to_lie(acc, "A_t left the Lie algebra");
    }

    LieElement pr_closed_form(const LieAlgebra& L, std::span<const LieElement> word) {
        const int n = static_cast<int>(word.size());
        if (n == 0) throw std::invalid_argument("closed form needs a non-empty word");
        if (n > 5) throw std::invalid_argument("closed form limited to n <= 5");
        std::vector<int> sigma(static_cast<std::size_t>(n));
        std::iota(sigma.begin(), sigma.end(), 0);
        std::vector<LieElement> permuted(static_cast<std::size_t>(n));
        LieElement out;
        do {
            int descents = 0;
            for (int i = 0; i + 1 < n; ++i) {
                if (sigma[i] > sigma[i + 1]) ++descents;
            }
            for (int i = 0; i < n; ++i) permuted[i] = word[sigma[i]];
            Rational coef = Rational(1) / binomial(n - 1, descents);
            if (descents % 2 == 1) coef = -coef;
            out.axpy(coef, iterated_bracket(L, permuted));
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        out *= Rational(1, n * n);
        return out;
    }

    namespace {
        template <class Poly, class Fmt>
        std::string format_poly(const Poly& p, Fmt&& fmt) {
            if (p.is_zero()) return "0";
            std::string out;
            for (const auto& [n, c] : p.coeffs()) {
                if (!out.empty()) out += " + ";
                out += "(" + fmt(c) + ")";
                if (n == 1) out += " t";
                if (n > 1) out += " t^" + std::to_string(n);
            }
            return out;
        }
    }  // namespace

    std::string format_tpoly(const Enveloping& env, const TPolyUEA& p) {
        return format_poly(p, [&env](const UEAElement& u) { return env.format(u); });
    }

    std::string format_tpoly(const LieAlgebra& L, const TPolyLie& p) {
        return format_poly(p, [&L](const LieElement& x) { return L.format(x); });
    }

}  // namespace cforge
