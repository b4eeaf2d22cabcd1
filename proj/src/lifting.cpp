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

#include "cocycle_forge/lifting.hpp"

#include <stdexcept>

namespace cforge {

    LiftedCochain::LiftedCochain(LieAlgebra algebra, Cochain cocycle)
        : homotopy_(std::move(algebra)), f_(std::move(cocycle)) {
        if (f_.dim() != homotopy_.algebra().dim() || f_.arity() != 3) {
            throw std::invalid_argument("cocycle does not match the algebra");
        }
    }

    TPoly LiftedCochain::integrand(const PBWMonomial& m, int i, int j) const {
        TPoly out;
        if (m.is_unit() || i == j) return out;
        enveloping().for_each_split(m, 3, [&](const Rational& c, std::span<const PBWMonomial> parts) {
            if (parts[0].is_unit()) return;
            LieElement p = homotopy_.pr(parts[0]);
            if (p.is_zero()) return;
            TPolyLie a = homotopy_.a_map(parts[1], i);
            if (a.is_zero()) return;
            TPolyLie b = homotopy_.a_map(parts[2], j);
            for (const auto& [n, an] : a.coeffs()) {
                for (const auto& [k, bk] : b.coeffs()) {
                    Rational v = f_(p, an, bk);
                    if (!v.is_zero()) out.add_term(n + k, c * v);
                }
            }
        });
        return out;
    }

    Rational LiftedCochain::value(const PBWMonomial& m, int i, int j) const {
        if (i == j || m.is_unit()) return Rational(0);
        if (i > j) return -value(m, j, i);
        Key key{m, i, j};
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        Rational v = integrate_unit_interval(integrand(m, i, j));
        cache_.emplace(std::move(key), v);
        return v;
    }

    Rational LiftedCochain::value(const UEAElement& x, const LieElement& g1, const LieElement& g2) const {
        Rational out;
        for (const auto& [m, c] : x) {
            for (const auto& [i, ci] : g1) {
                for (const auto& [j, cj] : g2) out += c * ci * cj * value(m, i, j);
            }
        }
        return out;
    }

    Rational LiftedCochain::ce_diff(const UEAElement& x, const LieElement& g1, const LieElement& g2,
                                    const LieElement& g3) const {
        const auto& env = enveloping();
        const auto& L = algebra();
        Rational out = value(env.times_lie(x, g1), g2, g3);
        out -= value(env.times_lie(x, g2), g1, g3);
        out += value(env.times_lie(x, g3), g1, g2);
        out -= value(x, L.bracket(g1, g2), g3);
        out += value(x, L.bracket(g1, g3), g2);
        out += value(x, g1, L.bracket(g2, g3));
        return out;
    }

    Report verify_lift(const LiftedCochain& lc, int max_degree,
                       const std::function<void(int, std::size_t)>& progress) {
        const auto& L = lc.algebra();
        if (!ce_diff_constant(L, lc.cocycle()).is_zero()) {
            return {{"lift", "", "", "input is not a 3-cocycle", ""}};
        }
        Report report;
        const int n = L.dim();
        const auto& env = lc.enveloping();
        for (int d = 0; d <= max_degree; ++d) {
            auto monos = monomials_up_to(n, d, d);
            for (const auto& m : monos) {
                UEAElement x = env.monomial(m);
                for (int i = 0; i < n; ++i) {
                    for (int j = i + 1; j < n; ++j) {
                        for (int k = j + 1; k < n; ++k) {
                            auto gi = L.generator(i), gj = L.generator(j), gk = L.generator(k);
                            Rational lhs = lc.ce_diff(x, gi, gj, gk);
                            Rational rhs = m.is_unit() ? lc.cocycle().at(std::array{i, j, k}) : Rational(0);
                            if (lhs != rhs) {
                                report.push_back({"lift", L.basis_name(i) + "," + L.basis_name(j) + "," + L.basis_name(k),
                                                  env.format(m), lhs.str(), rhs.str()});
                            }
                        }
                    }
                }
            }
            if (progress) progress(d, monos.size());
        }
        return report;
    }

    Rational abelian_closed_form(const LiftedCochain& lc, const UEAElement& x, const LieElement& g1,
                                 const LieElement& g2) {
        if (!lc.algebra().is_abelian()) throw AlgebraError("abelian closed form needs an abelian algebra");
        LieElement linear;
        for (const auto& [m, c] : x) {
            if (m.degree() != 1) continue;
            for (int k = 0; k < m.dim(); ++k) {
                if (m.exponents[static_cast<std::size_t>(k)] == 1) linear.add_term(k, c);
            }
        }
        return Rational(1, 3) * lc.cocycle()(linear, g1, g2);
    }

    std::string to_string(BPair p) {
        switch (p) {
            case BPair::XY: return "XY";
            case BPair::XH: return "XH";
            case BPair::YH: return "YH";
        }
        return "";
    }

    BPair parse_bpair(const std::string& text) {
        if (text == "XY") return BPair::XY;
        if (text == "XH") return BPair::XH;
        if (text == "YH") return BPair::YH;
        throw std::invalid_argument("unknown pair '" + text + "' (expected XY, XH or YH)");
    }

    BTable b_table(const LiftedCochain& lc, BPair pair, int max_degree) {
        const auto& L = lc.algebra();
        if (L.basis_names() != std::vector<std::string>{"X", "Y", "H"} || !(L == builtin::sl2())) {
            throw AlgebraError("B-tables are defined for sl2 with basis (X, Y, H)");
        }
        int i = 0, j = 1;
        if (pair == BPair::XH) j = 2;
        if (pair == BPair::YH) i = 1, j = 2;
        BTable table{pair, max_degree, {}};
        for (const auto& m : monomials_up_to(3, max_degree, 1)) {
            table.entries.push_back({{m.exponents[0], m.exponents[1], m.exponents[2]}, lc.value(m, i, j)});
        }
        return table;
    }

    Report check_vanishing(const BTable& table) {
        Report report;
        for (const auto& [abc, v] : table.entries) {
            const auto [a, b, c] = abc;
            bool allowed = false;
            switch (table.pair) {
                case BPair::XY: allowed = a == b; break;
                case BPair::XH: allowed = a == b - 1; break;
                case BPair::YH: allowed = a == b + 1; break;
            }
            if (!allowed && !v.is_zero()) {
                report.push_back({"vanishing", to_string(table.pair),
                                  std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c), v.str(), "0"});
            }
        }
        return report;
    }

}  // namespace cforge
