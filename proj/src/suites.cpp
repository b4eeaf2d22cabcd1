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

#include "cocycle_forge/suites.hpp"

#include <map>

namespace cforge {

    namespace {

        TensorWord tensor(const UEAElement& u, const UEAElement& v) {
            TensorWord out;
            for (const auto& [a, ca] : u) {
                for (const auto& [b, cb] : v) out.add_term({a, b}, ca * cb);
            }
            return out;
        }

        std::string format_word(const Enveloping& env, const TensorWord& w) {
            if (w.is_zero()) return "0";
            std::string out;
            for (const auto& [parts, c] : w) {
                if (!out.empty()) out += " + ";
                out += c.str() + "*(";
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    if (i) out += " (x) ";
                    out += env.format(parts[i]);
                }
                out += ")";
            }
            return out;
        }

        std::string format_word(const Enveloping& env, const TPolyOf<TensorWord>& p) {
            if (p.is_zero()) return "0";
            std::string out;
            for (const auto& [n, w] : p.coeffs()) {
                if (!out.empty()) out += " + ";
                out += "[" + format_word(env, w) + "] t^" + std::to_string(n);
            }
            return out;
        }

        UEAElement unit_counit(const Enveloping& env, const PBWMonomial& m) {
            return m.is_unit() ? env.one() : UEAElement();
        }

        // Every word of the given length over {0, ..., dim-1}.
        void for_each_word(int dim, int length, const std::function<void(const std::vector<int>&)>& fn) {
            std::vector<int> word(static_cast<std::size_t>(length), 0);
            while (true) {
                fn(word);
                int pos = length - 1;
                while (pos >= 0 && ++word[static_cast<std::size_t>(pos)] == dim) word[static_cast<std::size_t>(pos--)] = 0;
                if (pos < 0) return;
            }
        }

        // All (a, b) with deg a + deg b <= D.
        template <class Fn>
        void for_each_pair(const std::vector<PBWMonomial>& monos, int max_degree, Fn&& fn) {
            for (const auto& a : monos) {
                for (const auto& b : monos) {
                    if (a.degree() + b.degree() <= max_degree) fn(a, b);
                }
            }
        }

    }  // namespace

    Report hopf_suite(const Enveloping& env, int max_degree, const Progress& progress) {
        Report report;
        const int n = env.dim();
        const auto monos = monomials_up_to(n, max_degree);
        auto fail = [&](const char* cond, const std::string& mono, std::string lhs, std::string rhs) {
            report.push_back({cond, "", mono, std::move(lhs), std::move(rhs)});
        };

        std::vector<LinearMap> jpow{unit_counit_map(n), augmentation_projection()};
        for (int k = 2; k <= max_degree + 1; ++k) jpow.push_back(convolution(env, augmentation_projection(), jpow.back()));
        const LinearMap left_unit = convolution(env, unit_counit_map(n), identity_map());
        const LinearMap right_unit = convolution(env, identity_map(), unit_counit_map(n));

        for (int d = 0; d <= max_degree; ++d) {
            const auto stratum = monomials_up_to(n, d, d);
            for (const auto& m : stratum) {
                const std::string ms = env.format(m);
                TensorWord delta = env.coproduct(m);

                TensorWord left, right;
                env.for_each_split(m, 2, [&](const Rational& c, std::span<const PBWMonomial> parts) {
                    for (const auto& [w, cw] : env.coproduct(parts[0])) left.add_term({w[0], w[1], parts[1]}, c * cw);
                    for (const auto& [w, cw] : env.coproduct(parts[1])) right.add_term({parts[0], w[0], w[1]}, c * cw);
                });
                if (left != right) fail("coassociativity", ms, format_word(env, left), format_word(env, right));
                if (left != env.iterated_coproduct(m, 3)) {
                    fail("iterated_coproduct", ms, format_word(env, env.iterated_coproduct(m, 3)), format_word(env, left));
                }

                UEAElement eps_left, eps_right;
                TensorWord swapped;
                for (const auto& [w, c] : delta) {
                    if (w[0].is_unit()) eps_left.add_term(w[1], c);
                    if (w[1].is_unit()) eps_right.add_term(w[0], c);
                    swapped.add_term({w[1], w[0]}, c);
                }
                if (eps_left != env.monomial(m)) fail("counit", ms, env.format(eps_left), ms);
                if (eps_right != env.monomial(m)) fail("counit", ms, env.format(eps_right), ms);
                if (swapped != delta) fail("cocommutativity", ms, format_word(env, swapped), format_word(env, delta));

                if (UEAElement v = jpow[static_cast<std::size_t>(d + 1)](m); !v.is_zero()) {
                    fail("filtration", ms, env.format(v), "0");
                }
                if (left_unit(m) != env.monomial(m)) fail("convolution_unit", ms, env.format(left_unit(m)), ms);
                if (right_unit(m) != env.monomial(m)) fail("convolution_unit", ms, env.format(right_unit(m)), ms);
            }
            if (progress) progress("hopf", d, stratum.size());
        }

        for_each_pair(monos, max_degree, [&](const PBWMonomial& a, const PBWMonomial& b) {
            TensorWord lhs = env.coproduct(env.multiply(a, b));
            TensorWord rhs = env.multiply(env.coproduct(a), env.coproduct(b));
            if (lhs != rhs) {
                fail("coproduct_multiplicative", env.format(a) + " | " + env.format(b), format_word(env, lhs),
                     format_word(env, rhs));
            }
        });
        for (const auto& a : monos) {
            for_each_pair(monos, max_degree - a.degree(), [&](const PBWMonomial& b, const PBWMonomial& c) {
                UEAElement ab_c = env.multiply(env.multiply(a, b), env.monomial(c));
                UEAElement a_bc = env.multiply(env.monomial(a), env.multiply(b, c));
                if (ab_c != a_bc) {
                    fail("associativity", env.format(a) + " | " + env.format(b) + " | " + env.format(c), env.format(ab_c),
                         env.format(a_bc));
                }
            });
        }
        return report;
    }

    Report homotopy_suite(const Homotopy& h, int max_degree, const Progress& progress) {
        Report report;
        const auto& env = h.enveloping();
        const auto& L = h.algebra();
        const int n = L.dim();
        auto fail = [&](const char* cond, std::string gen, const std::string& mono, std::string lhs, std::string rhs) {
            report.push_back({cond, std::move(gen), mono, std::move(lhs), std::move(rhs)});
        };

        for (int d = 0; d <= max_degree; ++d) {
            const auto stratum = monomials_up_to(n, d, d);
            for (const auto& m : stratum) {
                const std::string ms = env.format(m);
                const UEAElement x = env.monomial(m);
                const Rational eps = m.is_unit() ? Rational(1) : Rational(0);

                UEAElement raw = h.pr_raw(m);
                if (auto p = as_lie_element(raw); !p) {
                    fail("pr_image", "", ms, env.format(raw), "an element of g");
                } else if (LieElement pp = h.pr(env.lie(*p)); pp != *p) {
                    fail("pr_idempotent", "", ms, L.format(pp), L.format(*p));
                }

                const TPolyUEA ph = h.phi(m);
                if (ph.evaluate(0) != unit_counit(env, m)) fail("phi_endpoints", "t=0", ms, env.format(ph.evaluate(0)), env.format(unit_counit(env, m)));
                if (ph.evaluate(1) != x) fail("phi_endpoints", "t=1", ms, env.format(ph.evaluate(1)), ms);

                TPolyOf<TensorWord> delta_phi, phi_phi;
                for (const auto& [k, u] : ph.coeffs()) delta_phi.add_term(k, env.coproduct(u));
                TPolyUEA inverse_check;
                UEAElement antipode_check;
                env.for_each_split(m, 2, [&](const Rational& c, std::span<const PBWMonomial> parts) {
                    const TPolyUEA p1 = h.phi(parts[0]), p2 = h.phi(parts[1]);
                    for (const auto& [a, u] : p1.coeffs()) {
                        for (const auto& [b, v] : p2.coeffs()) phi_phi.add_term(a + b, tensor(u, v) * c);
                    }
                    inverse_check += h.multiply(p1, p2.negate_variable()) * c;
                    antipode_check.axpy(c, env.multiply(p1.evaluate(-1), env.monomial(parts[1])));
                });
                if (delta_phi != phi_phi) fail("phi_coalgebra", "", ms, format_word(env, delta_phi), format_word(env, phi_phi));
                if (inverse_check != TPolyUEA::monomial(0, unit_counit(env, m))) {
                    fail("phi_inverse", "", ms, format_tpoly(env, inverse_check), env.format(unit_counit(env, m)));
                }
                if (antipode_check != unit_counit(env, m)) {
                    fail("antipode", "", ms, env.format(antipode_check), env.format(unit_counit(env, m)));
                }

                for (int k = 0; k < n; ++k) {
                    const LieElement gk = L.generator(k);
                    const std::string gname = L.basis_name(k);
                    TPolyLie a;
                    try {
                        a = h.a_map(m, k);
                    } catch (const ConventionError& e) {
                        fail("a_in_lie", gname, ms, e.what(), "an element of g[t]");
                        continue;
                    }
                    try {
                        if (TPolyLie alt = h.a_map_alternative(x, gk); alt != a) {
                            fail("a_alternative", gname, ms, format_tpoly(L, a), format_tpoly(L, alt));
                        }
                    } catch (const ConventionError& e) {
                        fail("a_alternative", gname, ms, e.what(), format_tpoly(L, a));
                    }
                    if (a.evaluate(1) != gk * eps) fail("a_endpoints", gname + ",t=1", ms, L.format(a.evaluate(1)), L.format(gk * eps));
                    if (!a.evaluate(0).is_zero()) fail("a_endpoints", gname + ",t=0", ms, L.format(a.evaluate(0)), "0");

                    TPolyLie deriv_lhs = TPolyLie::monomial(0, h.pr(env.times_generator(m, k)));
                    env.for_each_split(m, 2, [&](const Rational& c, std::span<const PBWMonomial> parts) {
                        TPolyLie p1 = TPolyLie::monomial(0, h.pr(parts[0]));
                        deriv_lhs -= h.bracket(p1, h.a_map(parts[1], k)) * c;
                    });
                    if (deriv_lhs != a.derivative()) {
                        fail("a_derivative", gname, ms, format_tpoly(L, deriv_lhs), format_tpoly(L, a.derivative()));
                    }

                    for (int l = 0; l < n; ++l) {
                        const LieElement gl = L.generator(l);
                        TPolyLie lhs = h.a_map(env.times_generator(m, k), gl) - h.a_map(env.times_generator(m, l), gk);
                        TPolyLie rhs = h.a_map(x, L.bracket(gk, gl));
                        env.for_each_split(m, 2, [&](const Rational& c, std::span<const PBWMonomial> parts) {
                            rhs -= h.bracket(h.a_map(parts[0], k), h.a_map(parts[1], l)) * c;
                        });
                        if (lhs != rhs) {
                            fail("a_bracket_identity", gname + "," + L.basis_name(l), ms, format_tpoly(L, lhs), format_tpoly(L, rhs));
                        }
                    }
                }
            }
            if (progress) progress("homotopy", d, stratum.size());
        }

        for (int len = 1; len <= std::min(max_degree, 4); ++len) {
            std::size_t count = 0;
            for_each_word(n, len, [&](const std::vector<int>& word) {
                ++count;
                std::vector<LieElement> letters;
                std::string text;
                for (int k : word) {
                    letters.push_back(L.generator(k));
                    text += (text.empty() ? "" : " ") + L.basis_name(k);
                }
                LieElement series = h.pr(env.straighten_word(word));
                LieElement closed = pr_closed_form(L, letters);
                if (series != closed) fail("pr_closed_form", "", text, L.format(series), L.format(closed));
            });
            if (progress) progress("pr_closed_form", len, count);
        }
        return report;
    }

    Report lift_suite(const LiftedCochain& lc, int max_degree, const Progress& progress) {
        Report report = verify_lift(lc, max_degree, [&](int d, std::size_t count) {
            if (progress) progress("lift", d, count);
        });
        const auto& L = lc.algebra();
        const auto& env = lc.enveloping();
        const auto& f = lc.cocycle();
        const int n = L.dim();
        auto pair_name = [&](int i, int j) { return L.basis_name(i) + "," + L.basis_name(j); };

        for (int k = 0; k < n; ++k) {
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    Rational lhs = lc.value(PBWMonomial::generator(n, k), i, j);
                    Rational rhs = Rational(1, 3) * f(L.generator(k), L.generator(i), L.generator(j));
                    if (lhs != rhs) report.push_back({"degree_one", pair_name(i, j), L.basis_name(k), lhs.str(), rhs.str()});
                }
            }
        }

        for (const auto& m : monomials_up_to(n, std::min(max_degree, 3))) {
            for (int i = 0; i < n; ++i) {
                for (int j = i; j < n; ++j) {
                    Rational ij = integrate_unit_interval(lc.integrand(m, i, j));
                    Rational ji = integrate_unit_interval(lc.integrand(m, j, i));
                    if (ij != -ji) report.push_back({"antisymmetry", pair_name(i, j), env.format(m), ij.str(), (-ji).str()});
                    if (L.is_abelian()) {
                        Rational oracle = abelian_closed_form(lc, env.monomial(m), L.generator(i), L.generator(j));
                        if (ij != oracle) report.push_back({"abelian_closed_form", pair_name(i, j), env.format(m), ij.str(), oracle.str()});
                    }
                }
            }
        }

        if (L == builtin::sl2() && L.basis_names() == builtin::sl2().basis_names()) {
            for (BPair pair : {BPair::XY, BPair::XH, BPair::YH}) {
                BTable table = b_table(lc, pair, max_degree);
                append(report, check_vanishing(table));
                if (progress) progress("vanishing_" + to_string(pair), max_degree, table.entries.size());
            }
        }
        return report;
    }

}  // namespace cforge
