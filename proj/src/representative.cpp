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

#include "cocycle_forge/representative.hpp"

#include <algorithm>

#include "cocycle_forge/linalg.hpp"

namespace cforge {

    MixedTensor& MixedTensor::operator+=(const MixedTensor& o) {
        left.insert(left.end(), o.left.begin(), o.left.end());
        right.insert(right.end(), o.right.begin(), o.right.end());
        return *this;
    }

    MixedTensor& MixedTensor::operator*=(const Rational& s) {
        for (auto& [v, e] : left) v *= s;
        for (auto& [e, v] : right) e *= s;
        return *this;
    }

    DualElement counit_functional() { return DualElement::basis(Atom::counit()); }

    DualElement dual_monomial(const PBWMonomial& m) { return DualElement::basis(Atom::dual_monomial(m)); }

    DualElement omega_cochain(int i, int j) {
        if (i == j) return {};
        if (i < j) return DualElement::basis(Atom::omega_slice(i, j));
        return DualElement::basis(Atom::omega_slice(j, i), Rational(-1));
    }

    DualElement omega_cochain(const LieElement& a, const LieElement& b) {
        DualElement out;
        for (const auto& [i, ci] : a) {
            for (const auto& [j, cj] : b) out.axpy(ci * cj, omega_cochain(i, j));
        }
        return out;
    }

    DualElement g_action_dual(int k, const DualElement& v) {
        DualElement out;
        for (const auto& [atom, c] : v) {
            if (atom.kind == Atom::Kind::counit) continue;  // eps(m x_k) = 0
            Atom acted = atom;
            acted.suffix.insert(acted.suffix.begin(), k);
            out.add_term(std::move(acted), c);
        }
        return out;
    }

    DualElement g_action_dual(const LieElement& g, const DualElement& v) {
        DualElement out;
        for (const auto& [k, c] : g) out.axpy(c, g_action_dual(k, v));
        return out;
    }

    DualElement phi_cochain(const LieAlgebra& L, const LieElement& a, const LieElement& b, const LieElement& c) {
        DualElement out = g_action_dual(a, omega_cochain(b, c));
        out += g_action_dual(b, omega_cochain(c, a));
        out += g_action_dual(c, omega_cochain(a, b));
        out -= omega_cochain(L.bracket(a, b), c);
        out -= omega_cochain(L.bracket(b, c), a);
        out -= omega_cochain(L.bracket(c, a), b);
        return out;
    }

    DualElement phi_cochain(const LieAlgebra& L, int i, int j, int k) {
        return phi_cochain(L, L.generator(i), L.generator(j), L.generator(k));
    }

    Representative::Representative(LiftedCochain lifted) : lc_(std::move(lifted)) {}

    Rational Representative::eval(const Atom& a, const PBWMonomial& m) const {
        EvalKey key{a, m};
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;

        const auto& env = enveloping();
        UEAElement u = env.monomial(m);
        for (int k : a.suffix) {
            UEAElement next;
            for (const auto& [mono, c] : u) next.axpy(c, env.times_generator(mono, k));
            u = std::move(next);
        }
        Rational out;
        switch (a.kind) {
            case Atom::Kind::counit: out = augmentation(u); break;
            case Atom::Kind::dual_monomial: out = u.coeff(a.monomial); break;
            case Atom::Kind::omega_slice:
                for (const auto& [mono, c] : u) out += c * lc_.value(mono, a.i, a.j);
                break;
        }
        cache_.emplace(std::move(key), out);
        return out;
    }

    Rational Representative::eval(const DualElement& v, const PBWMonomial& m) const {
        Rational out;
        for (const auto& [atom, c] : v) out += c * eval(atom, m);
        return out;
    }

    DualElement Representative::section_q(const DualElement& h) const {
        DualElement out = h;
        out.axpy(-eval(h, PBWMonomial::unit(algebra().dim())), counit_functional());
        return out;
    }

    ExtElement Representative::bracket(const ExtElement& a, const ExtElement& b) const {
        ExtElement out;
        out.h = g_action_dual(a.x, b.h) - g_action_dual(b.x, a.h) + alpha(a.x, b.x);
        out.x = algebra().bracket(a.x, b.x);
        return out;
    }

    std::vector<Rational> Representative::probe(const ExtElement& e, int max_degree) const {
        const int n = algebra().dim();
        std::vector<Rational> out;
        for (int k = 0; k < n; ++k) out.push_back(e.x.coeff(k));
        for (const auto& m : monomials_up_to(n, max_degree, 1)) out.push_back(eval(e.h, m));
        return out;
    }

    std::vector<Rational> Representative::probe(const DualElement& v, int max_degree) const {
        std::vector<Rational> out;
        for (const auto& m : monomials_up_to(algebra().dim(), max_degree)) out.push_back(eval(v, m));
        return out;
    }

    std::vector<std::pair<LieElement, LieElement>> components(const Tensor2& r) {
        std::vector<std::pair<LieElement, LieElement>> out;
        for (const auto& [ab, c] : r) out.emplace_back(LieElement::basis(ab.first, c), LieElement::basis(ab.second));
        return out;
    }

    ExtTensor lift_r(const Tensor2& r) {
        ExtTensor out;
        for (const auto& [s, t] : components(r)) out.terms.emplace_back(ExtElement::lie(s), ExtElement::lie(t));
        return out;
    }

    MixedTensor xi0(const Representative& rep, const Tensor2& r, const ExtElement& e) {
        MixedTensor out;
        const DualElement qh = e.h.is_zero() ? DualElement() : rep.section_q(e.h);
        for (const auto& [s, t] : components(r)) {
            if (!e.x.is_zero()) {
                out.left.emplace_back(omega_cochain(s, e.x), ExtElement::lie(t));
                out.right.emplace_back(ExtElement::lie(s), omega_cochain(t, e.x));
            }
            if (!qh.is_zero()) {
                out.left.emplace_back(g_action_dual(s, qh), ExtElement::lie(t));
                out.right.emplace_back(ExtElement::lie(s), g_action_dual(t, qh));
            }
        }
        return out;
    }

    MixedTensor c_term(const ExtElement& e) {
        MixedTensor out;
        if (e.x.is_zero()) return out;
        out.left.emplace_back(counit_functional(), ExtElement::lie(e.x));
        out.right.emplace_back(ExtElement::lie(e.x), counit_functional());
        return out;
    }

    MixedTensor xi(const Representative& rep, const Tensor2& r, const ExtElement& e) {
        MixedTensor out = xi0(rep, r, e) + c_term(e);
        out *= Rational(-1);
        return out;
    }

    DualElement c_element() { return counit_functional(); }

    ExtTensor act(const Representative& rep, const ExtElement& e, const ExtTensor& t) {
        ExtTensor out;
        for (const auto& [a, b] : t.terms) {
            out.terms.emplace_back(rep.bracket(e, a), b);
            out.terms.emplace_back(a, rep.bracket(e, b));
        }
        return out;
    }

    MixedTensor act(const Representative& rep, const ExtElement& e, const MixedTensor& t) {
        MixedTensor out;
        for (const auto& [v, f] : t.left) {
            out.left.emplace_back(rep.act(e, v), f);
            out.left.emplace_back(v, rep.bracket(e, f));
        }
        for (const auto& [f, v] : t.right) {
            out.right.emplace_back(rep.bracket(e, f), v);
            out.right.emplace_back(f, rep.act(e, v));
        }
        return out;
    }

    MixedTensor act_on_r(const Tensor2& r, const DualElement& u) {
        MixedTensor out;
        for (const auto& [s, t] : components(r)) {
            out.left.emplace_back(g_action_dual(s, u) * Rational(-1), ExtElement::lie(t));
            out.right.emplace_back(ExtElement::lie(s), g_action_dual(t, u) * Rational(-1));
        }
        return out;
    }

    ExtTensor beta(const Representative& rep, const MixedTensor& t) {
        ExtTensor out;
        for (const auto& [v, f] : t.left) out.terms.emplace_back(rep.mu(v), f);
        for (const auto& [f, v] : t.right) out.terms.emplace_back(f, rep.mu(v));
        return out;
    }

    std::pair<ExtElement, ExtElement> evaluate_v2_slots(const Representative& rep, const MixedTensor& t,
                                                        const PBWMonomial& m) {
        std::pair<ExtElement, ExtElement> out;
        for (const auto& [v, f] : t.left) out.first += f * rep.eval(v, m);
        for (const auto& [f, v] : t.right) out.second += f * rep.eval(v, m);
        return out;
    }

    namespace {

        using Matrix = std::vector<std::vector<Rational>>;

        void add_outer(Matrix& into, const std::vector<Rational>& a, const std::vector<Rational>& b) {
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i].is_zero()) continue;
                for (std::size_t j = 0; j < b.size(); ++j) {
                    if (!b[j].is_zero()) into[i][j] += a[i] * b[j];
                }
            }
        }

        struct Probes {
            std::vector<std::string> v2;  // degree 0..D
            std::vector<std::string> ext; // Lie coordinates, then degree 1..D
            int lie_dim = 0;
        };

        Probes make_probes(const Representative& rep, int max_degree) {
            Probes p;
            const auto& L = rep.algebra();
            p.lie_dim = L.dim();
            for (const auto& m : monomials_up_to(L.dim(), max_degree)) p.v2.push_back(rep.enveloping().format(m));
            for (int k = 0; k < L.dim(); ++k) p.ext.push_back("lie:" + L.basis_name(k));
            for (const auto& m : monomials_up_to(L.dim(), max_degree, 1)) p.ext.push_back("v3:" + rep.enveloping().format(m));
            return p;
        }

        Matrix ext_matrix(const Representative& rep, const ExtTensor& t, const Probes& p, int D) {
            Matrix out(p.ext.size(), std::vector<Rational>(p.ext.size()));
            for (const auto& [a, b] : t.terms) add_outer(out, rep.probe(a, D), rep.probe(b, D));
            return out;
        }

        // left: V2 probes x E probes; right: E probes x V2 probes
        std::pair<Matrix, Matrix> mixed_matrices(const Representative& rep, const MixedTensor& t, const Probes& p, int D) {
            Matrix left(p.v2.size(), std::vector<Rational>(p.ext.size()));
            Matrix right(p.ext.size(), std::vector<Rational>(p.v2.size()));
            for (const auto& [v, f] : t.left) add_outer(left, rep.probe(v, D), rep.probe(f, D));
            for (const auto& [f, v] : t.right) add_outer(right, rep.probe(f, D), rep.probe(v, D));
            return {std::move(left), std::move(right)};
        }

        void compare(Report& report, const std::string& cond, const std::string& gen, const Matrix& lhs, const Matrix& rhs,
                     const std::vector<std::string>& rows, const std::vector<std::string>& cols, const std::string& tag = "") {
            for (std::size_t i = 0; i < lhs.size(); ++i) {
                for (std::size_t j = 0; j < lhs[i].size(); ++j) {
                    if (lhs[i][j] != rhs[i][j]) {
                        report.push_back({cond, gen, tag + rows[i] + " | " + cols[j], lhs[i][j].str(), rhs[i][j].str()});
                    }
                }
            }
        }

        /* Image of a mixed tensor in  (V2 (x) g) + (g (x) V2) + (V3 (x) V3), the last part being
         * (d (x) id)(left V3 part) + (id (x) d)(right V3 part); it kills mu(u) (x) v - u (x) mu(v). */
        struct Balanced {
            Matrix left_lie, right_lie, v3v3;
        };

        Balanced balance(const std::pair<Matrix, Matrix>& lr, const Probes& p) {
            const auto& [left, right] = lr;
            const std::size_t n = static_cast<std::size_t>(p.lie_dim);
            const std::size_t p2 = p.v2.size(), p3 = p2 - 1;
            Balanced b;
            b.left_lie.assign(p2, std::vector<Rational>(n));
            b.right_lie.assign(n, std::vector<Rational>(p2));
            b.v3v3.assign(p3, std::vector<Rational>(p3));
            for (std::size_t i = 0; i < p2; ++i)
                for (std::size_t k = 0; k < n; ++k) b.left_lie[i][k] = left[i][k];
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t j = 0; j < p2; ++j) b.right_lie[k][j] = right[k][j];
            for (std::size_t i = 0; i < p3; ++i) {
                for (std::size_t j = 0; j < p3; ++j) b.v3v3[i][j] = left[i + 1][n + j] + right[n + i][j + 1];
            }
            return b;
        }

    }  // namespace

    Report compat_check(const Representative& rep, const Tensor2& r, int max_degree) {
        Report report;
        const auto& L = rep.algebra();
        const auto& f = rep.lifted().cocycle();
        const auto& env = rep.enveloping();
        const int n = L.dim();
        const auto comps = components(r);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const LieElement X = L.generator(i), Y = L.generator(j), XY = L.bracket(X, Y);
                const std::string gen = L.basis_name(i) + "," + L.basis_name(j);
                LieElement left, right;
                for (const auto& [s, t] : comps) {
                    left += t * f(s, X, Y);
                    right += s * f(t, X, Y);
                }
                for (int k = 0; k < n; ++k) {
                    if (left.coeff(k) != XY.coeff(k)) {
                        report.push_back({"compat", gen, "lie:" + L.basis_name(k), left.coeff(k).str(), XY.coeff(k).str()});
                    }
                    if (right.coeff(k) != XY.coeff(k)) {
                        report.push_back({"compat", gen + " (mirror)", "lie:" + L.basis_name(k), right.coeff(k).str(),
                                          XY.coeff(k).str()});
                    }
                }
                std::vector<std::pair<DualElement, LieElement>> phi_left, phi_right;
                for (const auto& [s, t] : comps) {
                    phi_left.emplace_back(phi_cochain(L, s, X, Y), t);
                    phi_right.emplace_back(phi_cochain(L, t, X, Y), s);
                }
                for (const auto& m : monomials_up_to(n, max_degree)) {
                    const LieElement expected = m.is_unit() ? XY : LieElement();
                    LieElement lv, rv;
                    for (const auto& [phi, t] : phi_left) lv += t * rep.eval(phi, m);
                    for (const auto& [phi, s] : phi_right) rv += s * rep.eval(phi, m);
                    for (int k = 0; k < n; ++k) {
                        if (lv.coeff(k) != expected.coeff(k)) {
                            report.push_back({"compat", gen, env.format(m) + " | lie:" + L.basis_name(k), lv.coeff(k).str(),
                                              expected.coeff(k).str()});
                        }
                        if (rv.coeff(k) != expected.coeff(k)) {
                            report.push_back({"compat", gen + " (mirror)", env.format(m) + " | lie:" + L.basis_name(k),
                                              rv.coeff(k).str(), expected.coeff(k).str()});
                        }
                    }
                }
            }
        }
        return report;
    }

    Report verify_quasi_invariance(const Representative& rep, const Tensor2& r, int max_degree,
                                   const std::function<void(const std::string&, std::size_t)>& progress) {
        Report report = compat_check(rep, r, max_degree);
        if (!report.empty()) {
            report.push_back({"compat", "", "", "compatibility condition violated", ""});
            return report;
        }
        const auto& L = rep.algebra();
        const auto& env = rep.enveloping();
        const int n = L.dim();
        if (!is_symmetric(r)) report.push_back({"rmatrix", "", "", "r is not symmetric", ""});
        for (int k = 0; k < n; ++k) {
            if (!tensor_action(L, L.generator(k), r).is_zero()) {
                report.push_back({"rmatrix", L.basis_name(k), "", "r is not invariant", ""});
            }
        }
        if (!report.empty()) return report;

        const Probes probes = make_probes(rep, max_degree);
        const int D = max_degree;

        std::vector<std::pair<std::string, ExtElement>> family;
        for (int k = 0; k < n; ++k) family.emplace_back(L.basis_name(k), ExtElement::lie(L.generator(k)));
        for (const auto& m : monomials_up_to(n, D, 1)) {
            family.emplace_back("d(" + env.format(m) + ")*", ExtElement::v3(dual_monomial(m)));
        }

        const ExtTensor rbar = lift_r(r);
        for (const auto& [name, e] : family) {
            ExtTensor lhs = act(rep, e, rbar);
            ExtTensor rhs = beta(rep, xi(rep, r, e));
            compare(report, "a", name, ext_matrix(rep, lhs, probes, D), ext_matrix(rep, rhs, probes, D), probes.ext, probes.ext);
        }
        if (progress) progress("a", family.size());

        std::vector<std::pair<std::string, DualElement>> us{{"1", counit_functional()}};
        for (const auto& m : monomials_up_to(n, D)) us.emplace_back(env.format(m) + "*", dual_monomial(m));
        for (const auto& [name, u] : us) {
            MixedTensor lhs = act_on_r(r, u);
            MixedTensor rhs = xi(rep, r, rep.mu(u));
            auto [ll, lr] = mixed_matrices(rep, lhs, probes, D);
            auto [rl, rr] = mixed_matrices(rep, rhs, probes, D);
            compare(report, "b", name, ll, rl, probes.v2, probes.ext, "left ");
            compare(report, "b", name, lr, rr, probes.ext, probes.v2, "right ");
        }
        if (progress) progress("b", us.size());

        std::size_t pairs = 0;
        for (std::size_t a = 0; a < family.size(); ++a) {
            for (std::size_t b = a + 1; b < family.size(); ++b) {
                const auto& [na, ea] = family[a];
                const auto& [nb, eb] = family[b];
                MixedTensor lhs = xi(rep, r, rep.bracket(ea, eb));
                MixedTensor rhs = act(rep, ea, xi(rep, r, eb)) - act(rep, eb, xi(rep, r, ea));
                Balanced bl = balance(mixed_matrices(rep, lhs, probes, D), probes);
                Balanced br = balance(mixed_matrices(rep, rhs, probes, D), probes);
                const std::string gen = na + "," + nb;
                std::vector<std::string> lie_names(probes.ext.begin(), probes.ext.begin() + n);
                std::vector<std::string> v3_names(probes.v2.begin() + 1, probes.v2.end());
                compare(report, "c", gen, bl.left_lie, br.left_lie, probes.v2, lie_names, "left ");
                compare(report, "c", gen, bl.right_lie, br.right_lie, lie_names, probes.v2, "right ");
                compare(report, "c", gen, bl.v3v3, br.v3v3, v3_names, v3_names, "v3 ");
                ++pairs;
            }
        }
        if (progress) progress("c", pairs);
        return report;
    }

    UEAElement multiply_tensor(const Enveloping& env, const Tensor2& t) {
        UEAElement out;
        for (const auto& [ab, c] : t) {
            std::vector<int> word{ab.first, ab.second};
            out.axpy(c, env.straighten_word(word));
        }
        return out;
    }

    Report casimir_uniqueness_check(const LieAlgebra& L, const BilinearForm& kappa) {
        Report report;
        const Enveloping env(L);
        const int n = L.dim();
        const Tensor2 r = standard_r_matrix(L, kappa);
        const UEAElement omega = multiply_tensor(env, r);

        const auto monos = monomials_up_to(n, 2);
        auto coords = [&](const UEAElement& u) {
            std::vector<Rational> v;
            for (const auto& m : monos) v.push_back(u.coeff(m));
            return v;
        };
        auto column = [&](int a, int b) { return coords(multiply_tensor(env, Tensor2::basis({a, b}))); };

        // symmetric basis: x_a (x) x_a and x_a (x) x_b + x_b (x) x_a for a < b
        std::vector<std::pair<int, int>> sym;
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b) sym.emplace_back(a, b);
        RationalMatrix m = zero_matrix(monos.size(), sym.size());
        for (std::size_t c = 0; c < sym.size(); ++c) {
            auto [a, b] = sym[c];
            auto col = column(a, b);
            if (a != b) {
                auto other = column(b, a);
                for (std::size_t i = 0; i < col.size(); ++i) col[i] += other[i];
            }
            for (std::size_t i = 0; i < col.size(); ++i) m[i][c] = col[i];
        }
        if (rank(m) != sym.size()) {
            report.push_back({"casimir", "", "", "symmetric tensors of rank " + std::to_string(rank(m)), std::to_string(sym.size())});
        }
        auto solution = solve(m, coords(omega), sym.size());
        if (!solution) {
            report.push_back({"casimir", "", "", "no symmetric lift of the Casimir element", ""});
        } else {
            Tensor2 s;
            for (std::size_t c = 0; c < sym.size(); ++c) {
                auto [a, b] = sym[c];
                s.add_term({a, b}, (*solution)[c]);
                if (a != b) s.add_term({b, a}, (*solution)[c]);
            }
            if (s != r) report.push_back({"casimir", "", "", format_tensor(L, s), format_tensor(L, r)});
        }

        RationalMatrix full = zero_matrix(monos.size(), static_cast<std::size_t>(n * n));
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                auto col = column(a, b);
                for (std::size_t i = 0; i < col.size(); ++i) full[i][static_cast<std::size_t>(a * n + b)] = col[i];
            }
        }
        for (const auto& v : nullspace(full, static_cast<std::size_t>(n * n))) {
            Tensor2 t;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) t.add_term({a, b}, v[static_cast<std::size_t>(a * n + b)]);
            Tensor2 symmetric_part = t + swap_factors(t);
            if (!symmetric_part.is_zero()) {
                report.push_back({"casimir", "", "", "kernel element with symmetric part " + format_tensor(L, symmetric_part), "0"});
            }
        }

        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                if (L.bracket_basis(a, b).is_zero()) continue;
                Tensor2 skewed = r + Tensor2::basis({a, b}) - Tensor2::basis({b, a});
                if (multiply_tensor(env, skewed) == omega) {
                    report.push_back({"casimir", L.basis_name(a) + "," + L.basis_name(b), "",
                                      "non-symmetric lift has the Casimir image", env.format(omega)});
                }
            }
        }
        return report;
    }

}  // namespace cforge
