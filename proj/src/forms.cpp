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

#include "cocycle_forge/forms.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cforge {

    BilinearForm BilinearForm::zero(int dim) { return {zero_matrix(dim, dim)}; }

    BilinearForm BilinearForm::identity(int dim) {
        BilinearForm out = zero(dim);
        for (int i = 0; i < dim; ++i) out.matrix[i][i] = Rational(1);
        return out;
    }

    Rational BilinearForm::operator()(const LieElement& a, const LieElement& b) const {
        Rational out(0);
        for (const auto& [i, ci] : a) {
            for (const auto& [j, cj] : b) {
                const auto& m = matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (!m.is_zero()) out += ci * cj * m;
            }
        }
        return out;
    }

    bool BilinearForm::is_symmetric() const {
        for (std::size_t i = 0; i < matrix.size(); ++i) {
            for (std::size_t j = i + 1; j < matrix.size(); ++j) {
                if (matrix[i][j] != matrix[j][i]) return false;
            }
        }
        return true;
    }

    bool BilinearForm::is_nondegenerate() const { return rank(matrix) == matrix.size(); }

    BilinearForm killing_form(const LieAlgebra& L) {
        const int n = L.dim();
        // ad[i][l][k] = coefficient of x_l in [x_i, x_k]
        std::vector<RationalMatrix> ad(static_cast<std::size_t>(n), zero_matrix(n, n));
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                for (const auto& [l, c] : L.bracket_basis(i, k)) ad[i][l][k] = c;
            }
        }
        BilinearForm out = BilinearForm::zero(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                Rational tr(0);
                for (int k = 0; k < n; ++k) {
                    for (int l = 0; l < n; ++l) {
                        if (!ad[i][k][l].is_zero() && !ad[j][l][k].is_zero()) tr += ad[i][k][l] * ad[j][l][k];
                    }
                }
                out.matrix[i][j] = tr;
            }
        }
        return out;
    }

    std::vector<InvarianceViolation> check_invariant_form(const LieAlgebra& L, const BilinearForm& kappa) {
        std::vector<InvarianceViolation> out;
        const int n = L.dim();
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                for (int k = 0; k < n; ++k) {
                    Rational lhs = kappa(L.bracket_basis(i, j), L.generator(k));
                    Rational rhs = kappa(L.generator(i), L.bracket_basis(j, k));
                    if (lhs != rhs) out.push_back({i, j, k, lhs, rhs});
                }
            }
        }
        return out;
    }

    Cochain::Cochain(int dim, int arity) : dim_(dim), arity_(arity) {
        if (dim <= 0 || arity < 0) throw std::invalid_argument("cochain needs positive dimension");
        std::size_t size = 1;
        for (int i = 0; i < arity; ++i) size *= static_cast<std::size_t>(dim);
        values_.assign(size, Rational(0));
    }

    std::size_t Cochain::offset(std::span<const int> idx) const {
        if (static_cast<int>(idx.size()) != arity_) throw std::invalid_argument("cochain arity mismatch");
        std::size_t off = 0;
        for (int i : idx) {
            if (i < 0 || i >= dim_) throw std::out_of_range("cochain index out of range");
            off = off * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
        }
        return off;
    }

    void Cochain::set(std::span<const int> idx, const Rational& v) {
        std::vector<int> perm(idx.begin(), idx.end());
        std::vector<int> sorted = perm;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            if (!v.is_zero()) throw std::invalid_argument("alternating cochain must vanish on repeated arguments");
            return;
        }
        // value on the sorted tuple, then spread over all permutations with sign
        int inversions = 0;
        for (std::size_t a = 0; a < perm.size(); ++a) {
            for (std::size_t b = a + 1; b < perm.size(); ++b) {
                if (perm[a] > perm[b]) ++inversions;
            }
        }
        Rational base = inversions % 2 == 0 ? v : -v;
        std::vector<int> p = sorted;
        do {
            int inv = 0;
            for (std::size_t a = 0; a < p.size(); ++a) {
                for (std::size_t b = a + 1; b < p.size(); ++b) {
                    if (p[a] > p[b]) ++inv;
                }
            }
            values_[offset(p)] = inv % 2 == 0 ? base : -base;
        } while (std::next_permutation(p.begin(), p.end()));
    }

    Rational Cochain::operator()(std::span<const LieElement> args) const {
        if (static_cast<int>(args.size()) != arity_) throw std::invalid_argument("cochain arity mismatch");
        Rational out(0);
        std::vector<int> idx(args.size());
        auto recurse = [&](auto&& self, std::size_t pos, const Rational& coef) -> void {
            if (pos == args.size()) {
                const auto& v = values_[offset(idx)];
                if (!v.is_zero()) out += coef * v;
                return;
            }
            for (const auto& [k, c] : args[pos]) {
                idx[pos] = k;
                self(self, pos + 1, coef * c);
            }
        };
        recurse(recurse, 0, Rational(1));
        return out;
    }

    Rational Cochain::operator()(const LieElement& a, const LieElement& b, const LieElement& c) const {
        if (arity_ != 3) throw std::invalid_argument("cochain arity mismatch");
        Rational out(0);
        const auto n = static_cast<std::size_t>(dim_);
        for (const auto& [i, ci] : a) {
            for (const auto& [j, cj] : b) {
                if (i == j) continue;
                Rational cij = ci * cj;
                for (const auto& [k, ck] : c) {
                    const auto& v = values_[(static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)) * n +
                                            static_cast<std::size_t>(k)];
                    if (!v.is_zero()) out += cij * ck * v;
                }
            }
        }
        return out;
    }

    std::map<std::vector<int>, Rational> Cochain::canonical_values() const {
        std::map<std::vector<int>, Rational> out;
        std::vector<int> idx(static_cast<std::size_t>(arity_));
        auto recurse = [&](auto&& self, std::size_t pos, int start) -> void {
            if (pos == idx.size()) {
                const auto& v = values_[offset(idx)];
                if (!v.is_zero()) out.emplace(idx, v);
                return;
            }
            for (int i = start; i < dim_; ++i) {
                idx[pos] = i;
                self(self, pos + 1, i + 1);
            }
        };
        recurse(recurse, 0, 0);
        return out;
    }

    bool Cochain::is_zero() const {
        return std::all_of(values_.begin(), values_.end(), [](const Rational& r) { return r.is_zero(); });
    }

    Cochain Cochain::scaled(const Rational& s) const {
        Cochain out(*this);
        for (auto& v : out.values_) v *= s;
        return out;
    }

    Cochain cartan_cocycle(const LieAlgebra& L, const BilinearForm& kappa) {
        if (!check_invariant_form(L, kappa).empty()) {
            throw AlgebraError("Cartan cocycle needs an invariant form");
        }
        const int n = L.dim();
        Cochain f(n, 3);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                for (int k = j + 1; k < n; ++k) {
                    std::vector<int> idx{i, j, k};
                    f.set(idx, kappa(L.generator(i), L.bracket_basis(j, k)));
                }
            }
        }
        return f;
    }

    Cochain ce_diff_constant(const LieAlgebra& L, const Cochain& c) {
        const int n = L.dim();
        const int k = c.arity();
        Cochain out(n, k + 1);
        if (k + 1 > n) return out;
        std::vector<int> idx(static_cast<std::size_t>(k + 1));
        auto recurse = [&](auto&& self, std::size_t pos, int start) -> void {
            if (pos == idx.size()) {
                Rational sum(0);
                std::vector<LieElement> args;
                for (int a = 0; a <= k; ++a) {
                    for (int b = a + 1; b <= k; ++b) {
                        args.clear();
                        args.push_back(L.bracket_basis(idx[a], idx[b]));
                        for (int e = 0; e <= k; ++e) {
                            if (e != a && e != b) args.push_back(L.generator(idx[e]));
                        }
                        Rational v = c(args);
                        if ((a + b) % 2 == 0) sum += v; else sum -= v;
                    }
                }
                out.set(idx, sum);
                return;
            }
            for (int i = start; i < n; ++i) {
                idx[pos] = i;
                self(self, pos + 1, i + 1);
            }
        };
        recurse(recurse, 0, 0);
        return out;
    }

    std::vector<LieElement> dual_basis(const LieAlgebra& L, const BilinearForm& kappa) {
        std::vector<LieElement> basis;
        for (int i = 0; i < L.dim(); ++i) basis.push_back(L.generator(i));
        return dual_basis(L, kappa, basis);
    }

    std::vector<LieElement> dual_basis(const LieAlgebra& L, const BilinearForm& kappa, std::span<const LieElement> basis) {
        const auto n = static_cast<std::size_t>(L.dim());
        if (basis.size() != n) throw std::invalid_argument("basis has the wrong number of elements");
        RationalMatrix gram = zero_matrix(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) gram[i][j] = kappa(basis[i], basis[j]);
        }
        auto inv = inverse(gram);
        if (!inv) throw DegenerateFormError();
        // x^j = sum_k (G^-1)_{kj} b_k
        std::vector<LieElement> out(n);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) out[j].axpy((*inv)[k][j], basis[k]);
        }
        return out;
    }

    Tensor2 tensor_product(const LieElement& a, const LieElement& b) {
        Tensor2 out;
        for (const auto& [i, ci] : a) {
            for (const auto& [j, cj] : b) out.add_term({i, j}, ci * cj);
        }
        return out;
    }

    Tensor2 swap_factors(const Tensor2& r) {
        Tensor2 out;
        for (const auto& [ij, c] : r) out.add_term({ij.second, ij.first}, c);
        return out;
    }

    bool is_symmetric(const Tensor2& r) { return r == swap_factors(r); }

    Tensor2 standard_r_matrix(const LieAlgebra& L, const BilinearForm& kappa) {
        std::vector<LieElement> basis;
        for (int i = 0; i < L.dim(); ++i) basis.push_back(L.generator(i));
        return standard_r_matrix(L, kappa, basis);
    }

    Tensor2 standard_r_matrix(const LieAlgebra& L, const BilinearForm& kappa, std::span<const LieElement> basis) {
        auto dual = dual_basis(L, kappa, basis);
        Tensor2 out;
        const Rational half(1, 2);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            out.axpy(half, tensor_product(basis[i], dual[i]));
            out.axpy(half, tensor_product(dual[i], basis[i]));
        }
        return out;
    }

    Tensor2 tensor_action(const LieAlgebra& L, const LieElement& g, const Tensor2& r) {
        Tensor2 out;
        for (const auto& [ij, c] : r) {
            auto [i, j] = ij;
            out.axpy(c, tensor_product(L.bracket(g, L.generator(i)), L.generator(j)));
            out.axpy(c, tensor_product(L.generator(i), L.bracket(g, L.generator(j))));
        }
        return out;
    }

    std::string format_tensor(const LieAlgebra& L, const Tensor2& r) {
        if (r.is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [ij, c] : r) {
            if (!first) os << " + ";
            first = false;
            if (!c.is_one()) os << c << "*";
            os << L.basis_name(ij.first) << "(x)" << L.basis_name(ij.second);
        }
        return os.str();
    }

}  // namespace cforge
