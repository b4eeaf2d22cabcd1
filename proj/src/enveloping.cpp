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

#include "cocycle_forge/enveloping.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace cforge {

    PBWMonomial PBWMonomial::generator(int dim, int k, int power) {
        PBWMonomial m = unit(dim);
        m.exponents.at(static_cast<std::size_t>(k)) = power;
        return m;
    }

    int PBWMonomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

    std::strong_ordering operator<=>(const PBWMonomial& a, const PBWMonomial& b) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        return b.exponents <=> a.exponents;
    }

    std::size_t PBWMonomialHash::operator()(const PBWMonomial& m) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (int e : m.exponents) {
            h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }

    std::size_t Enveloping::PairKeyHash::operator()(const PairKey& k) const noexcept {
        PBWMonomialHash h;
        return h(k.a) * 31 + h(k.b);
    }

    std::vector<PBWMonomial> monomials_up_to(int dim, int max_degree, int min_degree) {
        std::vector<PBWMonomial> out;
        PBWMonomial m = PBWMonomial::unit(dim);
        // exponents of the first generators first, largest first, to match graded-lex order
        auto fill = [&](auto&& self, int pos, int remaining) -> void {
            if (pos == dim - 1) {
                m.exponents[static_cast<std::size_t>(pos)] = remaining;
                out.push_back(m);
                return;
            }
            for (int e = remaining; e >= 0; --e) {
                m.exponents[static_cast<std::size_t>(pos)] = e;
                self(self, pos + 1, remaining - e);
            }
        };
        for (int d = std::max(min_degree, 0); d <= max_degree; ++d) fill(fill, 0, d);
        return out;
    }

    Rational augmentation(const UEAElement& u) {
        for (const auto& [m, c] : u) {
            if (m.is_unit()) return c;
        }
        return Rational(0);
    }

    std::optional<LieElement> as_lie_element(const UEAElement& u) {
        LieElement out;
        for (const auto& [m, c] : u) {
            if (m.degree() != 1) return std::nullopt;
            auto it = std::find(m.exponents.begin(), m.exponents.end(), 1);
            out.add_term(static_cast<int>(it - m.exponents.begin()), c);
        }
        return out;
    }

    UEAElement from_lie_element(int dim, const LieElement& g) {
        UEAElement out;
        for (const auto& [k, c] : g) out.add_term(PBWMonomial::generator(dim, k), c);
        return out;
    }

    Enveloping::Enveloping(LieAlgebra algebra)
        : algebra_(std::move(algebra)), generator_products_(static_cast<std::size_t>(algebra_.dim())) {}

    UEAElement Enveloping::times_generator(const PBWMonomial& m, int k) const {
        auto& cache = generator_products_[static_cast<std::size_t>(k)];
        if (auto it = cache.find(m); it != cache.end()) return it->second;

        int last = -1;
        for (int j = dim() - 1; j >= 0; --j) {
            if (m.exponents[static_cast<std::size_t>(j)] > 0) {
                last = j;
                break;
            }
        }
        UEAElement out;
        if (last <= k) {
            PBWMonomial next = m;
            ++next.exponents[static_cast<std::size_t>(k)];
            out.add_term(next, Rational(1));
        } else {
            // m = m' x_j with j > k:  m' x_j x_k = (m' x_k) x_j + m' [x_j, x_k]
            PBWMonomial prefix = m;
            --prefix.exponents[static_cast<std::size_t>(last)];
            UEAElement moved = times_generator(prefix, k);
            for (const auto& [mono, c] : moved) out.axpy(c, times_generator(mono, last));
            for (const auto& [l, c] : algebra_.bracket_basis(last, k)) out.axpy(c, times_generator(prefix, l));
        }
        cache.emplace(m, out);
        return out;
    }

    UEAElement Enveloping::multiply(const PBWMonomial& a, const PBWMonomial& b) const {
        if (b.is_unit()) return monomial(a);
        if (a.is_unit()) return monomial(b);
        PairKey key{a, b};
        if (auto it = products_.find(key); it != products_.end()) return it->second;
        UEAElement acc = monomial(a);
        for (int k = 0; k < dim(); ++k) {
            for (int p = 0; p < b.exponents[static_cast<std::size_t>(k)]; ++p) {
                UEAElement next;
                for (const auto& [mono, c] : acc) next.axpy(c, times_generator(mono, k));
                acc = std::move(next);
            }
        }
        products_.emplace(std::move(key), acc);
        return acc;
    }

    UEAElement Enveloping::multiply(const UEAElement& u, const UEAElement& v) const {
        UEAElement out;
        for (const auto& [a, ca] : u) {
            for (const auto& [b, cb] : v) out.axpy(ca * cb, multiply(a, b));
        }
        return out;
    }

    UEAElement Enveloping::times_lie(const UEAElement& u, const LieElement& g) const {
        UEAElement out;
        for (const auto& [m, c] : u) {
            for (const auto& [k, ck] : g) out.axpy(c * ck, times_generator(m, k));
        }
        return out;
    }

    UEAElement Enveloping::straighten_word(std::span<const int> word) const {
        UEAElement acc = one();
        for (int k : word) {
            if (k < 0 || k >= dim()) throw std::out_of_range("word letter outside the basis");
            UEAElement next;
            for (const auto& [mono, c] : acc) next.axpy(c, times_generator(mono, k));
            acc = std::move(next);
        }
        return acc;
    }

    void Enveloping::for_each_split(const PBWMonomial& m, int n,
                                    const std::function<void(const Rational&, std::span<const PBWMonomial>)>& fn) const {
        if (n < 1) throw std::invalid_argument("coproduct arity must be positive");
        const int d = dim();
        std::vector<PBWMonomial> parts(static_cast<std::size_t>(n), PBWMonomial::unit(d));
        // distribute the exponent of generator `gen` over the n parts, then move to the next generator
        auto over_generators = [&](auto&& self, int gen, const Rational& coef) -> void {
            if (gen == d) {
                fn(coef, parts);
                return;
            }
            const int total = m.exponents[static_cast<std::size_t>(gen)];
            auto over_parts = [&](auto&& inner, int part, int remaining, const Rational& c) -> void {
                if (part == n - 1) {
                    parts[static_cast<std::size_t>(part)].exponents[static_cast<std::size_t>(gen)] = remaining;
                    self(self, gen + 1, c);
                    return;
                }
                for (int e = remaining; e >= 0; --e) {
                    parts[static_cast<std::size_t>(part)].exponents[static_cast<std::size_t>(gen)] = e;
                    inner(inner, part + 1, remaining - e, c * binomial(remaining, e));
                }
            };
            over_parts(over_parts, 0, total, coef);
        };
        over_generators(over_generators, 0, Rational(1));
    }

    TensorWord Enveloping::iterated_coproduct(const PBWMonomial& m, int n) const {
        TensorWord out;
        for_each_split(m, n, [&](const Rational& c, std::span<const PBWMonomial> parts) {
            out.add_term(std::vector<PBWMonomial>(parts.begin(), parts.end()), c);
        });
        return out;
    }

    TensorWord Enveloping::coproduct(const UEAElement& u) const {
        TensorWord out;
        for (const auto& [m, c] : u) out.axpy(c, coproduct(m));
        return out;
    }

    TensorWord Enveloping::multiply(const TensorWord& a, const TensorWord& b) const {
        TensorWord out;
        for (const auto& [wa, ca] : a) {
            for (const auto& [wb, cb] : b) {
                if (wa.size() != wb.size()) throw std::invalid_argument("tensor arity mismatch");
                // expand the slot products one slot at a time
                std::vector<std::pair<std::vector<PBWMonomial>, Rational>> partial{{{}, ca * cb}};
                for (std::size_t s = 0; s < wa.size(); ++s) {
                    UEAElement slot = multiply(wa[s], wb[s]);
                    std::vector<std::pair<std::vector<PBWMonomial>, Rational>> next;
                    for (const auto& [prefix, c] : partial) {
                        for (const auto& [m, cm] : slot) {
                            auto word = prefix;
                            word.push_back(m);
                            next.emplace_back(std::move(word), c * cm);
                        }
                    }
                    partial = std::move(next);
                }
                for (const auto& [word, c] : partial) out.add_term(word, c);
            }
        }
        return out;
    }

    UEAElement Enveloping::parse(std::string_view text) const {
        std::vector<std::string> tokens;
        std::string cur;
        for (char ch : text) {
            if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*') {
                if (!cur.empty()) tokens.push_back(std::move(cur));
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        if (!cur.empty()) tokens.push_back(std::move(cur));
        if (tokens.empty()) throw ParseError("empty monomial");

        std::vector<int> word;
        for (const auto& tok : tokens) {
            std::string name = tok;
            int power = 1;
            if (auto caret = tok.find('^'); caret != std::string::npos) {
                name = tok.substr(0, caret);
                std::string exp = tok.substr(caret + 1);
                if (exp.empty() || !std::all_of(exp.begin(), exp.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
                    throw ParseError("malformed exponent in '" + tok + "'");
                }
                power = std::stoi(exp);
                if (power < 1) throw ParseError("exponent must be at least 1 in '" + tok + "'");
            }
            auto idx = algebra_.index_of(name);
            if (!idx) {
                if (name == "1") continue;
                throw ParseError("unknown basis name '" + name + "'");
            }
            for (int p = 0; p < power; ++p) word.push_back(*idx);
        }
        return straighten_word(word);
    }

    std::string Enveloping::format(const PBWMonomial& m) const {
        if (m.is_unit()) return "1";
        std::ostringstream os;
        bool first = true;
        for (int k = 0; k < dim(); ++k) {
            int e = m.exponents[static_cast<std::size_t>(k)];
            if (e == 0) continue;
            if (!first) os << ' ';
            first = false;
            os << algebra_.basis_name(k);
            if (e > 1) os << '^' << e;
        }
        return os.str();
    }

    std::string Enveloping::format(const UEAElement& u) const {
        if (u.is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : u) {
            if (!first) os << " + ";
            first = false;
            if (m.is_unit()) {
                os << c;
            } else {
                if (!c.is_one()) os << c << '*';
                os << format(m);
            }
        }
        return os.str();
    }

    UEAElement apply(const LinearMap& F, const UEAElement& u) {
        UEAElement out;
        for (const auto& [m, c] : u) out.axpy(c, F(m));
        return out;
    }

    LinearMap identity_map() {
        return [](const PBWMonomial& m) { return UEAElement::basis(m); };
    }

    LinearMap unit_counit_map(int dim) {
        return [dim](const PBWMonomial& m) { return m.is_unit() ? UEAElement::basis(PBWMonomial::unit(dim)) : UEAElement(); };
    }

    LinearMap augmentation_projection() {
        return [](const PBWMonomial& m) { return m.is_unit() ? UEAElement() : UEAElement::basis(m); };
    }

    LinearMap convolution(const Enveloping& env, LinearMap F, LinearMap G) {
        return [&env, F = std::move(F), G = std::move(G)](const PBWMonomial& m) {
            UEAElement out;
            env.for_each_split(m, 2, [&](const Rational& c, std::span<const PBWMonomial> parts) {
                UEAElement left = F(parts[0]);
                if (left.is_zero()) return;
                UEAElement right = G(parts[1]);
                if (right.is_zero()) return;
                out.axpy(c, env.multiply(left, right));
            });
            return out;
        };
    }

}  // namespace cforge
