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

#include "cocycle_forge/algebra_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace cforge {

    namespace {

        using json = nlohmann::json;

        json parse_json(std::string_view text) {
            try {
                return json::parse(text);
            } catch (const json::parse_error& e) {
                throw SchemaError(std::string("malformed JSON: ") + e.what());
            }
        }

        const json& field(const json& obj, const char* key, const std::string& where) {
            if (!obj.is_object() || !obj.contains(key)) throw SchemaError(where + ": missing \"" + key + "\"");
            return obj.at(key);
        }

        int index_field(const json& obj, const char* key, int dim, const std::string& where) {
            const json& v = field(obj, key, where);
            if (!v.is_number_integer()) throw SchemaError(where + ": \"" + key + "\" must be an integer");
            const auto i = v.get<long long>();
            if (i < 0 || i >= dim) {
                throw SchemaError(where + ": index " + std::to_string(i) + " out of range [0, " + std::to_string(dim) + ")");
            }
            return static_cast<int>(i);
        }

        Rational rational_field(const json& obj, const std::string& where) {
            const json& v = field(obj, "c", where);
            if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
            if (!v.is_string()) throw SchemaError(where + ": \"c\" must be a \"p/q\" string");
            try {
                return Rational::parse(v.get<std::string>());
            } catch (const ParseError& e) {
                throw SchemaError(where + ": " + e.what());
            }
        }

        const json& terms_array(const json& doc, const std::string& where) {
            const json& terms = field(doc, "terms", where);
            if (!terms.is_array()) throw SchemaError(where + ": \"terms\" must be an array");
            return terms;
        }

    }  // namespace

    AlgebraSpec parse_algebra_spec(std::string_view text) {
        const json doc = parse_json(text);
        AlgebraSpec spec;
        const json& name = field(doc, "name", "algebra");
        if (!name.is_string()) throw SchemaError("algebra: \"name\" must be a string");
        spec.name = name.get<std::string>();

        const json& basis = field(doc, "basis", "algebra");
        if (!basis.is_array() || basis.empty()) throw SchemaError("algebra: \"basis\" must be a non-empty array");
        std::set<std::string> seen;
        for (const auto& b : basis) {
            if (!b.is_string() || b.get<std::string>().empty()) throw SchemaError("algebra: basis names must be non-empty strings");
            if (!seen.insert(b.get<std::string>()).second) throw SchemaError("algebra: duplicate basis name " + b.get<std::string>());
            spec.basis.push_back(b.get<std::string>());
        }
        const int dim = static_cast<int>(spec.basis.size());
        spec.table.dim = dim;

        const json empty = json::array();
        const json& brackets = doc.contains("brackets") ? doc.at("brackets") : empty;
        if (!brackets.is_array()) throw SchemaError("algebra: \"brackets\" must be an array");
        for (std::size_t n = 0; n < brackets.size(); ++n) {
            const std::string where = "brackets[" + std::to_string(n) + "]";
            const json& entry = brackets[n];
            const int i = index_field(entry, "i", dim, where);
            const int j = index_field(entry, "j", dim, where);
            if (i >= j) throw SchemaError(where + ": requires i < j");
            if (spec.table.brackets.count({i, j})) throw SchemaError(where + ": pair listed twice");
            const json& terms = field(entry, "terms", where);
            if (!terms.is_array()) throw SchemaError(where + ": \"terms\" must be an array");
            LieElement value;
            for (const auto& t : terms) {
                value.add_term(index_field(t, "k", dim, where), rational_field(t, where));
            }
            if (!value.is_zero()) spec.table.brackets.emplace(std::make_pair(i, j), std::move(value));
        }
        return spec;
    }

    LieAlgebra parse_algebra(std::string_view text) {
        AlgebraSpec spec = parse_algebra_spec(text);
        return LieAlgebra::create(std::move(spec.name), std::move(spec.basis), std::move(spec.table));
    }

    std::string algebra_to_json(const LieAlgebra& L) {
        json doc;
        doc["name"] = L.name();
        doc["basis"] = L.basis_names();
        json brackets = json::array();
        for (const auto& [ij, value] : L.table().brackets) {
            json terms = json::array();
            for (const auto& [k, c] : value) terms.push_back({{"k", k}, {"c", c.str()}});
            brackets.push_back({{"i", ij.first}, {"j", ij.second}, {"terms", terms}});
        }
        doc["brackets"] = brackets;
        return doc.dump(2);
    }

    Cochain parse_cocycle(std::string_view text, int dim) {
        const json doc = parse_json(text);
        const json& terms = terms_array(doc, "cocycle");
        Cochain f(dim, 3);
        std::set<std::array<int, 3>> seen;
        for (std::size_t n = 0; n < terms.size(); ++n) {
            const std::string where = "cocycle terms[" + std::to_string(n) + "]";
            std::array<int, 3> idx{index_field(terms[n], "i", dim, where), index_field(terms[n], "j", dim, where),
                                   index_field(terms[n], "k", dim, where)};
            if (!(idx[0] < idx[1] && idx[1] < idx[2])) {
                throw SchemaError(where + ": not antisymmetric data, indices must be strictly increasing");
            }
            if (!seen.insert(idx).second) throw SchemaError(where + ": triple listed twice");
            f.set(idx, rational_field(terms[n], where));
        }
        return f;
    }

    std::string cocycle_to_json(const Cochain& f) {
        json terms = json::array();
        for (const auto& [idx, c] : f.canonical_values()) {
            terms.push_back({{"i", idx[0]}, {"j", idx[1]}, {"k", idx[2]}, {"c", c.str()}});
        }
        return json{{"terms", terms}}.dump(2);
    }

    Tensor2 parse_rmatrix(std::string_view text, int dim) {
        const json doc = parse_json(text);
        const json& terms = terms_array(doc, "r-matrix");
        Tensor2 r;
        for (std::size_t n = 0; n < terms.size(); ++n) {
            const std::string where = "r-matrix terms[" + std::to_string(n) + "]";
            r.add_term({index_field(terms[n], "i", dim, where), index_field(terms[n], "j", dim, where)},
                       rational_field(terms[n], where));
        }
        return r;
    }

    std::string rmatrix_to_json(const Tensor2& r) {
        json terms = json::array();
        for (const auto& [ij, c] : r) terms.push_back({{"i", ij.first}, {"j", ij.second}, {"c", c.str()}});
        return json{{"terms", terms}}.dump(2);
    }

    std::string report_to_json(const Report& report) {
        json rows = json::array();
        for (const auto& f : report) {
            rows.push_back({{"condition", f.condition},
                            {"generator", f.generator},
                            {"monomial", f.monomial},
                            {"lhs", f.lhs},
                            {"rhs", f.rhs}});
        }
        return rows.dump(2);
    }

    std::string read_text_file(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }

}  // namespace cforge
