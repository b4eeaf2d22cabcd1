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

#include "cocycle_forge/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "cocycle_forge/algebra_io.hpp"
#include "cocycle_forge/representative.hpp"
#include "cocycle_forge/suites.hpp"

namespace cforge {

    namespace {

        using json = nlohmann::json;

        constexpr int kPass = 0;
        constexpr int kFail = 1;
        constexpr int kUsage = 2;

        struct UsageError : std::runtime_error {
            using std::runtime_error::runtime_error;
        };

        struct Options {
            std::string builtin;
            std::string algebra_file;
            std::string form = "killing";
            std::string cocycle = "cartan";
            std::string rmatrix_file;
            std::string x, g1, g2;
            std::string pairs = "XY,XH,YH";
            std::string format = "tsv";
            std::string suite = "all";
            std::string output;
            int max_degree = -1;
        };

        AlgebraSpec load_spec(const Options& o) {
            if (!o.builtin.empty() && !o.algebra_file.empty()) throw UsageError("give either --builtin or --algebra, not both");
            if (!o.builtin.empty()) {
                LieAlgebra L = builtin::by_name(o.builtin);
                return {L.name(), L.basis_names(), L.table()};
            }
            if (o.algebra_file.empty()) throw UsageError("an algebra is required: --builtin NAME or --algebra FILE");
            return parse_algebra_spec(read_text_file(o.algebra_file));
        }

        LieAlgebra load_algebra(const Options& o) {
            if (!o.builtin.empty() && o.algebra_file.empty()) return builtin::by_name(o.builtin);
            AlgebraSpec spec = load_spec(o);
            return LieAlgebra::create(std::move(spec.name), std::move(spec.basis), std::move(spec.table));
        }

        BilinearForm load_form(const Options& o, const LieAlgebra& L) {
            if (o.form == "killing") return killing_form(L);
            if (o.form == "identity") return BilinearForm::identity(L.dim());
            throw UsageError("unknown form '" + o.form + "' (expected killing or identity)");
        }

        Cochain load_cocycle(const Options& o, const LieAlgebra& L) {
            if (o.cocycle == "cartan") return cartan_cocycle(L, load_form(o, L));
            return parse_cocycle(read_text_file(o.cocycle), L.dim());
        }

        Tensor2 load_rmatrix(const Options& o, const LieAlgebra& L) {
            if (!o.rmatrix_file.empty()) return parse_rmatrix(read_text_file(o.rmatrix_file), L.dim());
            const BilinearForm kappa = load_form(o, L);
            if (!kappa.is_nondegenerate()) {
                throw UsageError("the " + o.form + " form of " + L.name() +
                                 " is degenerate; pass --rmatrix-file or choose another --form");
            }
            return standard_r_matrix(L, kappa);
        }

        int resolve_degree(const Options& o, int fallback) {
            if (o.max_degree >= 0) return o.max_degree;
            if (const char* env = std::getenv("COCYCLE_FORGE_MAX_DEGREE"); env && *env) {
                char* end = nullptr;
                const long v = std::strtol(env, &end, 10);
                if (*end != '\0' || v < 0 || v > 64) throw UsageError(std::string("bad COCYCLE_FORGE_MAX_DEGREE '") + env + "'");
                return static_cast<int>(v);
            }
            return fallback;
        }

        int basis_index(const LieAlgebra& L, const std::string& name) {
            auto i = L.index_of(name);
            if (!i) throw UsageError("unknown basis name '" + name + "' for " + L.name());
            return *i;
        }

        int cmd_validate(const Options& o, std::ostream& out) {
            const AlgebraSpec spec = load_spec(o);
            const auto violations = validate_jacobi(spec.table);
            json rows = json::array();
            for (const auto& v : violations) {
                std::string residual;
                for (const auto& [k, c] : v.residual) {
                    residual += (residual.empty() ? "" : " + ") + c.str() + "*" + spec.basis[static_cast<std::size_t>(k)];
                }
                rows.push_back({{"i", v.i}, {"j", v.j}, {"k", v.k}, {"residual", residual}});
            }
            json doc{{"name", spec.name}, {"dim", spec.basis.size()}, {"jacobi_violations", rows},
                     {"valid", violations.empty()}};
            out << doc.dump(2) << "\n";
            return violations.empty() ? kPass : kFail;
        }

        int cmd_killing(const Options& o, std::ostream& out) {
            const LieAlgebra L = load_algebra(o);
            const BilinearForm k = killing_form(L);
            json matrix = json::array();
            for (const auto& row : k.matrix) {
                json r = json::array();
                for (const auto& v : row) r.push_back(v.str());
                matrix.push_back(r);
            }
            json doc{{"basis", L.basis_names()}, {"matrix", matrix}, {"nondegenerate", k.is_nondegenerate()},
                     {"invariant", check_invariant_form(L, k).empty()}};
            out << doc.dump(2) << "\n";
            return kPass;
        }

        int cmd_cartan(const Options& o, std::ostream& out) {
            const LieAlgebra L = load_algebra(o);
            out << cocycle_to_json(cartan_cocycle(L, load_form(o, L))) << "\n";
            return kPass;
        }

        int cmd_rmatrix(const Options& o, std::ostream& out, std::ostream& err) {
            const LieAlgebra L = load_algebra(o);
            const Tensor2 r = load_rmatrix(o, L);
            out << rmatrix_to_json(r) << "\n";
            int status = kPass;
            if (!is_symmetric(r)) {
                err << "r-matrix is not symmetric\n";
                status = kFail;
            }
            for (int k = 0; k < L.dim(); ++k) {
                if (!tensor_action(L, L.generator(k), r).is_zero()) {
                    err << "r-matrix is not invariant under " << L.basis_name(k) << "\n";
                    status = kFail;
                }
            }
            return status;
        }

        int cmd_lift(const Options& o, std::ostream& out) {
            const LieAlgebra L = load_algebra(o);
            if (o.x.empty() || o.g1.empty() || o.g2.empty()) throw UsageError("lift needs --x, --g1 and --g2");
            const int i = basis_index(L, o.g1), j = basis_index(L, o.g2);
            const LiftedCochain lc(L, load_cocycle(o, L));
            const UEAElement x = lc.enveloping().parse(o.x);
            out << alpha_tilde(lc, x, L.generator(i), L.generator(j)).str() << "\n";
            return kPass;
        }

        std::vector<std::string> split(const std::string& text, char sep) {
            std::vector<std::string> out;
            std::stringstream ss(text);
            for (std::string item; std::getline(ss, item, sep);) {
                if (!item.empty()) out.push_back(item);
            }
            return out;
        }

        int cmd_table(const Options& o, std::ostream& out) {
            const LieAlgebra L = load_algebra(o);
            const int D = resolve_degree(o, 4);
            const LiftedCochain lc(L, load_cocycle(o, L));

            if (!o.g1.empty() || !o.g2.empty()) {
                if (o.g1.empty() || o.g2.empty()) throw UsageError("table needs both --g1 and --g2");
                const int i = basis_index(L, o.g1), j = basis_index(L, o.g2);
                const auto monos = monomials_up_to(L.dim(), D, 1);
                if (o.format == "json") {
                    json rows = json::array();
                    for (const auto& m : monos) {
                        rows.push_back({{"monomial", lc.enveloping().format(m)}, {"value", lc.value(m, i, j).str()}});
                    }
                    out << json{{"g1", o.g1}, {"g2", o.g2}, {"max_degree", D}, {"entries", rows}}.dump(2) << "\n";
                } else {
                    out << "monomial\tvalue\n";
                    for (const auto& m : monos) out << lc.enveloping().format(m) << "\t" << lc.value(m, i, j).str() << "\n";
                }
                return kPass;
            }

            std::vector<BPair> pairs;
            for (const auto& p : split(o.pairs, ',')) {
                try {
                    pairs.push_back(parse_bpair(p));
                } catch (const std::invalid_argument& e) {
                    throw UsageError(e.what());
                }
            }
            int status = kPass;
            json tables = json::array();
            for (BPair p : pairs) {
                const BTable t = b_table(lc, p, D);
                const Report vanishing = check_vanishing(t);
                if (!vanishing.empty()) status = kFail;
                if (o.format == "json") {
                    json rows = json::array();
                    for (const auto& e : t.entries) {
                        rows.push_back({{"a", e.abc[0]}, {"b", e.abc[1]}, {"c", e.abc[2]}, {"value", e.value.str()}});
                    }
                    tables.push_back({{"pair", to_string(p)}, {"max_degree", t.max_degree}, {"entries", rows},
                                      {"vanishing_failures", vanishing.size()}});
                    continue;
                }
                if (pairs.size() > 1) out << "# B_" << to_string(p) << "\n";
                out << "a\tb\tc\tvalue\n";
                for (const auto& e : t.entries) {
                    out << e.abc[0] << "\t" << e.abc[1] << "\t" << e.abc[2] << "\t" << e.value.str() << "\n";
                }
                out << "# vanishing " << to_string(p) << ": "
                    << (vanishing.empty() ? "ok" : std::to_string(vanishing.size()) + " violations") << " ("
                    << t.entries.size() << " rows)\n";
            }
            if (o.format == "json") out << json{{"tables", tables}}.dump(2) << "\n";
            return status;
        }

        int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
            static const std::vector<std::string> suites{"hopf", "homotopy", "lift", "compat", "quasi"};
            const bool all = o.suite == "all";
            if (!all && std::find(suites.begin(), suites.end(), o.suite) == suites.end()) {
                throw UsageError("unknown suite '" + o.suite + "'");
            }
            const LieAlgebra L = load_algebra(o);
            const auto wants = [&](const char* s) { return all || o.suite == s; };
            const bool needs_r = wants("compat") || wants("quasi");
            std::optional<Tensor2> r;
            if (needs_r) r = load_rmatrix(o, L);
            const LiftedCochain lc(L, load_cocycle(o, L));

            const Progress progress = [&err](const std::string& what, int degree, std::size_t count) {
                err << "[" << what << "] degree " << degree << ": " << count << " monomials\n";
            };
            Report report;
            if (wants("hopf")) append(report, hopf_suite(lc.enveloping(), resolve_degree(o, 4), progress));
            if (wants("homotopy")) append(report, homotopy_suite(lc.homotopy(), resolve_degree(o, 4), progress));
            if (wants("lift")) append(report, lift_suite(lc, resolve_degree(o, 4), progress));
            if (needs_r) {
                const Representative rep(lc);
                const int D = resolve_degree(o, 3);
                if (wants("compat") && !wants("quasi")) append(report, compat_check(rep, *r, D));
                if (wants("quasi")) {
                    append(report, verify_quasi_invariance(rep, *r, D, [&err](const std::string& c, std::size_t n) {
                               err << "[quasi] condition " << c << ": " << n << " cases\n";
                           }));
                }
            }
            out << report_to_json(report) << "\n";
            return report.empty() ? kPass : kFail;
        }

        void add_algebra_options(CLI::App* cmd, Options& o) {
            cmd->add_option("--builtin", o.builtin, "built-in algebra: sl2, heisenberg3, abelian1..3, sl2xsl2");
            cmd->add_option("--algebra", o.algebra_file, "algebra definition file (JSON)");
        }

        void add_form_option(CLI::App* cmd, Options& o) {
            cmd->add_option("--form", o.form, "invariant form: killing or identity")->capture_default_str();
        }

        void add_cocycle_option(CLI::App* cmd, Options& o) {
            cmd->add_option("--cocycle", o.cocycle, "'cartan' or a cocycle file (JSON)")->capture_default_str();
        }

        void add_degree_option(CLI::App* cmd, Options& o) {
            cmd->add_option("--max-degree", o.max_degree, "degree bound (default from COCYCLE_FORGE_MAX_DEGREE)")
                ->check(CLI::Range(0, 64));
        }

    }  // namespace

    int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
        Options o;
        CLI::App app{"cforge: lifted cocycles and quasi-invariant tensors over Q", "cforge"};
        app.require_subcommand(1);

        auto* validate = app.add_subcommand("validate", "check the Jacobi identity of an algebra");
        add_algebra_options(validate, o);

        auto* killing = app.add_subcommand("killing", "print the Killing form");
        add_algebra_options(killing, o);

        auto* cartan = app.add_subcommand("cartan", "print the Cartan 3-cocycle of an invariant form");
        add_algebra_options(cartan, o);
        add_form_option(cartan, o);

        auto* rmatrix = app.add_subcommand("rmatrix", "print the standard r-matrix and check symmetry and invariance");
        add_algebra_options(rmatrix, o);
        add_form_option(rmatrix, o);
        rmatrix->add_option("--rmatrix-file", o.rmatrix_file, "check this r-matrix instead (JSON)");

        auto* lift = app.add_subcommand("lift", "evaluate the lifted 2-cochain at a monomial");
        add_algebra_options(lift, o);
        add_form_option(lift, o);
        add_cocycle_option(lift, o);
        lift->add_option("--x", o.x, "monomial, e.g. \"X Y^2 H\"")->required();
        lift->add_option("--g1", o.g1, "first basis name")->required();
        lift->add_option("--g2", o.g2, "second basis name")->required();

        auto* table = app.add_subcommand("table", "tabulate the lifted cochain");
        add_algebra_options(table, o);
        add_form_option(table, o);
        add_cocycle_option(table, o);
        add_degree_option(table, o);
        table->add_option("--pairs", o.pairs, "sl2 pairs, comma separated: XY, XH, YH")->capture_default_str();
        table->add_option("--g1", o.g1, "first basis name (any algebra)");
        table->add_option("--g2", o.g2, "second basis name (any algebra)");
        table->add_option("--format", o.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}))->capture_default_str();

        auto* verify = app.add_subcommand("verify", "run verification suites and print the failure report");
        add_algebra_options(verify, o);
        add_form_option(verify, o);
        add_cocycle_option(verify, o);
        add_degree_option(verify, o);
        verify->add_option("--suite", o.suite, "hopf, homotopy, lift, compat, quasi or all")->capture_default_str();
        verify->add_option("--rmatrix-file", o.rmatrix_file, "r-matrix file (JSON); default is the standard one");

        std::vector<std::string> argv_storage{"cforge"};
        argv_storage.insert(argv_storage.end(), args.begin(), args.end());
        std::vector<const char*> argv;
        for (const auto& a : argv_storage) argv.push_back(a.c_str());

        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::ParseError& e) {
            const int code = app.exit(e, out, err);
            return code == 0 ? kPass : kUsage;
        }

        try {
            if (*validate) return cmd_validate(o, out);
            if (*killing) return cmd_killing(o, out);
            if (*cartan) return cmd_cartan(o, out);
            if (*rmatrix) return cmd_rmatrix(o, out, err);
            if (*lift) return cmd_lift(o, out);
            if (*table) return cmd_table(o, out);
            if (*verify) return cmd_verify(o, out, err);
        } catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
            return kUsage;
        }
        return kUsage;
    }

}  // namespace cforge
