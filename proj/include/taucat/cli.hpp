#ifndef TAUCAT_CLI_HPP
#define TAUCAT_CLI_HPP

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include "taucat/io.hpp"

namespace taucat {

struct RunConfig {
    std::string algebra_path;
    std::string command;       // tautilt | tcmc | sequences | verify
    std::string out_path;      // empty = stdout
    std::string format = "json";  // json | dot | table
    std::string cache_dir;
    std::size_t max_indecomposables = 512;
    std::size_t max_mutations = 512;
    std::size_t jobs = 1;
    std::size_t sequence_length = 0;
    bool sequence_length_set = false;
};

enum ExitCode : int {
    exit_ok = 0,
    exit_verification_failure = 1,
    exit_input_error = 2,
    exit_cap_overflow = 3,
};

struct RunResult {
    int code = exit_ok;
    std::string output;
    std::string diagnostics;
};

namespace detail_cli {

inline std::string table_of(const json& j, const std::string& command) {
    std::ostringstream out;
    if (command == "tautilt") {
        out << "silting objects: " << j["silting_count"].get<std::size_t>() << "\n";
        for (const auto& n : j["nodes"])
            out << "  [" << n["id"].get<std::size_t>() << "] " << n["pair"].get<std::string>()
                << "\n";
        out << "edges (left mutation):\n";
        for (const auto& e : j["edges"])
            out << "  " << e["src"].get<std::size_t>() << " -> " << e["tgt"].get<std::size_t>()
                << " at summand " << e["summand"].get<std::size_t>() << "\n";
    } else if (command == "tcmc") {
        out << "objects: " << j["category"]["objects"].size() << "\n";
        for (const auto& o : j["category"]["objects"])
            out << "  [" << o["id"].get<std::size_t>() << "] " << o["key"].get<std::string>()
                << " (rank " << o["rank"].get<std::size_t>() << ")\n";
        out << "morphisms: " << j["category"]["morphisms"].size() << "\n";
        out << "equivalence: " << (j["equivalence_pass"].get<bool>() ? "pass" : "FAIL") << "\n";
        out << "associativity: " << (j["associativity_pass"].get<bool>() ? "pass" : "FAIL")
            << "\n";
    } else if (command == "sequences") {
        out << "length " << j["length"].get<std::size_t>() << ": "
            << j["complex_count"].get<std::size_t>() << " complex-side, "
            << j["module_count"].get<std::size_t>() << " module-side, bijective: "
            << (j["bijective"].get<bool>() ? "yes" : "NO") << "\n";
        for (const auto& row : j["complex_side"]) {
            out << "  (";
            bool first = true;
            for (const auto& e : row["entries"]) {
                out << (first ? "" : ", ") << e.get<std::string>();
                first = false;
            }
            out << ")\n";
        }
    } else if (command == "verify") {
        for (const auto& check : j["checks"])
            out << (check["pass"].get<bool>() ? "[pass] " : "[FAIL] ")
                << check["name"].get<std::string>() << " - " << check["detail"].get<std::string>()
                << "\n";
        out << (j["all_pass"].get<bool>() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    }
    return out.str();
}

inline json verify_report(const CtxPtr& ctx, const RunConfig& cfg) {
    json checks = json::array();
    bool all = true;
    auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        checks.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
        all = all && pass;
    };

    auto pairs = enumerate_pairs(ctx, cfg.max_indecomposables);

    // H-bijection between presilting complexes and the pair oracle.
    {
        std::set<SuppTauRigidPair> images;
        bool ok = true;
        for (const auto& p : pairs) {
            auto x = h_inverse(ctx, p);
            ok = ok && is_presilting(x) && images.insert(h_map(ctx, x)).second;
        }
        ok = ok && images.size() == pairs.size();
        add("h_bijection", ok,
            std::to_string(pairs.size()) + " support tau-rigid pairs matched");
    }

    // Exchange graph vs exhaustive silting count, and the order isomorphism.
    {
        auto g = exchange_graph(ctx, cfg.max_mutations);
        std::size_t tilting = 0;
        for (const auto& p : pairs)
            if (p.rank() == ctx->algebra()->n_vertices()) ++tilting;
        bool ok = g.nodes.size() == tilting;
        for (std::size_t i = 0; i < g.nodes.size() && ok; ++i)
            for (std::size_t j = 0; j < g.nodes.size() && ok; ++j) {
                bool hom_order = silting_geq(g.complexes[i], g.complexes[j]);
                ModPtr mi = pair_module(ctx, g.nodes[i]);
                bool gen_order = true;
                for (auto id : g.nodes[j].module_ids)
                    if (!gen_membership(mi, ctx->indec(id))) gen_order = false;
                ok = hom_order == gen_order;
            }
        add("exchange_graph", ok, std::to_string(g.nodes.size()) + " silting objects, order checked");
    }

    // Reduction squares for every presilting reducer, rows in parallel when
    // jobs > 1 (results are joined in input order, so output is stable).
    json squares = json::array();
    {
        std::size_t rows = 0, failed = 0;
        std::vector<std::future<ReductionSquareReport>> futs;
        auto run_one = [&](SuppTauRigidPair p) {
            return verify_reduction_square(ctx, h_inverse(ctx, p));
        };
        auto record = [&](const ReductionSquareReport& rep) {
            rows += rep.rows.size();
            json rws = json::array();
            for (const auto& row : rep.rows) {
                if (!row.pass) ++failed;
                rws.push_back({{"ambient", pair_fingerprint(ctx, row.ambient)},
                               {"pass", row.pass}});
            }
            squares.push_back({{"reducer", pair_fingerprint(ctx, rep.reducer)},
                               {"all_pass", rep.all_pass},
                               {"rows", rws}});
        };
        if (cfg.jobs > 1) {
            for (const auto& p : pairs)
                futs.push_back(std::async(std::launch::async, run_one, p));
            for (auto& f : futs) record(f.get());
        } else {
            for (const auto& p : pairs) record(run_one(p));
        }
        add("reduction_square", failed == 0,
            std::to_string(rows) + " rows over " + std::to_string(pairs.size()) + " reducers");
    }

    // E-bijectivity for every reducer.
    {
        bool ok = true;
        std::size_t total = 0;
        for (const auto& reducer : pairs) {
            auto w = j_perp(ctx, reducer);
            std::set<WidePair> valid;
            for (const auto& cp : enumerate_pairs(w->c_context())) valid.insert(w->wide_pair_of(cp));
            std::set<WidePair> images;
            for (const auto& t : pairs) {
                if (!t.contains(reducer)) continue;
                ++total;
                if (!images.insert(e_reduce(ctx, reducer, t)).second) ok = false;
            }
            if (images.size() != valid.size()) ok = false;
        }
        add("e_bijectivity", ok, std::to_string(total) + " reductions checked");
    }

    // Category axioms and the equivalence of the two constructions.
    {
        auto mod_side = build_module_side(ctx, cfg.max_indecomposables);
        auto silt_side = build_silting_side(ctx, cfg.max_indecomposables);
        auto assoc_m = check_associativity(mod_side);
        auto assoc_s = check_associativity(silt_side);
        auto eq = check_equivalence(mod_side, silt_side);
        add("associativity", assoc_m.pass() && assoc_s.pass(),
            std::to_string(assoc_m.triples + assoc_s.triples) + " composable triples");
        add("equivalence", eq.pass(),
            std::to_string(mod_side.objects.size()) + " objects, " +
                std::to_string(mod_side.morphisms.size()) + " morphisms matched");
    }

    // Sequence bijection, K0 independence and Euler triangularity.
    {
        bool bij = true, k0 = true, euler = true;
        std::size_t count = 0;
        for (std::size_t t = 0; t <= ctx->algebra()->n_vertices(); ++t) {
            auto rep = check_sequence_bijection(ctx, t, cfg.max_indecomposables);
            bij = bij && rep.bijective;
            for (const auto& seq : enumerate_presilting_sequences(ctx, t, cfg.max_indecomposables)) {
                ++count;
                k0 = k0 && check_k0_independence(ctx, seq);
                euler = euler && check_euler_triangularity(ctx, seq);
            }
        }
        add("sequence_bijection", bij, "lengths 0.." + std::to_string(ctx->algebra()->n_vertices()));
        add("k0_independence", k0, std::to_string(count) + " sequences");
        add("euler_triangularity", euler, std::to_string(count) + " sequences");
    }

    return {{"algebra", ctx->algebra()->name()},
            {"checks", checks},
            {"reduction_squares", squares},
            {"all_pass", all}};
}

}  // namespace detail_cli

inline RunResult run_command(const RunConfig& cfg) {
    RunResult result;
    try {
        AlgebraPtr alg = load_algebra(cfg.algebra_path);
        auto ctx = ModuleContext::make(alg);

        // Cache lookup: outputs are pure functions of input and config.
        std::string cache_file;
        if (!cfg.cache_dir.empty()) {
            std::ifstream in(cfg.algebra_path);
            std::stringstream raw;
            raw << in.rdbuf();
            std::string key = fnv1a64(raw.str() + "|" + cfg.command + "|" + cfg.format + "|" +
                                      std::to_string(cfg.sequence_length));
            cache_file = cfg.cache_dir + "/" + key + ".out";
            std::ifstream hit(cache_file);
            if (hit) {
                std::stringstream buf;
                buf << hit.rdbuf();
                result.output = buf.str();
                // Verification verdicts ride along in a side file.
                std::ifstream code(cache_file + ".code");
                if (code) code >> result.code;
                return result;
            }
        }

        json payload;
        if (cfg.command == "tautilt") {
            auto g = exchange_graph(ctx, cfg.max_mutations);
            payload = exchange_graph_json(ctx, g);
            if (cfg.format == "dot") result.output = exchange_graph_dot(ctx, g);
        } else if (cfg.command == "tcmc") {
            auto mod_side = build_module_side(ctx, cfg.max_indecomposables);
            auto silt_side = build_silting_side(ctx, cfg.max_indecomposables);
            auto eq = check_equivalence(mod_side, silt_side);
            auto assoc = check_associativity(mod_side);
            payload = {{"algebra", alg->name()},
                       {"category", category_json(ctx, mod_side)},
                       {"silting_category", category_json(ctx, silt_side)},
                       {"equivalence_pass", eq.pass()},
                       {"associativity_pass", assoc.pass() && check_associativity(silt_side).pass()}};
            if (cfg.format == "dot") result.output = category_dot(ctx, mod_side);
            if (!eq.pass() || !assoc.pass()) result.code = exit_verification_failure;
        } else if (cfg.command == "sequences") {
            if (!cfg.sequence_length_set) throw input_error("sequences: --length is required");
            payload = sequences_json(ctx, cfg.sequence_length);
            payload["algebra"] = alg->name();
            if (!payload["bijective"].get<bool>() || !payload["k0_all_pass"].get<bool>() ||
                !payload["euler_all_pass"].get<bool>())
                result.code = exit_verification_failure;
        } else if (cfg.command == "verify") {
            payload = detail_cli::verify_report(ctx, cfg);
            if (!payload["all_pass"].get<bool>()) result.code = exit_verification_failure;
        } else {
            throw input_error("unknown command: " + cfg.command);
        }

        if (result.output.empty()) {
            if (cfg.format == "table")
                result.output = detail_cli::table_of(payload, cfg.command);
            else
                result.output = payload.dump(2) + "\n";
        }

        if (!cache_file.empty()) {
            std::filesystem::create_directories(cfg.cache_dir);
            std::ofstream out(cache_file);
            out << result.output;
            std::ofstream code(cache_file + ".code");
            code << result.code;
        }
    } catch (const cap_error& e) {
        result.code = exit_cap_overflow;
        result.diagnostics = e.what();
    } catch (const input_error& e) {
        result.code = exit_input_error;
        result.diagnostics = e.what();
    } catch (const split_basic_error& e) {
        result.code = exit_input_error;
        result.diagnostics = std::string("ground-field obstruction: ") + e.what();
    } catch (const error& e) {
        result.code = exit_verification_failure;
        result.diagnostics = e.what();
    }
    return result;
}

}  // namespace taucat

#endif
