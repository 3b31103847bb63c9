#ifndef TAUCAT_IO_HPP
#define TAUCAT_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "taucat/tcmc.hpp"

namespace taucat {

using nlohmann::json;

// --- algebra definition files -------------------------------------------------

// { "name": "A2", "vertices": ["1","2"],
//   "arrows": [{"name":"a","from":"1","to":"2"}],
//   "relations": [["a","b"]] }
inline AlgebraPtr algebra_from_json(const json& j) {
    if (!j.is_object()) throw input_error("algebra file: top level must be an object");
    MonomialPresentation pres;
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw input_error("algebra file: missing vertex list");
    for (const auto& v : j["vertices"]) pres.quiver.vertices.push_back(v.get<std::string>());
    if (j.contains("arrows"))
        for (const auto& a : j["arrows"]) {
            Arrow arrow;
            arrow.name = a.at("name").get<std::string>();
            arrow.src = pres.quiver.vertex_index(a.at("from").get<std::string>());
            arrow.tgt = pres.quiver.vertex_index(a.at("to").get<std::string>());
            pres.quiver.arrows.push_back(arrow);
        }
    if (j.contains("relations"))
        for (const auto& rel : j["relations"]) {
            std::vector<std::size_t> word;
            for (const auto& name : rel) word.push_back(pres.quiver.arrow_index(name.get<std::string>()));
            pres.relations.push_back(word);
        }
    std::string name = j.value("name", "");
    try {
        return BasedAlgebra::path_algebra(pres, name);
    } catch (const input_error&) {
        throw;
    } catch (const error& e) {
        throw input_error(std::string("invalid algebra definition: ") + e.what());
    }
}

inline AlgebraPtr load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open algebra file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw input_error(std::string("algebra file is not valid JSON: ") + e.what());
    }
    return algebra_from_json(j);
}

// Module literal: { "dims": [1,1], "matrices": { "a": [["1"]] } },
// rationals as "p/q" strings, one matrix per arrow.
inline ModPtr module_from_json(const AlgebraPtr& alg, const json& j) try {
    if (!alg->is_path_algebra()) throw input_error("module literals require a path algebra");
    std::vector<std::size_t> dims;
    for (const auto& d : j.at("dims")) dims.push_back(d.get<std::size_t>());
    if (dims.size() != alg->n_vertices()) throw input_error("module literal: wrong dims length");
    std::vector<QMat> arrow_mats;
    for (const auto& arrow : alg->quiver().arrows) {
        QMat m(dims[arrow.src], dims[arrow.tgt]);
        if (j.contains("matrices") && j["matrices"].contains(arrow.name)) {
            const auto& rows = j["matrices"][arrow.name];
            if (rows.size() != m.rows()) throw input_error("module literal: bad matrix shape");
            for (std::size_t r = 0; r < m.rows(); ++r) {
                if (rows[r].size() != m.cols()) throw input_error("module literal: bad matrix shape");
                for (std::size_t c = 0; c < m.cols(); ++c)
                    m.at(r, c) = parse_rat(rows[r][c].get<std::string>());
            }
        }
        arrow_mats.push_back(std::move(m));
    }
    try {
        return FdModule::from_arrow_matrices(alg, dims, arrow_mats);
    } catch (const input_error&) {
        throw;
    } catch (const error& e) {
        throw input_error(std::string("invalid module literal: ") + e.what());
    }
} catch (const json::exception& e) {
    throw input_error(std::string("malformed module literal: ") + e.what());
}

// --- fingerprints ----------------------------------------------------------------

inline std::string fnv1a64(const std::string& data) {
    unsigned long long h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return std::string(buf);
}

inline std::string pair_fingerprint(const CtxPtr& ctx, const SuppTauRigidPair& p) {
    return fnv1a64(pair_str(ctx, p));
}

// --- exports ----------------------------------------------------------------------

// Complex export: summand multiset per degree plus the realized
// differential blocks, rationals as strings.
inline json complex_json(const CtxPtr& ctx, const ProjComplex& x) {
    const auto& alg = ctx->algebra();
    json comps = json::object();
    for (const auto& [n, vs] : x.comps) {
        json verts = json::array();
        for (auto v : vs) verts.push_back(alg->quiver().vertices.empty()
                                              ? std::to_string(v + 1)
                                              : alg->quiver().vertices[v]);
        comps[std::to_string(n)] = verts;
    }
    json diffs = json::object();
    for (const auto& [n, d] : x.diffs) {
        ModuleMap dm = realize(d);
        json blocks = json::object();
        for (std::size_t v = 0; v < alg->n_vertices(); ++v) {
            json rows = json::array();
            for (std::size_t r = 0; r < dm.blocks[v].rows(); ++r) {
                json row = json::array();
                for (std::size_t c = 0; c < dm.blocks[v].cols(); ++c)
                    row.push_back(rat_str(dm.blocks[v].at(r, c)));
                rows.push_back(row);
            }
            blocks[alg->quiver().vertices.empty() ? std::to_string(v + 1)
                                                  : alg->quiver().vertices[v]] = rows;
        }
        diffs[std::to_string(n)] = blocks;
    }
    return {{"components", comps}, {"differentials", diffs}};
}

inline json exchange_graph_json(const CtxPtr& ctx, const ExchangeGraph& g) {
    json nodes = json::array();
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        json gvs = json::array();
        for (const auto& s : presilting_summands(ctx, g.nodes[i])) {
            json gv = json::array();
            for (auto c : g_vector(s)) gv.push_back(c);
            gvs.push_back(gv);
        }
        nodes.push_back({{"id", i},
                         {"pair", pair_str(ctx, g.nodes[i])},
                         {"fingerprint", pair_fingerprint(ctx, g.nodes[i])},
                         {"g_vectors", gvs},
                         {"complex", complex_json(ctx, g.complexes[i])}});
    }
    json edges = json::array();
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        for (std::size_t k = 0; k < g.edges[i].size(); ++k)
            if (g.edges[i][k] >= 0)
                edges.push_back({{"src", i}, {"tgt", g.edges[i][k]}, {"summand", k}});
    return {{"algebra", ctx->algebra()->name()},
            {"silting_count", g.nodes.size()},
            {"nodes", nodes},
            {"edges", edges}};
}

inline std::string gvec_label(const CtxPtr& ctx, const SuppTauRigidPair& p) {
    std::string s;
    for (const auto& summand : presilting_summands(ctx, p)) {
        auto gv = g_vector(summand);
        s += "(";
        for (std::size_t i = 0; i < gv.size(); ++i) s += (i ? "," : "") + std::to_string(gv[i]);
        s += ")";
    }
    return s.empty() ? "0" : s;
}

inline std::string exchange_graph_dot(const CtxPtr& ctx, const ExchangeGraph& g) {
    std::ostringstream out;
    out << "digraph exchange {\n  rankdir=TB;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        out << "  n" << i << " [label=\"" << gvec_label(ctx, g.nodes[i]) << "\"];\n";
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        for (std::size_t k = 0; k < g.edges[i].size(); ++k)
            if (g.edges[i][k] >= 0) out << "  n" << i << " -> n" << g.edges[i][k] << ";\n";
    out << "}\n";
    return out.str();
}

inline json category_json(const CtxPtr& ctx, const CategoryGraph& g) {
    json objects = json::array();
    for (std::size_t i = 0; i < g.objects.size(); ++i)
        objects.push_back({{"id", i},
                           {"key", g.objects[i].key},
                           {"rank", g.objects[i].rank},
                           {"fingerprint", fnv1a64(g.objects[i].key)}});
    json morphisms = json::array();
    for (std::size_t i = 0; i < g.morphisms.size(); ++i) {
        const auto& m = g.morphisms[i];
        morphisms.push_back({{"id", i},
                             {"src", m.src},
                             {"tgt", m.tgt},
                             {"label", wide_pair_str(ctx, m.label)},
                             {"fingerprint", fnv1a64(wide_pair_str(ctx, m.label) + "@" +
                                                     std::to_string(m.src))},
                             {"identity", m.identity}});
    }
    json comp = json::array();
    for (const auto& [key, value] : g.composition)
        comp.push_back({key.first, key.second, value});
    return {{"objects", objects}, {"morphisms", morphisms}, {"composition", comp}};
}

inline std::string category_dot(const CtxPtr& ctx, const CategoryGraph& g) {
    std::ostringstream out;
    out << "digraph tcmc {\n  node [shape=ellipse];\n";
    for (std::size_t i = 0; i < g.objects.size(); ++i)
        out << "  o" << i << " [label=\"" << g.objects[i].key << "\"];\n";
    for (const auto& m : g.morphisms) {
        if (m.identity || m.label.rank() != 1) continue;  // irreducible arrows only
        out << "  o" << m.src << " -> o" << m.tgt << " [label=\""
            << wide_pair_str(ctx, m.label) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

inline json sequences_json(const CtxPtr& ctx, std::size_t t) {
    auto complex_side = enumerate_presilting_sequences(ctx, t);
    auto module_side = enumerate_signed_tau_exceptional(ctx, t);
    auto rep = check_sequence_bijection(ctx, t);
    json cs = json::array();
    bool all_k0 = true, all_euler = true;
    for (const auto& seq : complex_side) {
        json entries = json::array();
        for (const auto& e : seq.entries) entries.push_back(pair_str(ctx, e));
        bool k0 = check_k0_independence(ctx, seq);
        bool euler = check_euler_triangularity(ctx, seq);
        all_k0 = all_k0 && k0;
        all_euler = all_euler && euler;
        cs.push_back({{"entries", entries}, {"k0_independent", k0}, {"euler_triangular", euler}});
    }
    json ms = json::array();
    for (const auto& seq : module_side) {
        json entries = json::array();
        for (const auto& e : seq)
            entries.push_back((e.shifted ? std::string("shift ") : std::string()) +
                              ctx->name(e.ambient_id));
        ms.push_back(entries);
    }
    return {{"length", t},
            {"complex_side", cs},
            {"module_side", ms},
            {"complex_count", rep.complex_count},
            {"module_count", rep.module_count},
            {"bijective", rep.bijective},
            {"k0_all_pass", all_k0},
            {"euler_all_pass", all_euler}};
}

}  // namespace taucat

#endif
