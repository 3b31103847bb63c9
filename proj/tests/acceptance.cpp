// Acceptance suite: every criterion prints one pass/fail line with its
// measured values and wall time, and fails the build when violated.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>

#include "fixtures.hpp"
#include "hom_fixtures.hpp"
#include "taucat/tcmc.hpp"

using namespace taucat;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

struct Algebras {
    CtxPtr a2 = ModuleContext::make(fixtures::a2());
    CtxPtr a3 = ModuleContext::make(fixtures::a3());
    CtxPtr n3 = ModuleContext::make(fixtures::n3());
    std::vector<std::pair<std::string, CtxPtr>> all() {
        return {{"A2", a2}, {"A3", a3}, {"N3", n3}};
    }
};

Algebras& algebras() {
    static Algebras a;
    return a;
}

void report(int criterion, bool pass, double secs, const std::string& detail) {
    std::printf("[criterion %d] %s (%.2fs) %s\n", criterion, pass ? "PASS" : "FAIL", secs,
                detail.c_str());
    std::fflush(stdout);
}

ModPtr named(const CtxPtr& ctx, const std::string& name) {
    const auto& alg = ctx->algebra();
    for (std::size_t v = 0; v < alg->n_vertices(); ++v) {
        std::string lbl = alg->quiver().vertices[v];
        if (name == "P" + lbl) return ctx->projective(v);
        if (name == "S" + lbl) return ctx->simple(v);
    }
    throw std::runtime_error("unknown fixture module " + name);
}

}  // namespace

TEST_CASE("criterion 1: H-bijection between presilting complexes and the pair oracle") {
    Timer timer;
    bool pass = true;
    std::string detail;
    for (auto& [name, ctx] : algebras().all()) {
        Timer per;
        auto pairs = enumerate_pairs(ctx);
        std::set<SuppTauRigidPair> images;
        for (const auto& p : pairs) {
            auto x = h_inverse(ctx, p);
            bool ok = is_presilting(x) && images.insert(h_map(ctx, x)).second;
            pass = pass && ok;
            CHECK(ok);
        }
        pass = pass && images.size() == pairs.size() && per.seconds() < 10.0;
        CHECK(images.size() == pairs.size());
        CHECK(per.seconds() < 10.0);
        detail += name + ":" + std::to_string(pairs.size()) + " ";
    }
    report(1, pass, timer.seconds(), "pairs matched exactly: " + detail);
    CHECK(pass);
}

TEST_CASE("criterion 2: exchange graphs with counts 5 and 14, connected, order-isomorphic") {
    Timer timer;
    bool pass = true;
    auto g2 = exchange_graph(algebras().a2);
    auto g3 = exchange_graph(algebras().a3);
    pass = pass && g2.nodes.size() == 5 && g3.nodes.size() == 14;
    CHECK(g2.nodes.size() == 5);
    CHECK(g3.nodes.size() == 14);
    for (auto& [name, ctx] : algebras().all()) {
        auto g = exchange_graph(ctx);
        // Oracle: exhaustive enumeration bounded through the indecomposable
        // g-vector fan = maximal support tau-tilting pairs.
        std::size_t tilting = 0;
        for (const auto& p : enumerate_pairs(ctx))
            if (p.rank() == ctx->algebra()->n_vertices()) ++tilting;
        pass = pass && g.nodes.size() == tilting;
        CHECK(g.nodes.size() == tilting);
        // Connectivity: the BFS reached every node by construction; confirm
        // the undirected mutation graph is connected.
        std::vector<bool> seen(g.nodes.size(), false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t k = 0; k < g.edges[v].size(); ++k) {
                long w = g.edges[v][k];
                if (w >= 0 && !seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
            for (std::size_t u = 0; u < g.edges.size(); ++u)
                for (auto w : g.edges[u])
                    if (w == static_cast<long>(v) && !seen[u]) {
                        seen[u] = true;
                        stack.push_back(u);
                    }
        }
        for (bool s : seen) {
            pass = pass && s;
            CHECK(s);
        }
        // Order isomorphism with Gen-inclusion on all pairs of nodes.
        for (std::size_t i = 0; i < g.nodes.size(); ++i)
            for (std::size_t j = 0; j < g.nodes.size(); ++j) {
                bool hom_order = silting_geq(g.complexes[i], g.complexes[j]);
                ModPtr mi = pair_module(ctx, g.nodes[i]);
                bool gen_order = true;
                for (auto id : g.nodes[j].module_ids)
                    if (!gen_membership(mi, ctx->indec(id))) gen_order = false;
                pass = pass && hom_order == gen_order;
                CHECK(hom_order == gen_order);
            }
    }
    pass = pass && timer.seconds() < 30.0;
    CHECK(timer.seconds() < 30.0);
    report(2, pass, timer.seconds(), "A2=5, A3=14, connected, order checked");
    CHECK(pass);
}

TEST_CASE("criterion 3: compatibility square for every reducer and every extension") {
    Timer timer;
    bool pass = true;
    std::size_t rows = 0;
    for (auto& [name, ctx] : algebras().all()) {
        for (const auto& p : enumerate_pairs(ctx)) {
            auto rep = verify_reduction_square(ctx, h_inverse(ctx, p));
            rows += rep.rows.size();
            pass = pass && rep.all_pass;
            CHECK(rep.all_pass);
        }
    }
    pass = pass && timer.seconds() < 120.0;
    CHECK(timer.seconds() < 120.0);
    report(3, pass, timer.seconds(), std::to_string(rows) + " rows, 100% agreement");
    CHECK(pass);
}

TEST_CASE("criterion 4: E-bijectivity for every reducer pair") {
    Timer timer;
    bool pass = true;
    std::size_t reductions = 0;
    for (auto& [name, ctx] : algebras().all()) {
        auto pairs = enumerate_pairs(ctx);
        for (const auto& reducer : pairs) {
            auto w = j_perp(ctx, reducer);
            std::set<WidePair> valid;
            for (const auto& cp : enumerate_pairs(w->c_context()))
                valid.insert(w->wide_pair_of(cp));
            std::set<WidePair> images;
            for (const auto& t : pairs) {
                if (!t.contains(reducer)) continue;
                ++reductions;
                auto img = e_reduce(ctx, reducer, t);
                bool injective = images.insert(img).second;
                bool lands = valid.count(img) == 1;
                pass = pass && injective && lands;
                CHECK(injective);
                CHECK(lands);
                if (t.rank() == ctx->algebra()->n_vertices()) {
                    bool drop = img.rank() + reducer.rank() == ctx->algebra()->n_vertices();
                    pass = pass && drop;
                    CHECK(drop);
                }
            }
            bool surjective = images.size() == valid.size();
            pass = pass && surjective;
            CHECK(surjective);
        }
    }
    pass = pass && timer.seconds() < 120.0;
    CHECK(timer.seconds() < 120.0);
    report(4, pass, timer.seconds(), std::to_string(reductions) + " reductions, bijective");
    CHECK(pass);
}

TEST_CASE("criterion 5: category axioms and the equivalence of constructions") {
    Timer timer;
    bool pass = true;
    std::string detail;
    for (auto& [name, ctx] : algebras().all()) {
        auto mod_side = build_module_side(ctx);
        auto silt_side = build_silting_side(ctx);
        auto am = check_associativity(mod_side);
        auto as = check_associativity(silt_side);
        auto eq = check_equivalence(mod_side, silt_side);
        pass = pass && am.pass() && as.pass() && eq.pass();
        CHECK(am.pass());
        CHECK(as.pass());
        CHECK(eq.pass());
        if (name == "A2") {
            pass = pass && mod_side.objects.size() == 5;
            CHECK(mod_side.objects.size() == 5);
            // Out-degree of the top object must equal the pair-enumeration
            // oracle exactly. The oracle yields 11 basic support tau-rigid
            // pairs for A2 (1 empty + 5 indecomposable + 5 tilting).
            long top = mod_side.find_object("{S1,S2}");
            CHECK(top >= 0);
            std::size_t out_deg = mod_side.out_degree(static_cast<std::size_t>(top));
            std::size_t oracle = enumerate_pairs(ctx).size();
            pass = pass && out_deg == oracle && oracle == 11;
            CHECK(out_deg == oracle);
            CHECK(oracle == 11);
            detail += "A2: 5 objects, top out-degree " + std::to_string(out_deg) +
                      " = oracle count; ";
        }
    }
    pass = pass && timer.seconds() < 300.0;
    CHECK(timer.seconds() < 300.0);
    report(5, pass, timer.seconds(), detail + "associativity and equivalence 100%");
    CHECK(pass);
}

TEST_CASE("criterion 6: sequence bijection up to the rank; A2 full-length count 10") {
    Timer timer;
    bool pass = true;
    for (auto& [name, ctx] : algebras().all()) {
        for (std::size_t t = 0; t <= ctx->algebra()->n_vertices(); ++t) {
            auto rep = check_sequence_bijection(ctx, t);
            pass = pass && rep.bijective;
            CHECK(rep.bijective);
        }
    }
    auto full = enumerate_presilting_sequences(algebras().a2, 2);
    // Oracle: ordered support tau-tilting pairs = 5 tilting pairs x 2 orders.
    std::size_t tilting = 0;
    for (const auto& p : enumerate_pairs(algebras().a2))
        if (p.rank() == 2) ++tilting;
    pass = pass && full.size() == 10 && full.size() == tilting * 2;
    CHECK(full.size() == 10);
    CHECK(full.size() == tilting * 2);
    pass = pass && timer.seconds() < 120.0;
    CHECK(timer.seconds() < 120.0);
    report(6, pass, timer.seconds(), "entrywise H bijective; A2 full-length = 10");
    CHECK(pass);
}

TEST_CASE("criterion 7: Grothendieck-group independence and Euler triangularity") {
    Timer timer;
    bool pass = true;
    std::size_t sequences = 0;
    for (auto& [name, ctx] : algebras().all()) {
        for (std::size_t t = 1; t <= ctx->algebra()->n_vertices(); ++t) {
            for (const auto& seq : enumerate_presilting_sequences(ctx, t)) {
                ++sequences;
                bool k0 = check_k0_independence(ctx, seq);  // det +-1 when full length
                bool euler = check_euler_triangularity(ctx, seq);
                pass = pass && k0 && euler;
                CHECK(k0);
                CHECK(euler);
            }
        }
    }
    pass = pass && timer.seconds() < 60.0;
    CHECK(timer.seconds() < 60.0);
    report(7, pass, timer.seconds(), std::to_string(sequences) + " sequences, 100%");
    CHECK(pass);
}

TEST_CASE("criterion 8: foundational numerics against the hand-derived fixture set") {
    Timer timer;
    bool pass = true;
    std::size_t count = 0;
    for (const auto& f : fixtures::hom_fixtures()) {
        auto ctx = f.algebra == "A2" ? algebras().a2 : algebras().n3;
        bool hom_ok = hom_dim(named(ctx, f.from), named(ctx, f.to)) == f.hom;
        bool ext_ok = ext1_dim(named(ctx, f.from), named(ctx, f.to)) == f.ext1;
        pass = pass && hom_ok && ext_ok;
        CHECK(hom_ok);
        CHECK(ext_ok);
        ++count;
    }
    pass = pass && count >= 25;
    CHECK(count >= 25);
    for (const auto& f : fixtures::tau_fixtures()) {
        auto ctx = f.algebra == "A2" ? algebras().a2 : algebras().n3;
        auto t = tau(named(ctx, f.module));
        bool ok = f.tau == "0" ? t->is_zero() : is_isomorphic(t, named(ctx, f.tau));
        pass = pass && ok;
        CHECK(ok);
    }
    // Auslander-Smalo reformulation over all indecomposables of each algebra.
    for (auto& [name, ctx] : algebras().all()) {
        for (auto i : enumerate_indecomposables(ctx)) {
            auto m = ctx->indec(i);
            if (!is_tau_rigid(m)) continue;
            for (auto j : enumerate_indecomposables(ctx)) {
                auto x = ctx->indec(j);
                if (gen_membership(m, x)) {
                    bool ok = ext1_dim(m, x) == 0;
                    pass = pass && ok;
                    CHECK(ok);
                }
            }
        }
    }
    pass = pass && timer.seconds() < 10.0;
    CHECK(timer.seconds() < 10.0);
    report(8, pass, timer.seconds(),
           std::to_string(count) + " Hom/Ext fixtures plus tau table, exact equality");
    CHECK(pass);
}
