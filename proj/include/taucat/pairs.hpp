#ifndef TAUCAT_PAIRS_HPP
#define TAUCAT_PAIRS_HPP

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "taucat/decompose.hpp"

namespace taucat {

// Support tau-rigid pair (M, Q) in basic form: sorted registry ids of the
// indecomposable summands of M, and sorted vertices of the projective Q.
struct SuppTauRigidPair {
    std::vector<std::size_t> module_ids;
    std::vector<std::size_t> proj_verts;

    bool operator==(const SuppTauRigidPair& o) const {
        return module_ids == o.module_ids && proj_verts == o.proj_verts;
    }
    bool operator<(const SuppTauRigidPair& o) const {
        if (module_ids != o.module_ids) return module_ids < o.module_ids;
        return proj_verts < o.proj_verts;
    }

    std::size_t rank() const { return module_ids.size() + proj_verts.size(); }

    bool contains(const SuppTauRigidPair& o) const {
        return std::includes(module_ids.begin(), module_ids.end(), o.module_ids.begin(),
                             o.module_ids.end()) &&
               std::includes(proj_verts.begin(), proj_verts.end(), o.proj_verts.begin(),
                             o.proj_verts.end());
    }

    // Summands of *this not present in o (o must be contained in *this).
    SuppTauRigidPair complement_of(const SuppTauRigidPair& o) const {
        SuppTauRigidPair out;
        std::set_difference(module_ids.begin(), module_ids.end(), o.module_ids.begin(),
                            o.module_ids.end(), std::back_inserter(out.module_ids));
        std::set_difference(proj_verts.begin(), proj_verts.end(), o.proj_verts.begin(),
                            o.proj_verts.end(), std::back_inserter(out.proj_verts));
        return out;
    }

    SuppTauRigidPair merged_with(const SuppTauRigidPair& o) const {
        SuppTauRigidPair out;
        std::set_union(module_ids.begin(), module_ids.end(), o.module_ids.begin(),
                       o.module_ids.end(), std::back_inserter(out.module_ids));
        std::set_union(proj_verts.begin(), proj_verts.end(), o.proj_verts.begin(),
                       o.proj_verts.end(), std::back_inserter(out.proj_verts));
        return out;
    }
};

inline ModPtr pair_module(const CtxPtr& ctx, const SuppTauRigidPair& p) {
    std::vector<ModPtr> parts;
    for (auto id : p.module_ids) parts.push_back(ctx->indec(id));
    return parts.empty() ? FdModule::zero(ctx->algebra())
                         : FdModule::direct_sum(ctx->algebra(), parts);
}

inline ModPtr pair_projective(const CtxPtr& ctx, const SuppTauRigidPair& p) {
    std::vector<ModPtr> parts;
    for (auto v : p.proj_verts) parts.push_back(ctx->projective(v));
    return parts.empty() ? FdModule::zero(ctx->algebra())
                         : FdModule::direct_sum(ctx->algebra(), parts);
}

// Canonical pair from arbitrary module data; multiplicities are dropped since
// pairs are identified with their additive closures.
inline SuppTauRigidPair make_pair(const CtxPtr& ctx, const ModPtr& m, const ModPtr& q) {
    SuppTauRigidPair out;
    for (const auto& s : ctx->summand_ids(m)) out.module_ids.push_back(s.first);
    for (const auto& s : ctx->summand_ids(q)) {
        ModPtr ind = ctx->indec(s.first);
        bool matched = false;
        for (std::size_t v = 0; v < ctx->algebra()->n_vertices(); ++v)
            if (indec_iso(ind, ctx->projective(v))) {
                out.proj_verts.push_back(v);
                matched = true;
                break;
            }
        if (!matched) throw validation_error("pair second component is not projective");
    }
    std::sort(out.module_ids.begin(), out.module_ids.end());
    std::sort(out.proj_verts.begin(), out.proj_verts.end());
    return out;
}

inline bool is_supp_tau_rigid(const CtxPtr& ctx, const SuppTauRigidPair& p) {
    ModPtr m = pair_module(ctx, p);
    if (!m->is_zero() && hom_dim(m, tau(m)) != 0) return false;
    // Hom(P(v), M) is the vertex space M_v.
    for (auto v : p.proj_verts)
        if (m->dim(v) != 0) return false;
    return true;
}

inline bool is_supp_tau_tilting(const CtxPtr& ctx, const SuppTauRigidPair& p) {
    return is_supp_tau_rigid(ctx, p) && p.rank() == ctx->algebra()->n_vertices();
}

inline std::string pair_str(const CtxPtr& ctx, const SuppTauRigidPair& p) {
    std::string s = "(";
    if (p.module_ids.empty()) s += "0";
    for (std::size_t k = 0; k < p.module_ids.size(); ++k)
        s += (k ? "+" : "") + ctx->name(p.module_ids[k]);
    s += ", ";
    if (p.proj_verts.empty()) s += "0";
    for (std::size_t k = 0; k < p.proj_verts.size(); ++k) {
        std::size_t id = ctx->register_indec(ctx->projective(p.proj_verts[k]));
        s += (k ? "+" : "") + ctx->name(id);
    }
    return s + ")";
}

// Exhaustive enumeration of basic support tau-rigid pairs from the full
// indecomposable list, testing the definition directly. This is the oracle
// route sanctioned for acceptance and also the production enumeration.
inline std::vector<SuppTauRigidPair> enumerate_pairs(const CtxPtr& ctx, std::size_t cap = 512) {
    std::string cache_key = "pairs:" + std::to_string(cap);
    if (auto hit = ctx->aux_get(cache_key))
        return *std::static_pointer_cast<std::vector<SuppTauRigidPair>>(hit);
    auto ids = enumerate_indecomposables(ctx, cap);
    std::vector<std::size_t> rigid;
    for (auto id : ids) {
        std::size_t t = ctx->tau_id(id);
        if (t == static_cast<std::size_t>(-1) || ctx->hom_dim_ids(id, t) == 0) rigid.push_back(id);
    }
    std::size_t n = rigid.size();
    // compat[i][j]: Hom(X_i, tau X_j) = 0.
    std::vector<std::vector<bool>> compat(n, std::vector<bool>(n, true));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t t = ctx->tau_id(rigid[j]);
            if (t != static_cast<std::size_t>(-1))
                compat[i][j] = ctx->hom_dim_ids(rigid[i], t) == 0;
        }

    std::vector<SuppTauRigidPair> out;
    std::vector<std::size_t> chosen;  // positions into `rigid`
    std::size_t nv = ctx->algebra()->n_vertices();

    auto emit = [&]() {
        // Projective summands must have no maps into M: vertex spaces vanish.
        std::vector<std::size_t> allowed;
        for (std::size_t v = 0; v < nv; ++v) {
            bool ok = true;
            for (auto pos : chosen)
                if (ctx->indec(rigid[pos])->dim(v) != 0) {
                    ok = false;
                    break;
                }
            if (ok) allowed.push_back(v);
        }
        for (std::size_t mask = 0; mask < (std::size_t{1} << allowed.size()); ++mask) {
            SuppTauRigidPair p;
            for (auto pos : chosen) p.module_ids.push_back(rigid[pos]);
            for (std::size_t b = 0; b < allowed.size(); ++b)
                if (mask & (std::size_t{1} << b)) p.proj_verts.push_back(allowed[b]);
            out.push_back(std::move(p));
        }
    };

    std::function<void(std::size_t)> dfs = [&](std::size_t start) {
        emit();
        for (std::size_t k = start; k < n; ++k) {
            bool ok = true;
            for (auto pos : chosen)
                if (!compat[pos][k] || !compat[k][pos]) {
                    ok = false;
                    break;
                }
            if (ok) {
                chosen.push_back(k);
                dfs(k + 1);
                chosen.pop_back();
            }
        }
    };
    dfs(0);
    std::sort(out.begin(), out.end());
    ctx->aux_put(cache_key, std::make_shared<std::vector<SuppTauRigidPair>>(out));
    return out;
}

}  // namespace taucat

#endif
