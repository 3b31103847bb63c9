#ifndef TAUCAT_SILTING_HPP
#define TAUCAT_SILTING_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "taucat/complex.hpp"

namespace taucat {

// f then g, degreewise.
inline ChainMap chain_compose(const ChainMap& f, const ChainMap& g) {
    ChainMap out{f.src, g.tgt, {}};
    for (int n = f.src.min_degree(); n <= f.src.max_degree(); ++n) {
        if (!f.src.has_degree(n) || !g.tgt.has_degree(n)) continue;
        AMat c = acompose(f.comp_at(n), g.comp_at(n));
        if (!c.is_zero()) out.comps[n] = std::move(c);
    }
    return out;
}

// --- g-vectors and the Euler form ----------------------------------------------

inline std::vector<long> g_vector(const ProjComplex& x) {
    std::vector<long> g(x.alg->n_vertices(), 0);
    for (const auto& [n, vs] : x.comps) {
        long sign = (n % 2 == 0) ? 1 : -1;
        for (auto v : vs) g[v] += sign;
    }
    return g;
}

inline std::vector<std::vector<long>> g_matrix(const std::vector<ProjComplex>& xs) {
    std::vector<std::vector<long>> rows;
    rows.reserve(xs.size());
    for (const auto& x : xs) rows.push_back(g_vector(x));
    return rows;
}

// Gram matrix of the Euler pairing on classes of projectives:
// B[v][w] = dim Hom(P(v), P(w)) = dim e_w A e_v.
inline std::vector<std::vector<long>> euler_gram(const AlgebraPtr& alg) {
    std::size_t nv = alg->n_vertices();
    std::vector<std::vector<long>> b(nv, std::vector<long>(nv, 0));
    for (std::size_t v = 0; v < nv; ++v)
        for (std::size_t w = 0; w < nv; ++w)
            b[v][w] = static_cast<long>(alg->block_elems(w, v).size());
    return b;
}

inline long euler_form(const ProjComplex& x, const ProjComplex& y) {
    auto b = euler_gram(x.alg);
    auto gx = g_vector(x);
    auto gy = g_vector(y);
    long acc = 0;
    for (std::size_t v = 0; v < gx.size(); ++v)
        for (std::size_t w = 0; w < gy.size(); ++w) acc += gx[v] * b[v][w] * gy[w];
    return acc;
}

// Alternating sum of homotopy Hom dimensions over all shifts in the window.
inline long euler_form_direct(const ProjComplex& x, const ProjComplex& y) {
    if (x.is_empty() || y.is_empty()) return 0;
    long acc = 0;
    for (int s = y.min_degree() - x.max_degree(); s <= y.max_degree() - x.min_degree(); ++s) {
        long d = static_cast<long>(hom_k_dim(x, y, s));
        acc += (s % 2 == 0) ? d : -d;
    }
    return acc;
}

// --- presilting and silting ------------------------------------------------------

inline bool is_presilting(const ProjComplex& x) {
    if (x.is_empty()) return true;
    for (int s = 1; s <= x.max_degree() - x.min_degree(); ++s)
        if (hom_k_dim(x, x, s) != 0) return false;
    return true;
}

// The H-map of the two-term correspondence: X -> (H^0 X, X_1) where Sigma X_1
// is the maximal direct summand of X concentrated in degree -1.
inline SuppTauRigidPair h_map(const CtxPtr& ctx, const ProjComplex& xraw) {
    ProjComplex x = minimize(xraw);
    if (!x.is_two_term()) throw input_error("h_map needs a two-term complex");
    ModPtr m = h0(x);
    std::vector<ModPtr> shifted;
    auto p1 = x.verts_at(-1);
    AMat d = x.diff_at(-1);
    std::vector<std::size_t> shifted_verts;
    for (std::size_t s = 0; s < p1.size(); ++s) {
        bool zero_col = true;
        for (std::size_t t = 0; t < d.tgt_verts.size() && zero_col; ++t)
            for (const auto& c : d.entry(t, s))
                if (c != 0) {
                    zero_col = false;
                    break;
                }
        if (zero_col) shifted_verts.push_back(p1[s]);
    }
    std::vector<ModPtr> projs;
    for (auto v : shifted_verts) projs.push_back(ctx->projective(v));
    ModPtr q = projs.empty() ? FdModule::zero(ctx->algebra())
                             : FdModule::direct_sum(ctx->algebra(), projs);
    auto pair = make_pair(ctx, m, q);
    if (!is_supp_tau_rigid(ctx, pair))
        throw validation_error("h_map image is not support tau-rigid (input not presilting?)");
    return pair;
}

// Inverse of the H-map: minimal presentation of M plus shifted projectives.
inline ProjComplex h_inverse(const CtxPtr& ctx, const SuppTauRigidPair& pair) {
    const auto& alg = ctx->algebra();
    ProjComplex acc = ProjComplex::zero(alg);
    ModPtr m = pair_module(ctx, pair);
    if (!m->is_zero()) {
        auto pres = min_proj_presentation(m);
        AMat d = amat_of(pres.differential, pres.p1_verts, pres.p0_verts);
        acc = ProjComplex::two_term(alg, pres.p1_verts, pres.p0_verts, std::move(d));
    }
    if (!pair.proj_verts.empty())
        acc = acc.direct_sum(ProjComplex::stalk(alg, pair.proj_verts, -1));
    return minimize(acc);
}

inline bool is_silting(const CtxPtr& ctx, const ProjComplex& x) {
    if (!is_presilting(x)) return false;
    return h_map(ctx, x).rank() == ctx->algebra()->n_vertices();
}

// Indecomposable summands of a presilting complex, via the pair bijection.
inline std::vector<ProjComplex> presilting_summands(const CtxPtr& ctx, const SuppTauRigidPair& p) {
    std::vector<ProjComplex> out;
    for (auto id : p.module_ids) out.push_back(h_inverse(ctx, {{id}, {}}));
    for (auto v : p.proj_verts) out.push_back(h_inverse(ctx, {{}, {v}}));
    return out;
}

inline ProjComplex sum_complexes(const AlgebraPtr& alg, const std::vector<ProjComplex>& parts) {
    ProjComplex acc = ProjComplex::zero(alg);
    for (const auto& p : parts) acc = acc.direct_sum(p);
    return acc;
}

// --- minimal approximations ------------------------------------------------------

struct Approximation {
    ProjComplex object;  // the approximating object P0 (or P^X on the left)
    ChainMap map;        // beta: P0 -> Y (right) or alpha: X -> P^X (left)
};

namespace detail {

// Assembles (+) sources -> target from per-part chain maps.
inline ChainMap stack_maps(const AlgebraPtr& alg, const std::vector<ChainMap>& parts,
                           const ProjComplex& src_sum, const ProjComplex& tgt) {
    ChainMap out{src_sum, tgt, {}};
    for (int n = src_sum.min_degree(); n <= src_sum.max_degree(); ++n) {
        if (!src_sum.has_degree(n) || !tgt.has_degree(n)) continue;
        AMat m = AMat::zero(alg, src_sum.verts_at(n), tgt.verts_at(n));
        std::size_t s_off = 0;
        for (const auto& f : parts) {
            AMat fm = f.comp_at(n);
            for (std::size_t t = 0; t < fm.tgt_verts.size(); ++t)
                for (std::size_t s = 0; s < fm.src_verts.size(); ++s)
                    m.entry(t, s_off + s) = fm.entry(t, s);
            s_off += f.src.verts_at(n).size();
        }
        if (!m.is_zero()) out.comps[n] = std::move(m);
    }
    return out;
}

// Dual assembly: source -> (+) targets.
inline ChainMap spread_maps(const AlgebraPtr& alg, const std::vector<ChainMap>& parts,
                            const ProjComplex& src, const ProjComplex& tgt_sum) {
    ChainMap out{src, tgt_sum, {}};
    for (int n = src.min_degree(); n <= src.max_degree(); ++n) {
        if (!src.has_degree(n) || !tgt_sum.has_degree(n)) continue;
        AMat m = AMat::zero(alg, src.verts_at(n), tgt_sum.verts_at(n));
        std::size_t t_off = 0;
        for (const auto& f : parts) {
            AMat fm = f.comp_at(n);
            for (std::size_t t = 0; t < fm.tgt_verts.size(); ++t)
                for (std::size_t s = 0; s < fm.src_verts.size(); ++s)
                    m.entry(t_off + t, s) = fm.entry(t, s);
            t_off += f.tgt.verts_at(n).size();
        }
        if (!m.is_zero()) out.comps[n] = std::move(m);
    }
    return out;
}

}  // namespace detail

// Minimal right add(P)-approximation of Y: assemble the universal map from
// full Hom bases, then greedily strip superfluous source summands while the
// induced maps Hom(p_i, P0) -> Hom(p_i, Y) stay surjective.
inline Approximation minimal_right_approx(const std::vector<ProjComplex>& adds,
                                          const ProjComplex& y) {
    const auto& alg = y.alg;
    struct Copy {
        std::size_t part;
        ChainMap map;  // p_part -> Y
    };
    std::vector<Copy> copies;
    for (std::size_t i = 0; i < adds.size(); ++i)
        for (const auto& rep : hom_k(adds[i], y, 0).reps) copies.push_back({i, rep});

    auto build = [&](const std::vector<bool>& active) {
        std::vector<ChainMap> maps;
        std::vector<ProjComplex> srcs;
        for (std::size_t k = 0; k < copies.size(); ++k)
            if (active[k]) {
                maps.push_back(copies[k].map);
                srcs.push_back(adds[copies[k].part]);
            }
        ProjComplex p0 = sum_complexes(alg, srcs);
        return Approximation{p0, detail::stack_maps(alg, maps, p0, y)};
    };

    auto is_approx = [&](const Approximation& ap) {
        for (const auto& p : adds) {
            auto target = hom_k(p, y, 0);
            if (target.dim() == 0) continue;
            auto through = hom_k(p, ap.object, 0);
            QMat comp(through.dim(), target.dim());
            for (std::size_t r = 0; r < through.reps.size(); ++r) {
                auto cls = target.class_of(chain_compose(through.reps[r], ap.map));
                comp.set_row(r, cls);
            }
            if (rank(comp) != target.dim()) return false;
        }
        return true;
    };

    std::vector<bool> active(copies.size(), true);
    Approximation cur = build(active);
    if (!is_approx(cur)) throw validation_error("universal map is not a right approximation");
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < copies.size(); ++k) {
            if (!active[k]) continue;
            active[k] = false;
            Approximation cand = build(active);
            if (is_approx(cand)) {
                cur = std::move(cand);
                changed = true;
            } else {
                active[k] = true;
            }
        }
    }
    return cur;
}

inline Approximation minimal_left_approx(const ProjComplex& x,
                                         const std::vector<ProjComplex>& adds) {
    const auto& alg = x.alg;
    struct Copy {
        std::size_t part;
        ChainMap map;  // X -> p_part
    };
    std::vector<Copy> copies;
    for (std::size_t i = 0; i < adds.size(); ++i)
        for (const auto& rep : hom_k(x, adds[i], 0).reps) copies.push_back({i, rep});

    auto build = [&](const std::vector<bool>& active) {
        std::vector<ChainMap> maps;
        std::vector<ProjComplex> tgts;
        for (std::size_t k = 0; k < copies.size(); ++k)
            if (active[k]) {
                maps.push_back(copies[k].map);
                tgts.push_back(adds[copies[k].part]);
            }
        ProjComplex px = sum_complexes(alg, tgts);
        return Approximation{px, detail::spread_maps(alg, maps, x, px)};
    };

    auto is_approx = [&](const Approximation& ap) {
        for (const auto& p : adds) {
            auto target = hom_k(x, p, 0);
            if (target.dim() == 0) continue;
            auto through = hom_k(ap.object, p, 0);
            QMat comp(through.dim(), target.dim());
            for (std::size_t r = 0; r < through.reps.size(); ++r)
                comp.set_row(r, target.class_of(chain_compose(ap.map, through.reps[r])));
            if (rank(comp) != target.dim()) return false;
        }
        return true;
    };

    std::vector<bool> active(copies.size(), true);
    Approximation cur = build(active);
    if (!is_approx(cur)) throw validation_error("universal map is not a left approximation");
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < copies.size(); ++k) {
            if (!active[k]) continue;
            active[k] = false;
            Approximation cand = build(active);
            if (is_approx(cand)) {
                cur = std::move(cand);
                changed = true;
            } else {
                active[k] = true;
            }
        }
    }
    return cur;
}

// --- Bongartz completion and mutation --------------------------------------------

// Basic form of a presilting complex, through the pair bijection.
inline ProjComplex basic_presilting(const CtxPtr& ctx, const ProjComplex& x) {
    return h_inverse(ctx, h_map(ctx, x));
}

// T_P = P (+) Q from the triangle S -> Q -> P0 -> Sigma S with P0 -> Sigma S
// a minimal right add(P)-approximation.
inline ProjComplex bongartz_completion(const CtxPtr& ctx, const ProjComplex& p) {
    const auto& alg = ctx->algebra();
    ProjComplex pm = minimize(p);
    if (!is_presilting(pm)) throw validation_error("bongartz completion needs a presilting input");
    SuppTauRigidPair pair = pm.is_empty() ? SuppTauRigidPair{} : h_map(ctx, pm);
    auto adds = presilting_summands(ctx, pair);
    ProjComplex sigma_s = ProjComplex::regular(alg).shifted(1);
    Approximation ap = minimal_right_approx(adds, sigma_s);
    ProjComplex q = minimize(cocone(ap.map));
    ProjComplex t = basic_presilting(ctx, sum_complexes(alg, {pm, q}));
    if (!is_silting(ctx, t)) throw validation_error("bongartz completion is not silting");
    if (!h_map(ctx, t).contains(pair))
        throw validation_error("bongartz completion lost the presilting summand");
    return t;
}

// Silting order: T >= T' iff Hom(T, Sigma T') = 0.
inline bool silting_geq(const ProjComplex& t, const ProjComplex& t2) {
    return hom_k_dim(t, t2, 1) == 0;
}

// Irreducible left/right mutation at the k-th indecomposable summand.
inline ProjComplex mutate(const CtxPtr& ctx, const ProjComplex& t, std::size_t k, bool left) {
    auto pair = h_map(ctx, t);
    auto summands = presilting_summands(ctx, pair);
    if (k >= summands.size()) throw input_error("mutation index out of range");
    std::vector<ProjComplex> rest;
    for (std::size_t i = 0; i < summands.size(); ++i)
        if (i != k) rest.push_back(summands[i]);
    ProjComplex replaced = summands[k];
    ProjComplex fresh;
    if (left) {
        Approximation ap = minimal_left_approx(replaced, rest);
        fresh = minimize(cone(ap.map));
    } else {
        Approximation ap = minimal_right_approx(rest, replaced);
        fresh = minimize(cocone(ap.map));
    }
    if (fresh.is_empty() || !is_presilting(fresh))
        throw validation_error("mutation produced a degenerate exchange (non-silting input?)");
    if (!fresh.is_two_term()) throw input_error("mutation leaves the two-term window");
    std::vector<ProjComplex> parts = rest;
    parts.push_back(fresh);
    ProjComplex out = basic_presilting(ctx, sum_complexes(ctx->algebra(), parts));
    if (!is_silting(ctx, out)) throw validation_error("mutation left the silting class");
    // The exchange must replace exactly one indecomposable summand.
    auto before = h_map(ctx, t);
    auto after = h_map(ctx, out);
    auto shared = before.complement_of(before.complement_of(after));
    if (shared.rank() + 1 != before.rank())
        throw validation_error("mutation changed more than one summand");
    return out;
}

// --- two-term silting exchange graph ----------------------------------------------

struct ExchangeGraph {
    std::vector<SuppTauRigidPair> nodes;     // silting objects, by their pairs
    std::vector<ProjComplex> complexes;      // basic representatives
    std::vector<std::vector<long>> edges;    // edges[i][k] = target of left mutation at k
};

inline ExchangeGraph exchange_graph(const CtxPtr& ctx, std::size_t cap = 512) {
    ExchangeGraph g;
    std::map<SuppTauRigidPair, std::size_t> seen;
    std::deque<std::size_t> queue;
    // Unbounded growth of the presentations signals a tau-tilting infinite
    // algebra; stop before the exact arithmetic stalls.
    const std::size_t size_cap = 8 * std::max<std::size_t>(1, ctx->algebra()->n_vertices());
    auto intern = [&](const ProjComplex& t) {
        std::size_t n_projs = 0;
        for (const auto& [deg, vs] : t.comps) n_projs += vs.size();
        if (n_projs > size_cap)
            throw cap_error("mutation closure exceeded the complex-size cap (" +
                            std::to_string(size_cap) + "); tau-tilting infinite input?");
        auto pair = h_map(ctx, t);
        auto it = seen.find(pair);
        if (it != seen.end()) return it->second;
        std::size_t id = g.nodes.size();
        if (id >= cap) throw cap_error("silting mutation closure exceeded cap");
        seen[pair] = id;
        g.nodes.push_back(pair);
        g.complexes.push_back(t);
        g.edges.emplace_back();
        queue.push_back(id);
        return id;
    };
    intern(basic_presilting(ctx, ProjComplex::regular(ctx->algebra())));
    while (!queue.empty()) {
        std::size_t id = queue.front();
        queue.pop_front();
        ProjComplex t = g.complexes[id];
        std::size_t n_summands = g.nodes[id].rank();
        g.edges[id].assign(n_summands, -1);
        for (std::size_t k = 0; k < n_summands; ++k) {
            try {
                ProjComplex left = mutate(ctx, t, k, true);
                g.edges[id][k] = static_cast<long>(intern(left));
            } catch (const input_error&) {
                // Left mutation exits the two-term window at this summand.
            }
        }
    }
    return g;
}

// --- silting reduction at the two-term level ---------------------------------------

inline bool is_in_z_p(const std::vector<ProjComplex>& p_adds, const ProjComplex& x) {
    for (const auto& p : p_adds) {
        for (int s = 1; s <= p.max_degree() - x.min_degree() + 1; ++s)
            if (hom_k_dim(x, p, s) != 0) return false;
        for (int s = 1; s <= x.max_degree() - p.min_degree() + 1; ++s)
            if (hom_k_dim(p, x, s) != 0) return false;
    }
    return true;
}

// Hom in the additive quotient Z_P/[P]: homotopy classes modulo those
// factoring through add(P).
struct HomModP {
    HomKSpace base;
    Subspace factoring;     // in class coordinates of `base`
    QuotientSpace classes;  // base classes modulo factoring

    std::size_t dim() const { return classes.dim(); }
    std::vector<Rat> class_of(const ChainMap& f) const {
        return classes.project(base.class_of(f));
    }
};

inline HomModP hom_mod_p(const std::vector<ProjComplex>& p_adds, const ProjComplex& x,
                         const ProjComplex& y) {
    HomKSpace base = hom_k(x, y, 0);
    QMat rows(0, base.dim());
    for (const auto& p : p_adds) {
        auto to_p = hom_k(x, p, 0);
        auto from_p = hom_k(p, y, 0);
        for (const auto& f : to_p.reps)
            for (const auto& g : from_p.reps) {
                auto cls = base.class_of(chain_compose(f, g));
                rows = rows.vstack(QMat::from_rows({cls}));
            }
    }
    Subspace fac = Subspace::span(rows);
    QuotientSpace cls(Subspace::full(base.dim()), fac);
    return HomModP{std::move(base), std::move(fac), std::move(cls)};
}

// X<1> = cone of a minimal left add(P)-approximation (IY triangulation of the
// reduced category); well-defined up to isomorphism in Z_P/[P].
inline ProjComplex shift_in_reduction(const std::vector<ProjComplex>& p_adds,
                                      const ProjComplex& x) {
    Approximation ap = minimal_left_approx(x, p_adds);
    return minimize(cone(ap.map));
}

// Linear combination of homotopy-class representatives, as a chain map.
inline ChainMap combine_reps(const HomKSpace& base, const std::vector<Rat>& coeffs) {
    std::vector<Rat> flat(base.frame.dim());
    for (std::size_t r = 0; r < coeffs.size(); ++r) {
        if (coeffs[r] == 0) continue;
        auto rf = base.frame.flatten(base.reps[r].comps);
        for (std::size_t i = 0; i < flat.size(); ++i) flat[i] += coeffs[r] * rf[i];
    }
    return ChainMap{base.src, base.tgt_shifted, base.frame.unflatten(flat)};
}

// Isomorphism test in the additive quotient for objects whose reduced
// endomorphism rings are local: X and Y are isomorphic iff some composite of
// quotient Hom classes is a unit (units lie outside the radical, a subspace,
// so basis composites suffice).
inline bool iso_in_quotient(const std::vector<ProjComplex>& p_adds, const ProjComplex& x,
                            const ProjComplex& y) {
    auto xy = hom_mod_p(p_adds, x, y);
    auto yx = hom_mod_p(p_adds, y, x);
    auto endx = hom_mod_p(p_adds, x, x);
    auto endy = hom_mod_p(p_adds, y, y);
    if (endx.dim() == 0 || endy.dim() == 0)
        return endx.dim() == 0 && endy.dim() == 0;  // both vanish in the quotient
    if (xy.dim() != yx.dim() || xy.dim() == 0) return false;

    std::vector<ChainMap> xy_reps, yx_reps, end_reps;
    for (const auto& cls : xy.classes.reps()) xy_reps.push_back(combine_reps(xy.base, cls));
    for (const auto& cls : yx.classes.reps()) yx_reps.push_back(combine_reps(yx.base, cls));
    for (const auto& cls : endx.classes.reps()) end_reps.push_back(combine_reps(endx.base, cls));

    for (const auto& u : xy_reps)
        for (const auto& v : yx_reps) {
            auto w_cls = endx.class_of(chain_compose(u, v));
            ChainMap w = combine_reps(endx.base, [&] {
                std::vector<Rat> base_coords(endx.base.dim());
                for (std::size_t k = 0; k < w_cls.size(); ++k) {
                    if (w_cls[k] == 0) continue;
                    const auto& rep = endx.classes.reps()[k];
                    for (std::size_t i = 0; i < base_coords.size(); ++i)
                        base_coords[i] += w_cls[k] * rep[i];
                }
                return base_coords;
            }());
            // Multiplication by w on End_quot(X) is invertible iff w is a unit.
            QMat lw(end_reps.size(), endx.dim());
            for (std::size_t r = 0; r < end_reps.size(); ++r)
                lw.set_row(r, endx.class_of(chain_compose(w, end_reps[r])));
            if (is_invertible(lw)) return true;
        }
    return false;
}

// phi_P: strip the add(P)-summands; the ambient complement represents the
// image in Z_P/[P].
inline ProjComplex phi_reduce(const CtxPtr& ctx, const ProjComplex& p, const ProjComplex& x) {
    auto pp = h_map(ctx, p);
    auto px = h_map(ctx, x);
    if (!px.contains(pp)) throw validation_error("phi_P needs P as a direct summand");
    return h_inverse(ctx, px.complement_of(pp));
}

inline ProjComplex phi_inverse(const CtxPtr& ctx, const ProjComplex& p, const ProjComplex& y) {
    return basic_presilting(ctx, sum_complexes(ctx->algebra(), {p, y}));
}

// --- truncation sigma^{>0}_U for Grothendieck-group lifts --------------------------

// Coreflection tower: kill maps from Sigma^j U for j = 0, 1, ... by cones of
// minimal right approximations; the result represents the truncation of W to
// U^{perp_{<=0}} and is the honest perpendicular-category representative.
inline ProjComplex sigma_gt0(const std::vector<ProjComplex>& u_adds, const ProjComplex& w) {
    ProjComplex v = minimize(w);
    if (u_adds.empty() || v.is_empty()) return v;
    int u_max = u_adds.front().max_degree();
    for (const auto& u : u_adds) u_max = std::max(u_max, u.max_degree());

    std::size_t cones = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int j = 0; j <= u_max - v.min_degree() + 1 && !v.is_empty(); ++j) {
            bool level_alive = false;
            for (const auto& u : u_adds)
                if (hom_k_dim(u.shifted(j), v, 0) != 0) {
                    level_alive = true;
                    break;
                }
            if (!level_alive) continue;
            std::vector<ProjComplex> shifted;
            for (const auto& u : u_adds) shifted.push_back(u.shifted(j));
            Approximation ap = minimal_right_approx(shifted, v);
            v = minimize(cone(ap.map));
            changed = true;
            if (++cones > 64) throw validation_error("sigma^{>0} tower did not stabilize");
        }
    }
    // Verify: no maps from any non-negative shift of U remain.
    if (!v.is_empty())
        for (const auto& u : u_adds)
            for (int j = 0; j <= u.max_degree() - v.min_degree() + 1; ++j)
                if (hom_k_dim(u.shifted(j), v, 0) != 0)
                    throw validation_error("sigma^{>0} tower left residual maps");
    return v;
}

}  // namespace taucat

#endif
