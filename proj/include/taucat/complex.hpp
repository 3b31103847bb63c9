#ifndef TAUCAT_COMPLEX_HPP
#define TAUCAT_COMPLEX_HPP

#include <map>
#include <utility>
#include <vector>

#include "taucat/pairs.hpp"

namespace taucat {

// Bounded complex of direct sums of indecomposable projectives, given by
// summand vertex lists per degree and differentials as matrices over the
// algebra. Two-term objects live in degrees -1 and 0; cones and reduction
// shifts temporarily leave that window, so the representation is general.
struct ProjComplex {
    AlgebraPtr alg;
    std::map<int, std::vector<std::size_t>> comps;  // degree -> summand vertices
    std::map<int, AMat> diffs;                      // d^n : comps[n] -> comps[n+1]

    static ProjComplex zero(const AlgebraPtr& alg) { return {alg, {}, {}}; }

    static ProjComplex stalk(const AlgebraPtr& alg, std::vector<std::size_t> verts, int degree) {
        ProjComplex c{alg, {}, {}};
        if (!verts.empty()) c.comps[degree] = std::move(verts);
        return c;
    }

    // The silting object S = (0 -> A), all indecomposable projectives in degree 0.
    static ProjComplex regular(const AlgebraPtr& alg) {
        std::vector<std::size_t> vs(alg->n_vertices());
        for (std::size_t v = 0; v < alg->n_vertices(); ++v) vs[v] = v;
        return stalk(alg, std::move(vs), 0);
    }

    static ProjComplex two_term(const AlgebraPtr& alg, std::vector<std::size_t> p1,
                                std::vector<std::size_t> p0, AMat d) {
        ProjComplex c{alg, {}, {}};
        if (!p1.empty()) c.comps[-1] = p1;
        if (!p0.empty()) c.comps[0] = p0;
        if (!p1.empty() && !p0.empty()) c.diffs[-1] = std::move(d);
        c.check();
        return c;
    }

    std::vector<std::size_t> verts_at(int n) const {
        auto it = comps.find(n);
        return it == comps.end() ? std::vector<std::size_t>{} : it->second;
    }

    bool has_degree(int n) const { return comps.count(n) != 0; }
    bool is_empty() const { return comps.empty(); }

    int min_degree() const { return comps.empty() ? 0 : comps.begin()->first; }
    int max_degree() const { return comps.empty() ? 0 : comps.rbegin()->first; }

    bool is_two_term() const {
        for (const auto& [n, vs] : comps)
            if (n < -1 || n > 0) return false;
        return true;
    }

    // Differential leaving degree n (zero AMat when either end is absent).
    AMat diff_at(int n) const {
        auto it = diffs.find(n);
        if (it != diffs.end()) return it->second;
        return AMat::zero(alg, verts_at(n), verts_at(n + 1));
    }

    ProjComplex shifted(int k) const {  // suspension^k: (S^k X)^n = X^{n+k}
        ProjComplex c{alg, {}, {}};
        for (const auto& [n, vs] : comps) c.comps[n - k] = vs;
        for (const auto& [n, d] : diffs) {
            AMat nd = (k % 2 == 0) ? d : d.negated();
            c.diffs[n - k] = std::move(nd);
        }
        return c;
    }

    ProjComplex direct_sum(const ProjComplex& o) const {
        ProjComplex c{alg, {}, {}};
        for (int n = std::min(min_degree(), o.min_degree());
             n <= std::max(max_degree(), o.max_degree()); ++n) {
            auto a = verts_at(n);
            auto b = o.verts_at(n);
            if (a.empty() && b.empty()) continue;
            auto merged = a;
            merged.insert(merged.end(), b.begin(), b.end());
            c.comps[n] = std::move(merged);
        }
        for (int n = c.min_degree(); n <= c.max_degree(); ++n) {
            if (!c.has_degree(n) || !c.has_degree(n + 1)) continue;
            AMat d = AMat::zero(alg, c.verts_at(n), c.verts_at(n + 1));
            AMat da = diff_at(n);
            AMat db = o.diff_at(n);
            std::size_t sa = verts_at(n).size();
            std::size_t ta = verts_at(n + 1).size();
            for (std::size_t t = 0; t < da.tgt_verts.size(); ++t)
                for (std::size_t s = 0; s < da.src_verts.size(); ++s) d.entry(t, s) = da.entry(t, s);
            for (std::size_t t = 0; t < db.tgt_verts.size(); ++t)
                for (std::size_t s = 0; s < db.src_verts.size(); ++s)
                    d.entry(ta + t, sa + s) = db.entry(t, s);
            if (!d.is_zero()) c.diffs[n] = std::move(d);
        }
        c.check();
        return c;
    }

    void check() const {
        for (const auto& [n, d] : diffs) {
            if (d.src_verts != verts_at(n) || d.tgt_verts != verts_at(n + 1))
                throw validation_error("complex differential endpoints mismatch");
            AMat sq = acompose(d, diff_at(n + 1));
            if (!sq.is_zero()) throw validation_error("d^2 != 0");
        }
    }

    // Drops summand-free degrees (no-op placeholder comps).
    void prune() {
        for (auto it = comps.begin(); it != comps.end();) {
            if (it->second.empty()) {
                diffs.erase(it->first);
                diffs.erase(it->first - 1);
                it = comps.erase(it);
            } else {
                ++it;
            }
        }
        for (auto it = diffs.begin(); it != diffs.end();) {
            if (!has_degree(it->first) || !has_degree(it->first + 1) || it->second.is_zero())
                it = diffs.erase(it);
            else
                ++it;
        }
    }
};

// Degreewise maps over the algebra, commuting with the differentials.
struct ChainMap {
    ProjComplex src;
    ProjComplex tgt;
    std::map<int, AMat> comps;

    AMat comp_at(int n) const {
        auto it = comps.find(n);
        if (it != comps.end()) return it->second;
        return AMat::zero(src.alg, src.verts_at(n), tgt.verts_at(n));
    }

    void validate() const {
        for (int n = std::min(src.min_degree(), tgt.min_degree());
             n <= std::max(src.max_degree(), tgt.max_degree()); ++n) {
            AMat lhs = acompose(comp_at(n), tgt.diff_at(n));          // f^n then d_Y
            AMat rhs = acompose(src.diff_at(n), comp_at(n + 1));      // d_X then f^{n+1}
            if (!(lhs + rhs.negated()).is_zero())
                throw validation_error("chain map does not commute with differentials");
        }
    }
};

// Mapping cone: Cone(f)^n = X^{n+1} (+) Y^n, differential [-d_X, f; 0, d_Y].
inline ProjComplex cone(const ChainMap& f) {
    const auto& alg = f.src.alg;
    ProjComplex c{alg, {}, {}};
    int lo = std::min(f.src.min_degree() - 1, f.tgt.min_degree());
    int hi = std::max(f.src.max_degree() - 1, f.tgt.max_degree());
    for (int n = lo; n <= hi; ++n) {
        auto xs = f.src.verts_at(n + 1);
        auto ys = f.tgt.verts_at(n);
        if (xs.empty() && ys.empty()) continue;
        auto merged = xs;
        merged.insert(merged.end(), ys.begin(), ys.end());
        c.comps[n] = std::move(merged);
    }
    for (int n = lo; n <= hi; ++n) {
        if (!c.has_degree(n) || !c.has_degree(n + 1)) continue;
        AMat d = AMat::zero(alg, c.verts_at(n), c.verts_at(n + 1));
        AMat dx = f.src.diff_at(n + 1);
        AMat dy = f.tgt.diff_at(n);
        AMat fc = f.comp_at(n + 1);
        std::size_t sx = f.src.verts_at(n + 1).size();
        std::size_t tx = f.src.verts_at(n + 2).size();
        for (std::size_t t = 0; t < dx.tgt_verts.size(); ++t)
            for (std::size_t s = 0; s < dx.src_verts.size(); ++s)
                d.entry(t, s) = dx.entry(t, s);  // -d_X, negated below
        for (auto& e : d.entries)
            for (auto& cc : e) cc = -cc;
        for (std::size_t t = 0; t < fc.tgt_verts.size(); ++t)
            for (std::size_t s = 0; s < fc.src_verts.size(); ++s)
                d.entry(tx + t, s) = fc.entry(t, s);
        for (std::size_t t = 0; t < dy.tgt_verts.size(); ++t)
            for (std::size_t s = 0; s < dy.src_verts.size(); ++s)
                d.entry(tx + t, sx + s) = dy.entry(t, s);
        if (!d.is_zero()) c.diffs[n] = std::move(d);
    }
    c.prune();
    c.check();
    return c;
}

inline ProjComplex cocone(const ChainMap& f) { return cone(f).shifted(-1); }

// --- chain map spaces modulo homotopy -----------------------------------------

// Coordinate frame for maps of graded objects X -> Y with a fixed degree
// offset: one slot per (degree, target summand, source summand, algebra basis
// element in the matching Peirce block).
struct GradedMapFrame {
    struct Slot {
        int degree;
        std::size_t t, s, u;
    };
    AlgebraPtr alg;
    std::vector<Slot> slots;
    std::map<int, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> shapes;

    GradedMapFrame(const ProjComplex& x, const ProjComplex& y, int offset) : alg(x.alg) {
        for (int n = std::min(x.min_degree(), y.min_degree() - offset);
             n <= std::max(x.max_degree(), y.max_degree() - offset); ++n) {
            auto xs = x.verts_at(n);
            auto ys = y.verts_at(n + offset);
            if (xs.empty() || ys.empty()) continue;
            shapes[n] = {xs, ys};
            for (std::size_t t = 0; t < ys.size(); ++t)
                for (std::size_t s = 0; s < xs.size(); ++s)
                    for (std::size_t u : alg->block_elems(ys[t], xs[s]))
                        slots.push_back({n, t, s, u});
        }
    }

    std::size_t dim() const { return slots.size(); }

    std::map<int, AMat> unflatten(const std::vector<Rat>& v) const {
        std::map<int, AMat> out;
        for (const auto& [n, shape] : shapes) out[n] = AMat::zero(alg, shape.first, shape.second);
        for (std::size_t k = 0; k < slots.size(); ++k) {
            if (v[k] == 0) continue;
            const auto& sl = slots[k];
            out[sl.degree].entry(sl.t, sl.s)[sl.u] += v[k];
        }
        for (auto it = out.begin(); it != out.end();) {
            if (it->second.is_zero())
                it = out.erase(it);
            else
                ++it;
        }
        return out;
    }

    std::vector<Rat> flatten(const std::map<int, AMat>& comps) const {
        std::vector<Rat> v(slots.size());
        for (std::size_t k = 0; k < slots.size(); ++k) {
            const auto& sl = slots[k];
            auto it = comps.find(sl.degree);
            if (it == comps.end()) continue;
            v[k] = it->second.entry(sl.t, sl.s)[sl.u];
        }
        return v;
    }
};

// Hom space in the homotopy category between bounded complexes of
// projectives, with an explicit basis of representatives.
struct HomKSpace {
    ProjComplex src;
    ProjComplex tgt_shifted;  // target already shifted
    GradedMapFrame frame;
    Subspace chain_maps;   // solutions of the chain condition
    Subspace boundaries;   // null-homotopic maps
    QuotientSpace classes;
    std::vector<ChainMap> reps;

    std::size_t dim() const { return classes.dim(); }

    // Class coordinates of an arbitrary chain map X -> shifted target.
    std::vector<Rat> class_of(const ChainMap& f) const { return classes.project(frame.flatten(f.comps)); }
};

inline HomKSpace hom_k(const ProjComplex& x, const ProjComplex& yraw, int shift) {
    ProjComplex y = yraw.shifted(shift);
    GradedMapFrame frame(x, y, 0);

    // Chain conditions: f^n d_Y - d_X f^{n+1} = 0, one row per coordinate of
    // maps X^n -> Y^{n+1}.
    GradedMapFrame cond_frame(x, y, 1);
    QMat sys(cond_frame.dim(), frame.dim());
    for (std::size_t k = 0; k < frame.dim(); ++k) {
        std::vector<Rat> unit(frame.dim());
        unit[k] = 1;
        auto f = frame.unflatten(unit);
        std::map<int, AMat> residual;
        for (const auto& [n, shape] : cond_frame.shapes) {
            AMat fn = f.count(n) ? f.at(n) : AMat::zero(x.alg, x.verts_at(n), y.verts_at(n));
            AMat fn1 = f.count(n + 1) ? f.at(n + 1)
                                      : AMat::zero(x.alg, x.verts_at(n + 1), y.verts_at(n + 1));
            AMat lhs = acompose(fn, y.diff_at(n));
            AMat rhs = acompose(x.diff_at(n), fn1);
            residual[n] = lhs + rhs.negated();
        }
        auto col = cond_frame.flatten(residual);
        for (std::size_t r = 0; r < cond_frame.dim(); ++r) sys.at(r, k) = col[r];
    }
    Subspace solutions = Subspace::span(kernel(sys));

    // Boundaries: f = d_X h' + h d_Y for homotopies h: X^n -> Y^{n-1}.
    GradedMapFrame h_frame(x, y, -1);
    QMat bnd(h_frame.dim(), frame.dim());
    for (std::size_t k = 0; k < h_frame.dim(); ++k) {
        std::vector<Rat> unit(h_frame.dim());
        unit[k] = 1;
        auto h = h_frame.unflatten(unit);
        std::map<int, AMat> f;
        for (const auto& [n, shape] : frame.shapes) {
            AMat hn = h.count(n) ? h.at(n) : AMat::zero(x.alg, x.verts_at(n), y.verts_at(n - 1));
            AMat hn1 = h.count(n + 1) ? h.at(n + 1)
                                      : AMat::zero(x.alg, x.verts_at(n + 1), y.verts_at(n));
            f[n] = acompose(hn, y.diff_at(n - 1)) + acompose(x.diff_at(n), hn1);
        }
        bnd.set_row(k, frame.flatten(f));
    }
    Subspace boundaries = Subspace::span(bnd);

    QuotientSpace classes(solutions, boundaries);
    std::vector<ChainMap> reps;
    for (const auto& rv : classes.reps()) {
        ChainMap cm{x, y, frame.unflatten(rv)};
        cm.validate();
        reps.push_back(std::move(cm));
    }
    return HomKSpace{x, std::move(y), std::move(frame), std::move(solutions), std::move(boundaries),
                     std::move(classes), std::move(reps)};
}

inline std::size_t hom_k_dim(const ProjComplex& x, const ProjComplex& y, int shift) {
    return hom_k(x, y, shift).dim();
}

// Public two-term operation: shifts outside {-1, 0, 1} are rejected.
inline std::size_t homotopy_hom_dim(const ProjComplex& x, const ProjComplex& y, int shift) {
    if (shift < -1 || shift > 1) throw input_error("two-term homotopy Hom: unsupported shift");
    if (!x.is_two_term() || !y.is_two_term()) throw input_error("two-term homotopy Hom: inputs must be two-term");
    return hom_k_dim(x, y, shift);
}

// --- minimization --------------------------------------------------------------

namespace detail {

inline std::vector<std::size_t> erase_at(const std::vector<std::size_t>& v, std::size_t k) {
    std::vector<std::size_t> out;
    out.reserve(v.size() - 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (i != k) out.push_back(v[i]);
    return out;
}

// Inverse of an invertible element of the local algebra e_v A e_v.
inline std::vector<Rat> block_inverse(const AlgebraPtr& alg, const std::vector<Rat>& a,
                                      std::size_t v) {
    auto block = alg->block_elems(v, v);
    QMat sys(block.size(), block.size());
    for (std::size_t j = 0; j < block.size(); ++j) {
        auto prod = alg->multiply(a, alg->coord_of(block[j]));
        for (std::size_t i = 0; i < block.size(); ++i) sys.at(i, j) = prod[block[i]];
    }
    std::vector<Rat> rhs(block.size());
    for (std::size_t i = 0; i < block.size(); ++i) rhs[i] = (block[i] == v) ? Rat(1) : Rat(0);
    auto sol = solve(sys, rhs);
    if (!sol) throw error("block element is not invertible");
    std::vector<Rat> inv(alg->dim());
    for (std::size_t j = 0; j < block.size(); ++j) inv[block[j]] = (*sol)[j];
    return inv;
}

inline std::vector<Rat> amul(const AlgebraPtr& alg, const std::vector<Rat>& a,
                             const std::vector<Rat>& b) {
    return alg->multiply(a, b);
}

}  // namespace detail

// Gaussian cancellation of invertible diagonal blocks in the differentials;
// the result is homotopy equivalent and has a radical differential.
inline ProjComplex minimize(ProjComplex x) {
    const auto& alg = x.alg;
    bool changed = true;
    while (changed) {
        changed = false;
        // Locate a pivot first; the surgery below rebuilds map entries.
        int deg = 0;
        bool have_pivot = false;
        std::size_t pt = 0, ps = 0;
        for (const auto& [n, d] : x.diffs) {
            auto src = x.verts_at(n);
            auto tgt = x.verts_at(n + 1);
            for (std::size_t t = 0; t < tgt.size() && !have_pivot; ++t)
                for (std::size_t s = 0; s < src.size() && !have_pivot; ++s) {
                    if (tgt[t] != src[s]) continue;
                    if (d.entry(t, s)[tgt[t]] != 0) {
                        deg = n;
                        pt = t;
                        ps = s;
                        have_pivot = true;
                    }
                }
            if (have_pivot) break;
        }
        if (!have_pivot) break;
        {
            const int n = deg;
            AMat d = x.diffs.at(n);
            auto src = x.verts_at(n);
            auto tgt = x.verts_at(n + 1);
            std::size_t v = tgt[pt];
            auto a = d.entry(pt, ps);
            auto ainv = detail::block_inverse(alg, a, v);

            // Schur complement on d^n.
            AMat nd = AMat::zero(alg, detail::erase_at(src, ps), detail::erase_at(tgt, pt));
            for (std::size_t t = 0, t2 = 0; t < tgt.size(); ++t) {
                if (t == pt) continue;
                for (std::size_t s = 0, s2 = 0; s < src.size(); ++s) {
                    if (s == ps) continue;
                    auto corr = detail::amul(alg, detail::amul(alg, d.entry(t, ps), ainv),
                                             d.entry(pt, s));
                    auto val = d.entry(t, s);
                    for (std::size_t c = 0; c < alg->dim(); ++c) val[c] -= corr[c];
                    nd.entry(t2, s2) = std::move(val);
                    ++s2;
                }
                ++t2;
            }

            // Previous differential: its row ps becomes zero, delete it.
            AMat prev = x.diff_at(n - 1);
            AMat nprev = AMat::zero(alg, prev.src_verts, detail::erase_at(src, ps));
            for (std::size_t u2 = 0; u2 < prev.src_verts.size(); ++u2) {
                // Assert the eliminated row vanishes in the adapted basis.
                std::vector<Rat> gone = prev.entry(ps, u2);
                for (std::size_t s = 0; s < src.size(); ++s) {
                    if (s == ps) continue;
                    auto c = detail::amul(alg, detail::amul(alg, ainv, d.entry(pt, s)),
                                          prev.entry(s, u2));
                    for (std::size_t cc = 0; cc < alg->dim(); ++cc) gone[cc] += c[cc];
                }
                for (const auto& cc : gone)
                    if (cc != 0) throw validation_error("minimize: eliminated row does not vanish");
                for (std::size_t s = 0, s2 = 0; s < src.size(); ++s) {
                    if (s == ps) continue;
                    nprev.entry(s2, u2) = prev.entry(s, u2);
                    ++s2;
                }
            }

            // Next differential: its column pt becomes zero, delete it.
            AMat next = x.diff_at(n + 1);
            AMat nnext = AMat::zero(alg, detail::erase_at(tgt, pt), next.tgt_verts);
            for (std::size_t u2 = 0; u2 < next.tgt_verts.size(); ++u2) {
                std::vector<Rat> gone = next.entry(u2, pt);
                for (std::size_t t = 0; t < tgt.size(); ++t) {
                    if (t == pt) continue;
                    auto c = detail::amul(alg, detail::amul(alg, next.entry(u2, t), d.entry(t, ps)),
                                          ainv);
                    for (std::size_t cc = 0; cc < alg->dim(); ++cc) gone[cc] += c[cc];
                }
                for (const auto& cc : gone)
                    if (cc != 0) throw validation_error("minimize: eliminated column does not vanish");
                for (std::size_t t = 0, t2 = 0; t < tgt.size(); ++t) {
                    if (t == pt) continue;
                    nnext.entry(u2, t2) = next.entry(u2, t);
                    ++t2;
                }
            }

            // Apply the surgery.
            auto nsrc = detail::erase_at(src, ps);
            auto ntgt = detail::erase_at(tgt, pt);
            x.comps[n] = nsrc;
            x.comps[n + 1] = ntgt;
            if (nd.is_zero() || nsrc.empty() || ntgt.empty())
                x.diffs.erase(n);
            else
                x.diffs[n] = std::move(nd);
            if (nprev.is_zero() || nprev.src_verts.empty() || nsrc.empty())
                x.diffs.erase(n - 1);
            else
                x.diffs[n - 1] = std::move(nprev);
            if (nnext.is_zero() || ntgt.empty() || nnext.tgt_verts.empty())
                x.diffs.erase(n + 1);
            else
                x.diffs[n + 1] = std::move(nnext);
            changed = true;
        }
    }
    x.prune();
    x.check();
    return x;
}

// --- cohomology at degree zero --------------------------------------------------

struct H0Data {
    ModPtr module;               // H^0 of the complex, as an A-module
    ModPtr ambient;              // realization of the degree-0 component
    SubmoduleResult ker;         // ker d^0 inside the ambient
    QuotientResult quot;         // ker / im d^{-1}
};

inline H0Data h0_data(const ProjComplex& x) {
    const auto& alg = x.alg;
    auto deg0 = x.verts_at(0);
    if (deg0.empty()) {
        auto z = FdModule::zero(alg);
        return {z, z, {z, ModuleMap::zero(z, z)}, {z, ModuleMap::zero(z, z)}};
    }
    ModPtr ambient = detail::projective_sum(alg, deg0);
    SubmoduleResult ker = [&] {
        if (!x.has_degree(1)) return submodule(ambient, [&] {
            std::vector<Subspace> full;
            for (std::size_t v = 0; v < alg->n_vertices(); ++v)
                full.push_back(Subspace::full(ambient->dim(v)));
            return full;
        }());
        ModuleMap d0 = realize(x.diff_at(0));
        return kernel_module(ModuleMap{ambient, d0.tgt, d0.blocks});
    }();
    // Image of d^{-1} expressed inside ker.
    std::vector<Subspace> im_in_ker;
    for (std::size_t v = 0; v < alg->n_vertices(); ++v)
        im_in_ker.push_back(Subspace(ker.module->dim(v)));
    if (x.has_degree(-1)) {
        ModuleMap dm1 = realize(x.diff_at(-1));
        for (std::size_t v = 0; v < alg->n_vertices(); ++v) {
            QMat rows(0, ker.module->dim(v));
            for (std::size_t r = 0; r < dm1.blocks[v].rows(); ++r) {
                auto row = dm1.blocks[v].row(r);
                auto coords = solve_left(ker.inclusion.blocks[v], row);
                if (!coords) throw validation_error("image of d^{-1} escapes ker d^0");
                rows = rows.vstack(QMat::from_rows({*coords}));
            }
            im_in_ker[v] = Subspace::span(rows);
        }
    }
    QuotientResult quot = quotient(ker.module, im_in_ker);
    return {quot.module, ambient, std::move(ker), std::move(quot)};
}

inline ModPtr h0(const ProjComplex& x) { return h0_data(x).module; }

// Induced map on H^0 of a chain map.
inline ModuleMap h0_map(const H0Data& hx, const H0Data& hy, const ChainMap& f) {
    const auto& alg = f.src.alg;
    ModuleMap out = ModuleMap::zero(hx.module, hy.module);
    if (hx.module->is_zero() || hy.module->is_zero()) return out;
    ModuleMap f0 = realize(f.comp_at(0));
    for (std::size_t v = 0; v < alg->n_vertices(); ++v) {
        for (std::size_t r = 0; r < hx.module->dim(v); ++r) {
            // Section of the quotient: ker_rep with ker_rep * proj = e_r.
            auto sol = solve(hx.quot.projection.blocks[v].transpose(), [&] {
                std::vector<Rat> e(hx.module->dim(v));
                e[r] = 1;
                return e;
            }());
            if (!sol) throw validation_error("H0 representative lookup failed");
            std::vector<Rat> ker_rep = *sol;
            // Ambient row: ker_rep * inclusion.
            std::vector<Rat> amb(hx.ambient->dim(v));
            for (std::size_t j = 0; j < amb.size(); ++j) {
                Rat acc = 0;
                for (std::size_t i = 0; i < ker_rep.size(); ++i)
                    acc += ker_rep[i] * hx.ker.inclusion.blocks[v].at(i, j);
                amb[j] = acc;
            }
            // Push through f0.
            std::vector<Rat> img(hy.ambient->dim(v));
            for (std::size_t j = 0; j < img.size(); ++j) {
                Rat acc = 0;
                for (std::size_t i = 0; i < amb.size(); ++i) acc += amb[i] * f0.blocks[v].at(i, j);
                img[j] = acc;
            }
            // Express inside ker d^0 of y, then project to H0.
            auto kc = solve_left(hy.ker.inclusion.blocks[v], img);
            if (!kc) throw validation_error("H0 image escapes the kernel");
            std::vector<Rat> cls(hy.module->dim(v));
            for (std::size_t j = 0; j < cls.size(); ++j) {
                Rat acc = 0;
                for (std::size_t i = 0; i < kc->size(); ++i)
                    acc += (*kc)[i] * hy.quot.projection.blocks[v].at(i, j);
                cls[j] = acc;
            }
            for (std::size_t j = 0; j < cls.size(); ++j) out.blocks[v].at(r, j) = cls[j];
        }
    }
    out.validate();
    return out;
}

}  // namespace taucat

#endif
