#ifndef TAUCAT_MODULE_HPP
#define TAUCAT_MODULE_HPP

#include <algorithm>
#include <memory>
#include <numeric>
#include <utility>
#include <vector>

#include "taucat/algebra.hpp"

namespace taucat {

class FdModule;
using ModPtr = std::shared_ptr<const FdModule>;

// Finite-dimensional right module: a vector space per vertex, module elements
// are row vectors, and basis element u: i->j acts by M_i -> M_j, x |-> x*act[u].
class FdModule {
public:
    FdModule(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<QMat> act)
        : alg_(std::move(alg)), dims_(std::move(dims)), act_(std::move(act)) {
        validate();
    }

    const AlgebraPtr& algebra() const { return alg_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim(std::size_t v) const { return dims_[v]; }
    std::size_t total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }
    bool is_zero() const { return total_dim() == 0; }

    // Action matrix of basis element u (shape dims[src] x dims[tgt]).
    const QMat& act(std::size_t u) const { return act_[u]; }

    // Action of an arbitrary element, as a block from vertex v to vertex w.
    QMat act_block(const std::vector<Rat>& coords, std::size_t v, std::size_t w) const {
        QMat out(dims_[v], dims_[w]);
        for (std::size_t u = 0; u < alg_->dim(); ++u) {
            if (coords[u] == 0) continue;
            const auto& e = alg_->elem(u);
            if (e.src != v || e.tgt != w) continue;
            out = out + act_[u].scaled(coords[u]);
        }
        return out;
    }

    std::size_t vertex_offset(std::size_t v) const {
        std::size_t off = 0;
        for (std::size_t w = 0; w < v; ++w) off += dims_[w];
        return off;
    }

    static ModPtr make(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<QMat> act) {
        return std::make_shared<FdModule>(std::move(alg), std::move(dims), std::move(act));
    }

    static ModPtr zero(const AlgebraPtr& alg) {
        std::vector<std::size_t> dims(alg->n_vertices(), 0);
        std::vector<QMat> act(alg->dim());
        for (std::size_t u = 0; u < alg->dim(); ++u) act[u] = QMat(0, 0);
        return make(alg, std::move(dims), std::move(act));
    }

    static ModPtr simple(const AlgebraPtr& alg, std::size_t v) {
        std::vector<std::size_t> dims(alg->n_vertices(), 0);
        dims[v] = 1;
        std::vector<QMat> act(alg->dim());
        for (std::size_t u = 0; u < alg->dim(); ++u) {
            const auto& e = alg->elem(u);
            act[u] = QMat(dims[e.src], dims[e.tgt]);
            if (u < alg->n_vertices() && e.src == v) act[u] = QMat::identity(1);
        }
        return make(alg, std::move(dims), std::move(act));
    }

    // Indecomposable projective P(v) = e_v A; its basis at vertex w consists
    // of the algebra basis elements v -> w.
    static ModPtr projective(const AlgebraPtr& alg, std::size_t v) {
        std::vector<std::vector<std::size_t>> elems(alg->n_vertices());
        for (std::size_t u = 0; u < alg->dim(); ++u)
            if (alg->elem(u).src == v) elems[alg->elem(u).tgt].push_back(u);
        std::vector<std::size_t> dims(alg->n_vertices());
        for (std::size_t w = 0; w < alg->n_vertices(); ++w) dims[w] = elems[w].size();
        std::vector<QMat> act(alg->dim());
        for (std::size_t u = 0; u < alg->dim(); ++u) {
            const auto& e = alg->elem(u);
            QMat m(dims[e.src], dims[e.tgt]);
            for (std::size_t r = 0; r < elems[e.src].size(); ++r) {
                auto prod = alg->table(elems[e.src][r], u);
                for (std::size_t c = 0; c < elems[e.tgt].size(); ++c) m.at(r, c) = prod[elems[e.tgt][c]];
            }
            act[u] = std::move(m);
        }
        return make(alg, std::move(dims), std::move(act));
    }

    // Path-algebra module literal: one matrix per arrow.
    static ModPtr from_arrow_matrices(const AlgebraPtr& alg, std::vector<std::size_t> dims,
                                      const std::vector<QMat>& arrow_mats) {
        if (!alg->is_path_algebra()) throw input_error("arrow matrices need a path algebra");
        std::vector<QMat> act(alg->dim());
        for (std::size_t u = 0; u < alg->dim(); ++u) {
            const auto& e = alg->elem(u);
            if (u < alg->n_vertices()) {
                act[u] = QMat::identity(dims[e.src]);
                continue;
            }
            QMat m = QMat::identity(dims[e.src]);
            for (std::size_t a : e.arrow_word) {
                if (a >= arrow_mats.size()) throw input_error("missing arrow matrix");
                m = m * arrow_mats[a];
            }
            act[u] = std::move(m);
        }
        return make(alg, std::move(dims), std::move(act));
    }

    static ModPtr direct_sum(const AlgebraPtr& alg, const std::vector<ModPtr>& parts) {
        std::vector<std::size_t> dims(alg->n_vertices(), 0);
        for (const auto& p : parts)
            for (std::size_t v = 0; v < alg->n_vertices(); ++v) dims[v] += p->dim(v);
        std::vector<QMat> act(alg->dim());
        for (std::size_t u = 0; u < alg->dim(); ++u) {
            const auto& e = alg->elem(u);
            QMat m(dims[e.src], dims[e.tgt]);
            std::size_t ro = 0, co = 0;
            for (const auto& p : parts) {
                const QMat& b = p->act(u);
                for (std::size_t i = 0; i < b.rows(); ++i)
                    for (std::size_t j = 0; j < b.cols(); ++j) m.at(ro + i, co + j) = b.at(i, j);
                ro += p->dim(e.src);
                co += p->dim(e.tgt);
            }
            act[u] = std::move(m);
        }
        return make(alg, std::move(dims), std::move(act));
    }

private:
    void validate() const {
        if (dims_.size() != alg_->n_vertices()) throw validation_error("module dims length mismatch");
        if (act_.size() != alg_->dim()) throw validation_error("module action table length mismatch");
        for (std::size_t u = 0; u < alg_->dim(); ++u) {
            const auto& e = alg_->elem(u);
            if (act_[u].rows() != dims_[e.src] || act_[u].cols() != dims_[e.tgt])
                throw validation_error("action matrix shape mismatch");
            if (u < alg_->n_vertices() && act_[u] != QMat::identity(dims_[u]))
                throw validation_error("idempotent must act as identity on its vertex space");
        }
        // Structure constants: act(u) * act(v) = act(u * v) for composable pairs.
        for (std::size_t u = 0; u < alg_->dim(); ++u)
            for (std::size_t v = 0; v < alg_->dim(); ++v) {
                const auto& eu = alg_->elem(u);
                const auto& ev = alg_->elem(v);
                if (eu.tgt != ev.src) continue;
                QMat lhs = act_[u] * act_[v];
                QMat rhs = act_block(alg_->table(u, v), eu.src, ev.tgt);
                if (lhs != rhs) throw validation_error("module action violates structure constants");
            }
    }

    AlgebraPtr alg_;
    std::vector<std::size_t> dims_;
    std::vector<QMat> act_;
};

// Module homomorphism: one block per vertex, commuting with all actions.
struct ModuleMap {
    ModPtr src;
    ModPtr tgt;
    std::vector<QMat> blocks;

    static ModuleMap zero(const ModPtr& m, const ModPtr& n) {
        ModuleMap f{m, n, {}};
        for (std::size_t v = 0; v < m->algebra()->n_vertices(); ++v)
            f.blocks.emplace_back(m->dim(v), n->dim(v));
        return f;
    }

    static ModuleMap identity(const ModPtr& m) {
        ModuleMap f{m, m, {}};
        for (std::size_t v = 0; v < m->algebra()->n_vertices(); ++v)
            f.blocks.push_back(QMat::identity(m->dim(v)));
        return f;
    }

    bool is_zero() const {
        for (const auto& b : blocks)
            if (!b.is_zero()) return false;
        return true;
    }

    ModuleMap operator+(const ModuleMap& o) const {
        ModuleMap r = *this;
        for (std::size_t v = 0; v < blocks.size(); ++v) r.blocks[v] = blocks[v] + o.blocks[v];
        return r;
    }

    ModuleMap operator-(const ModuleMap& o) const {
        ModuleMap r = *this;
        for (std::size_t v = 0; v < blocks.size(); ++v) r.blocks[v] = blocks[v] - o.blocks[v];
        return r;
    }

    ModuleMap scaled(const Rat& c) const {
        ModuleMap r = *this;
        for (auto& b : r.blocks) b = b.scaled(c);
        return r;
    }

    bool is_invertible() const {
        for (const auto& b : blocks)
            if (!taucat::is_invertible(b)) return false;
        return true;
    }

    void validate() const {
        const auto& alg = src->algebra();
        for (std::size_t u = alg->n_vertices(); u < alg->dim(); ++u) {
            const auto& e = alg->elem(u);
            if (src->act(u) * blocks[e.tgt] != blocks[e.src] * tgt->act(u))
                throw validation_error("map does not commute with the action");
        }
    }
};

// f then g.
inline ModuleMap compose(const ModuleMap& f, const ModuleMap& g) {
    ModuleMap r{f.src, g.tgt, {}};
    for (std::size_t v = 0; v < f.blocks.size(); ++v) r.blocks.push_back(f.blocks[v] * g.blocks[v]);
    return r;
}

namespace detail {

inline std::vector<std::size_t> hom_var_offsets(const FdModule& m, const FdModule& n,
                                                std::size_t& total) {
    std::size_t nv = m.algebra()->n_vertices();
    std::vector<std::size_t> off(nv, 0);
    total = 0;
    for (std::size_t v = 0; v < nv; ++v) {
        off[v] = total;
        total += m.dim(v) * n.dim(v);
    }
    return off;
}

}  // namespace detail

// Basis of Hom_A(M, N), canonical (rref of the commuting-tuple kernel).
inline std::vector<ModuleMap> hom_basis(const ModPtr& m, const ModPtr& n) {
    if (m->algebra() != n->algebra()) throw validation_error("hom_basis: algebra mismatch");
    const auto& alg = m->algebra();
    std::size_t nvars = 0;
    auto off = detail::hom_var_offsets(*m, *n, nvars);
    std::size_t neqs = 0;
    for (std::size_t u = alg->n_vertices(); u < alg->dim(); ++u) {
        const auto& e = alg->elem(u);
        neqs += m->dim(e.src) * n->dim(e.tgt);
    }
    QMat sys(neqs, nvars);
    std::size_t row = 0;
    for (std::size_t u = alg->n_vertices(); u < alg->dim(); ++u) {
        const auto& e = alg->elem(u);
        const QMat& am = m->act(u);
        const QMat& an = n->act(u);
        for (std::size_t r = 0; r < m->dim(e.src); ++r)
            for (std::size_t q = 0; q < n->dim(e.tgt); ++q, ++row) {
                // (act_M[u] * f_tgt)(r,q) - (f_src * act_N[u])(r,q) = 0
                for (std::size_t p = 0; p < m->dim(e.tgt); ++p)
                    if (am.at(r, p) != 0)
                        sys.at(row, off[e.tgt] + p * n->dim(e.tgt) + q) += am.at(r, p);
                for (std::size_t s = 0; s < n->dim(e.src); ++s)
                    if (an.at(s, q) != 0)
                        sys.at(row, off[e.src] + r * n->dim(e.src) + s) -= an.at(s, q);
            }
    }
    QMat sols = kernel(sys);
    std::vector<ModuleMap> out;
    for (std::size_t k = 0; k < sols.rows(); ++k) {
        ModuleMap f{m, n, {}};
        for (std::size_t v = 0; v < alg->n_vertices(); ++v) {
            QMat b(m->dim(v), n->dim(v));
            for (std::size_t i = 0; i < m->dim(v); ++i)
                for (std::size_t j = 0; j < n->dim(v); ++j)
                    b.at(i, j) = sols.at(k, off[v] + i * n->dim(v) + j);
            f.blocks.push_back(std::move(b));
        }
        f.validate();
        out.push_back(std::move(f));
    }
    return out;
}

inline std::size_t hom_dim(const ModPtr& m, const ModPtr& n) { return hom_basis(m, n).size(); }

// --- submodules and quotients ------------------------------------------------

struct SubmoduleResult {
    ModPtr module;
    ModuleMap inclusion;
};

struct QuotientResult {
    ModPtr module;
    ModuleMap projection;
};

// Builds the submodule on per-vertex subspaces; they must be action-stable.
inline SubmoduleResult submodule(const ModPtr& m, const std::vector<Subspace>& sub) {
    const auto& alg = m->algebra();
    std::vector<std::size_t> dims(alg->n_vertices());
    for (std::size_t v = 0; v < alg->n_vertices(); ++v) dims[v] = sub[v].dim();
    std::vector<QMat> act(alg->dim());
    for (std::size_t u = 0; u < alg->dim(); ++u) {
        const auto& e = alg->elem(u);
        QMat b(dims[e.src], dims[e.tgt]);
        for (std::size_t r = 0; r < dims[e.src]; ++r) {
            std::vector<Rat> img(m->dim(e.tgt));
            auto srow = sub[e.src].basis().row(r);
            for (std::size_t j = 0; j < m->dim(e.tgt); ++j) {
                Rat acc = 0;
                for (std::size_t i = 0; i < m->dim(e.src); ++i) acc += srow[i] * m->act(u).at(i, j);
                img[j] = acc;
            }
            auto coords = sub[e.tgt].coordinates(img);
            if (!coords) throw validation_error("subspaces are not action-stable");
            for (std::size_t c = 0; c < dims[e.tgt]; ++c) b.at(r, c) = (*coords)[c];
        }
        act[u] = std::move(b);
    }
    auto s = FdModule::make(alg, std::move(dims), std::move(act));
    ModuleMap incl{s, m, {}};
    for (std::size_t v = 0; v < alg->n_vertices(); ++v) incl.blocks.push_back(sub[v].basis());
    incl.validate();
    return {s, incl};
}

inline QuotientResult quotient(const ModPtr& m, const std::vector<Subspace>& sub) {
    const auto& alg = m->algebra();
    std::vector<QuotientSpace> qs;
    for (std::size_t v = 0; v < alg->n_vertices(); ++v)
        qs.emplace_back(Subspace::full(m->dim(v)), sub[v]);
    std::vector<std::size_t> dims(alg->n_vertices());
    std::vector<QMat> proj(alg->n_vertices());
    for (std::size_t v = 0; v < alg->n_vertices(); ++v) {
        dims[v] = qs[v].dim();
        QMat p(m->dim(v), dims[v]);
        for (std::size_t i = 0; i < m->dim(v); ++i) {
            std::vector<Rat> unit(m->dim(v));
            unit[i] = 1;
            auto cls = qs[v].project(unit);
            for (std::size_t j = 0; j < dims[v]; ++j) p.at(i, j) = cls[j];
        }
        proj[v] = std::move(p);
    }
    std::vector<QMat> act(alg->dim());
    for (std::size_t u = 0; u < alg->dim(); ++u) {
        const auto& e = alg->elem(u);
        QMat b(dims[e.src], dims[e.tgt]);
        for (std::size_t r = 0; r < dims[e.src]; ++r) {
            std::vector<Rat> rep = qs[e.src].reps()[r];
            std::vector<Rat> img(m->dim(e.tgt));
            for (std::size_t j = 0; j < m->dim(e.tgt); ++j) {
                Rat acc = 0;
                for (std::size_t i = 0; i < m->dim(e.src); ++i) acc += rep[i] * m->act(u).at(i, j);
                img[j] = acc;
            }
            auto cls = qs[e.tgt].project(img);
            for (std::size_t c = 0; c < dims[e.tgt]; ++c) b.at(r, c) = cls[c];
        }
        act[u] = std::move(b);
    }
    auto q = FdModule::make(alg, std::move(dims), std::move(act));
    ModuleMap pm{m, q, std::move(proj)};
    pm.validate();
    return {q, pm};
}

inline std::vector<Subspace> kernel_subspaces(const ModuleMap& f) {
    std::vector<Subspace> out;
    for (const auto& b : f.blocks) out.push_back(Subspace::span(left_kernel(b)));
    return out;
}

inline std::vector<Subspace> image_subspaces(const ModuleMap& f) {
    std::vector<Subspace> out;
    for (const auto& b : f.blocks) out.push_back(Subspace::span(b));
    return out;
}

inline SubmoduleResult kernel_module(const ModuleMap& f) { return submodule(f.src, kernel_subspaces(f)); }
inline SubmoduleResult image_module(const ModuleMap& f) { return submodule(f.tgt, image_subspaces(f)); }
inline QuotientResult cokernel_module(const ModuleMap& f) { return quotient(f.tgt, image_subspaces(f)); }

// --- radical, socle, tops ----------------------------------------------------

inline std::vector<Subspace> radical_subspaces(const ModPtr& m) {
    const auto& alg = m->algebra();
    const Subspace& rad = alg->radical();
    std::vector<QMat> gens(alg->n_vertices(), QMat(0, 0));
    for (std::size_t w = 0; w < alg->n_vertices(); ++w) gens[w] = QMat(0, m->dim(w));
    for (std::size_t r = 0; r < rad.dim(); ++r) {
        auto x = rad.basis().row(r);
        for (std::size_t v = 0; v < alg->n_vertices(); ++v)
            for (std::size_t w = 0; w < alg->n_vertices(); ++w) {
                QMat blk = m->act_block(x, v, w);
                if (!blk.is_zero()) gens[w] = gens[w].vstack(blk);
            }
    }
    std::vector<Subspace> out;
    for (std::size_t w = 0; w < alg->n_vertices(); ++w) out.push_back(Subspace::span(gens[w]));
    return out;
}

inline std::vector<Subspace> socle_subspaces(const ModPtr& m) {
    const auto& alg = m->algebra();
    const Subspace& rad = alg->radical();
    std::vector<Subspace> out;
    for (std::size_t v = 0; v < alg->n_vertices(); ++v) {
        Subspace s = Subspace::full(m->dim(v));
        for (std::size_t r = 0; r < rad.dim(); ++r) {
            auto x = rad.basis().row(r);
            for (std::size_t w = 0; w < alg->n_vertices(); ++w) {
                QMat blk = m->act_block(x, v, w);
                s = s.intersect(Subspace::span(left_kernel(blk)));
            }
        }
        out.push_back(s);
    }
    return out;
}

inline QuotientResult top_module(const ModPtr& m) { return quotient(m, radical_subspaces(m)); }

// --- projective covers and presentations -------------------------------------

struct ProjCover {
    ModPtr cover;                      // direct sum of indecomposable projectives
    std::vector<std::size_t> verts;    // summand vertices in order
    ModuleMap surjection;
};

namespace detail {

inline ModPtr projective_sum(const AlgebraPtr& alg, const std::vector<std::size_t>& verts) {
    std::vector<ModPtr> parts;
    parts.reserve(verts.size());
    for (auto v : verts) parts.push_back(FdModule::projective(alg, v));
    return FdModule::direct_sum(alg, parts);
}

}  // namespace detail

// Projective cover P(top M) ->> M; kernel lies in rad P by a top-dimension count.
inline ProjCover projective_cover(const ModPtr& m) {
    if (m->is_zero()) throw validation_error("projective cover of the zero module");
    const auto& alg = m->algebra();
    auto rad = radical_subspaces(m);
    std::vector<std::size_t> verts;
    std::vector<std::vector<Rat>> gens;  // lifted top basis rows, aligned with verts
    for (std::size_t v = 0; v < alg->n_vertices(); ++v) {
        QuotientSpace q(Subspace::full(m->dim(v)), rad[v]);
        for (const auto& rep : q.reps()) {
            verts.push_back(v);
            gens.push_back(rep);
        }
    }
    ModPtr p = detail::projective_sum(alg, verts);
    ModuleMap f = ModuleMap::zero(p, m);
    // Summand k at vertex verts[k]: its basis element "path verts[k] -> w"
    // maps to gens[k] * act(path).
    std::vector<std::size_t> row_offset(alg->n_vertices(), 0);
    for (std::size_t k = 0; k < verts.size(); ++k) {
        for (std::size_t u = 0; u < alg->dim(); ++u) {
            const auto& e = alg->elem(u);
            if (e.src != verts[k]) continue;
            std::size_t w = e.tgt;
            // Row index of this basis element inside the direct sum at vertex w.
            // Direct sum stacks summands in order, each P(verts[k]) contributing
            // its elements v->w (ordered by basis index u).
            std::size_t row = 0;
            for (std::size_t k2 = 0; k2 < k; ++k2)
                for (std::size_t u2 = 0; u2 < alg->dim(); ++u2)
                    if (alg->elem(u2).src == verts[k2] && alg->elem(u2).tgt == w) ++row;
            for (std::size_t u2 = 0; u2 < u; ++u2)
                if (alg->elem(u2).src == verts[k] && alg->elem(u2).tgt == w) ++row;
            std::vector<Rat> img(m->dim(w));
            for (std::size_t j = 0; j < m->dim(w); ++j) {
                Rat acc = 0;
                for (std::size_t i = 0; i < m->dim(verts[k]); ++i)
                    acc += gens[k][i] * m->act(u).at(i, j);
                img[j] = acc;
            }
            for (std::size_t j = 0; j < m->dim(w); ++j) f.blocks[w].at(row, j) = img[j];
        }
    }
    f.validate();
    for (std::size_t v = 0; v < alg->n_vertices(); ++v)
        if (rank(f.blocks[v]) != m->dim(v)) throw validation_error("projective cover not surjective");
    // Minimality: dim top(P) == dim top(M) <=> ker f <= rad P.
    auto top_p = top_module(p);
    auto top_m = top_module(m);
    if (top_p.module->total_dim() != top_m.module->total_dim())
        throw validation_error("projective cover not minimal");
    return {p, std::move(verts), std::move(f)};
}

struct MinPresentation {
    std::vector<std::size_t> p1_verts;
    std::vector<std::size_t> p0_verts;
    ModPtr p1;
    ModPtr p0;
    ModuleMap differential;  // p1 -> p0
    ModuleMap augmentation;  // p0 ->> M
};

inline MinPresentation min_proj_presentation(const ModPtr& m) {
    const auto& alg = m->algebra();
    if (m->is_zero()) {
        auto z = FdModule::zero(alg);
        return {{}, {}, z, z, ModuleMap::zero(z, z), ModuleMap::zero(z, m)};
    }
    ProjCover c0 = projective_cover(m);
    auto ker = kernel_module(c0.surjection);
    if (ker.module->is_zero()) {
        auto z = FdModule::zero(alg);
        return {{}, c0.verts, z, c0.cover, ModuleMap::zero(z, c0.cover), c0.surjection};
    }
    ProjCover c1 = projective_cover(ker.module);
    ModuleMap d = compose(c1.surjection, ker.inclusion);
    return {c1.verts, c0.verts, c1.cover, c0.cover, std::move(d), c0.surjection};
}

// --- matrices over the algebra between sums of projectives --------------------

// Map (+) e_{src[s]}A -> (+) e_{tgt[t]}A, xi |-> (sum_s entry(t,s) * xi_s).
// Entries are algebra elements e_{tgt[t]} A e_{src[s]} (paths tgt[t] -> src[s]).
struct AMat {
    AlgebraPtr alg;
    std::vector<std::size_t> src_verts;
    std::vector<std::size_t> tgt_verts;
    std::vector<std::vector<Rat>> entries;  // (t * src_verts.size() + s)

    static AMat zero(const AlgebraPtr& alg, std::vector<std::size_t> src,
                     std::vector<std::size_t> tgt) {
        AMat m{alg, std::move(src), std::move(tgt), {}};
        m.entries.assign(m.src_verts.size() * m.tgt_verts.size(), std::vector<Rat>(alg->dim()));
        return m;
    }

    std::vector<Rat>& entry(std::size_t t, std::size_t s) { return entries[t * src_verts.size() + s]; }
    const std::vector<Rat>& entry(std::size_t t, std::size_t s) const {
        return entries[t * src_verts.size() + s];
    }

    bool is_zero() const {
        for (const auto& e : entries)
            for (const auto& c : e)
                if (c != 0) return false;
        return true;
    }

    AMat operator+(const AMat& o) const {
        AMat r = *this;
        for (std::size_t k = 0; k < entries.size(); ++k)
            for (std::size_t c = 0; c < alg->dim(); ++c) r.entries[k][c] += o.entries[k][c];
        return r;
    }

    AMat scaled(const Rat& f) const {
        AMat r = *this;
        for (auto& e : r.entries)
            for (auto& c : e) c *= f;
        return r;
    }

    AMat negated() const { return scaled(Rat(-1)); }
};

// f then g, as maps of projective sums.
inline AMat acompose(const AMat& f, const AMat& g) {
    AMat r = AMat::zero(f.alg, f.src_verts, g.tgt_verts);
    for (std::size_t u = 0; u < g.tgt_verts.size(); ++u)
        for (std::size_t s = 0; s < f.src_verts.size(); ++s) {
            std::vector<Rat> acc(f.alg->dim());
            for (std::size_t t = 0; t < f.tgt_verts.size(); ++t) {
                auto prod = f.alg->multiply(g.entry(u, t), f.entry(t, s));
                for (std::size_t c = 0; c < f.alg->dim(); ++c) acc[c] += prod[c];
            }
            r.entry(u, s) = std::move(acc);
        }
    return r;
}

// Reinterpret over the opposite algebra: Hom(-, A) on projectives.
inline AMat transpose_op(const AMat& m, const AlgebraPtr& opposite) {
    AMat r = AMat::zero(opposite, m.tgt_verts, m.src_verts);
    for (std::size_t t = 0; t < m.tgt_verts.size(); ++t)
        for (std::size_t s = 0; s < m.src_verts.size(); ++s) r.entry(s, t) = m.entry(t, s);
    return r;
}

inline ModuleMap realize(const AMat& m) {
    const auto& alg = m.alg;
    ModPtr src = detail::projective_sum(alg, m.src_verts);
    ModPtr tgt = detail::projective_sum(alg, m.tgt_verts);
    ModuleMap f = ModuleMap::zero(src, tgt);
    for (std::size_t w = 0; w < alg->n_vertices(); ++w) {
        std::size_t row = 0;
        for (std::size_t s = 0; s < m.src_verts.size(); ++s) {
            for (std::size_t u = 0; u < alg->dim(); ++u) {
                if (alg->elem(u).src != m.src_verts[s] || alg->elem(u).tgt != w) continue;
                // Image of basis path u under each entry: entry(t,s) * u.
                std::size_t col = 0;
                for (std::size_t t = 0; t < m.tgt_verts.size(); ++t) {
                    auto img = alg->multiply(m.entry(t, s), alg->coord_of(u));
                    for (std::size_t u2 = 0; u2 < alg->dim(); ++u2) {
                        if (alg->elem(u2).src != m.tgt_verts[t] || alg->elem(u2).tgt != w) continue;
                        f.blocks[w].at(row, col) = img[u2];
                        ++col;
                    }
                }
                ++row;
            }
        }
    }
    f.validate();
    return f;
}

// Recovers the algebra-entry matrix of a map between realized projective sums.
inline AMat amat_of(const ModuleMap& f, const std::vector<std::size_t>& src_verts,
                    const std::vector<std::size_t>& tgt_verts) {
    const auto& alg = f.src->algebra();
    AMat m = AMat::zero(alg, src_verts, tgt_verts);
    for (std::size_t s = 0; s < src_verts.size(); ++s) {
        std::size_t v = src_verts[s];
        // Row of the generator e_v of summand s inside vertex space v.
        std::size_t row = 0;
        for (std::size_t s2 = 0; s2 < s; ++s2)
            for (std::size_t u = 0; u < alg->dim(); ++u)
                if (alg->elem(u).src == src_verts[s2] && alg->elem(u).tgt == v) ++row;
        for (std::size_t u = 0; u < alg->dim(); ++u) {
            if (alg->elem(u).src == v && alg->elem(u).tgt == v) {
                if (u == v) break;  // the idempotent e_v itself
                ++row;
            }
        }
        // Image row decomposes over (t, path tgt_verts[t] -> v).
        std::size_t col = 0;
        for (std::size_t t = 0; t < tgt_verts.size(); ++t)
            for (std::size_t u = 0; u < alg->dim(); ++u) {
                if (alg->elem(u).src != tgt_verts[t] || alg->elem(u).tgt != v) continue;
                m.entry(t, s)[u] = f.blocks[v].at(row, col);
                ++col;
            }
    }
    return m;
}

// --- Auslander-Reiten translate ----------------------------------------------

// Dual of a right A-module is a right A^op-module: transpose all actions.
inline ModPtr dual_module(const ModPtr& m, const AlgebraPtr& opposite) {
    std::vector<QMat> act(opposite->dim());
    for (std::size_t u = 0; u < opposite->dim(); ++u) act[u] = m->act(u).transpose();
    return FdModule::make(opposite, m->dims(), std::move(act));
}

// Transpose Tr M = coker(P0* -> P1*) over A^op, from the minimal presentation.
inline ModPtr transpose_module(const ModPtr& m, const AlgebraPtr& opposite) {
    MinPresentation pres = min_proj_presentation(m);
    if (pres.p1_verts.empty() && pres.p0_verts.empty()) return FdModule::zero(opposite);
    AMat d = amat_of(pres.differential, pres.p1_verts, pres.p0_verts);
    AMat dstar = transpose_op(d, opposite);
    if (pres.p1_verts.empty()) return FdModule::zero(opposite);  // projective module
    ModuleMap ds = realize(dstar);
    return cokernel_module(ds).module;
}

// tau(M) = D Tr M; tau of a projective is zero.
inline ModPtr tau(const ModPtr& m) {
    auto opposite = m->algebra()->opposite();
    ModPtr tr = transpose_module(m, opposite);
    return dual_module(tr, m->algebra());
}

// tau^{-}(M) = Tr D M.
inline ModPtr tau_minus(const ModPtr& m) {
    auto opposite = m->algebra()->opposite();
    ModPtr d = dual_module(m, opposite);
    return transpose_module(d, m->algebra());
}

// --- Ext^1 ---------------------------------------------------------------------

// dim Ext^1(X, Y) from 0 -> Omega X -> P0 -> X -> 0.
inline std::size_t ext1_dim(const ModPtr& x, const ModPtr& y) {
    if (x->is_zero() || y->is_zero()) return 0;
    ProjCover c = projective_cover(x);
    auto omega = kernel_module(c.surjection);
    std::size_t h_omega = hom_dim(omega.module, y);
    std::size_t h_p0 = hom_dim(c.cover, y);
    std::size_t h_x = hom_dim(x, y);
    return h_omega - h_p0 + h_x;
}

// Basis of Ext^1(X, Y) as maps Omega X -> Y modulo restrictions from P0.
struct Ext1Basis {
    SubmoduleResult omega;      // Omega X inside P0
    ProjCover cover;            // P0 ->> X
    std::vector<ModuleMap> reps;  // maps Omega -> Y spanning Ext^1
};

inline Ext1Basis ext1_basis(const ModPtr& x, const ModPtr& y) {
    ProjCover c = projective_cover(x);
    auto omega = kernel_module(c.surjection);
    auto from_omega = hom_basis(omega.module, y);
    auto from_p0 = hom_basis(c.cover, y);
    // Classes of Hom(Omega, Y) modulo restrictions of Hom(P0, Y).
    std::size_t nvars = 0;
    auto off = detail::hom_var_offsets(*omega.module, *y, nvars);
    auto flatten = [&](const ModuleMap& f) {
        std::vector<Rat> v(nvars);
        for (std::size_t vert = 0; vert < f.blocks.size(); ++vert)
            for (std::size_t i = 0; i < f.blocks[vert].rows(); ++i)
                for (std::size_t j = 0; j < f.blocks[vert].cols(); ++j)
                    v[off[vert] + i * f.blocks[vert].cols() + j] = f.blocks[vert].at(i, j);
        return v;
    };
    QMat restr(from_p0.size(), nvars);
    for (std::size_t k = 0; k < from_p0.size(); ++k)
        restr.set_row(k, flatten(compose(omega.inclusion, from_p0[k])));
    QMat total(from_omega.size(), nvars);
    for (std::size_t k = 0; k < from_omega.size(); ++k) total.set_row(k, flatten(from_omega[k]));
    Subspace sub = Subspace::span(restr);
    Ext1Basis out{omega, c, {}};
    QMat acc = sub.basis();
    for (std::size_t k = 0; k < from_omega.size(); ++k) {
        QMat cand = acc.vstack(QMat::from_rows({total.row(k)}));
        if (rank(cand) > acc.rows()) {
            out.reps.push_back(from_omega[k]);
            acc = rref(cand).mat.submatrix(0, 0, acc.rows() + 1, nvars);
        }
    }
    return out;
}

// Middle term of the extension of X by Y given by f: Omega X -> Y,
// i.e. the pushout (Y (+) P0) / {(-f(w), incl(w))}.
inline ModPtr extension_middle(const Ext1Basis& eb, const ModuleMap& f, const ModPtr& y) {
    const auto& alg = y->algebra();
    ModPtr sum = FdModule::direct_sum(alg, {y, eb.cover.cover});
    std::vector<Subspace> anti;
    for (std::size_t v = 0; v < alg->n_vertices(); ++v) {
        std::size_t n_omega = eb.omega.module->dim(v);
        QMat gens(n_omega, sum->dim(v));
        for (std::size_t r = 0; r < n_omega; ++r) {
            for (std::size_t j = 0; j < y->dim(v); ++j) gens.at(r, j) = -f.blocks[v].at(r, j);
            for (std::size_t j = 0; j < eb.cover.cover->dim(v); ++j)
                gens.at(r, y->dim(v) + j) = eb.omega.inclusion.blocks[v].at(r, j);
        }
        anti.push_back(Subspace::span(gens));
    }
    return quotient(sum, anti).module;
}

// --- Gen, trace, torsion-free functor -----------------------------------------

inline std::vector<Subspace> trace_subspaces(const ModPtr& m, const ModPtr& x) {
    const auto& alg = m->algebra();
    auto maps = hom_basis(m, x);
    std::vector<QMat> gens(alg->n_vertices(), QMat(0, 0));
    for (std::size_t v = 0; v < alg->n_vertices(); ++v) gens[v] = QMat(0, x->dim(v));
    for (const auto& f : maps)
        for (std::size_t v = 0; v < alg->n_vertices(); ++v) gens[v] = gens[v].vstack(f.blocks[v]);
    std::vector<Subspace> out;
    for (std::size_t v = 0; v < alg->n_vertices(); ++v) out.push_back(Subspace::span(gens[v]));
    return out;
}

// True iff the evaluation map M^{dim Hom(M,X)} -> X is surjective.
inline bool gen_membership(const ModPtr& m, const ModPtr& x) {
    auto tr = trace_subspaces(m, x);
    for (std::size_t v = 0; v < m->algebra()->n_vertices(); ++v)
        if (tr[v].dim() != x->dim(v)) return false;
    return true;
}

// f_M(X) = X / tr_M(X), the torsion-free quotient for (Gen M, M-perp).
inline QuotientResult torsion_free_quotient(const ModPtr& m, const ModPtr& x) {
    auto q = quotient(x, trace_subspaces(m, x));
    if (hom_dim(m, q.module) != 0)
        throw validation_error("torsion-free quotient retained maps from M");
    return q;
}

inline bool is_tau_rigid(const ModPtr& m) { return hom_dim(m, tau(m)) == 0; }

}  // namespace taucat

#endif
