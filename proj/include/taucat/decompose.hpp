#ifndef TAUCAT_DECOMPOSE_HPP
#define TAUCAT_DECOMPOSE_HPP

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "taucat/module.hpp"

namespace taucat {

inline QMat total_matrix(const ModuleMap& f) {
    std::size_t rows = f.src->total_dim();
    std::size_t cols = f.tgt->total_dim();
    QMat m(rows, cols);
    std::size_t ro = 0, co = 0;
    for (std::size_t v = 0; v < f.blocks.size(); ++v) {
        for (std::size_t i = 0; i < f.blocks[v].rows(); ++i)
            for (std::size_t j = 0; j < f.blocks[v].cols(); ++j)
                m.at(ro + i, co + j) = f.blocks[v].at(i, j);
        ro += f.blocks[v].rows();
        co += f.blocks[v].cols();
    }
    return m;
}

namespace detail {

inline QMat mat_pow(QMat m, std::size_t k) {
    QMat acc = QMat::identity(m.rows());
    for (std::size_t i = 0; i < k; ++i) acc = acc * m;
    return acc;
}

// Deterministic candidate endomorphisms: basis maps, pairwise sums,
// differences, products, then bounded triple sums. The search is only a
// splitting heuristic; indecomposability is certified independently below.
inline std::vector<ModuleMap> split_candidates(const std::vector<ModuleMap>& endos) {
    std::vector<ModuleMap> out = endos;
    for (std::size_t i = 0; i < endos.size(); ++i)
        for (std::size_t j = i + 1; j < endos.size(); ++j) {
            out.push_back(endos[i] + endos[j]);
            out.push_back(endos[i] - endos[j]);
        }
    for (std::size_t i = 0; i < endos.size(); ++i)
        for (std::size_t j = 0; j < endos.size(); ++j) {
            if (i == j) continue;
            out.push_back(compose(endos[i], endos[j]));
        }
    std::size_t budget = 4000;
    for (std::size_t i = 0; i < endos.size() && budget; ++i)
        for (std::size_t j = i + 1; j < endos.size() && budget; ++j)
            for (std::size_t k = j + 1; k < endos.size() && budget; ++k, --budget)
                out.push_back(endos[i] + endos[j] + endos[k]);
    return out;
}

// dim of End(M)/rad End(M) via the trace form of the action on M (char 0).
inline std::size_t end_mod_rad_dim(const std::vector<ModuleMap>& endos) {
    std::size_t n = endos.size();
    std::vector<QMat> mats;
    mats.reserve(n);
    for (const auto& f : endos) mats.push_back(total_matrix(f));
    QMat gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat tr = 0;
            QMat prod = mats[i] * mats[j];
            for (std::size_t d = 0; d < prod.rows(); ++d) tr += prod.at(d, d);
            gram.at(i, j) = tr;
        }
    return rank(gram);
}

}  // namespace detail

struct Decomposition {
    std::vector<ModPtr> parts;          // indecomposable, with repetition
    std::vector<ModuleMap> inclusions;  // part -> M
};

// Krull-Schmidt decomposition via Fitting splittings along endomorphisms with
// composite minimal polynomials; leaves are certified local (End/rad of
// dimension 1), otherwise a ground-field obstruction is reported.
inline Decomposition decompose_with_inclusions(const ModPtr& m) {
    Decomposition out;
    if (m->is_zero()) return out;
    auto endos = hom_basis(m, m);
    for (const auto& f : detail::split_candidates(endos)) {
        auto factors = minpoly_split(total_matrix(f));
        if (factors.size() < 2) continue;
        // Generalized eigenspace splitting: each factor yields a submodule.
        std::vector<std::pair<ModPtr, ModuleMap>> pieces;
        std::size_t dim_sum = 0;
        for (const auto& [p, mult] : factors) {
            std::vector<Subspace> ker;
            for (std::size_t v = 0; v < m->algebra()->n_vertices(); ++v)
                ker.push_back(Subspace::span(
                    left_kernel(detail::mat_pow(poly_eval(p, f.blocks[v]), mult))));
            auto sub = submodule(m, ker);
            dim_sum += sub.module->total_dim();
            pieces.emplace_back(sub.module, sub.inclusion);
        }
        if (dim_sum != m->total_dim())
            throw validation_error("Fitting decomposition does not exhaust the module");
        for (auto& [piece, incl] : pieces) {
            Decomposition sub = decompose_with_inclusions(piece);
            for (std::size_t k = 0; k < sub.parts.size(); ++k) {
                out.parts.push_back(sub.parts[k]);
                out.inclusions.push_back(compose(sub.inclusions[k], incl));
            }
        }
        // Verify the explicit isomorphism (+) parts -> M: stacked inclusions
        // must be invertible on every vertex space.
        ModPtr sum = FdModule::direct_sum(m->algebra(), out.parts);
        ModuleMap iso{sum, m, {}};
        for (std::size_t v = 0; v < m->algebra()->n_vertices(); ++v) {
            QMat blk(0, m->dim(v));
            for (const auto& inc : out.inclusions) blk = blk.vstack(inc.blocks[v]);
            iso.blocks.push_back(std::move(blk));
        }
        iso.validate();
        if (!iso.is_invertible())
            throw validation_error("decomposition produced a non-invertible comparison map");
        return out;
    }
    // No splitting found; certify indecomposability.
    if (detail::end_mod_rad_dim(endos) != 1)
        throw split_basic_error(
            "module is not certified indecomposable: End/rad has dimension != 1 "
            "(ground-field obstruction or exhausted splitting search)");
    out.parts.push_back(m);
    out.inclusions.push_back(ModuleMap::identity(m));
    return out;
}

// Isomorphism test for certified indecomposables: some pairwise composite of
// Hom bases must be invertible (soundness: units lie outside the radical,
// which is a subspace, so an invertible composite exists whenever an
// isomorphism does). Returns the isomorphism when found.
inline std::optional<ModuleMap> indec_iso(const ModPtr& x, const ModPtr& y) {
    if (x->dims() != y->dims()) return std::nullopt;
    if (x->is_zero()) return ModuleMap::zero(x, y);
    auto fwd = hom_basis(x, y);
    if (fwd.empty()) return std::nullopt;
    auto bwd = hom_basis(y, x);
    std::size_t end_x = hom_dim(x, x);
    if (fwd.size() != bwd.size() || fwd.size() != end_x || end_x != hom_dim(y, y))
        return std::nullopt;
    for (const auto& f : fwd)
        for (const auto& g : bwd)
            if (compose(f, g).is_invertible()) return f;
    return std::nullopt;
}

struct DecomposedSummand {
    ModPtr module;
    std::size_t multiplicity;
};

inline std::vector<DecomposedSummand> decompose(const ModPtr& m) {
    auto dec = decompose_with_inclusions(m);
    std::vector<DecomposedSummand> grouped;
    for (const auto& part : dec.parts) {
        bool found = false;
        for (auto& g : grouped)
            if (indec_iso(part, g.module)) {
                ++g.multiplicity;
                found = true;
                break;
            }
        if (!found) grouped.push_back({part, 1});
    }
    return grouped;
}

inline bool is_isomorphic(const ModPtr& m, const ModPtr& n) {
    if (m->algebra() != n->algebra()) return false;
    if (m->dims() != n->dims()) return false;
    if (m->is_zero()) return true;
    auto dm = decompose(m);
    auto dn = decompose(n);
    if (dm.size() != dn.size()) return false;
    std::vector<bool> used(dn.size(), false);
    for (const auto& a : dm) {
        bool matched = false;
        for (std::size_t j = 0; j < dn.size(); ++j) {
            if (used[j] || dn[j].multiplicity != a.multiplicity) continue;
            if (indec_iso(a.module, dn[j].module)) {
                used[j] = true;
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

// --- per-algebra context: registry of indecomposables, memoized basics -------

class ModuleContext;
using CtxPtr = std::shared_ptr<ModuleContext>;

class ModuleContext {
public:
    explicit ModuleContext(AlgebraPtr alg) : alg_(std::move(alg)) {
        for (std::size_t v = 0; v < alg_->n_vertices(); ++v) {
            projectives_.push_back(FdModule::projective(alg_, v));
            simples_.push_back(FdModule::simple(alg_, v));
        }
    }

    static CtxPtr make(AlgebraPtr alg) { return std::make_shared<ModuleContext>(std::move(alg)); }

    const AlgebraPtr& algebra() const { return alg_; }
    const std::vector<ModPtr>& projectives() const { return projectives_; }
    const std::vector<ModPtr>& simples() const { return simples_; }
    ModPtr projective(std::size_t v) const { return projectives_[v]; }
    ModPtr simple(std::size_t v) const { return simples_[v]; }

    // Registers an indecomposable (by isomorphism class) and returns its id.
    std::size_t register_indec(const ModPtr& m) {
        std::lock_guard<std::mutex> lock(mu_);
        for (std::size_t i = 0; i < indecs_.size(); ++i)
            if (indec_iso(m, indecs_[i])) return i;
        indecs_.push_back(m);
        names_.push_back(default_name(m));
        return indecs_.size() - 1;
    }

    std::size_t size() const {
        std::lock_guard<std::mutex> lock(mu_);
        return indecs_.size();
    }

    ModPtr indec(std::size_t id) const {
        std::lock_guard<std::mutex> lock(mu_);
        return indecs_[id];
    }

    std::string name(std::size_t id) const {
        std::lock_guard<std::mutex> lock(mu_);
        return names_[id];
    }

    // Sorted ids with multiplicity for an arbitrary module.
    std::vector<std::pair<std::size_t, std::size_t>> summand_ids(const ModPtr& m) {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (const auto& s : decompose(m)) out.emplace_back(register_indec(s.module), s.multiplicity);
        std::sort(out.begin(), out.end());
        return out;
    }

    std::string fingerprint(const ModPtr& m) {
        auto ids = summand_ids(m);
        if (ids.empty()) return "0";
        std::string s;
        for (auto [id, mult] : ids) {
            if (!s.empty()) s += "+";
            s += name(id);
            if (mult > 1) s += "^" + std::to_string(mult);
        }
        return s;
    }

    std::size_t tau_id(std::size_t id) {
        {
            std::lock_guard<std::mutex> lock(memo_mu_);
            auto it = tau_memo_.find(id);
            if (it != tau_memo_.end()) return it->second;
        }
        ModPtr t = tau(indec(id));
        std::size_t tid = t->is_zero() ? static_cast<std::size_t>(-1) : register_indec(t);
        std::lock_guard<std::mutex> lock(memo_mu_);
        tau_memo_[id] = tid;
        return tid;  // -1 encodes tau = 0 (projectives)
    }

    // Type-erased per-context cache for expensive derived structures.
    std::shared_ptr<void> aux_get(const std::string& key) const {
        std::lock_guard<std::mutex> lock(aux_mu_);
        auto it = aux_.find(key);
        return it == aux_.end() ? nullptr : it->second;
    }

    void aux_put(const std::string& key, std::shared_ptr<void> value) const {
        std::lock_guard<std::mutex> lock(aux_mu_);
        aux_.emplace(key, std::move(value));
    }

    std::size_t hom_dim_ids(std::size_t a, std::size_t b) {
        auto key = std::make_pair(a, b);
        {
            std::lock_guard<std::mutex> lock(memo_mu_);
            auto it = hom_memo_.find(key);
            if (it != hom_memo_.end()) return it->second;
        }
        std::size_t d = hom_dim(indec(a), indec(b));
        std::lock_guard<std::mutex> lock(memo_mu_);
        hom_memo_[key] = d;
        return d;
    }

    std::size_t ext1_ids(std::size_t a, std::size_t b) {
        auto key = std::make_pair(a, b);
        {
            std::lock_guard<std::mutex> lock(memo_mu_);
            auto it = ext_memo_.find(key);
            if (it != ext_memo_.end()) return it->second;
        }
        std::size_t d = ext1_dim(indec(a), indec(b));
        std::lock_guard<std::mutex> lock(memo_mu_);
        ext_memo_[key] = d;
        return d;
    }

private:
    std::string default_name(const ModPtr& m) {
        for (std::size_t v = 0; v < alg_->n_vertices(); ++v) {
            if (indec_iso(m, projectives_[v])) {
                if (indec_iso(m, simples_[v])) return "S" + vertex_label(v);
                return "P" + vertex_label(v);
            }
            if (indec_iso(m, simples_[v])) return "S" + vertex_label(v);
        }
        std::string base = "M(";
        for (std::size_t v = 0; v < m->dims().size(); ++v)
            base += (v ? "," : "") + std::to_string(m->dim(v));
        base += ")";
        std::size_t copies = 0;
        for (const auto& n : names_)
            if (n.rfind(base, 0) == 0) ++copies;
        if (copies) base += "#" + std::to_string(copies + 1);
        return base;
    }

    std::string vertex_label(std::size_t v) const {
        if (alg_->is_path_algebra() && v < alg_->quiver().vertices.size())
            return alg_->quiver().vertices[v];
        return std::to_string(v + 1);
    }

    AlgebraPtr alg_;
    std::vector<ModPtr> projectives_;
    std::vector<ModPtr> simples_;
    mutable std::mutex mu_;
    std::vector<ModPtr> indecs_;
    std::vector<std::string> names_;
    std::mutex memo_mu_;
    std::map<std::size_t, std::size_t> tau_memo_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> hom_memo_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> ext_memo_;
    mutable std::mutex aux_mu_;
    mutable std::map<std::string, std::shared_ptr<void>> aux_;
};

// Closure enumeration of the indecomposables of a representation-finite
// algebra: projectives and simples, closed under tau, tau^{-}, radicals,
// socle quotients, and middle terms of Ext^1 basis elements. Overflowing the
// cap is an error, never a silent truncation.
inline std::vector<std::size_t> enumerate_indecomposables(const CtxPtr& ctx,
                                                          std::size_t cap = 512) {
    std::vector<std::size_t> ids;
    // Unbounded dimension growth is the signature of representation-infinite
    // input; bail out before the exact arithmetic becomes the bottleneck.
    const std::size_t dim_cap = std::max<std::size_t>(32, 16 * ctx->algebra()->n_vertices());
    auto add_module = [&](const ModPtr& m) {
        if (m->is_zero()) return;
        if (m->total_dim() > 2 * dim_cap)
            throw cap_error("indecomposable enumeration exceeded the dimension cap (" +
                            std::to_string(2 * dim_cap) + "); representation-infinite input?");
        for (const auto& s : decompose(m)) {
            if (s.module->total_dim() > dim_cap)
                throw cap_error("indecomposable enumeration exceeded the dimension cap (" +
                                std::to_string(dim_cap) + "); representation-infinite input?");
            std::size_t id = ctx->register_indec(s.module);
            if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
            if (ids.size() > cap) throw cap_error("indecomposable enumeration exceeded cap");
        }
    };
    for (const auto& p : ctx->projectives()) add_module(p);
    for (const auto& s : ctx->simples()) add_module(s);

    std::size_t processed = 0;
    std::size_t pair_round = 0;
    while (processed < ids.size() || pair_round < ids.size()) {
        while (processed < ids.size()) {
            ModPtr x = ctx->indec(ids[processed]);
            ++processed;
            add_module(tau(x));
            add_module(tau_minus(x));
            add_module(submodule(x, radical_subspaces(x)).module);
            add_module(quotient(x, socle_subspaces(x)).module);
        }
        // Extension middle terms over all ordered pairs seen so far.
        if (pair_round < ids.size()) {
            std::size_t upto = ids.size();
            for (std::size_t i = 0; i < upto; ++i)
                for (std::size_t j = (i < pair_round ? pair_round : 0); j < upto; ++j) {
                    ModPtr x = ctx->indec(ids[i]);
                    ModPtr y = ctx->indec(ids[j]);
                    if (ext1_dim(x, y) == 0) continue;
                    auto eb = ext1_basis(x, y);
                    for (const auto& rep : eb.reps) add_module(extension_middle(eb, rep, y));
                }
            pair_round = upto;
        }
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

// --- endomorphism algebras -----------------------------------------------------

// End of a basic module (+) X_i, as a based algebra. Basis element with
// source i and target j corresponds to a linear map X_j -> X_i; the product
// is then left-to-right like path composition, and Hom(X_i, -) spaces become
// right modules with vertex i.
struct EndAlgebra {
    AlgebraPtr alg;                       // the endomorphism algebra B
    std::vector<ModPtr> summands;         // X_i, pairwise non-isomorphic indecomposables
    std::vector<ModuleMap> elem_maps;     // linear map for each basis element of B

    // Linear map X_j -> X_i attached to an arbitrary element of B.
    ModuleMap map_of(const std::vector<Rat>& coords, std::size_t i, std::size_t j) const {
        ModuleMap acc = ModuleMap::zero(summands[j], summands[i]);
        for (std::size_t u = 0; u < coords.size(); ++u) {
            if (coords[u] == 0) continue;
            const auto& e = alg->elem(u);
            if (e.src != i || e.tgt != j) continue;
            acc = acc + elem_maps[u].scaled(coords[u]);
        }
        return acc;
    }
};

inline EndAlgebra endomorphism_algebra(const std::vector<ModPtr>& summands,
                                       const std::string& name = "End") {
    if (summands.empty()) {
        EndAlgebra out;
        out.alg = BasedAlgebra::from_data(0, {}, {}, false, Quiver{}, name);
        return out;
    }
    std::size_t r = summands.size();

    // Chosen basis per block: identity first on diagonal blocks.
    std::vector<std::vector<std::vector<ModuleMap>>> block(r, std::vector<std::vector<ModuleMap>>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            auto maps = hom_basis(summands[j], summands[i]);  // linear X_j -> X_i
            if (i == j) {
                std::vector<ModuleMap> chosen{ModuleMap::identity(summands[i])};
                std::size_t nvars = 0;
                detail::hom_var_offsets(*summands[j], *summands[i], nvars);
                QMat acc(1, nvars);
                acc.set_row(0, [&] {
                    std::vector<Rat> v(nvars);
                    std::size_t pos = 0;
                    for (const auto& b : chosen[0].blocks)
                        for (std::size_t p = 0; p < b.rows(); ++p)
                            for (std::size_t q = 0; q < b.cols(); ++q) v[pos++] = b.at(p, q);
                    return v;
                }());
                acc = rref(acc).mat;
                for (const auto& f : maps) {
                    std::vector<Rat> v(nvars);
                    std::size_t pos = 0;
                    for (const auto& b : f.blocks)
                        for (std::size_t p = 0; p < b.rows(); ++p)
                            for (std::size_t q = 0; q < b.cols(); ++q) v[pos++] = b.at(p, q);
                    QMat cand = acc.vstack(QMat::from_rows({v}));
                    if (rank(cand) > acc.rows()) {
                        chosen.push_back(f);
                        acc = rref(cand).mat.submatrix(0, 0, acc.rows() + 1, nvars);
                    }
                }
                block[i][j] = std::move(chosen);
            } else {
                block[i][j] = std::move(maps);
            }
        }

    // Global basis: idempotents first, then non-identity block elements.
    std::vector<BasedAlgebra::BasisElem> basis;
    std::vector<ModuleMap> elem_maps;
    for (std::size_t i = 0; i < r; ++i) {
        basis.push_back({"e" + std::to_string(i + 1), i, i, {}});
        elem_maps.push_back(block[i][i][0]);
    }
    std::vector<std::vector<std::size_t>> index(r, std::vector<std::size_t>(r, 0));
    std::vector<std::vector<std::size_t>> first(r, std::vector<std::size_t>(r, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            first[i][j] = basis.size();
            std::size_t start = (i == j) ? 1 : 0;
            for (std::size_t k = start; k < block[i][j].size(); ++k) {
                basis.push_back({"f" + std::to_string(i + 1) + std::to_string(j + 1) + "_" +
                                     std::to_string(k - start + 1),
                                 i, j,
                                 {}});
                elem_maps.push_back(block[i][j][k]);
            }
        }
    // Diagonal idempotent slots alias block[i][i][0].
    const std::size_t d = basis.size();

    // Coordinates of a linear map X_j -> X_i in the chosen block basis.
    auto coords_in_block = [&](std::size_t i, std::size_t j, const ModuleMap& f) {
        std::size_t nvars = 0;
        detail::hom_var_offsets(*summands[j], *summands[i], nvars);
        auto flat = [&](const ModuleMap& g) {
            std::vector<Rat> v(nvars);
            std::size_t pos = 0;
            for (const auto& b : g.blocks)
                for (std::size_t p = 0; p < b.rows(); ++p)
                    for (std::size_t q = 0; q < b.cols(); ++q) v[pos++] = b.at(p, q);
            return v;
        };
        QMat sys(block[i][j].size(), nvars);
        for (std::size_t k = 0; k < block[i][j].size(); ++k) sys.set_row(k, flat(block[i][j][k]));
        auto sol = solve_left(sys, flat(f));
        if (!sol) throw validation_error("composite escapes the Hom basis");
        return *sol;
    };

    auto global_coords = [&](std::size_t i, std::size_t j, const ModuleMap& f) {
        std::vector<Rat> out(d);
        auto c = coords_in_block(i, j, f);
        if (i == j) {
            out[i] = c[0];
            for (std::size_t k = 1; k < c.size(); ++k) out[first[i][j] + k - 1] = c[k];
        } else {
            for (std::size_t k = 0; k < c.size(); ++k) out[first[i][j] + k] = c[k];
        }
        return out;
    };

    std::vector<std::vector<Rat>> mult(d * d, std::vector<Rat>(d));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            const auto& ea = basis[a];
            const auto& eb = basis[b];
            if (ea.tgt != eb.src) continue;
            // Product a*b, a: i->j, b: j->l: linear composite X_l -> X_j -> X_i.
            ModuleMap comp = compose(elem_maps[b], elem_maps[a]);
            mult[a * d + b] = global_coords(ea.src, eb.tgt, comp);
        }

    EndAlgebra out;
    out.summands = summands;
    out.elem_maps = std::move(elem_maps);
    out.alg = BasedAlgebra::from_data(r, std::move(basis), std::move(mult), false, Quiver{}, name);
    return out;
}

}  // namespace taucat

#endif
