#ifndef TAUCAT_ALGEBRA_HPP
#define TAUCAT_ALGEBRA_HPP

#include <map>
#include <mutex>
#include <memory>
#include <string>
#include <vector>

#include "taucat/poly.hpp"
#include "taucat/subspace.hpp"

namespace taucat {

struct Arrow {
    std::string name;
    std::size_t src = 0;
    std::size_t tgt = 0;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    std::size_t vertex_index(const std::string& label) const {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == label) return i;
        throw input_error("unknown vertex: " + label);
    }

    std::size_t arrow_index(const std::string& name) const {
        for (std::size_t i = 0; i < arrows.size(); ++i)
            if (arrows[i].name == name) return i;
        throw input_error("unknown arrow: " + name);
    }

    void validate() const {
        std::map<std::string, int> seen;
        for (const auto& v : vertices)
            if (++seen[v] > 1) throw validation_error("duplicate vertex label: " + v);
        for (const auto& a : arrows) {
            if (++seen[a.name] > 1) throw validation_error("duplicate label: " + a.name);
            if (a.src >= vertices.size() || a.tgt >= vertices.size())
                throw validation_error("arrow endpoints out of range: " + a.name);
        }
    }
};

// Quiver with zero relations. Relations are arrow-index sequences in
// composition order (paths read left to right) of length >= 2.
struct MonomialPresentation {
    Quiver quiver;
    std::vector<std::vector<std::size_t>> relations;

    void validate() const {
        quiver.validate();
        for (const auto& rel : relations) {
            if (rel.size() < 2) throw validation_error("relation of length < 2 is not admissible");
            for (std::size_t k = 0; k < rel.size(); ++k) {
                if (rel[k] >= quiver.arrows.size())
                    throw validation_error("relation references unknown arrow");
                if (k > 0 && quiver.arrows[rel[k - 1]].tgt != quiver.arrows[rel[k]].src)
                    throw validation_error("non-composable relation path");
            }
        }
    }
};

// A finite-dimensional algebra with a distinguished basis of elements that
// are homogeneous for the complete set of primitive orthogonal idempotents:
// basis element u satisfies e_src(u) * u = u = u * e_tgt(u). The first
// n_vertices basis elements are the idempotents themselves. Multiplication is
// left-to-right: a path i->j acts M_i -> M_j on right modules.
class BasedAlgebra {
public:
    struct BasisElem {
        std::string label;
        std::size_t src = 0;
        std::size_t tgt = 0;
        std::vector<std::size_t> arrow_word;  // path algebras only
    };

    std::size_t dim() const { return basis_.size(); }
    std::size_t n_vertices() const { return nverts_; }
    const std::vector<BasisElem>& basis() const { return basis_; }
    const BasisElem& elem(std::size_t i) const { return basis_[i]; }
    bool is_path_algebra() const { return path_algebra_; }
    const Quiver& quiver() const { return quiver_; }
    const std::string& name() const { return name_; }

    // Product of two basis elements, as a coordinate vector.
    const std::vector<Rat>& table(std::size_t i, std::size_t j) const {
        return mult_[i * dim() + j];
    }

    std::vector<Rat> multiply(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
        std::vector<Rat> out(dim());
        for (std::size_t i = 0; i < dim(); ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < dim(); ++j) {
                if (y[j] == 0) continue;
                const auto& t = table(i, j);
                Rat f = x[i] * y[j];
                for (std::size_t k = 0; k < dim(); ++k)
                    if (t[k] != 0) out[k] += f * t[k];
            }
        }
        return out;
    }

    std::vector<Rat> unit() const {
        std::vector<Rat> one(dim());
        for (std::size_t v = 0; v < nverts_; ++v) one[v] = 1;
        return one;
    }

    std::vector<Rat> coord_of(std::size_t i) const {
        std::vector<Rat> x(dim());
        x[i] = 1;
        return x;
    }

    // Left multiplication by x on column coordinate vectors.
    QMat left_mult_matrix(const std::vector<Rat>& x) const {
        QMat m(dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j) {
            auto col = multiply(x, coord_of(j));
            for (std::size_t i = 0; i < dim(); ++i) m.at(i, j) = col[i];
        }
        return m;
    }

    const Subspace& radical() const { return radical_; }

    // Indices of basis elements with the given source and target vertex.
    std::vector<std::size_t> block_elems(std::size_t src, std::size_t tgt) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < dim(); ++i)
            if (basis_[i].src == src && basis_[i].tgt == tgt) out.push_back(i);
        return out;
    }

    std::vector<std::size_t> arrow_elems() const {
        std::vector<std::size_t> out;
        if (path_algebra_) {
            for (std::size_t i = 0; i < dim(); ++i)
                if (basis_[i].arrow_word.size() == 1) out.push_back(i);
        }
        return out;
    }

    static std::shared_ptr<const BasedAlgebra> path_algebra(const MonomialPresentation& pres,
                                                            std::string name = "");

    static std::shared_ptr<const BasedAlgebra> from_data(std::size_t nverts,
                                                         std::vector<BasisElem> basis,
                                                         std::vector<std::vector<Rat>> mult,
                                                         bool path_algebra, Quiver quiver,
                                                         std::string name);

    std::shared_ptr<const BasedAlgebra> opposite() const {
        std::call_once(op_once_, [this] {
            std::vector<BasisElem> ob = basis_;
            for (auto& b : ob) std::swap(b.src, b.tgt);
            std::vector<std::vector<Rat>> om(dim() * dim());
            for (std::size_t i = 0; i < dim(); ++i)
                for (std::size_t j = 0; j < dim(); ++j) om[i * dim() + j] = table(j, i);
            Quiver oq = quiver_;
            for (auto& a : oq.arrows) std::swap(a.src, a.tgt);
            op_cache_ = from_data(nverts_, std::move(ob), std::move(om), path_algebra_,
                                  std::move(oq), name_ + "^op");
        });
        return op_cache_;
    }

private:
    friend std::shared_ptr<const BasedAlgebra> quotient_by_ideal(
        const std::shared_ptr<const BasedAlgebra>&, const Subspace&, const std::string&);

    void validate_and_finish();

    std::size_t nverts_ = 0;
    std::vector<BasisElem> basis_;
    std::vector<std::vector<Rat>> mult_;  // dim*dim expansion vectors
    Subspace radical_;
    bool path_algebra_ = false;
    Quiver quiver_;
    std::string name_;
    mutable std::once_flag op_once_;
    mutable std::shared_ptr<const BasedAlgebra> op_cache_;
};

using AlgebraPtr = std::shared_ptr<const BasedAlgebra>;

inline void BasedAlgebra::validate_and_finish() {
    const std::size_t d = dim();
    if (nverts_ > d) throw validation_error("more idempotents than basis elements");
    for (std::size_t v = 0; v < nverts_; ++v)
        if (basis_[v].src != v || basis_[v].tgt != v)
            throw validation_error("idempotent basis elements must come first, diagonally");

    // Homogeneity: e_i * u = [src(u) == i] u, u * e_j = [tgt(u) == j] u,
    // and products land in the matching block.
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const auto& t = table(i, j);
            if (t.size() != d) throw validation_error("malformed multiplication table");
            bool composable = basis_[i].tgt == basis_[j].src;
            for (std::size_t k = 0; k < d; ++k) {
                if (t[k] == 0) continue;
                if (!composable) throw validation_error("non-composable product is nonzero");
                if (basis_[k].src != basis_[i].src || basis_[k].tgt != basis_[j].tgt)
                    throw validation_error("product not homogeneous");
            }
        }

    // Idempotent axioms: e_i e_j = delta_ij e_i; unit acts as identity.
    for (std::size_t v = 0; v < nverts_; ++v)
        for (std::size_t w = 0; w < nverts_; ++w) {
            std::vector<Rat> expect(d);
            if (v == w) expect[v] = 1;
            if (table(v, w) != expect) throw validation_error("idempotent axioms violated");
        }
    auto one = unit();
    for (std::size_t i = 0; i < d; ++i) {
        if (multiply(one, coord_of(i)) != coord_of(i) || multiply(coord_of(i), one) != coord_of(i))
            throw validation_error("unit does not act as identity");
    }

    // Associativity on all basis triples.
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                auto lhs = multiply(table(i, j), coord_of(k));
                auto rhs = multiply(coord_of(i), table(j, k));
                if (lhs != rhs)
                    throw validation_error("associativity fails on basis triple of " + name_);
            }

    // Radical: for path algebras the span of all paths of length >= 1; in
    // general (char 0) the kernel of (x,y) |-> trace(L_{xy}).
    if (path_algebra_) {
        QMat gens(d - nverts_, d);
        for (std::size_t i = nverts_; i < d; ++i) gens.at(i - nverts_, i) = 1;
        radical_ = Subspace::span(gens);
    } else {
        QMat gram(d, d);
        std::vector<QMat> lm;
        lm.reserve(d);
        for (std::size_t i = 0; i < d; ++i) lm.push_back(left_mult_matrix(coord_of(i)));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Rat tr = 0;
                for (std::size_t a = 0; a < d; ++a)
                    for (std::size_t b = 0; b < d; ++b) tr += lm[i].at(a, b) * lm[j].at(b, a);
                gram.at(i, j) = tr;
            }
        radical_ = Subspace::span(left_kernel(gram.transpose()));
    }

    // The radical candidate must be a nilpotent ideal.
    {
        Subspace power = radical_;
        for (std::size_t step = 0; step <= d && power.dim() > 0; ++step) {
            QMat gens(power.dim() * radical_.dim(), d);
            std::size_t r = 0;
            for (std::size_t i = 0; i < power.dim(); ++i)
                for (std::size_t j = 0; j < radical_.dim(); ++j, ++r) {
                    auto prod = multiply(power.basis().row(i), radical_.basis().row(j));
                    gens.set_row(r, prod);
                }
            Subspace next = Subspace::span(gens);
            if (next == power)
                throw validation_error("radical candidate is not nilpotent in " + name_);
            power = next;
        }
        if (power.dim() > 0) throw validation_error("radical candidate is not nilpotent");
    }

    // Split basic: dim(e_v A e_v) - dim(e_v rad(A) e_v) must equal 1.
    for (std::size_t v = 0; v < nverts_; ++v) {
        std::size_t block = block_elems(v, v).size();
        std::size_t rad_block = 0;
        for (std::size_t i = 0; i < radical_.dim(); ++i) {
            // Homogeneous component of the radical basis row at (v, v).
            const auto row = radical_.basis().row(i);
            bool in_block = false, outside = false;
            for (std::size_t k = 0; k < d; ++k) {
                if (row[k] == 0) continue;
                (basis_[k].src == v && basis_[k].tgt == v ? in_block : outside) = true;
            }
            if (in_block && !outside) ++rad_block;
            // Mixed rows are fine: radical bases are computed blockwise below
            // for path algebras; for general algebras re-derive blockwise.
        }
        if (!path_algebra_) {
            // Count dim(e_v rad e_v) properly: intersect radical with the block span.
            QMat blk(block, d);
            std::size_t r = 0;
            for (std::size_t k : block_elems(v, v)) {
                blk.at(r, k) = 1;
                ++r;
            }
            rad_block = radical_.intersect(Subspace::span(blk)).dim();
        }
        if (block - rad_block != 1)
            throw split_basic_error("algebra " + name_ + " is not split basic at idempotent " +
                                    std::to_string(v));
    }
}

inline std::shared_ptr<const BasedAlgebra> BasedAlgebra::from_data(
    std::size_t nverts, std::vector<BasisElem> basis, std::vector<std::vector<Rat>> mult,
    bool path_algebra, Quiver quiver, std::string name) {
    auto alg = std::make_shared<BasedAlgebra>();
    alg->nverts_ = nverts;
    alg->basis_ = std::move(basis);
    alg->mult_ = std::move(mult);
    alg->path_algebra_ = path_algebra;
    alg->quiver_ = std::move(quiver);
    alg->name_ = std::move(name);
    alg->validate_and_finish();
    return alg;
}

inline std::shared_ptr<const BasedAlgebra> BasedAlgebra::path_algebra(
    const MonomialPresentation& pres, std::string name) {
    pres.validate();
    const Quiver& q = pres.quiver;
    const std::size_t nv = q.vertices.size();

    auto contains_relation = [&](const std::vector<std::size_t>& word) {
        for (const auto& rel : pres.relations) {
            if (rel.size() > word.size()) continue;
            for (std::size_t start = 0; start + rel.size() <= word.size(); ++start) {
                bool match = true;
                for (std::size_t k = 0; k < rel.size(); ++k)
                    if (word[start + k] != rel[k]) {
                        match = false;
                        break;
                    }
                if (match) return true;
            }
        }
        return false;
    };

    // Relation-avoiding paths form a regular language; a path longer than the
    // automaton state count forces a pumpable cycle, hence infinite dimension.
    std::size_t total_rel_len = 0;
    for (const auto& rel : pres.relations) total_rel_len += rel.size();
    const std::size_t max_len = nv * (total_rel_len + 1) + 1;

    std::vector<BasisElem> basis;
    for (std::size_t v = 0; v < nv; ++v)
        basis.push_back({"e_" + q.vertices[v], v, v, {}});

    std::vector<std::vector<std::size_t>> frontier;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) frontier.push_back({a});
    while (!frontier.empty()) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& word : frontier) {
            if (contains_relation(word)) continue;
            if (word.size() >= max_len)
                throw validation_error("infinite-dimensional presentation: " +
                                       std::string("relation-free paths do not terminate"));
            std::string label;
            for (std::size_t k = 0; k < word.size(); ++k)
                label += (k ? "*" : "") + q.arrows[word[k]].name;
            basis.push_back({label, q.arrows[word.front()].src, q.arrows[word.back()].tgt, word});
            for (std::size_t a = 0; a < q.arrows.size(); ++a) {
                if (q.arrows[a].src != q.arrows[word.back()].tgt) continue;
                auto ext = word;
                ext.push_back(a);
                next.push_back(std::move(ext));
            }
        }
        frontier = std::move(next);
    }

    const std::size_t d = basis.size();
    auto find_word = [&](const std::vector<std::size_t>& word) -> long {
        for (std::size_t i = 0; i < d; ++i)
            if (basis[i].arrow_word == word) return static_cast<long>(i);
        return -1;
    };

    std::vector<std::vector<Rat>> mult(d * d, std::vector<Rat>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (basis[i].tgt != basis[j].src) continue;
            std::vector<std::size_t> cat = basis[i].arrow_word;
            cat.insert(cat.end(), basis[j].arrow_word.begin(), basis[j].arrow_word.end());
            if (contains_relation(cat)) continue;
            long k = cat.empty() ? static_cast<long>(basis[i].src) : find_word(cat);
            if (k >= 0) mult[i * d + j][static_cast<std::size_t>(k)] = 1;
        }

    if (name.empty()) name = "kQ/I(" + std::to_string(nv) + "v)";
    return from_data(nv, std::move(basis), std::move(mult), true, q, std::move(name));
}

// Quotient by a two-sided homogeneous ideal. Idempotents whose class becomes
// zero are dropped (their whole Peirce block must lie in the ideal); the rest
// survive as a complete set of primitive orthogonal idempotents, re-validated.
inline std::shared_ptr<const BasedAlgebra> quotient_by_ideal(const AlgebraPtr& alg,
                                                             const Subspace& ideal,
                                                             const std::string& name = "") {
    const std::size_t d = alg->dim();
    if (ideal.ambient_dim() != d) throw dimension_error("ideal in wrong coordinate space");

    // Two-sidedness and homogeneity.
    for (std::size_t i = 0; i < ideal.dim(); ++i) {
        auto x = ideal.basis().row(i);
        for (std::size_t b = 0; b < d; ++b) {
            if (!ideal.contains(alg->multiply(alg->coord_of(b), x)) ||
                !ideal.contains(alg->multiply(x, alg->coord_of(b))))
                throw validation_error("ideal is not two-sided");
        }
        for (std::size_t v = 0; v < alg->n_vertices(); ++v)
            for (std::size_t w = 0; w < alg->n_vertices(); ++w) {
                auto comp = alg->multiply(alg->multiply(alg->coord_of(v), x), alg->coord_of(w));
                if (!ideal.contains(comp)) throw validation_error("ideal is not homogeneous");
            }
    }

    // Which idempotents survive.
    std::vector<long> new_vertex(alg->n_vertices(), -1);
    std::size_t nv2 = 0;
    for (std::size_t v = 0; v < alg->n_vertices(); ++v)
        if (!ideal.contains(alg->coord_of(v))) new_vertex[v] = static_cast<long>(nv2++);

    // Blockwise complements of the ideal give the homogeneous quotient basis.
    struct Rep {
        std::vector<Rat> coords;  // representative in the old coordinates
        std::size_t src, tgt;
        std::string label;
    };
    std::vector<Rep> reps;
    for (std::size_t v = 0; v < alg->n_vertices(); ++v) {
        if (new_vertex[v] < 0) continue;
        reps.push_back({alg->coord_of(v), v, v, alg->elem(v).label});
    }
    for (std::size_t v = 0; v < alg->n_vertices(); ++v)
        for (std::size_t w = 0; w < alg->n_vertices(); ++w) {
            if (new_vertex[v] < 0 || new_vertex[w] < 0) continue;
            auto block = alg->block_elems(v, w);
            QMat blk(block.size(), d);
            for (std::size_t r = 0; r < block.size(); ++r) blk.at(r, block[r]) = 1;
            Subspace block_space = Subspace::span(blk);
            Subspace block_ideal = block_space.intersect(ideal);
            QuotientSpace qs(block_space, block_ideal);
            for (const auto& rep : qs.reps()) {
                if (v == w) {
                    // Skip the idempotent itself, already added.
                    bool is_idem = true;
                    for (std::size_t k = 0; k < d; ++k)
                        if (rep[k] != (k == v ? Rat(1) : Rat(0))) {
                            is_idem = false;
                            break;
                        }
                    if (is_idem) continue;
                }
                std::string lbl;
                for (std::size_t k = 0; k < d; ++k)
                    if (rep[k] != 0) lbl += (lbl.empty() ? "" : "+") + alg->elem(k).label;
                reps.push_back({rep, v, w, lbl});
            }
        }

    // Re-sort: idempotents first (they already are, by construction order),
    // then assemble multiplication: multiply representatives, reduce mod ideal.
    const std::size_t d2 = reps.size();
    QMat frame(ideal.dim() + d2, d);
    for (std::size_t i = 0; i < ideal.dim(); ++i) frame.set_row(i, ideal.basis().row(i));
    for (std::size_t i = 0; i < d2; ++i) frame.set_row(ideal.dim() + i, reps[i].coords);

    auto reduce = [&](const std::vector<Rat>& x) {
        auto sol = solve_left(frame, x);
        if (!sol) throw validation_error("quotient arithmetic left the presented space");
        std::vector<Rat> out(d2);
        for (std::size_t k = 0; k < d2; ++k) out[k] = (*sol)[ideal.dim() + k];
        return out;
    };

    std::vector<BasedAlgebra::BasisElem> basis2(d2);
    for (std::size_t i = 0; i < d2; ++i)
        basis2[i] = {reps[i].label, static_cast<std::size_t>(new_vertex[reps[i].src]),
                     static_cast<std::size_t>(new_vertex[reps[i].tgt]),
                     {}};
    std::vector<std::vector<Rat>> mult2(d2 * d2);
    for (std::size_t i = 0; i < d2; ++i)
        for (std::size_t j = 0; j < d2; ++j)
            mult2[i * d2 + j] = reduce(alg->multiply(reps[i].coords, reps[j].coords));

    return BasedAlgebra::from_data(nv2, std::move(basis2), std::move(mult2), false, Quiver{},
                                   name.empty() ? alg->name() + "/I" : name);
}

// Jacobson radical, exposed as its own operation per the module contract.
inline Subspace radical_basis(const AlgebraPtr& alg) { return alg->radical(); }

}  // namespace taucat

#endif
