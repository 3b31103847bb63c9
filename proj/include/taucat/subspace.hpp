#ifndef TAUCAT_SUBSPACE_HPP
#define TAUCAT_SUBSPACE_HPP

#include <optional>
#include <vector>

#include "taucat/matrix.hpp"

namespace taucat {

// Subspace of Q^n with the canonical rref basis as representative, so equality
// of subspaces is structural equality of the basis matrices.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    // Span of the rows of `gens`.
    static Subspace span(const QMat& gens) {
        Subspace s(gens.cols());
        RrefResult rr = rref(gens);
        s.basis_ = rr.mat.submatrix(0, 0, rr.rank, gens.cols());
        return s;
    }

    static Subspace full(std::size_t ambient) { return span(QMat::identity(ambient)); }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const QMat& basis() const { return basis_; }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    bool contains(const std::vector<Rat>& v) const {
        return coordinates(v).has_value();
    }

    bool contains(const Subspace& o) const {
        if (o.ambient_ != ambient_) return false;
        for (std::size_t i = 0; i < o.dim(); ++i)
            if (!contains(o.basis_.row(i))) return false;
        return true;
    }

    // Coordinates of v in the basis, if v lies in the subspace.
    std::optional<std::vector<Rat>> coordinates(const std::vector<Rat>& v) const {
        if (v.size() != ambient_) throw dimension_error("subspace: vector length mismatch");
        return solve_left(basis_, v);
    }

    Subspace sum(const Subspace& o) const {
        if (o.ambient_ != ambient_) throw dimension_error("subspace sum: ambient mismatch");
        return span(basis_.vstack(o.basis_));
    }

    // Intersection via the kernel of the stacked generating map.
    Subspace intersect(const Subspace& o) const {
        if (o.ambient_ != ambient_) throw dimension_error("subspace meet: ambient mismatch");
        // v = x*B1 = y*B2  <=>  (x, -y) in left kernel of [B1; B2].
        QMat stacked = basis_.vstack(o.basis_);
        QMat lk = left_kernel(stacked);  // rows (x | -y)
        QMat gens(lk.rows(), ambient_);
        for (std::size_t i = 0; i < lk.rows(); ++i)
            for (std::size_t j = 0; j < ambient_; ++j) {
                Rat acc = 0;
                for (std::size_t k = 0; k < basis_.rows(); ++k) acc += lk.at(i, k) * basis_.at(k, j);
                gens.at(i, j) = acc;
            }
        return span(gens);
    }

private:
    std::size_t ambient_ = 0;
    QMat basis_;
};

// A vector space presented as a quotient V / W of coordinate spaces, with
// canonical representatives for the quotient classes. Used for Hom spaces
// modulo homotopy and modulo ideals of factoring morphisms.
class QuotientSpace {
public:
    QuotientSpace() = default;

    // sub must be contained in total (both given in the same ambient space).
    QuotientSpace(const Subspace& total, const Subspace& sub)
        : ambient_(total.ambient_dim()), sub_(sub) {
        if (!total.contains(sub)) throw validation_error("quotient: subspace not contained");
        // Representatives: rows of `total` whose classes extend a basis of sub.
        QMat acc = sub.basis();
        for (std::size_t i = 0; i < total.dim(); ++i) {
            QMat cand = acc.vstack(QMat::from_rows({total.basis().row(i)}));
            if (rank(cand) > acc.rows()) {
                reps_.push_back(total.basis().row(i));
                acc = rref(cand).mat.submatrix(0, 0, acc.rows() + 1, ambient_);
            }
        }
    }

    std::size_t dim() const { return reps_.size(); }
    std::size_t ambient_dim() const { return ambient_; }
    const std::vector<std::vector<Rat>>& reps() const { return reps_; }

    // Class coordinates of an ambient vector (must lie in sub + span(reps)).
    std::vector<Rat> project(const std::vector<Rat>& v) const {
        QMat sys(sub_.dim() + reps_.size(), ambient_);
        for (std::size_t i = 0; i < sub_.dim(); ++i) sys.set_row(i, sub_.basis().row(i));
        for (std::size_t i = 0; i < reps_.size(); ++i) sys.set_row(sub_.dim() + i, reps_[i]);
        auto sol = solve_left(sys, v);
        if (!sol) throw validation_error("quotient: vector outside the presented space");
        return std::vector<Rat>(sol->begin() + static_cast<long>(sub_.dim()), sol->end());
    }

private:
    std::size_t ambient_ = 0;
    Subspace sub_;
    std::vector<std::vector<Rat>> reps_;
};

}  // namespace taucat

#endif
