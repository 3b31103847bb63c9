#ifndef TAUCAT_MATRIX_HPP
#define TAUCAT_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "taucat/rational.hpp"

namespace taucat {

// Dense matrix over the exact rationals. Zero-dimensional matrices are legal;
// module elements are row vectors, so maps act on the right: y = x * M.
class QMat {
public:
    QMat() = default;
    QMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static QMat identity(std::size_t n) {
        QMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static QMat from_rows(std::vector<std::vector<Rat>> rows) {
        std::size_t r = rows.size();
        std::size_t c = r == 0 ? 0 : rows[0].size();
        QMat m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw dimension_error("ragged row list");
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = std::move(rows[i][j]);
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const QMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const QMat& o) const { return !(*this == o); }

    QMat operator+(const QMat& o) const {
        check_same_shape(o);
        QMat r = *this;
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
        return r;
    }

    QMat operator-(const QMat& o) const {
        check_same_shape(o);
        QMat r = *this;
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
        return r;
    }

    QMat operator*(const QMat& o) const {
        if (cols_ != o.rows_) throw dimension_error("matrix product shape mismatch");
        QMat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rat& a = at(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const Rat& b = o.at(k, j);
                    if (b != 0) r.at(i, j) += a * b;
                }
            }
        return r;
    }

    QMat scaled(const Rat& c) const {
        QMat r = *this;
        for (auto& x : r.data_) x *= c;
        return r;
    }

    QMat transpose() const {
        QMat r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    std::vector<Rat> row(std::size_t i) const {
        std::vector<Rat> v(cols_);
        for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
        return v;
    }

    void set_row(std::size_t i, const std::vector<Rat>& v) {
        if (v.size() != cols_) throw dimension_error("row length mismatch");
        for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
    }

    // [this | o] side by side.
    QMat hstack(const QMat& o) const {
        if (rows_ != o.rows_) throw dimension_error("hstack row mismatch");
        QMat r(rows_, cols_ + o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
        }
        return r;
    }

    QMat vstack(const QMat& o) const {
        if (cols_ != o.cols_) throw dimension_error("vstack col mismatch");
        QMat r(rows_ + o.rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t i = 0; i < o.rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
        return r;
    }

    QMat submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        QMat r(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
        return r;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i ? "; " : "";
            for (std::size_t j = 0; j < cols_; ++j) s += (j ? "," : "") + rat_str(at(i, j));
        }
        return s + "]";
    }

private:
    void check_same_shape(const QMat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

struct RrefResult {
    QMat mat;                        // reduced row-echelon form, same shape as input
    std::vector<std::size_t> pivots; // pivot column per nonzero row
    std::size_t rank = 0;
};

// Gauss-Jordan over the rationals. The result is the canonical representative
// of the row space: equal row spaces give identical output.
inline RrefResult rref(QMat m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m.at(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Rat inv = 1 / m.at(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots), r};
}

inline std::size_t rank(const QMat& m) { return rref(m).rank; }

// Right null space {v : m * v = 0}, columns viewed as vectors; basis returned
// as rows of the result, rref-normalized. dim = cols - rank.
inline QMat kernel(const QMat& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : rr.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    QMat basis(free_cols.size(), m.cols());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fc = free_cols[k];
        basis.at(k, fc) = 1;
        for (std::size_t i = 0; i < rr.pivots.size(); ++i)
            basis.at(k, rr.pivots[i]) = -rr.mat.at(i, fc);
    }
    return rref(std::move(basis)).mat;  // canonical form
}

// Left null space {v : v * m = 0}, basis as rows.
inline QMat left_kernel(const QMat& m) { return kernel(m.transpose()); }

// Solves m * x = b for a column vector x; returns nullopt when inconsistent.
inline std::optional<std::vector<Rat>> solve(const QMat& m, const std::vector<Rat>& b) {
    if (b.size() != m.rows()) throw dimension_error("solve: rhs length mismatch");
    QMat rhs(m.rows(), 1);
    for (std::size_t i = 0; i < m.rows(); ++i) rhs.at(i, 0) = b[i];
    RrefResult rr = rref(m.hstack(rhs));
    std::vector<Rat> x(m.cols());
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
        if (rr.pivots[i] == m.cols()) return std::nullopt;  // pivot in rhs column
        x[rr.pivots[i]] = rr.mat.at(i, m.cols());
    }
    return x;
}

// Solves x * m = b for a row vector x.
inline std::optional<std::vector<Rat>> solve_left(const QMat& m, const std::vector<Rat>& b) {
    return solve(m.transpose(), b);
}

inline bool is_invertible(const QMat& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

inline QMat inverse(const QMat& m) {
    if (m.rows() != m.cols()) throw dimension_error("inverse of non-square matrix");
    RrefResult rr = rref(m.hstack(QMat::identity(m.rows())));
    if (rr.rank != m.rows()) throw error("inverse of singular matrix");
    return rr.mat.submatrix(0, m.rows(), m.rows(), m.rows());
}

inline Rat determinant(QMat m) {
    if (m.rows() != m.cols()) throw dimension_error("determinant of non-square matrix");
    Rat det = 1;
    std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m.at(p, c) == 0) ++p;
        if (p == n) return Rat(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(c, j));
            det = -det;
        }
        det *= m.at(c, c);
        Rat inv = 1 / m.at(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m.at(i, c) == 0) continue;
            Rat f = m.at(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return det;
}

}  // namespace taucat

#endif
