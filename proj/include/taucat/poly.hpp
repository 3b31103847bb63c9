#ifndef TAUCAT_POLY_HPP
#define TAUCAT_POLY_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "taucat/matrix.hpp"

namespace taucat {

// Polynomial over the rationals, coefficients low degree first, normalized so
// the leading coefficient is nonzero (zero polynomial = empty vector).
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static QPoly x_minus(const Rat& a) { return QPoly({-a, Rat(1)}); }
    static QPoly constant(const Rat& a) { return QPoly({a}); }
    static QPoly monomial(std::size_t deg) {
        std::vector<Rat> c(deg + 1);
        c[deg] = 1;
        return QPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& coeff(std::size_t i) const { return c_[i]; }
    const Rat& leading() const { return c_.back(); }

    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    QPoly operator+(const QPoly& o) const {
        std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return QPoly(std::move(r));
    }

    QPoly operator-(const QPoly& o) const {
        std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
        return QPoly(std::move(r));
    }

    QPoly operator*(const QPoly& o) const {
        if (is_zero() || o.is_zero()) return QPoly();
        std::vector<Rat> r(c_.size() + o.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return QPoly(std::move(r));
    }

    // Quotient and remainder; divisor must be nonzero.
    std::pair<QPoly, QPoly> divmod(const QPoly& d) const {
        if (d.is_zero()) throw error("polynomial division by zero");
        std::vector<Rat> rem = c_;
        std::vector<Rat> quot;
        if (rem.size() >= d.c_.size()) quot.resize(rem.size() - d.c_.size() + 1);
        for (int i = static_cast<int>(rem.size()) - 1; i >= static_cast<int>(d.c_.size()) - 1; --i) {
            if (rem[i] == 0) continue;
            Rat f = rem[i] / d.leading();
            std::size_t shift = i - (d.c_.size() - 1);
            quot[shift] = f;
            for (std::size_t j = 0; j < d.c_.size(); ++j) rem[shift + j] -= f * d.c_[j];
        }
        return {QPoly(std::move(quot)), QPoly(std::move(rem))};
    }

    bool divides(const QPoly& f) const { return f.divmod(*this).second.is_zero(); }

    QPoly monic() const {
        if (is_zero()) return *this;
        std::vector<Rat> r = c_;
        Rat inv = 1 / leading();
        for (auto& x : r) x *= inv;
        return QPoly(std::move(r));
    }

    QPoly derivative() const {
        if (c_.size() <= 1) return QPoly();
        std::vector<Rat> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
        return QPoly(std::move(r));
    }

    Rat eval(const Rat& x) const {
        Rat acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += " + ";
            s += rat_str(c_[i]);
            if (i >= 1) s += "*x";
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

inline QPoly poly_gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Evaluates a polynomial on a square matrix.
inline QMat poly_eval(const QPoly& p, const QMat& m) {
    QMat acc(m.rows(), m.cols());
    QMat power = QMat::identity(m.rows());
    for (int i = 0; i <= p.degree(); ++i) {
        if (p.coeff(i) != 0) acc = acc + power.scaled(p.coeff(i));
        if (i < p.degree()) power = power * m;
    }
    return acc;
}

// Minimal polynomial via the first linear dependence among I, A, A^2, ...
inline QPoly min_poly(const QMat& a) {
    if (a.rows() != a.cols()) throw dimension_error("min_poly of non-square matrix");
    std::size_t n = a.rows();
    if (n == 0) return QPoly({Rat(1)});  // minimal polynomial of the empty operator
    std::size_t len = n * n;
    QMat powers(0, len);
    QMat cur = QMat::identity(n);
    for (std::size_t d = 0;; ++d) {
        QMat flat(1, len);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) flat.at(0, i * n + j) = cur.at(i, j);
        // Try to express cur in terms of the lower powers.
        auto sol = solve_left(powers, flat.row(0));
        if (sol) {
            std::vector<Rat> coeffs(d + 1);
            for (std::size_t i = 0; i < d; ++i) coeffs[i] = -(*sol)[i];
            coeffs[d] = 1;
            return QPoly(std::move(coeffs));
        }
        powers = powers.vstack(flat);
        cur = cur * a;
        if (d > n) throw error("min_poly: no dependence found (unreachable)");
    }
}

namespace detail {

// All positive divisors of |v|, ascending; v must be nonzero.
inline std::vector<Int> divisors(const Int& v) {
    Int a = abs(v);
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            small.push_back(d);
            if (d * d != a) large.push_back(a / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

// Primitive integer polynomial proportional to p (positive leading coeff).
inline std::vector<Int> to_primitive(const QPoly& p) {
    Int den = 1;
    for (const auto& c : p.coeffs()) den = lcm(den, c.get_den());
    std::vector<Int> z;
    z.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) z.push_back(c.get_num() * (den / c.get_den()));
    Int content = 0;
    for (const auto& v : z) content = gcd(content, v);
    if (content != 0)
        for (auto& v : z) v /= content;
    if (!z.empty() && z.back() < 0)
        for (auto& v : z) v = -v;
    return z;
}

inline QPoly from_int(const std::vector<Int>& z) {
    std::vector<Rat> c;
    c.reserve(z.size());
    for (const auto& v : z) c.emplace_back(v);
    return QPoly(std::move(c));
}

// Irreducible factors of a squarefree monic rational polynomial of degree >= 1.
// Rational roots first, then a Kronecker search for higher-degree factors;
// total degrees here stay below ~30, so the classical method is adequate.
inline void factor_squarefree(const QPoly& f, std::vector<QPoly>& out) {
    if (f.degree() == 1) {
        out.push_back(f.monic());
        return;
    }
    std::vector<Int> z = to_primitive(f);
    int n = static_cast<int>(z.size()) - 1;

    // Rational root search: p/q with p | z[0], q | z[n].
    if (z[0] == 0) {
        out.push_back(QPoly::monomial(1));
        factor_squarefree(f.divmod(QPoly::monomial(1)).first, out);
        return;
    }
    for (const Int& q : divisors(z[n])) {
        for (const Int& p : divisors(z[0])) {
            for (int sign = 0; sign < 2; ++sign) {
                Rat root(sign ? -p : p, q);
                root.canonicalize();
                if (f.eval(root) == 0) {
                    QPoly lin = QPoly::x_minus(root);
                    out.push_back(lin);
                    factor_squarefree(f.divmod(lin).first, out);
                    return;
                }
            }
        }
    }

    // Kronecker: look for an integer factor of degree d in [2, n/2] by
    // interpolating divisor tuples of the values at small integer points.
    for (int d = 2; 2 * d <= n; ++d) {
        std::vector<Rat> pts;
        std::vector<Int> vals;
        for (long t = 0; static_cast<int>(pts.size()) < d + 1; ++t) {
            long x = (t % 2 == 0) ? t / 2 : -(t / 2 + 1);
            Rat v = from_int(z).eval(Rat(x));
            if (v == 0) continue;  // roots were already excluded
            pts.emplace_back(x);
            vals.push_back(v.get_num());
        }
        std::vector<std::vector<Int>> choices(d + 1);
        for (int i = 0; i <= d; ++i) {
            for (const Int& dv : divisors(vals[i])) {
                choices[i].push_back(dv);
                choices[i].push_back(-dv);
            }
        }
        std::vector<std::size_t> idx(d + 1, 0);
        while (true) {
            // Lagrange interpolation through (pts[i], choices[i][idx[i]]).
            QPoly cand;
            for (int i = 0; i <= d; ++i) {
                QPoly li = QPoly::constant(Rat(choices[i][idx[i]]));
                for (int j = 0; j <= d; ++j) {
                    if (j == i) continue;
                    li = li * QPoly({-pts[j], Rat(1)});
                    li = QPoly([&] {
                        std::vector<Rat> c = li.coeffs();
                        Rat inv = 1 / (pts[i] - pts[j]);
                        for (auto& x : c) x *= inv;
                        return c;
                    }());
                }
                cand = cand + li;
            }
            if (cand.degree() == d && cand.divides(f)) {
                std::vector<QPoly> sub;
                factor_squarefree(cand.monic(), sub);
                if (sub.size() == 1) {  // candidate is irreducible
                    out.push_back(cand.monic());
                    factor_squarefree(f.divmod(cand).first, out);
                    return;
                }
            }
            int pos = 0;
            while (pos <= d && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
            if (pos > d) break;
        }
    }
    out.push_back(f.monic());  // irreducible
}

}  // namespace detail

// Factors a monic polynomial into monic irreducible factors with
// multiplicities; the product of factors^multiplicities reproduces the input.
inline std::vector<std::pair<QPoly, int>> factor_poly(const QPoly& f) {
    if (f.degree() < 1) return {};
    QPoly sf = f.divmod(poly_gcd(f, f.derivative())).first.monic();
    std::vector<QPoly> irr;
    detail::factor_squarefree(sf, irr);
    std::sort(irr.begin(), irr.end(), [](const QPoly& a, const QPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i)
            if (a.coeff(i) != b.coeff(i)) return a.coeff(i) > b.coeff(i);
        return false;
    });
    std::vector<std::pair<QPoly, int>> out;
    QPoly rest = f.monic();
    for (const QPoly& p : irr) {
        int mult = 0;
        while (p.divides(rest)) {
            rest = rest.divmod(p).first;
            ++mult;
        }
        if (mult > 0) out.emplace_back(p, mult);
    }
    if (rest.degree() != 0) throw error("factor_poly: incomplete factorization");
    return out;
}

// Minimal polynomial of a square matrix split into irreducible factors.
inline std::vector<std::pair<QPoly, int>> minpoly_split(const QMat& op) {
    return factor_poly(min_poly(op));
}

}  // namespace taucat

#endif
