#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "taucat/matrix.hpp"
#include "taucat/poly.hpp"
#include "taucat/subspace.hpp"

using namespace taucat;

namespace {

QMat mat(std::vector<std::vector<long>> rows) {
    std::vector<std::vector<Rat>> q;
    for (auto& r : rows) {
        std::vector<Rat> row;
        for (auto v : r) row.emplace_back(v);
        q.push_back(std::move(row));
    }
    return QMat::from_rows(std::move(q));
}

// Small deterministic generator for property checks.
struct Lcg {
    unsigned long state = 12345;
    long next(long lo, long hi) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return lo + static_cast<long>((state >> 33) % static_cast<unsigned long>(hi - lo + 1));
    }
};

}  // namespace

TEST_CASE("rref basics") {
    QMat empty(0, 0);
    auto rr = rref(empty);
    CHECK(rr.rank == 0);
    CHECK(rr.mat.rows() == 0);

    auto id3 = QMat::identity(3);
    CHECK(rref(id3).mat == id3);
    CHECK(rref(id3).rank == 3);

    auto m = mat({{1, 2}, {2, 4}});
    auto r = rref(m);
    CHECK(r.rank == 1);
    CHECK(r.mat == mat({{1, 2}, {0, 0}}));
}

TEST_CASE("rref is idempotent and canonical on row spaces") {
    Lcg gen;
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 1 + gen.next(0, 3);
        std::size_t cols = 1 + gen.next(0, 3);
        QMat m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rat_of(gen.next(-3, 3));
        auto r1 = rref(m);
        CHECK(rref(r1.mat).mat == r1.mat);
        // Mix rows by an invertible transformation: same row space, same rref.
        QMat t(rows, rows);
        do {
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < rows; ++j) t.at(i, j) = rat_of(gen.next(-2, 2));
        } while (!is_invertible(t));
        CHECK(rref(t * m).mat == r1.mat);
    }
}

TEST_CASE("kernel examples") {
    CHECK(kernel(QMat::identity(2)).rows() == 0);
    QMat z(2, 3);
    auto k = kernel(z);
    CHECK(k.rows() == 3);
    CHECK(k == QMat::identity(3));

    auto k2 = kernel(mat({{1, 2}}));
    REQUIRE(k2.rows() == 1);
    // rref normalization of span{(-2, 1)}.
    CHECK(k2.at(0, 0) == Rat(1));
    CHECK(k2.at(0, 1) == rat_of(-1, 2));
}

TEST_CASE("rank-nullity over a deterministic sample") {
    Lcg gen;
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = gen.next(0, 4);
        std::size_t cols = gen.next(0, 4);
        QMat m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rat_of(gen.next(-2, 2), 1 + gen.next(0, 2));
        CHECK(rank(m) + kernel(m).rows() == cols);
        // Every kernel row is an exact solution.
        auto k = kernel(m);
        for (std::size_t i = 0; i < k.rows(); ++i) {
            auto prod = m * k.submatrix(i, 0, 1, cols).transpose();
            CHECK(prod.is_zero());
        }
    }
}

TEST_CASE("solve examples") {
    auto id2 = QMat::identity(2);
    auto x = solve(id2, {Rat(3), Rat(5)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rat(3));
    CHECK((*x)[1] == Rat(5));

    QMat z(2, 2);
    CHECK(!solve(z, {Rat(1), Rat(0)}).has_value());

    auto y = solve(mat({{2}}), {Rat(3)});
    REQUIRE(y.has_value());
    CHECK((*y)[0] == rat_of(3, 2));

    CHECK_THROWS_AS(solve(id2, {Rat(1)}), dimension_error);
}

TEST_CASE("solve returns exact solutions when consistent") {
    Lcg gen;
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 1 + gen.next(0, 3);
        std::size_t cols = 1 + gen.next(0, 3);
        QMat m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rat_of(gen.next(-3, 3));
        // Manufacture a consistent rhs.
        std::vector<Rat> x0(cols);
        for (std::size_t j = 0; j < cols; ++j) x0[j] = rat_of(gen.next(-3, 3), 1 + gen.next(0, 1));
        std::vector<Rat> b(rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) b[i] += m.at(i, j) * x0[j];
        auto x = solve(m, b);
        REQUIRE(x.has_value());
        for (std::size_t i = 0; i < rows; ++i) {
            Rat acc = 0;
            for (std::size_t j = 0; j < cols; ++j) acc += m.at(i, j) * (*x)[j];
            CHECK(acc == b[i]);
        }
    }
}

TEST_CASE("minpoly_split examples") {
    QMat z1(1, 1);
    auto f = minpoly_split(z1);
    REQUIRE(f.size() == 1);
    CHECK(f[0].first == QPoly::monomial(1));
    CHECK(f[0].second == 1);

    auto fid = minpoly_split(QMat::identity(4));
    REQUIRE(fid.size() == 1);
    CHECK(fid[0].first == QPoly::x_minus(Rat(1)));
    CHECK(fid[0].second == 1);

    auto d = mat({{1, 0}, {0, 2}});
    auto fd = minpoly_split(d);
    REQUIRE(fd.size() == 2);
    CHECK(fd[0].first == QPoly::x_minus(Rat(1)));
    CHECK(fd[1].first == QPoly::x_minus(Rat(2)));
}

TEST_CASE("minpoly factors annihilate and are all needed") {
    std::vector<QMat> ops = {
        mat({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}),      // nilpotent: x^3
        mat({{1, 1}, {0, 1}}),                       // (x-1)^2
        mat({{0, -1}, {1, 0}}),                      // x^2+1 irreducible
        mat({{2, 0, 0}, {0, 2, 0}, {0, 0, 3}}),      // (x-2)(x-3)
        mat({{0, 2}, {1, 0}}),                       // x^2-2 irreducible
        mat({{0, 0, -1}, {1, 0, 0}, {0, 1, 0}}),     // x^3+1 = (x+1)(x^2-x+1)
    };
    for (const auto& op : ops) {
        auto fs = minpoly_split(op);
        QPoly prod = QPoly::constant(Rat(1));
        for (const auto& [p, m] : fs)
            for (int k = 0; k < m; ++k) prod = prod * p;
        CHECK(prod == min_poly(op));
        CHECK(poly_eval(prod, op).is_zero());
        // Dropping any factor must fail to annihilate.
        for (std::size_t drop = 0; drop < fs.size(); ++drop) {
            QPoly partial = QPoly::constant(Rat(1));
            for (std::size_t k = 0; k < fs.size(); ++k) {
                int mult = fs[k].second - (k == drop ? 1 : 0);
                for (int t = 0; t < mult; ++t) partial = partial * fs[k].first;
            }
            CHECK(!poly_eval(partial, op).is_zero());
        }
        // Pairwise coprime irreducible factors.
        for (std::size_t a = 0; a < fs.size(); ++a)
            for (std::size_t b = a + 1; b < fs.size(); ++b)
                CHECK(poly_gcd(fs[a].first, fs[b].first).degree() == 0);
    }
}

TEST_CASE("subspace canonical form and operations") {
    auto s1 = Subspace::span(mat({{1, 2, 0}, {0, 0, 1}}));
    auto s2 = Subspace::span(mat({{2, 4, 2}, {0, 0, 3}, {1, 2, 1}}));
    CHECK(s1 == s2);  // equal row spaces, equal representatives
    CHECK(s1.dim() == 2);
    CHECK(s1.contains({Rat(3), Rat(6), Rat(5)}));
    CHECK(!s1.contains({Rat(1), Rat(0), Rat(0)}));

    auto inter = s1.intersect(Subspace::span(mat({{0, 0, 1}})));
    CHECK(inter.dim() == 1);
    auto sum = s1.sum(Subspace::span(mat({{1, 0, 0}})));
    CHECK(sum.dim() == 3);
}

TEST_CASE("quotient space representatives project consistently") {
    Subspace total = Subspace::full(3);
    Subspace sub = Subspace::span(mat({{1, 1, 0}}));
    QuotientSpace q(total, sub);
    CHECK(q.dim() == 2);
    auto c1 = q.project({Rat(1), Rat(1), Rat(0)});
    for (const auto& v : c1) CHECK(v == Rat(0));
    auto c2 = q.project({Rat(2), Rat(1), Rat(0)});
    auto c3 = q.project({Rat(1), Rat(0), Rat(0)});
    CHECK(c2 == c3);  // differ by an element of sub
}
