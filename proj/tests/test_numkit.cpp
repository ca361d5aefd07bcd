#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "numkit.hpp"
#include "rng.hpp"

#include <cmath>

using namespace sdpexact;

namespace {

SymMatrix from_rows(const std::vector<Vec>& rows) {
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    return SymMatrix(m);
}

SymMatrix random_sym(Rng& rng, int n, double scale = 1.0) {
    SymMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) m.set(i, j, scale * rng.uniform(-1.0, 1.0));
    return m;
}

// hand oracle for the 3x3 instance: char poly lam(lam^2 - 8 lam + 3)
const SymMatrix kHand3 = from_rows({{1, 1, -2}, {1, 2, -3}, {-2, -3, 5}});

}  // namespace

TEST_CASE("eig_sym on diagonal and reflection matrices") {
    Spectrum s = eig_sym(SymMatrix::diag({3, 1, 2}));
    CHECK(s.eigenvalues[0] == doctest::Approx(1).epsilon(1e-12));
    CHECK(s.eigenvalues[1] == doctest::Approx(2).epsilon(1e-12));
    CHECK(s.eigenvalues[2] == doctest::Approx(3).epsilon(1e-12));

    SymMatrix refl(2);
    refl.set(0, 1, 1.0);
    Spectrum r = eig_sym(refl);
    CHECK(r.eigenvalues[0] == doctest::Approx(-1).epsilon(1e-12));
    CHECK(r.eigenvalues[1] == doctest::Approx(1).epsilon(1e-12));
}

TEST_CASE("eig_sym matches the hand characteristic polynomial") {
    Spectrum s = eig_sym(kHand3);
    double r = std::sqrt(13.0);
    CHECK(s.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(s.eigenvalues[1] == doctest::Approx(4.0 - r).epsilon(1e-12));
    CHECK(s.eigenvalues[2] == doctest::Approx(4.0 + r).epsilon(1e-12));
}

TEST_CASE("eig_sym reconstruction and orthonormality bounds") {
    Rng rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + rng.uniform_int(12);
        SymMatrix m = random_sym(rng, n, std::pow(10.0, rng.uniform(-2, 2)));
        Spectrum s = eig_sym(m);

        Matrix q = s.vectors;
        Matrix qt = transpose(q);
        Matrix qtq = matmul(qt, q);
        for (int i = 0; i < n; ++i) qtq(i, i) -= 1.0;
        CHECK(frobenius(qtq) <= 1e-10);

        Matrix d(n, n);
        for (int i = 0; i < n; ++i) d(i, i) = s.eigenvalues[i];
        Matrix rec = matmul(matmul(q, d), qt);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) rec(i, j) -= m(i, j);
        CHECK(frobenius(rec) <= 1e-10 * (1.0 + m.frob()));
    }
}

TEST_CASE("numeric_rank on stated examples") {
    CHECK(numeric_rank(SymMatrix::identity(4)) == 4);
    CHECK(numeric_rank(SymMatrix(3)) == 0);
    CHECK(numeric_rank(kHand3) == 2);
}

TEST_CASE("numeric_rank plus nullspace dimension equals dim") {
    Rng rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + rng.uniform_int(8);
        int r = rng.uniform_int(n + 1);
        // plant rank r via Q diag(w) Q^T with exactly r nonzero eigenvalues
        SymMatrix base = random_sym(rng, n);
        Matrix q = eig_sym(base).vectors;
        Vec w(n, 0.0);
        for (int i = 0; i < r; ++i) w[i] = rng.uniform(0.5, 2.0) * (rng.uniform01() < 0.5 ? -1 : 1);
        Matrix d(n, n);
        for (int i = 0; i < n; ++i) d(i, i) = w[i];
        SymMatrix m(matmul(matmul(q, d), transpose(q)));

        CHECK(numeric_rank(m) == r);
        LeastSquares ls = solve_least_squares(m.dense(), Vec(n, 0.0));
        CHECK(numeric_rank(m) + ls.nullspace.cols() == n);
    }
}

TEST_CASE("psd_status classification") {
    CHECK(psd_status(SymMatrix::identity(3)) == PsdStatus::PositiveDefinite);
    CHECK(psd_status(SymMatrix::diag({1, -1})) == PsdStatus::Indefinite);
    CHECK(psd_status(kHand3) == PsdStatus::PositiveSemidefinite);
}

TEST_CASE("positive definite implies a Cholesky factorization exists") {
    Rng rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + rng.uniform_int(10);
        SymMatrix a = random_sym(rng, n);
        // a^T a + eps I is PD
        SymMatrix m(matmul(a.dense(), a.dense()));
        for (int i = 0; i < n; ++i) m.add(i, i, 0.1);
        CHECK(psd_status(m) == PsdStatus::PositiveDefinite);
        CHECK(cholesky(m).has_value());
    }
}

TEST_CASE("least squares on stated examples") {
    LeastSquares id = solve_least_squares(Matrix::identity(2), {3, 4});
    CHECK(id.solution[0] == doctest::Approx(3).epsilon(1e-14));
    CHECK(id.solution[1] == doctest::Approx(4).epsilon(1e-14));
    CHECK(id.residual == doctest::Approx(0).epsilon(1e-14));
    CHECK(id.nullspace.cols() == 0);

    Matrix m(2, 1);
    m(0, 0) = 1.0;
    LeastSquares tall = solve_least_squares(m, {2, 5});
    CHECK(tall.solution[0] == doctest::Approx(2).epsilon(1e-14));
    CHECK(tall.residual == doctest::Approx(5).epsilon(1e-14));

    // Jacobian at x=(1,1) for f=(x1^2-1, x2^2-1)
    Matrix d2(2, 2);
    d2(0, 0) = d2(1, 1) = 2.0;
    LeastSquares diag = solve_least_squares(d2, {0, -2});
    CHECK(diag.solution[0] == doctest::Approx(0).epsilon(1e-14));
    CHECK(diag.solution[1] == doctest::Approx(-1).epsilon(1e-14));
}

TEST_CASE("least squares residual is orthogonal to the column space") {
    Rng rng(4242);
    for (int trial = 0; trial < 60; ++trial) {
        int rows = 1 + rng.uniform_int(9);
        int cols = 1 + rng.uniform_int(9);
        int r = std::min({rows, cols, 1 + rng.uniform_int(6)});
        Matrix a(rows, r), b(r, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < r; ++j) a(i, j) = rng.uniform(-2, 2);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < cols; ++j) b(i, j) = rng.uniform(-2, 2);
        Matrix m = matmul(a, b);
        Vec rhs(rows);
        for (int i = 0; i < rows; ++i) rhs[i] = rng.uniform(-3, 3);

        LeastSquares ls = solve_least_squares(m, rhs);
        Vec res = matvec(m, ls.solution);
        for (int i = 0; i < rows; ++i) res[i] -= rhs[i];
        Vec back = matvec(transpose(m), res);
        double scale = frobenius(m) * (norm2(rhs) + 1.0);
        CHECK(norm2(back) <= 1e-9 * scale);

        // nullspace columns are orthonormal and annihilated by m
        Matrix nn = ls.nullspace;
        if (nn.cols() > 0) {
            Matrix g = matmul(transpose(nn), nn);
            for (int i = 0; i < g.rows(); ++i) g(i, i) -= 1.0;
            CHECK(frobenius(g) <= 1e-10);
            CHECK(frobenius(matmul(m, nn)) <= 1e-9 * (1.0 + frobenius(m)));
        }
    }
}

TEST_CASE("solve_lu solves and flags singular input") {
    Matrix a(2, 2);
    a(0, 0) = 2;
    a(0, 1) = 1;
    a(1, 0) = 1;
    a(1, 1) = 3;
    Vec x = solve_lu(a, {5, 10});
    CHECK(2 * x[0] + x[1] == doctest::Approx(5).epsilon(1e-12));
    CHECK(x[0] + 3 * x[1] == doctest::Approx(10).epsilon(1e-12));

    Matrix s(2, 2);
    s(0, 0) = 1;
    s(0, 1) = 1;
    s(1, 0) = 1;
    s(1, 1) = 1;
    CHECK_THROWS_AS(solve_lu(s, {1, 2}), Error);
}
