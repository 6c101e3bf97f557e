#include <doctest.h>

#include <cmath>

#include "cqf/eig.hpp"
#include "cqf/lyap.hpp"
#include "cqf/rng.hpp"

using namespace cqf;

namespace {

Mat random_hurwitz(int n, Rng& rng) {
    Mat a = rng.normal_mat(n, n);
    const double shift = spectral_abscissa(a) + 0.5 + rng.uniform();
    return a - shift * Mat::identity(n);
}

double ale_residual(const Mat& a, const Mat& x, const Mat& v) {
    return frob_norm(a * x + x * transpose(a) + v);
}

}  // namespace

TEST_CASE("scalar and diagonal equations") {
    CHECK(solve_ale(Mat{{-1}}, Mat{{2}})(0, 0) == doctest::Approx(1.0).epsilon(1e-14));

    Mat x = solve_ale(-1.0 * Mat::identity(2), Mat{{2, 0}, {0, 4}});
    CHECK(frob_norm(x - Mat{{1, 0}, {0, 2}}) <= 1e-13);
}

TEST_CASE("hand-solved 2x2 equation") {
    // A = [[0,1],[-2,-3]], V = e2 e2^T: the three scalar equations give
    // X = diag(1/12, 1/6).
    Mat a{{0, 1}, {-2, -3}};
    Mat v{{0, 0}, {0, 1}};
    Mat x = solve_ale(a, v);
    CHECK(x(0, 0) == doctest::Approx(1.0 / 12.0).epsilon(1e-12));
    CHECK(x(1, 1) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(std::abs(x(0, 1)) <= 1e-14);
}

TEST_CASE("rejects non-Hurwitz coefficient") {
    CHECK_THROWS_AS(solve_ale(Mat{{0, 1}, {-1, 0}}, Mat::identity(2)), Error);
    CHECK_THROWS_AS(solve_ale(Mat::identity(2), Mat::identity(2)), Error);
}

TEST_CASE("solution is exactly symmetric and residual-bounded on random systems") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng.uniform() * 12);
        Mat a = random_hurwitz(n, rng);
        Mat g = rng.normal_mat(n, n);
        Mat v = g * transpose(g);
        Mat x = solve_ale(a, v);
        CHECK(frob_norm(x - transpose(x)) == 0.0);
        CHECK(ale_residual(a, x, v) <= 1e-10 * (1.0 + frob_norm(v)));
    }
}

TEST_CASE("duality: <V2, solve(A, V1)> = <solve(A^T, V2), V1>") {
    Rng rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform() * 6);
        Mat a = random_hurwitz(n, rng);
        Mat g1 = rng.normal_mat(n, n);
        Mat g2 = rng.normal_mat(n, n);
        Mat v1 = g1 * transpose(g1);
        Mat v2 = g2 * transpose(g2);
        const double lhs = frob_inner(v2, solve_ale(a, v1));
        const double rhs = frob_inner(solve_ale(transpose(a), v2), v1);
        CHECK(std::abs(lhs - rhs) <= 1e-9 * (std::abs(lhs) + std::abs(rhs) + 1.0));
    }
}

TEST_CASE("adjoint solve matches the transposed equation") {
    Rng rng(17);
    Mat a = random_hurwitz(5, rng);
    Mat g = rng.normal_mat(5, 5);
    Mat v = g * transpose(g);
    AleSolver solver(a);
    Mat q = solver.solve_adjoint(v);
    CHECK(frob_norm(transpose(a) * q + q * a + v) <= 1e-10 * (1.0 + frob_norm(v)));
    CHECK(frob_norm(q - solve_ale(transpose(a), v)) <= 1e-11 * (1.0 + frob_norm(q)));
}

TEST_CASE("dimension mismatch") {
    Mat a{{-1, 0}, {0, -2}};
    CHECK_THROWS_AS(solve_ale(a, Mat::identity(3)), Error);
}

TEST_CASE("LU solves transposed systems from one factorization") {
    Rng rng(19);
    Mat m = rng.normal_mat(6, 6) + 6.0 * Mat::identity(6);
    LuFactor lu(m);
    std::vector<double> b(6);
    for (auto& x : b) x = rng.normal();
    auto x1 = lu.solve(b);
    auto x2 = lu.solve_transposed(b);
    Mat mx1 = m * Mat::column(x1);
    Mat mtx2 = transpose(m) * Mat::column(x2);
    for (int i = 0; i < 6; ++i) {
        CHECK(mx1(i, 0) == doctest::Approx(b[i]).epsilon(1e-10));
        CHECK(mtx2(i, 0) == doctest::Approx(b[i]).epsilon(1e-10));
    }
    CHECK_THROWS_AS(LuFactor(Mat::zero(3, 3)), Error);
}
