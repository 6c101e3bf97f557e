#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "cqf/eig.hpp"
#include "cqf/rng.hpp"

using namespace cqf;

namespace {

// Random orthogonal matrix as a product of Householder reflectors, so
// similarity transforms preserve the spectrum exactly (up to roundoff).
Mat random_orthogonal(int n, Rng& rng) {
    Mat q = Mat::identity(n);
    for (int k = 0; k < 3; ++k) {
        Mat v = rng.normal_mat(n, 1);
        const double vtv = frob_inner(v, v);
        q = q - (2.0 / vtv) * (v * (transpose(v) * q));
    }
    return q;
}

}  // namespace

TEST_CASE("spectral abscissa on fixed matrices") {
    CHECK(spectral_abscissa(-1.0 * Mat::identity(3)) == doctest::Approx(-1.0).epsilon(1e-12));

    // purely imaginary spectrum
    Mat rot{{0, 1}, {-1, 0}};
    CHECK(std::abs(spectral_abscissa(rot)) <= 1e-12);

    // eigenvalues -2 +- 2i
    Mat a{{-2, 2}, {-2, -2}};
    CHECK(spectral_abscissa(a) == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("eigenvalues of a known complex pair") {
    Mat a{{-2, 2}, {-2, -2}};
    auto eig = eigenvalues(a);
    REQUIRE(eig.size() == 2);
    std::sort(eig.begin(), eig.end(), [](auto x, auto y) { return x.imag() < y.imag(); });
    CHECK(eig[0].real() == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(eig[0].imag() == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(eig[1].imag() == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("triangular matrices expose their diagonal") {
    Mat t{{1, 5, -3}, {0, -7, 2}, {0, 0, 4}};
    auto eig = eigenvalues(t);
    std::vector<double> re;
    for (auto& e : eig) {
        CHECK(std::abs(e.imag()) <= 1e-12);
        re.push_back(e.real());
    }
    std::sort(re.begin(), re.end());
    CHECK(re[0] == doctest::Approx(-7.0).epsilon(1e-12));
    CHECK(re[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(re[2] == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("accuracy against planted spectra up to order 64") {
    Rng rng(7);
    for (int n : {4, 16, 64}) {
        // plant eigenvalues: half complex pairs sigma +- i omega, half real
        Mat d(n, n);
        std::vector<double> expected_re;
        int i = 0;
        while (i < n) {
            if (i + 1 < n && i % 4 == 0) {
                const double sigma = 3.0 * (rng.uniform() - 0.5);
                const double omega = 2.0 * rng.uniform() + 0.1;
                d(i, i) = sigma;
                d(i, i + 1) = omega;
                d(i + 1, i) = -omega;
                d(i + 1, i + 1) = sigma;
                expected_re.push_back(sigma);
                expected_re.push_back(sigma);
                i += 2;
            } else {
                const double lambda = 4.0 * (rng.uniform() - 0.5);
                d(i, i) = lambda;
                expected_re.push_back(lambda);
                ++i;
            }
        }
        Mat q = random_orthogonal(n, rng);
        Mat a = q * d * transpose(q);

        const double expected = *std::max_element(expected_re.begin(), expected_re.end());
        CHECK(std::abs(spectral_abscissa(a) - expected) <= 1e-9);
    }
}

TEST_CASE("shift identity: abscissa(A - sI) = abscissa(A) - s") {
    Rng rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform() * 11);
        Mat a = rng.normal_mat(n, n);
        const double base = spectral_abscissa(a);
        for (double s : {0.5, -1.25, 3.0}) {
            Mat shifted = a - s * Mat::identity(n);
            CHECK(std::abs(spectral_abscissa(shifted) - (base - s)) <= 1e-9 * (1.0 + std::abs(base)));
        }
    }
}

TEST_CASE("symmetric helpers") {
    Mat s{{2, 1}, {1, 2}};  // eigenvalues 1, 3
    CHECK(sym_norm2(s) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(sym_min_eig(s) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("degenerate shapes") {
    CHECK(eigenvalues(Mat::zero(0, 0)).empty());
    auto one = eigenvalues(Mat{{-3.5}});
    REQUIRE(one.size() == 1);
    CHECK(one[0].real() == -3.5);
    CHECK_THROWS_AS(eigenvalues(Mat(2, 3)), Error);
}
