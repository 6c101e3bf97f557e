#include "cqf/lyap.hpp"

#include <cmath>
#include <utility>

#include "cqf/eig.hpp"

namespace cqf {

LuFactor::LuFactor(Mat a) : lu_(std::move(a)), perm_(lu_.rows()) {
    require_square(lu_, "LuFactor");
    const int n = lu_.rows();
    for (int i = 0; i < n; ++i) perm_[i] = i;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(lu_(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double cand = std::abs(lu_(i, k));
            if (cand > best) {
                best = cand;
                piv = i;
            }
        }
        if (best == 0.0) throw Error(ErrorKind::SingularSystem, "LuFactor: exactly singular matrix");
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(piv, j));
            std::swap(perm_[k], perm_[piv]);
        }
        const double inv_piv = 1.0 / lu_(k, k);
        for (int i = k + 1; i < n; ++i) {
            const double f = lu_(i, k) * inv_piv;
            lu_(i, k) = f;
            if (f == 0.0) continue;
            for (int j = k + 1; j < n; ++j) lu_(i, j) -= f * lu_(k, j);
        }
    }
}

std::vector<double> LuFactor::solve(std::vector<double> b) const {
    const int n = lu_.rows();
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = b[perm_[i]];
    for (int i = 0; i < n; ++i) {  // L y = P b
        double s = x[i];
        for (int j = 0; j < i; ++j) s -= lu_(i, j) * x[j];
        x[i] = s;
    }
    for (int i = n - 1; i >= 0; --i) {  // U x = y
        double s = x[i];
        for (int j = i + 1; j < n; ++j) s -= lu_(i, j) * x[j];
        x[i] = s / lu_(i, i);
    }
    return x;
}

std::vector<double> LuFactor::solve_transposed(const std::vector<double>& b) const {
    // M = P^T L U, so M^T y = b is U^T z = b, L^T w = z, y = P^T w.
    const int n = lu_.rows();
    std::vector<double> z(n);
    for (int i = 0; i < n; ++i) {  // U^T z = b (forward)
        double s = b[i];
        for (int j = 0; j < i; ++j) s -= lu_(j, i) * z[j];
        z[i] = s / lu_(i, i);
    }
    for (int i = n - 1; i >= 0; --i) {  // L^T w = z (backward)
        double s = z[i];
        for (int j = i + 1; j < n; ++j) s -= lu_(j, i) * z[j];
        z[i] = s;
    }
    std::vector<double> y(n);
    for (int i = 0; i < n; ++i) y[perm_[i]] = z[i];
    return y;
}

namespace {

Mat lyapunov_operator(const Mat& a) {
    const Mat eye = Mat::identity(a.rows());
    return kron(a, eye) + kron(eye, a);
}

}  // namespace

AleSolver::AleSolver(Mat a, double hurwitz_margin)
    : a_(std::move(a)), abscissa_(spectral_abscissa(a_)), lu_(lyapunov_operator(a_)) {
    if (!(abscissa_ < -hurwitz_margin))
        throw Error(ErrorKind::NotHurwitz, "AleSolver: coefficient matrix is not Hurwitz (spectral abscissa " +
                                               std::to_string(abscissa_) + ")");
}

Mat AleSolver::solve_impl(const Mat& v, bool adjoint) const {
    const int d = a_.rows();
    require_square(v, "AleSolver::solve");
    if (v.rows() != d) throw Error(ErrorKind::DimensionMismatch, "AleSolver::solve: order mismatch");

    // Row-major data of X is the row-stacked vec, for which
    //   vec(A X + X A^T) = (kron(A,I) + kron(I,A)) vec(X),
    // and the adjoint equation uses the transposed operator.
    std::vector<double> rhs(v.data());
    for (double& x : rhs) x = -x;
    std::vector<double> sol = adjoint ? lu_.solve_transposed(rhs) : lu_.solve(rhs);

    Mat x(d, d);
    x.data() = std::move(sol);
    if (!x.all_finite()) throw Error(ErrorKind::SingularSystem, "AleSolver: non-finite solution");
    x = symmetrize(x);

    const Mat& m = a_;
    const Mat residual = adjoint ? Mat(transpose(m) * x + x * m + v) : Mat(m * x + x * transpose(m) + v);
    const double bound = kAleResidualTol * (1.0 + frob_norm(v));
    if (frob_norm(residual) > bound)
        throw Error(ErrorKind::SingularSystem, "AleSolver: residual " + std::to_string(frob_norm(residual)) +
                                                   " exceeds bound " + std::to_string(bound));
    return x;
}

Mat AleSolver::solve(const Mat& v) const { return solve_impl(v, false); }

Mat AleSolver::solve_adjoint(const Mat& v) const { return solve_impl(v, true); }

Mat solve_ale(const Mat& a, const Mat& v, double hurwitz_margin) {
    require_square(a, "solve_ale");
    return AleSolver(a, hurwitz_margin).solve(v);
}

}  // namespace cqf
