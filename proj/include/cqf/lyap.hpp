#pragma once

#include <vector>

#include "cqf/mat.hpp"

namespace cqf {

/// LU factorization with partial pivoting; solves with the factored matrix
/// and with its transpose (one factorization serves both).
class LuFactor {
  public:
    explicit LuFactor(Mat a);

    std::vector<double> solve(std::vector<double> b) const;
    std::vector<double> solve_transposed(const std::vector<double>& b) const;
    int order() const { return lu_.rows(); }

  private:
    Mat lu_;
    std::vector<int> perm_;
};

inline constexpr double kDefaultHurwitzMargin = 1e-9;
inline constexpr double kAleResidualTol = 1e-10;

/// Solver for algebraic Lyapunov equations sharing one coefficient matrix:
/// factors kron(A,I) + kron(I,A) once and answers both
///   A X + X A^T + V = 0        (solve)
///   A^T X + X A + V = 0        (solve_adjoint)
/// Orders here stay small (<= ~32), so the O(d^6) Kronecker route is fine
/// and avoids a Schur decomposition; every solution is checked against the
/// residual bound ||A X + X A^T + V||_F <= 1e-10 (1 + ||V||_F).
class AleSolver {
  public:
    explicit AleSolver(Mat a, double hurwitz_margin = kDefaultHurwitzMargin);

    Mat solve(const Mat& v) const;
    Mat solve_adjoint(const Mat& v) const;

    const Mat& coefficient() const { return a_; }
    double abscissa() const { return abscissa_; }

  private:
    Mat solve_impl(const Mat& v, bool adjoint) const;

    Mat a_;
    double abscissa_;
    LuFactor lu_;
};

/// One-shot form of AleSolver::solve.
Mat solve_ale(const Mat& a, const Mat& v, double hurwitz_margin = kDefaultHurwitzMargin);

}  // namespace cqf
