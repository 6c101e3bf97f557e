#pragma once

#include "cqf/model.hpp"

namespace cqf {

/// Steady-state second-moment data of the plant-observer cascade:
/// controllability Gramian P, observability Gramian Q (both for the
/// composite system), their product E = Q P, and the n | nu blocks that
/// enter the gradient formulas.
struct GramianSet {
    int n = 0;
    int nu = 0;
    Mat P, Q, E;
    Mat P11, P12, P22;
    Mat Q11, Q12, Q22;
    Mat E11, E12, E21, E22;

    /// [P12; P22], the block column of P against the observer variables.
    Mat P_col2() const { return vstack(P12, P22); }
};

/// Solves the two composite Lyapunov equations
///   A_aug P + P A_aug^T + B_aug B_aug^T = 0,
///   A_aug^T Q + Q A_aug + C_aug^T C_aug = 0
/// with one factorization, and forms the block partition.
GramianSet gramians(const StateSpace& ss, double hurwitz_margin = kDefaultHurwitzMargin);

/// Steady-state mean square estimation error Tr(C_aug P C_aug^T).
double cost(const StateSpace& ss, const GramianSet& g);

/// Closed-form cost derivatives over the observer parameters (r, N1),
/// with the two stationarity residuals they are proportional to:
///   residual_r  = S(vartheta E22)                      (grad_r  = -4 residual_r)
///   residual_N1 = Pi ((C E21^T + B^T Q12 + b1^T Q22) vartheta
///                     - J b1^T E22)                    (grad_N1 = 4 residual_N1)
/// The observer is a stationary point iff both residuals vanish.
struct GradientReport {
    double cost = 0.0;
    Mat grad_r;        // nu x nu, symmetric
    Mat grad_N1;       // p x nu
    Mat residual_r;    // nu x nu
    Mat residual_N1;   // p x nu
    double grad_norm = 0.0;  // Frobenius norm of the (grad_r, grad_N1) pair
};

GradientReport gradient(const Model& model, const StateSpace& ss, const GramianSet& g);

struct StationarityVerdict {
    bool stationary = false;
    double residual_r_norm = 0.0;
    double residual_N1_norm = 0.0;
    double scale = 0.0;  // 1 + |cost|
    double tol = 0.0;
};

/// Stationary iff both residual norms are within tol * (1 + |cost|).
StationarityVerdict check_stationarity(const GradientReport& report, double tol);

}  // namespace cqf
