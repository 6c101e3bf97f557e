#pragma once

#include "cqf/analysis.hpp"
#include "cqf/weyl.hpp"

namespace cqf {

/// Independent verification paths for the closed-form gradients and the
/// Gaussian moment identity. Nothing here reuses the closed-form formulas:
/// finite differences re-evaluate the cost, the sensitivity path solves a
/// perturbed Lyapunov equation, and the moment oracle differentiates the
/// quasi-characteristic function numerically.

struct FdGradient {
    Mat grad_r;   // nu x nu symmetric, assembled from paired (i,j)/(j,i) perturbations
    Mat grad_N1;  // p x nu
    double h = 0.0;
};

/// Central finite differences of the cost over the symmetric basis of r and
/// the entries of N1. Per-direction step h * (1 + |entry|); if a perturbed
/// point loses stability the step is halved, up to 10 times
/// (NotHurwitzAfterShrink beyond that).
FdGradient fd_cost_gradient(const Model& model, double h = 1e-6);

/// A perturbation direction of the observer parameters: exactly one of
/// {dr (symmetric nu x nu), dN1 (p x nu)}.
struct SensDirection {
    enum class Kind { r, N1 };
    Kind kind = Kind::r;
    Mat delta;

    static SensDirection along_r(Mat dr) { return {Kind::r, std::move(dr)}; }
    static SensDirection along_N1(Mat dn1) { return {Kind::N1, std::move(dn1)}; }
};

/// First-order response of the controllability Gramian and the cost to the
/// given parameter direction, from the sensitivity Lyapunov equation
///   A_aug dP + dP A_aug^T + (dA_aug P + P dA_aug^T + dB_aug B_aug^T + B_aug dB_aug^T) = 0,
/// with dCost = <C_aug^T C_aug, dP>. Exact up to linear-solver accuracy.
struct SensitivitySolution {
    SensDirection direction;
    Mat dP;
    double dCost = 0.0;
};

SensitivitySolution sensitivity_directional(const Model& model, const StateSpace& ss, const GramianSet& g,
                                            const SensDirection& direction);

/// Full gradient matrices assembled from sensitivity solves over the
/// canonical directions.
FdGradient sensitivity_gradient(const Model& model, const StateSpace& ss, const GramianSet& g);

/// Numerical version of the first-moment identity: central-difference
/// gradient of the quasi-characteristic function at lambda = [0; u],
/// assembled as -i (grad qcf) - [0; vartheta u] qcf.
FirstMoment moment_oracle(const Mat& u, const GramianSet& g, const Mat& vartheta, double h = 1e-5);

}  // namespace cqf
