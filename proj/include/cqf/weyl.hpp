#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "cqf/analysis.hpp"

namespace cqf {

/// One Weyl variation of the observer energy operators: the Hamiltonian is
/// perturbed along Re(alpha W_u) and the plant-output coupling along
/// Re(beta W_u), where W_u is the unitary Weyl operator at frequency u.
struct WeylQuery {
    std::complex<double> alpha{0.0, 0.0};
    std::vector<std::complex<double>> beta;  // p entries
    Mat u;                                   // nu x 1
};

/// Quasi-characteristic function of the zero-mean invariant Gaussian state:
/// exp(-lambda^T P lambda / 2), in (0, 1] for PSD P.
double qcf(const Mat& lambda, const Mat& p);

/// First moment of the system vector against the Weyl operator,
///   gf * (i P_col2 u - [0; vartheta u]),   gf = exp(-||u||^2_{P22} / 2),
/// returned as real and imaginary parts.
struct FirstMoment {
    Mat re;  // (n+nu) x 1
    Mat im;  // (n+nu) x 1
    double gauss_factor = 0.0;
};

FirstMoment weyl_first_moment(const Mat& u, const GramianSet& g, const Mat& vartheta);

/// Cost derivative along the Hamiltonian variation Re(alpha W_u):
///   4 u^T S(vartheta E22) u * gf * Re(alpha).
double weyl_deriv_hamiltonian(const WeylQuery& q, const GramianSet& g, const Mat& vartheta);

/// Cost derivative along the coupling variation Re(beta W_u):
///   4 Im(beta)^T Pi (J b1^T E22 - (C E21^T + B^T Q12 + b1^T Q22) vartheta) u * gf.
/// The closed form is only valid once the r-direction stationarity residual
/// vanishes, so this refuses (StationarityViolated) when
/// ||S(vartheta E22)||_F > tol * (1 + |cost|).
double weyl_deriv_coupling(const WeylQuery& q, const Model& model, const StateSpace& ss, const GramianSet& g,
                           double tol = 1e-6);

struct WeylScanReport {
    int samples = 0;
    double radius = 0.0;
    std::uint64_t seed = 0;
    double cost = 0.0;
    double max_abs_dK = 0.0;
    double max_abs_dM = 0.0;
    bool dM_computed = false;  // false when the r-direction residual blocks the closed form
    double stationarity_scale = 0.0;  // 1 + |cost|
    WeylQuery argmax_K;
    WeylQuery argmax_M;
};

/// Samples u uniformly in the ball of the given radius, alpha over
/// {1, i, 1+i} and beta with unit-modulus random phases, and reports the
/// largest derivative magnitudes seen. Deterministic per seed.
WeylScanReport weyl_scan(const Model& model, const StateSpace& ss, const GramianSet& g, int samples, double radius,
                         std::uint64_t seed, double tol = 1e-6);

}  // namespace cqf
