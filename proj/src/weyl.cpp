#include "cqf/weyl.hpp"

#include <cmath>
#include <numbers>

#include "cqf/rng.hpp"

namespace cqf {

double qcf(const Mat& lambda, const Mat& p) {
    if (lambda.cols() != 1 || lambda.rows() != p.rows())
        throw Error(ErrorKind::DimensionMismatch, "qcf: lambda must be a column of the Gramian order");
    require_square(p, "qcf");
    return std::exp(-0.5 * frob_inner(lambda, p * lambda));
}

namespace {

double gauss_factor_of(const Mat& u, const GramianSet& g) {
    if (u.cols() != 1 || u.rows() != g.nu)
        throw Error(ErrorKind::DimensionMismatch, "weyl: u must be a nu x 1 column");
    return std::exp(-0.5 * frob_inner(u, g.P22 * u));
}

}  // namespace

FirstMoment weyl_first_moment(const Mat& u, const GramianSet& g, const Mat& vartheta) {
    const double gf = gauss_factor_of(u, g);
    FirstMoment out;
    out.gauss_factor = gf;
    out.im = gf * (g.P_col2() * u);
    out.re = -gf * vstack(Mat::zero(g.n, 1), vartheta * u);
    return out;
}

double weyl_deriv_hamiltonian(const WeylQuery& q, const GramianSet& g, const Mat& vartheta) {
    const double gf = gauss_factor_of(q.u, g);
    const Mat s = symmetrize(vartheta * g.E22);
    return 4.0 * frob_inner(q.u, s * q.u) * gf * q.alpha.real();
}

double weyl_deriv_coupling(const WeylQuery& q, const Model& model, const StateSpace& ss, const GramianSet& g,
                           double tol) {
    const GradientReport rep = gradient(model, ss, g);
    const double scale = 1.0 + std::abs(rep.cost);
    const double r_residual = frob_norm(rep.residual_r);
    if (r_residual > tol * scale)
        throw Error(ErrorKind::StationarityViolated,
                    "weyl_deriv_coupling: the closed form requires the r-direction stationarity residual to vanish "
                    "(got " +
                        std::to_string(r_residual) + ", allowed " + std::to_string(tol * scale) + ")");
    if (static_cast<int>(q.beta.size()) != model.observer.p)
        throw Error(ErrorKind::DimensionMismatch, "weyl_deriv_coupling: beta must have p entries");

    const double gf = gauss_factor_of(q.u, g);
    // The direction matrix is the negative of the N1-direction residual.
    const Mat v = rep.residual_N1 * q.u;  // p x 1
    double s = 0.0;
    for (int k = 0; k < v.rows(); ++k) s += q.beta[k].imag() * v(k, 0);
    return -4.0 * s * gf;
}

WeylScanReport weyl_scan(const Model& model, const StateSpace& ss, const GramianSet& g, int samples, double radius,
                         std::uint64_t seed, double tol) {
    const GradientReport rep = gradient(model, ss, g);
    WeylScanReport report;
    report.samples = samples;
    report.radius = radius;
    report.seed = seed;
    report.cost = rep.cost;
    report.stationarity_scale = 1.0 + std::abs(rep.cost);
    report.dM_computed = frob_norm(rep.residual_r) <= tol * report.stationarity_scale;

    const int nu = model.observer.nu;
    const int p = model.observer.p;
    const std::complex<double> alphas[] = {{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}};

    Rng rng(seed);
    for (int s = 0; s < samples; ++s) {
        // u uniform in the ball: normalized Gaussian direction, radius by
        // the 1/nu power law.
        Mat dir = rng.normal_mat(nu, 1);
        const double norm = frob_norm(dir);
        const double rad = radius * std::pow(rng.uniform(), 1.0 / nu);
        Mat u = norm > 0.0 ? Mat((rad / norm) * dir) : Mat::zero(nu, 1);

        WeylQuery q;
        q.u = u;
        q.beta.resize(p);
        for (int k = 0; k < p; ++k) {
            const double phase = 2.0 * std::numbers::pi * rng.uniform();
            q.beta[k] = {std::cos(phase), std::sin(phase)};
        }

        for (const auto& alpha : alphas) {
            q.alpha = alpha;
            const double dk = weyl_deriv_hamiltonian(q, g, model.observer.vartheta);
            if (std::abs(dk) > report.max_abs_dK) {
                report.max_abs_dK = std::abs(dk);
                report.argmax_K = q;
            }
        }
        if (report.dM_computed) {
            q.alpha = alphas[0];
            const double dm = weyl_deriv_coupling(q, model, ss, g, tol);
            if (std::abs(dm) > report.max_abs_dM) {
                report.max_abs_dM = std::abs(dm);
                report.argmax_M = q;
            }
        }
    }
    return report;
}

}  // namespace cqf
