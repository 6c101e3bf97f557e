#include "cqf/oracle.hpp"

#include <cmath>

namespace cqf {

namespace {

// Cost of the model with the observer's (r, N1) replaced; throws NotHurwitz
// when the perturbed observer loses stability.
double cost_at(Model model, const Mat& r, const Mat& n1) {
    model.observer.r = r;
    model.observer.N1 = n1;
    const StateSpace ss = assemble(model);
    const GramianSet g = gramians(ss);
    return cost(ss, g);
}

// Central difference along one parameter direction, shrinking the step on
// stability loss.
double central_difference(const Model& model, const Mat& dr, const Mat& dn1, double step) {
    const Mat& r0 = model.observer.r;
    const Mat& n10 = model.observer.N1;
    for (int shrink = 0; shrink <= 10; ++shrink) {
        try {
            const double plus = cost_at(model, r0 + step * dr, n10 + step * dn1);
            const double minus = cost_at(model, r0 - step * dr, n10 - step * dn1);
            return (plus - minus) / (2.0 * step);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotHurwitz) throw;
            step *= 0.5;
        }
    }
    throw Error(ErrorKind::NotHurwitzAfterShrink,
                "fd_cost_gradient: perturbed system stayed non-Hurwitz after 10 step reductions");
}

}  // namespace

FdGradient fd_cost_gradient(const Model& model, double h) {
    require_valid(model);
    const int nu = model.observer.nu;
    const int p = model.observer.p;
    FdGradient out;
    out.h = h;
    out.grad_r = Mat(nu, nu);
    out.grad_N1 = Mat(p, nu);

    // r lives in the symmetric matrices: off-diagonal directions perturb
    // (i,j) and (j,i) jointly, and the directional derivative then equals
    // grad_r[i][j] + grad_r[j][i].
    for (int i = 0; i < nu; ++i) {
        for (int j = 0; j <= i; ++j) {
            Mat dr(nu, nu);
            dr(i, j) = 1.0;
            dr(j, i) = 1.0;  // on the diagonal this collapses to the plain unit direction
            const double step = h * (1.0 + std::abs(model.observer.r(i, j)));
            const double d = central_difference(model, dr, Mat::zero(p, nu), step);
            if (i == j) {
                out.grad_r(i, i) = d;
            } else {
                out.grad_r(i, j) = 0.5 * d;
                out.grad_r(j, i) = 0.5 * d;
            }
        }
    }
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < nu; ++j) {
            Mat dn1(p, nu);
            dn1(i, j) = 1.0;
            const double step = h * (1.0 + std::abs(model.observer.N1(i, j)));
            out.grad_N1(i, j) = central_difference(model, Mat::zero(nu, nu), dn1, step);
        }
    }
    return out;
}

SensitivitySolution sensitivity_directional(const Model& model, const StateSpace& ss, const GramianSet& g,
                                            const SensDirection& direction) {
    const int n = ss.n, nu = ss.nu, m = ss.m, mu = ss.mu;
    const Mat& vartheta = model.observer.vartheta;

    Mat da(nu, nu);
    Mat db1(nu, m);
    if (direction.kind == SensDirection::Kind::r) {
        if (direction.delta.rows() != nu || direction.delta.cols() != nu)
            throw Error(ErrorKind::DimensionMismatch, "sensitivity: dr must be nu x nu");
        da = 2.0 * (vartheta * direction.delta);
    } else {
        if (direction.delta.rows() != model.observer.p || direction.delta.cols() != nu)
            throw Error(ErrorKind::DimensionMismatch, "sensitivity: dN1 must be p x nu");
        const Mat pi = model.observer.pi(m);
        const Mat j = build_ito(m);
        const Mat pjp = pi * j * transpose(pi);  // p x p
        const Mat dn1t = transpose(direction.delta);
        const Mat n1t = transpose(model.observer.N1);
        da = 2.0 * (vartheta * (dn1t * pjp * model.observer.N1 + n1t * pjp * direction.delta));
        db1 = 2.0 * (vartheta * dn1t * pi);
    }

    const Mat dA_aug = block2x2(Mat::zero(n, n), Mat::zero(n, nu), db1 * ss.C, da);
    const Mat dB_aug = block2x2(Mat::zero(n, m), Mat::zero(n, mu), db1, Mat::zero(nu, mu));

    const Mat v = dA_aug * g.P + g.P * transpose(dA_aug) + dB_aug * transpose(ss.B_aug) +
                  ss.B_aug * transpose(dB_aug);

    SensitivitySolution sol{direction, Mat(), 0.0};
    sol.dP = solve_ale(ss.A_aug, v);
    sol.dCost = frob_inner(transpose(ss.C_aug) * ss.C_aug, sol.dP);
    return sol;
}

FdGradient sensitivity_gradient(const Model& model, const StateSpace& ss, const GramianSet& g) {
    const int nu = model.observer.nu;
    const int p = model.observer.p;
    FdGradient out;
    out.grad_r = Mat(nu, nu);
    out.grad_N1 = Mat(p, nu);

    for (int i = 0; i < nu; ++i) {
        for (int j = 0; j <= i; ++j) {
            Mat dr(nu, nu);
            dr(i, j) = 1.0;
            dr(j, i) = 1.0;
            const double d = sensitivity_directional(model, ss, g, SensDirection::along_r(dr)).dCost;
            if (i == j) {
                out.grad_r(i, i) = d;
            } else {
                out.grad_r(i, j) = 0.5 * d;
                out.grad_r(j, i) = 0.5 * d;
            }
        }
    }
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < nu; ++j) {
            Mat dn1(p, nu);
            dn1(i, j) = 1.0;
            out.grad_N1(i, j) = sensitivity_directional(model, ss, g, SensDirection::along_N1(dn1)).dCost;
        }
    }
    return out;
}

FirstMoment moment_oracle(const Mat& u, const GramianSet& g, const Mat& vartheta, double h) {
    if (h <= 0.0) throw Error(ErrorKind::InvalidSpec, "moment_oracle: step must be positive");
    const int d = g.n + g.nu;
    Mat lambda0 = vstack(Mat::zero(g.n, 1), u);

    Mat grad(d, 1);
    for (int k = 0; k < d; ++k) {
        Mat lp = lambda0, lm = lambda0;
        lp(k, 0) += h;
        lm(k, 0) -= h;
        grad(k, 0) = (qcf(lp, g.P) - qcf(lm, g.P)) / (2.0 * h);
    }
    const double qcf0 = qcf(lambda0, g.P);

    // -i * grad - [0; vartheta u] * qcf0, split into real and imaginary parts.
    FirstMoment out;
    out.gauss_factor = qcf0;
    out.im = -1.0 * grad;
    out.re = -qcf0 * vstack(Mat::zero(g.n, 1), vartheta * u);
    return out;
}

}  // namespace cqf
