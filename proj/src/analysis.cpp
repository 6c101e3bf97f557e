#include "cqf/analysis.hpp"

#include <cmath>

namespace cqf {

GramianSet gramians(const StateSpace& ss, double hurwitz_margin) {
    AleSolver solver(ss.A_aug, hurwitz_margin);
    GramianSet g;
    g.n = ss.n;
    g.nu = ss.nu;
    g.P = solver.solve(ss.B_aug * transpose(ss.B_aug));
    g.Q = solver.solve_adjoint(transpose(ss.C_aug) * ss.C_aug);
    g.E = g.Q * g.P;

    const int n = ss.n, nu = ss.nu;
    g.P11 = g.P.block(0, 0, n, n);
    g.P12 = g.P.block(0, n, n, nu);
    g.P22 = g.P.block(n, n, nu, nu);
    g.Q11 = g.Q.block(0, 0, n, n);
    g.Q12 = g.Q.block(0, n, n, nu);
    g.Q22 = g.Q.block(n, n, nu, nu);
    g.E11 = g.E.block(0, 0, n, n);
    g.E12 = g.E.block(0, n, n, nu);
    g.E21 = g.E.block(n, 0, nu, n);
    g.E22 = g.E.block(n, n, nu, nu);
    return g;
}

double cost(const StateSpace& ss, const GramianSet& g) {
    return frob_inner(transpose(ss.C_aug) * ss.C_aug, g.P);
}

GradientReport gradient(const Model& model, const StateSpace& ss, const GramianSet& g) {
    const Mat pi = model.observer.pi(ss.m);
    const Mat j = build_ito(ss.m);
    const Mat& vartheta = model.observer.vartheta;

    GradientReport rep;
    rep.cost = cost(ss, g);
    rep.residual_r = symmetrize(vartheta * g.E22);
    rep.residual_N1 =
        pi * ((ss.C * transpose(g.E21) + transpose(ss.B) * g.Q12 + transpose(ss.b1) * g.Q22) * vartheta -
              j * transpose(ss.b1) * g.E22);
    rep.grad_r = -4.0 * rep.residual_r;
    rep.grad_N1 = 4.0 * rep.residual_N1;
    rep.grad_norm = std::sqrt(frob_inner(rep.grad_r, rep.grad_r) + frob_inner(rep.grad_N1, rep.grad_N1));
    return rep;
}

StationarityVerdict check_stationarity(const GradientReport& report, double tol) {
    StationarityVerdict v;
    v.residual_r_norm = frob_norm(report.residual_r);
    v.residual_N1_norm = frob_norm(report.residual_N1);
    v.scale = 1.0 + std::abs(report.cost);
    v.tol = tol;
    v.stationary = v.residual_r_norm <= tol * v.scale && v.residual_N1_norm <= tol * v.scale;
    return v;
}

}  // namespace cqf
