#include "cqf/optimizer.hpp"

#include <algorithm>
#include <cmath>

#include "cqf/eig.hpp"
#include "cqf/rng.hpp"

namespace cqf {

void OptimizerConfig::check() const {
    if (!(armijo_c1 > 0.0 && armijo_c1 < 1.0)) throw Error(ErrorKind::InvalidSpec, "armijo_c1 must be in (0,1)");
    if (!(backtrack > 0.0 && backtrack < 1.0)) throw Error(ErrorKind::InvalidSpec, "backtrack must be in (0,1)");
    if (!(grad_tol > 0.0) || !(init_step > 0.0) || !(hurwitz_margin > 0.0))
        throw Error(ErrorKind::InvalidSpec, "tolerances and steps must be positive");
    if (max_iters < 0 || trace_every < 1) throw Error(ErrorKind::InvalidSpec, "max_iters >= 0, trace_every >= 1");
}

const char* opt_status_name(OptStatus s) {
    switch (s) {
        case OptStatus::Converged: return "Converged";
        case OptStatus::MaxIters: return "MaxIters";
        case OptStatus::StepCollapse: return "StepCollapse";
    }
    return "Unknown";
}

namespace {

constexpr double kStepFloor = 1e-16;

struct Evaluation {
    StateSpace ss;
    GramianSet g;
    GradientReport rep;
    double abscissa = 0.0;
};

// Assemble + Gramians + gradient at the given observer parameters.
// Propagates NotHurwitz from assemble().
Evaluation evaluate(Model& model, const Mat& r, const Mat& n1, double margin) {
    model.observer.r = r;
    model.observer.N1 = n1;
    Evaluation ev;
    ev.ss = assemble(model, margin);
    ev.g = gramians(ev.ss, margin);
    ev.rep = gradient(model, ev.ss, ev.g);
    ev.abscissa = std::max(spectral_abscissa(ev.ss.A), spectral_abscissa(ev.ss.a));
    return ev;
}

}  // namespace

OptimizeResult optimize(const Model& model_in, const OptimizerConfig& config) {
    config.check();
    Model model = model_in;
    require_valid(model);

    Mat r = symmetrize(model.observer.r);
    Mat n1 = model.observer.N1;

    Evaluation ev = evaluate(model, r, n1, config.hurwitz_margin);  // NotHurwitz here = bad initialization

    OptimizeResult out;
    out.trace.status = OptStatus::MaxIters;

    auto record = [&](int iter, double step) {
        out.trace.records.push_back({iter, ev.rep.cost, ev.rep.grad_norm, step, frob_norm(ev.rep.residual_r),
                                     frob_norm(ev.rep.residual_N1), ev.abscissa});
    };

    double last_step = config.init_step;
    int iter = 0;
    for (; iter < config.max_iters; ++iter) {
        if (ev.rep.grad_norm <= config.grad_tol * (1.0 + std::abs(ev.rep.cost))) {
            out.trace.status = OptStatus::Converged;
            break;
        }

        // Armijo backtracking, warm-started from twice the last accepted step.
        const double slope = ev.rep.grad_norm * ev.rep.grad_norm;
        double step = std::min(config.init_step, 2.0 * last_step);
        bool accepted = false;
        while (step >= kStepFloor) {
            const Mat r_try = symmetrize(r - step * ev.rep.grad_r);
            const Mat n1_try = n1 - step * ev.rep.grad_N1;
            try {
                Evaluation ev_try = evaluate(model, r_try, n1_try, config.hurwitz_margin);
                if (ev_try.rep.cost <= ev.rep.cost - config.armijo_c1 * step * slope) {
                    if (iter % config.trace_every == 0) record(iter, step);
                    r = r_try;
                    n1 = n1_try;
                    ev = std::move(ev_try);
                    accepted = true;
                    last_step = step;
                    break;
                }
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::NotHurwitz) throw;  // reject the trial point, keep shrinking
            }
            step *= config.backtrack;
        }
        if (!accepted)
            throw Error(ErrorKind::StepCollapse, "optimize: no acceptable step above " + std::to_string(kStepFloor) +
                                                     " at iteration " + std::to_string(iter));
    }
    if (iter >= config.max_iters) out.trace.status = OptStatus::MaxIters;

    record(iter, 0.0);
    out.trace.iterations = iter;
    model.observer.r = r;
    model.observer.N1 = n1;
    out.model = model;
    out.final_report = ev.rep;
    return out;
}

MultistartResult multistart(const Model& model, const OptimizerConfig& config, int starts, std::uint64_t seed) {
    if (starts < 1) throw Error(ErrorKind::InvalidSpec, "multistart: starts must be >= 1");
    require_valid(model);

    MultistartResult out;
    bool have_best = false;

    for (int s = 0; s < starts; ++s) {
        Model start_model = model;
        StartSummary summary;
        summary.start = s;

        if (s > 0) {  // start 0 keeps the observer as given
            Rng rng(derived_seed(seed, static_cast<std::uint64_t>(s)));
            const int nu = model.observer.nu;
            const int p = model.observer.p;
            double scale = 1.0;
            bool found = false;
            for (int attempt = 0; attempt < 100; ++attempt) {
                start_model.observer.r = scale * rng.symmetric_normal(nu);
                start_model.observer.N1 = rng.normal_mat(p, nu);
                const ObserverMatrices om = derive_observer(start_model.observer, model.plant.m);
                if (is_hurwitz(om.a, config.hurwitz_margin)) {
                    found = true;
                    break;
                }
                scale *= 0.5;
            }
            if (!found) {
                summary.init_failed = true;
                out.summaries.push_back(summary);
                continue;
            }
        }

        try {
            OptimizeResult res = optimize(start_model, config);
            summary.status = res.trace.status;
            summary.cost = res.final_report.cost;
            summary.grad_norm = res.final_report.grad_norm;
            summary.iterations = res.trace.iterations;
            if (res.trace.status == OptStatus::Converged &&
                (!have_best || res.final_report.cost < out.best.final_report.cost)) {
                out.best = std::move(res);
                out.best_start = s;
                have_best = true;
            }
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::StepCollapse)
                summary.status = OptStatus::StepCollapse;
            else if (e.kind() == ErrorKind::NotHurwitz)
                summary.init_failed = true;
            else
                throw;
        }
        out.summaries.push_back(summary);
    }

    if (!have_best) throw Error(ErrorKind::AllStartsFailed, "multistart: no start converged");
    return out;
}

}  // namespace cqf
