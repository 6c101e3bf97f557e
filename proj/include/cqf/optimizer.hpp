#pragma once

#include <cstdint>
#include <vector>

#include "cqf/analysis.hpp"

namespace cqf {

struct OptimizerConfig {
    int max_iters = 100000;
    double grad_tol = 1e-8;      // converged when grad_norm <= grad_tol * (1 + |cost|)
    double armijo_c1 = 1e-4;
    double backtrack = 0.5;
    double init_step = 1.0;
    double hurwitz_margin = kDefaultHurwitzMargin;
    int trace_every = 1;  // record every k-th accepted iterate (0 and the last always)

    void check() const;
};

enum class OptStatus { Converged, MaxIters, StepCollapse };

const char* opt_status_name(OptStatus s);

struct TraceRecord {
    int iter = 0;
    double cost = 0.0;
    double grad_norm = 0.0;
    double step = 0.0;  // step accepted to leave this iterate (0 at the final record)
    double residual_r_norm = 0.0;
    double residual_N1_norm = 0.0;
    double abscissa = 0.0;  // spectral abscissa of the composite drift matrix
};

struct OptimizerTrace {
    std::vector<TraceRecord> records;
    OptStatus status = OptStatus::MaxIters;
    int iterations = 0;
};

struct OptimizeResult {
    Model model;  // input model with the optimized (r, N1) in place
    OptimizerTrace trace;
    GradientReport final_report;
};

/// Gradient descent over (r, N1) with Armijo backtracking on the true cost.
/// Trial steps that lose stability (with margin) or miss the Armijo bound
/// are rejected and the step halved; r stays exactly symmetric. All other
/// data (plant, vartheta, N2, selector, cost weights) are held fixed.
OptimizeResult optimize(const Model& model, const OptimizerConfig& config = {});

struct StartSummary {
    int start = 0;
    OptStatus status = OptStatus::MaxIters;
    double cost = 0.0;
    double grad_norm = 0.0;
    int iterations = 0;
    bool init_failed = false;  // no Hurwitz initialization found for this start
};

struct MultistartResult {
    OptimizeResult best;
    int best_start = 0;
    std::vector<StartSummary> summaries;
};

/// optimize() from `starts` seeded random (r, N1) initializations, keeping
/// the lowest-cost converged run (ties broken by start index). Start 0 uses
/// the observer as given. Throws AllStartsFailed when nothing converges.
MultistartResult multistart(const Model& model, const OptimizerConfig& config, int starts, std::uint64_t seed);

}  // namespace cqf
