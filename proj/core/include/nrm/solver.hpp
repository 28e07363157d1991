#pragma once

#include "nrm/duality.hpp"

namespace nrm {

enum class StepRule { fixed_from_lipschitz, backtracking };

struct SolverOptions {
    int max_iterations = 5000;
    double gap_tolerance = 1e-7;  // relative: stop at gap <= tol * (1 + |F|)
    StepRule step_rule = StepRule::fixed_from_lipschitz;
    bool restart = true;
};

struct Solution {
    Matrix B;
    Vector t;          // y - A(B)
    DualPoint theta;   // gradient map, rescaled into the dual feasible set
    double final_gap = 0.0;
    double objective = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Upper estimate of ||A||_op^2 via power iteration on A* A, inflated by 5%.
double lipschitz_estimate(const Dataset& d);

// Accelerated proximal gradient (gradient step on the smooth part, then
// singular value thresholding) with function-value restart and duality-gap
// stopping. Non-convergence is reported via converged=false, not thrown.
Solution solve_nrm(const NrmProblem& prob, const SolverOptions& opts = {});

// Number of singular values above rel_tol * max(sigma_1, 1e-30).
int numerical_rank(const Matrix& B, double rel_tol = 1e-6);

}  // namespace nrm
