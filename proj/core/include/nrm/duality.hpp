#pragma once

#include "nrm/problem.hpp"

namespace nrm {

using DualPoint = Vector;

// Primal/dual feasible pair at a fixed lambda. The residual vector t is
// kept consistent with B by construction: t_i = y_i - <X_i, B>.
struct FeasiblePair {
    Matrix B;
    Vector t;
    DualPoint theta;
    double lambda;
};

struct KktResidual {
    double spectral_excess;    // max(0, ||A*(theta)||_2 - lambda)
    double subgradient_gap;    // |lambda ||B||_* - <A*(theta), B>|
    double gradient_mismatch;  // max_i |theta_i - grad f_i(t_i)|
};

// Unconstrained maximizer of <y, theta> - sum f_i*(theta_i):
// y for least squares, the kappa-clipped y for Huber.
DualPoint theta_max(const Dataset& d, const LossModel& loss);

// ||A*(theta_max)||_2; the smallest lambda at/above which the solution is zero.
double lambda_max(const Dataset& d, const LossModel& loss);

// G_lambda(theta) = <y, theta> - sum f_i*(theta_i); nullopt when some
// conjugate is +infinity (Huber box violated).
std::optional<double> dual_objective(const Dataset& d, const LossModel& loss,
                                     const DualPoint& theta);

bool dual_feasible(const Dataset& d, const LossModel& loss, const DualPoint& theta,
                   double lambda);

// theta = (lambda/lambda_max) theta_max, B = A*(theta_max)/lambda_max.
// Requires 0 < lambda <= lambda_max and lambda_max > 0.
FeasiblePair scaled_feasible_pair(const Dataset& d, const LossModel& loss, double lambda);

double duality_gap(const NrmProblem& prob, const FeasiblePair& pair);

KktResidual kkt_residual(const NrmProblem& prob, const Matrix& B, const DualPoint& theta);

}  // namespace nrm
