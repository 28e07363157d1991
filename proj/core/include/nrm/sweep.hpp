#pragma once

#include "nrm/io.hpp"

namespace nrm {

// Best available certificate at lambda: closed-form sequence, the gap-ball
// rule at the scaled feasible pair, or rank 0 above lambda_max.
RankCertificate best_certificate(const Dataset& d, const LossModel& loss,
                                 const LambdaSequence& seq, double lambda);

// One solve + certificate per lambda; rows sorted by lambda descending.
// Solver non-convergence is recorded in the row, never aborts the sweep.
SweepResult run_sweep(const Dataset& d, const LossModel& loss,
                      std::vector<double> lambdas, const SolverOptions& opts,
                      bool timing = false);

// Full config-driven experiment: obtain the dataset (generated or loaded),
// resolve fraction grids against lambda_max, sweep, and emit outputs.
SweepResult run_experiment(const ExperimentConfig& cfg);

}  // namespace nrm
