#include "nrm/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "nrm/plot.hpp"

namespace nrm {

RankCertificate best_certificate(const Dataset& d, const LossModel& loss,
                                 const LambdaSequence& seq, double lambda) {
    RankCertificate closed = rank_bound_for_lambda(seq, lambda);
    if (lambda > seq.lambda_max) {
        return closed;  // above lambda_max the solution is exactly zero
    }
    FeasiblePair pair = scaled_feasible_pair(d, loss, lambda);
    Vector thresholds = gap_ball_thresholds(d, loss, pair);
    RankCertificate ball =
        certificate_from_thresholds(thresholds, lambda, CertificateSource::gap_ball);
    if (!closed.certified_rank_bound) return ball;
    if (!ball.certified_rank_bound) return closed;
    return *ball.certified_rank_bound < *closed.certified_rank_bound ? ball : closed;
}

SweepResult run_sweep(const Dataset& d, const LossModel& loss,
                      std::vector<double> lambdas, const SolverOptions& opts,
                      bool timing) {
    SweepResult result;
    SelectionCoefficients coef = selection_coefficients(d, loss);
    result.lambda_max = coef.lambda_max;
    result.sequence = lambda_sequence(coef);

    std::sort(lambdas.begin(), lambdas.end(), std::greater<double>());
    for (double lambda : lambdas) {
        if (!(lambda > 0.0)) {
            throw std::invalid_argument("run_sweep: lambda values must be positive");
        }
        SweepRow row;
        row.lambda = lambda;
        RankCertificate cert = best_certificate(d, loss, result.sequence, lambda);
        row.certified_bound = cert.certified_rank_bound;

        const auto start = std::chrono::steady_clock::now();
        Solution sol = solve_nrm(NrmProblem(d, loss, lambda), opts);
        const auto stop = std::chrono::steady_clock::now();

        row.solved_rank = numerical_rank(sol.B);
        row.final_gap = sol.final_gap;
        row.objective = sol.objective;
        row.seconds = timing ? std::chrono::duration<double>(stop - start).count() : 0.0;
        result.rows.push_back(row);
    }
    return result;
}

SweepResult run_experiment(const ExperimentConfig& cfg) {
    Dataset d = cfg.dataset_path.empty()
                    ? sample_dataset(make_shape(cfg.shape), cfg.n, cfg.noise, cfg.seed)
                    : load_dataset(cfg.dataset_path);

    std::vector<double> lambdas = cfg.sweep_values;
    if (!cfg.sweep_fractions.empty()) {
        const double lmax = lambda_max(d, cfg.loss);
        for (double f : cfg.sweep_fractions) {
            lambdas.push_back(f * lmax);
        }
    }
    SweepResult result = run_sweep(d, cfg.loss, std::move(lambdas), cfg.solver, cfg.timing);
    if (!cfg.out_csv.empty()) {
        write_sweep_csv(result, cfg.out_csv);
    }
    if (!cfg.out_svg.empty() && !result.rows.empty()) {
        emit_plot(result, cfg.out_svg);
    }
    return result;
}

}  // namespace nrm
