#include <cstdio>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nrm/plot.hpp"
#include "nrm/sweep.hpp"

namespace {

struct CommonFlags {
    std::string config_path;
    std::string loss;
    std::optional<double> kappa;
    std::optional<uint64_t> seed;
    std::string out_csv;
    std::string out_svg;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "Experiment config file");
    cmd->add_option("--loss", flags.loss, "Loss family: ls or huber")
        ->check(CLI::IsMember({"ls", "huber"}));
    cmd->add_option("--kappa", flags.kappa, "Huber kappa (default 2.5)");
    cmd->add_option("--seed", flags.seed, "Dataset generation seed");
    cmd->add_option("--out-csv", flags.out_csv, "CSV output path");
    cmd->add_option("--out-svg", flags.out_svg, "SVG output path");
}

nrm::ExperimentConfig resolve_config(const CommonFlags& flags) {
    nrm::ExperimentConfig cfg;
    if (!flags.config_path.empty()) {
        cfg = nrm::load_config(flags.config_path);
    }
    if (!flags.loss.empty()) {
        const double k = flags.kappa.value_or(
            cfg.loss.family == nrm::LossFamily::huber ? cfg.loss.kappa : 2.5);
        cfg.loss = flags.loss == "huber" ? nrm::LossModel::huber(k)
                                         : nrm::LossModel::least_squares();
    } else if (flags.kappa && cfg.loss.family == nrm::LossFamily::huber) {
        cfg.loss = nrm::LossModel::huber(*flags.kappa);
    }
    if (flags.seed) cfg.seed = *flags.seed;
    if (!flags.out_csv.empty()) cfg.out_csv = flags.out_csv;
    if (!flags.out_svg.empty()) cfg.out_svg = flags.out_svg;
    return cfg;
}

nrm::Dataset obtain_dataset(const nrm::ExperimentConfig& cfg) {
    if (!cfg.dataset_path.empty()) {
        return nrm::load_dataset(cfg.dataset_path);
    }
    return nrm::sample_dataset(nrm::make_shape(cfg.shape), cfg.n, cfg.noise, cfg.seed);
}

void print_sequence(const nrm::LambdaSequence& seq) {
    std::printf("lambda_max = %.10g\n", seq.lambda_max);
    for (size_t k = 0; k < seq.entries.size(); ++k) {
        const nrm::LambdaThreshold& e = seq.entries[k];
        switch (e.kind) {
            case nrm::ThresholdKind::lower_bound:
                std::printf("lambda_%zu = %.10g  (rank <= %zu for lambda > lambda_%zu)\n",
                            k + 1, e.lower, k, k + 1);
                break;
            case nrm::ThresholdKind::interval:
                std::printf("lambda_%zu : interval (%.10g, %.10g)  (rank <= %zu inside)\n",
                            k + 1, e.lower, e.upper, k);
                break;
            case nrm::ThresholdKind::empty:
                std::printf("lambda_%zu : empty\n", k + 1);
                break;
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Regularization parameter selection for nuclear-norm regularized matrix recovery"};
    app.require_subcommand(1);

    CommonFlags gen_flags, select_flags, solve_flags, sweep_flags;
    std::string gen_out;
    double solve_lambda = 0.0;

    CLI::App* gen = app.add_subcommand("gen", "Generate a synthetic dataset and save it");
    add_common(gen, gen_flags);
    gen->add_option("--out", gen_out, "Output dataset path")->required();

    CLI::App* select = app.add_subcommand("select", "Print lambda_max and the lambda_k sequence");
    add_common(select, select_flags);

    CLI::App* solve = app.add_subcommand("solve", "Solve at one lambda and report rank/gap");
    add_common(solve, solve_flags);
    solve->add_option("--lambda", solve_lambda, "Regularization parameter")->required();

    CLI::App* sweep = app.add_subcommand("sweep", "Run the full lambda sweep experiment");
    add_common(sweep, sweep_flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            nrm::ExperimentConfig cfg = resolve_config(gen_flags);
            nrm::Dataset d = obtain_dataset(cfg);
            nrm::save_dataset(d, gen_out);
            std::printf("wrote %s: n=%d p=%d q=%d\n", gen_out.c_str(), d.n(), d.p(), d.q());
        } else if (select->parsed()) {
            nrm::ExperimentConfig cfg = resolve_config(select_flags);
            nrm::Dataset d = obtain_dataset(cfg);
            auto coef = nrm::selection_coefficients(d, cfg.loss);
            print_sequence(nrm::lambda_sequence(coef));
        } else if (solve->parsed()) {
            nrm::ExperimentConfig cfg = resolve_config(solve_flags);
            nrm::Dataset d = obtain_dataset(cfg);
            auto coef = nrm::selection_coefficients(d, cfg.loss);
            auto seq = nrm::lambda_sequence(coef);
            auto cert = nrm::best_certificate(d, cfg.loss, seq, solve_lambda);
            nrm::Solution sol = nrm::solve_nrm(nrm::NrmProblem(d, cfg.loss, solve_lambda),
                                               cfg.solver);
            std::printf("lambda = %.10g\n", solve_lambda);
            if (cert.certified_rank_bound) {
                std::printf("certified rank bound: %d\n", *cert.certified_rank_bound);
            } else {
                std::printf("certified rank bound: none\n");
            }
            std::printf("solved rank: %d\nobjective: %.10g\nfinal gap: %.3e\n"
                        "iterations: %d\nconverged: %s\n",
                        nrm::numerical_rank(sol.B), sol.objective, sol.final_gap,
                        sol.iterations, sol.converged ? "yes" : "no");
        } else if (sweep->parsed()) {
            nrm::ExperimentConfig cfg = resolve_config(sweep_flags);
            if (cfg.sweep_values.empty() && cfg.sweep_fractions.empty()) {
                // default grid: fractions of lambda_max
                for (int i = 1; i <= 20; ++i) cfg.sweep_fractions.push_back(0.05 * i);
            }
            nrm::SweepResult result = nrm::run_experiment(cfg);
            std::printf("lambda_max = %.10g, %zu rows\n", result.lambda_max,
                        result.rows.size());
            for (const nrm::SweepRow& row : result.rows) {
                std::printf("lambda=%-12.6g cert=%-4s rank=%-3d gap=%.3e\n", row.lambda,
                            row.certified_bound ? std::to_string(*row.certified_bound).c_str()
                                                : "-",
                            row.solved_rank, row.final_gap);
            }
            if (!cfg.out_csv.empty()) std::printf("wrote %s\n", cfg.out_csv.c_str());
            if (!cfg.out_svg.empty()) std::printf("wrote %s\n", cfg.out_svg.c_str());
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
