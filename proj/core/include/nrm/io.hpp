#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nrm/datagen.hpp"
#include "nrm/problem.hpp"
#include "nrm/selection.hpp"
#include "nrm/solver.hpp"

namespace nrm {

// Binary container: magic "NRMD", version u16, n/p/q u32 little-endian,
// y as n float64, then n matrices of p*q float64 row-major.
void save_dataset(const Dataset& d, const std::string& path);
Dataset load_dataset(const std::string& path);

struct SweepRow {
    double lambda = 0.0;
    std::optional<int> certified_bound;
    int solved_rank = 0;
    double final_gap = 0.0;
    double objective = 0.0;
    double seconds = 0.0;
};

struct SweepResult {
    double lambda_max = 0.0;
    LambdaSequence sequence;
    std::vector<SweepRow> rows;  // sorted by lambda descending
};

// Columns: lambda,certified_bound,solved_rank,final_gap,objective,seconds.
// Header comments carry lambda_max and the lambda_k sequence.
void write_sweep_csv(const SweepResult& result, const std::string& path);
std::vector<SweepRow> read_sweep_csv(const std::string& path);

struct ExperimentConfig {
    ShapeSpec shape;
    int n = 500;
    NoiseSpec noise;
    LossModel loss = LossModel::least_squares();
    uint64_t seed = 1;

    // Sweep grid: explicit lambda values, or fractions of lambda_max.
    std::vector<double> sweep_values;
    std::vector<double> sweep_fractions;

    SolverOptions solver;
    std::string dataset_path;  // load instead of generating when nonempty
    std::string out_csv;
    std::string out_svg;
    bool timing = false;  // when off, the seconds column is written as 0
};

// Declarative key-value text: "key = value" lines, '#' comments.
ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config(const std::string& text);

}  // namespace nrm
