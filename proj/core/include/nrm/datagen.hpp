#pragma once

#include <cstdint>

#include "nrm/problem.hpp"

namespace nrm {

enum class ShapeKind { block_diagonal, cross_bars, custom_grid };

struct ShapeSpec {
    ShapeKind kind = ShapeKind::block_diagonal;
    int p = 64;
    int q = 64;
    int target_rank = 4;
};

enum class NoiseFamily { gaussian, student_t };

struct NoiseSpec {
    NoiseFamily family = NoiseFamily::gaussian;
    double variance = 0.1;  // gaussian
    double dof = 3.0;       // student_t
    uint64_t seed = 0;
};

// Binary (0/1) matrix of exact rank spec.target_rank.
Matrix make_shape(const ShapeSpec& spec);

// X_i with iid standard Gaussian entries from the seeded generator,
// y_i = <X_i, B_true> + eps_i with eps drawn from the noise spec's own stream.
Dataset sample_dataset(const Matrix& B_true, int n, const NoiseSpec& noise, uint64_t seed);

}  // namespace nrm
