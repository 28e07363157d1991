#include "nrm/datagen.hpp"

#include <cmath>
#include <stdexcept>

#include "nrm/rng.hpp"
#include "nrm/solver.hpp"

namespace nrm {

namespace {

Matrix block_diagonal_shape(int p, int q, int t) {
    Matrix M = Matrix::Zero(p, q);
    for (int i = 0; i < p; ++i) {
        const int gi = static_cast<int>(static_cast<int64_t>(i) * t / p);
        for (int j = 0; j < q; ++j) {
            const int gj = static_cast<int>(static_cast<int64_t>(j) * t / q);
            if (gi == gj) M(i, j) = 1.0;
        }
    }
    return M;
}

// One horizontal band, one vertical band (rank 2 together), plus t-2 single
// extra pixels on otherwise-band rows to push the rank up.
Matrix cross_bars_shape(int p, int q, int t) {
    const int hb = std::max(1, p / 8);
    const int wb = std::max(1, q / 8);
    Matrix M = Matrix::Zero(p, q);
    M.topRows(hb).setOnes();
    if (t >= 2) M.leftCols(wb).setOnes();
    if (t > 2) {
        if (hb + (t - 2) > p || wb + (t - 2) > q) {
            throw std::invalid_argument("make_shape: cross_bars rank too large for dimensions");
        }
        for (int i = 0; i < t - 2; ++i) {
            M(hb + i, wb + i) = 1.0;
        }
    }
    return M;
}

// Staircase of nested prefix-of-ones rows; t distinct nonzero row patterns.
Matrix custom_grid_shape(int p, int q, int t) {
    Matrix M = Matrix::Zero(p, q);
    for (int i = 0; i < p; ++i) {
        const int gi = static_cast<int>(static_cast<int64_t>(i) * t / p);
        for (int j = 0; j < q; ++j) {
            const int gj = static_cast<int>(static_cast<int64_t>(j) * t / q);
            if (gj <= gi) M(i, j) = 1.0;
        }
    }
    return M;
}

}  // namespace

Matrix make_shape(const ShapeSpec& spec) {
    if (spec.p < 1 || spec.q < 1) {
        throw std::invalid_argument("make_shape: dimensions must be positive");
    }
    if (spec.target_rank < 1 || spec.target_rank > std::min(spec.p, spec.q)) {
        throw std::invalid_argument("make_shape: target_rank must lie in [1, min(p, q)]");
    }
    Matrix M;
    switch (spec.kind) {
        case ShapeKind::block_diagonal:
            M = block_diagonal_shape(spec.p, spec.q, spec.target_rank);
            break;
        case ShapeKind::cross_bars:
            M = cross_bars_shape(spec.p, spec.q, spec.target_rank);
            break;
        case ShapeKind::custom_grid:
            M = custom_grid_shape(spec.p, spec.q, spec.target_rank);
            break;
    }
    if (numerical_rank(M, 1e-9) != spec.target_rank) {
        throw std::runtime_error("make_shape: construction failed to reach the target rank");
    }
    return M;
}

Dataset sample_dataset(const Matrix& B_true, int n, const NoiseSpec& noise, uint64_t seed) {
    if (n < 1) {
        throw std::invalid_argument("sample_dataset: n must be at least 1");
    }
    if (noise.family == NoiseFamily::gaussian && !(noise.variance > 0.0) && noise.variance != 0.0) {
        throw std::invalid_argument("sample_dataset: variance must be nonnegative");
    }
    if (noise.family == NoiseFamily::student_t && !(noise.dof > 0.0)) {
        throw std::invalid_argument("sample_dataset: dof must be positive");
    }
    const int p = static_cast<int>(B_true.rows());
    const int q = static_cast<int>(B_true.cols());

    Xoshiro256pp x_rng(seed);
    Xoshiro256pp eps_rng(noise.seed);

    std::vector<Matrix> sensing;
    sensing.reserve(n);
    Vector y(n);
    const double sd = std::sqrt(std::max(noise.variance, 0.0));
    for (int i = 0; i < n; ++i) {
        Matrix X(p, q);
        for (int a = 0; a < p; ++a) {
            for (int b = 0; b < q; ++b) {
                X(a, b) = x_rng.gaussian();
            }
        }
        double eps = 0.0;
        if (noise.family == NoiseFamily::gaussian) {
            eps = sd * eps_rng.gaussian();
        } else {
            eps = eps_rng.student_t(noise.dof);
        }
        y(i) = X.cwiseProduct(B_true).sum() + eps;
        sensing.push_back(std::move(X));
    }
    return Dataset(std::move(sensing), std::move(y));
}

}  // namespace nrm
