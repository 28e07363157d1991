#pragma once

#include <Eigen/Dense>

namespace nrm {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct SvdResult {
    Matrix left_vectors;     // p x r
    Vector singular_values;  // nonincreasing, length r = min(p, q)
    Matrix right_vectors;    // q x r
};

// Throws std::invalid_argument if M contains a non-finite entry.
void check_finite(const Matrix& M, const char* what);

SvdResult svd(const Matrix& M);

// Nonincreasing singular values of M, length min(rows, cols).
Vector singular_values(const Matrix& M);

double spectral_norm(const Matrix& M);
double nuclear_norm(const Matrix& M);
double frobenius_norm(const Matrix& M);

// Singular value thresholding: U diag(max(sigma_i - tau, 0)) V^T,
// the proximal operator of tau * nuclear norm.
Matrix svt(const Matrix& M, double tau);

}  // namespace nrm
