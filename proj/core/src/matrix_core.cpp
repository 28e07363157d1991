#include "nrm/matrix_core.hpp"

#include <stdexcept>

namespace nrm {

void check_finite(const Matrix& M, const char* what) {
    if (!M.allFinite()) {
        throw std::invalid_argument(std::string(what) + ": non-finite entry");
    }
}

SvdResult svd(const Matrix& M) {
    check_finite(M, "svd");
    Eigen::BDCSVD<Matrix> dec(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return SvdResult{dec.matrixU(), dec.singularValues(), dec.matrixV()};
}

Vector singular_values(const Matrix& M) {
    check_finite(M, "singular_values");
    Eigen::BDCSVD<Matrix> dec(M);
    return dec.singularValues();
}

double spectral_norm(const Matrix& M) {
    if (M.size() == 0) return 0.0;
    return singular_values(M)(0);
}

double nuclear_norm(const Matrix& M) {
    return singular_values(M).sum();
}

double frobenius_norm(const Matrix& M) {
    check_finite(M, "frobenius_norm");
    return M.norm();
}

Matrix svt(const Matrix& M, double tau) {
    if (!(tau >= 0.0)) {
        throw std::invalid_argument("svt: tau must be nonnegative");
    }
    if (tau == 0.0) {
        check_finite(M, "svt");
        return M;
    }
    SvdResult s = svd(M);
    Vector shrunk = (s.singular_values.array() - tau).max(0.0);
    return s.left_vectors * shrunk.asDiagonal() * s.right_vectors.transpose();
}

}  // namespace nrm
