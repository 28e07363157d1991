#include "nrm/problem.hpp"

#include <cmath>
#include <stdexcept>

namespace nrm {

Dataset::Dataset(std::vector<Matrix> sensing, Vector response)
    : sensing_(std::move(sensing)), response_(std::move(response)) {
    if (sensing_.empty()) {
        throw std::invalid_argument("Dataset: need at least one sensing matrix");
    }
    if (response_.size() != static_cast<Eigen::Index>(sensing_.size())) {
        throw std::invalid_argument("Dataset: response length must equal number of sensing matrices");
    }
    p_ = static_cast<int>(sensing_[0].rows());
    q_ = static_cast<int>(sensing_[0].cols());
    spectral_norms_.resize(sensing_.size());
    sum_sq_spectral_ = 0.0;
    for (size_t i = 0; i < sensing_.size(); ++i) {
        if (sensing_[i].rows() != p_ || sensing_[i].cols() != q_) {
            throw std::invalid_argument("Dataset: sensing matrices must share a common shape");
        }
        check_finite(sensing_[i], "Dataset sensing matrix");
        spectral_norms_(i) = spectral_norm(sensing_[i]);
        sum_sq_spectral_ += spectral_norms_(i) * spectral_norms_(i);
    }
    if (!response_.allFinite()) {
        throw std::invalid_argument("Dataset: non-finite response entry");
    }
}

Vector forward_apply(const Dataset& d, const Matrix& B) {
    if (B.rows() != d.p() || B.cols() != d.q()) {
        throw std::invalid_argument("forward_apply: B shape mismatch");
    }
    Vector out(d.n());
    for (int i = 0; i < d.n(); ++i) {
        out(i) = d.sensing(i).cwiseProduct(B).sum();
    }
    return out;
}

Matrix adjoint_apply(const Dataset& d, const Vector& theta) {
    if (theta.size() != d.n()) {
        throw std::invalid_argument("adjoint_apply: theta length mismatch");
    }
    Matrix out = Matrix::Zero(d.p(), d.q());
    for (int i = 0; i < d.n(); ++i) {
        out += theta(i) * d.sensing(i);
    }
    return out;
}

LossModel LossModel::least_squares() {
    return LossModel{LossFamily::least_squares, 2.5, 1.0};
}

LossModel LossModel::huber(double kappa) {
    if (!(kappa > 0.0)) {
        throw std::invalid_argument("LossModel::huber: kappa must be positive");
    }
    return LossModel{LossFamily::huber, kappa, 1.0};
}

LossEval loss_eval(const LossModel& loss, double t) {
    if (!std::isfinite(t)) {
        throw std::invalid_argument("loss_eval: non-finite input");
    }
    if (loss.family == LossFamily::least_squares || std::abs(t) <= loss.kappa) {
        return {0.5 * t * t, t};
    }
    const double k = loss.kappa;
    const double s = t > 0 ? 1.0 : -1.0;
    return {k * std::abs(t) - 0.5 * k * k, s * k};
}

std::optional<double> conjugate_eval(const LossModel& loss, double xi) {
    if (!std::isfinite(xi)) {
        throw std::invalid_argument("conjugate_eval: non-finite input");
    }
    if (loss.family == LossFamily::huber && std::abs(xi) > loss.kappa) {
        return std::nullopt;
    }
    return 0.5 * xi * xi;
}

NrmProblem::NrmProblem(Dataset d, LossModel l, double lam)
    : data(std::move(d)), loss(l), lambda(lam) {
    if (!(lambda > 0.0)) {
        throw std::invalid_argument("NrmProblem: lambda must be positive");
    }
}

double smooth_objective(const Dataset& d, const LossModel& loss, const Matrix& B) {
    Vector t = d.response() - forward_apply(d, B);
    double total = 0.0;
    for (int i = 0; i < d.n(); ++i) {
        total += loss_eval(loss, t(i)).value;
    }
    return total;
}

double primal_objective(const NrmProblem& prob, const Matrix& B) {
    return smooth_objective(prob.data, prob.loss, B) + prob.lambda * nuclear_norm(B);
}

}  // namespace nrm
