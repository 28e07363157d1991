#pragma once

#include <optional>
#include <vector>

#include "nrm/matrix_core.hpp"

namespace nrm {

// n sensing matrices X_i (all p x q) and the response vector y.
// Spectral norms of the X_i are cached at construction.
class Dataset {
  public:
    Dataset(std::vector<Matrix> sensing, Vector response);

    int n() const { return static_cast<int>(sensing_.size()); }
    int p() const { return p_; }
    int q() const { return q_; }
    int r() const { return std::min(p_, q_); }

    const std::vector<Matrix>& sensing() const { return sensing_; }
    const Matrix& sensing(int i) const { return sensing_[i]; }
    const Vector& response() const { return response_; }

    const Vector& spectral_norms() const { return spectral_norms_; }
    double sum_sq_spectral() const { return sum_sq_spectral_; }

  private:
    std::vector<Matrix> sensing_;
    Vector response_;
    Vector spectral_norms_;
    double sum_sq_spectral_;
    int p_, q_;
};

// A(B) = (<X_1, B>, ..., <X_n, B>) with the trace inner product.
Vector forward_apply(const Dataset& d, const Matrix& B);

// A*(theta) = sum_i theta_i X_i.
Matrix adjoint_apply(const Dataset& d, const Vector& theta);

enum class LossFamily { least_squares, huber };

struct LossEval {
    double value;
    double gradient;
};

struct LossModel {
    LossFamily family = LossFamily::least_squares;
    double kappa = 2.5;  // huber only
    double alpha = 1.0;  // gradient of each f_i is (1/alpha)-Lipschitz

    static LossModel least_squares();
    static LossModel huber(double kappa = 2.5);
};

LossEval loss_eval(const LossModel& loss, double t);

// Convex conjugate f*(xi). nullopt encodes +infinity (outside the Huber box);
// callers must propagate infeasibility instead of doing arithmetic on it.
std::optional<double> conjugate_eval(const LossModel& loss, double xi);

struct NrmProblem {
    Dataset data;
    LossModel loss;
    double lambda;

    NrmProblem(Dataset d, LossModel l, double lam);
};

// F_lambda(B) = sum_i f_i(y_i - <X_i, B>) + lambda * ||B||_*
double primal_objective(const NrmProblem& prob, const Matrix& B);

// Smooth part only: sum_i f_i(y_i - <X_i, B>).
double smooth_objective(const Dataset& d, const LossModel& loss, const Matrix& B);

}  // namespace nrm
