#include "nrm/duality.hpp"

#include <cmath>
#include <stdexcept>

namespace nrm {

namespace {
constexpr double kFeasSlack = 1e-10;
}

DualPoint theta_max(const Dataset& d, const LossModel& loss) {
    const Vector& y = d.response();
    if (loss.family == LossFamily::least_squares) {
        return y;
    }
    const double k = loss.kappa;
    return y.cwiseMax(-k).cwiseMin(k);
}

double lambda_max(const Dataset& d, const LossModel& loss) {
    return spectral_norm(adjoint_apply(d, theta_max(d, loss)));
}

std::optional<double> dual_objective(const Dataset& d, const LossModel& loss,
                                     const DualPoint& theta) {
    if (theta.size() != d.n()) {
        throw std::invalid_argument("dual_objective: theta length mismatch");
    }
    double conj = 0.0;
    for (int i = 0; i < d.n(); ++i) {
        auto c = conjugate_eval(loss, theta(i));
        if (!c) return std::nullopt;
        conj += *c;
    }
    return d.response().dot(theta) - conj;
}

bool dual_feasible(const Dataset& d, const LossModel& loss, const DualPoint& theta,
                   double lambda) {
    if (theta.size() != d.n()) {
        throw std::invalid_argument("dual_feasible: theta length mismatch");
    }
    const double slack = kFeasSlack * (1.0 + std::abs(lambda));
    if (loss.family == LossFamily::huber &&
        theta.cwiseAbs().maxCoeff() > loss.kappa + kFeasSlack * (1.0 + loss.kappa)) {
        return false;
    }
    return spectral_norm(adjoint_apply(d, theta)) <= lambda + slack;
}

FeasiblePair scaled_feasible_pair(const Dataset& d, const LossModel& loss, double lambda) {
    const double lmax = lambda_max(d, loss);
    if (lmax <= 0.0) {
        throw std::domain_error("scaled_feasible_pair: degenerate problem, lambda_max = 0");
    }
    if (!(lambda > 0.0) || lambda > lmax * (1.0 + kFeasSlack)) {
        throw std::invalid_argument("scaled_feasible_pair: lambda must lie in (0, lambda_max]");
    }
    DualPoint tmax = theta_max(d, loss);
    FeasiblePair pair;
    pair.lambda = lambda;
    pair.theta = (lambda / lmax) * tmax;
    pair.B = adjoint_apply(d, tmax) / lmax;
    pair.t = d.response() - forward_apply(d, pair.B);
    return pair;
}

double duality_gap(const NrmProblem& prob, const FeasiblePair& pair) {
    auto g = dual_objective(prob.data, prob.loss, pair.theta);
    if (!g) {
        throw std::invalid_argument("duality_gap: dual point infeasible for the loss conjugate");
    }
    return primal_objective(prob, pair.B) - *g;
}

KktResidual kkt_residual(const NrmProblem& prob, const Matrix& B, const DualPoint& theta) {
    const Dataset& d = prob.data;
    Matrix At = adjoint_apply(d, theta);
    Vector t = d.response() - forward_apply(d, B);

    KktResidual res;
    res.spectral_excess = std::max(0.0, spectral_norm(At) - prob.lambda);
    res.subgradient_gap = std::abs(prob.lambda * nuclear_norm(B) - At.cwiseProduct(B).sum());
    res.gradient_mismatch = 0.0;
    for (int i = 0; i < d.n(); ++i) {
        double g = loss_eval(prob.loss, t(i)).gradient;
        res.gradient_mismatch = std::max(res.gradient_mismatch, std::abs(theta(i) - g));
    }
    return res;
}

}  // namespace nrm
