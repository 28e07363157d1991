#include "nrm/solver.hpp"

#include <cmath>
#include <stdexcept>

#include "nrm/rng.hpp"

namespace nrm {

namespace {

// Dual recovery via the gradient map theta_i = grad f_i(t_i), scaled into the
// spectral ball when needed. The Huber box holds automatically since the
// gradient is bounded by kappa.
DualPoint recover_dual(const Dataset& d, const LossModel& loss, const Vector& t,
                       double lambda) {
    DualPoint theta(d.n());
    for (int i = 0; i < d.n(); ++i) {
        theta(i) = loss_eval(loss, t(i)).gradient;
    }
    const double s = spectral_norm(adjoint_apply(d, theta));
    if (s > lambda && s > 0.0) {
        theta *= lambda / s;
    }
    return theta;
}

}  // namespace

double lipschitz_estimate(const Dataset& d) {
    if (d.n() < 1) {
        throw std::invalid_argument("lipschitz_estimate: empty dataset");
    }
    Xoshiro256pp rng(0x5eedULL);
    Matrix v(d.p(), d.q());
    for (int i = 0; i < d.p(); ++i) {
        for (int j = 0; j < d.q(); ++j) {
            v(i, j) = rng.gaussian();
        }
    }
    double vnorm = v.norm();
    if (vnorm == 0.0) {
        v.setOnes();
        vnorm = v.norm();
    }
    v /= vnorm;
    double estimate = 0.0;
    for (int iter = 0; iter < 200; ++iter) {
        Matrix w = adjoint_apply(d, forward_apply(d, v));
        const double rayleigh = w.cwiseProduct(v).sum();  // = ||A(v)||^2
        const double wnorm = w.norm();
        if (wnorm == 0.0) {
            estimate = 0.0;
            break;
        }
        v = w / wnorm;
        if (iter >= 30 && std::abs(rayleigh - estimate) <= 1e-12 * std::max(1.0, rayleigh)) {
            estimate = rayleigh;
            break;
        }
        estimate = rayleigh;
    }
    return std::max(estimate, 1e-30) * 1.05;
}

Solution solve_nrm(const NrmProblem& prob, const SolverOptions& opts) {
    if (opts.max_iterations < 1 || !(opts.gap_tolerance > 0.0)) {
        throw std::invalid_argument("solve_nrm: invalid solver options");
    }
    const Dataset& d = prob.data;
    const LossModel& loss = prob.loss;
    const double lambda = prob.lambda;

    double lip = lipschitz_estimate(d) / loss.alpha;

    Matrix B = Matrix::Zero(d.p(), d.q());
    Matrix Z = B;
    double momentum = 1.0;
    double f_prev = primal_objective(prob, B);

    Solution best;
    best.B = B;
    best.t = d.response() - forward_apply(d, B);
    best.theta = recover_dual(d, loss, best.t, lambda);
    {
        auto g = dual_objective(d, loss, best.theta);
        best.final_gap = f_prev - (g ? *g : 0.0);
    }
    best.objective = f_prev;

    const int gap_check_interval = 10;
    int iter = 0;
    for (; iter < opts.max_iterations; ++iter) {
        Vector tz = d.response() - forward_apply(d, Z);
        Vector gz(d.n());
        for (int i = 0; i < d.n(); ++i) {
            gz(i) = loss_eval(loss, tz(i)).gradient;
        }
        Matrix grad = -adjoint_apply(d, gz);

        Matrix B_new;
        if (opts.step_rule == StepRule::backtracking) {
            const double gz_val = smooth_objective(d, loss, Z);
            for (;;) {
                B_new = svt(Z - grad / lip, lambda / lip);
                Matrix diff = B_new - Z;
                const double quad = gz_val + grad.cwiseProduct(diff).sum() +
                                    0.5 * lip * diff.squaredNorm();
                if (smooth_objective(d, loss, B_new) <= quad + 1e-12 * (1.0 + std::abs(quad))) {
                    break;
                }
                lip *= 2.0;
            }
        } else {
            B_new = svt(Z - grad / lip, lambda / lip);
        }

        const double f_new = primal_objective(prob, B_new);
        if (opts.restart && momentum > 1.0 && f_new > f_prev) {
            // function-value restart: drop momentum
            Z = B;
            momentum = 1.0;
            continue;
        }

        const double momentum_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * momentum * momentum));
        Z = B_new + ((momentum - 1.0) / momentum_next) * (B_new - B);
        momentum = momentum_next;
        B = B_new;
        f_prev = f_new;

        if ((iter + 1) % gap_check_interval == 0 || iter + 1 == opts.max_iterations) {
            Vector t = d.response() - forward_apply(d, B);
            DualPoint theta = recover_dual(d, loss, t, lambda);
            auto g = dual_objective(d, loss, theta);
            const double gap = f_new - (g ? *g : 0.0);
            if (gap < best.final_gap) {
                best.B = B;
                best.t = t;
                best.theta = theta;
                best.final_gap = gap;
                best.objective = f_new;
            }
            if (best.final_gap <= opts.gap_tolerance * (1.0 + std::abs(f_new))) {
                best.converged = true;
                ++iter;
                break;
            }
        }
    }
    best.iterations = iter;
    return best;
}

int numerical_rank(const Matrix& B, double rel_tol) {
    if (!(rel_tol > 0.0)) {
        throw std::invalid_argument("numerical_rank: rel_tol must be positive");
    }
    if (B.size() == 0) return 0;
    Vector sigma = singular_values(B);
    const double cut = rel_tol * std::max(sigma(0), 1e-30);
    int rank = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
        if (sigma(i) > cut) ++rank;
    }
    return rank;
}

}  // namespace nrm
