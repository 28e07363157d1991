#include "nrm/selection.hpp"

#include <cmath>
#include <stdexcept>

namespace nrm {

Vector gap_ball_thresholds(const Dataset& d, const LossModel& loss, const FeasiblePair& pair) {
    if (!dual_feasible(d, loss, pair.theta, pair.lambda)) {
        throw std::invalid_argument("gap_ball_thresholds: dual point infeasible at its lambda");
    }
    NrmProblem prob(d, loss, pair.lambda);
    const double gap = std::max(0.0, duality_gap(prob, pair));
    const double radius = std::sqrt(2.0 * gap / loss.alpha * d.sum_sq_spectral() / d.n());
    Vector sigma = singular_values(adjoint_apply(d, pair.theta));
    return sigma.array() + radius;
}

SelectionCoefficients selection_coefficients(const Dataset& d, const LossModel& loss) {
    SelectionCoefficients coef;
    coef.tau = theta_max(d, loss);
    Matrix At = adjoint_apply(d, coef.tau);
    coef.sigma = singular_values(At);
    coef.lambda_max = coef.sigma.size() > 0 ? coef.sigma(0) : 0.0;
    if (coef.lambda_max <= 0.0) {
        throw std::domain_error("selection_coefficients: degenerate problem, lambda_max = 0");
    }
    coef.n = d.n();
    coef.sum_sq_spectral = d.sum_sq_spectral();

    const double lmax = coef.lambda_max;
    const double tau_sq = coef.tau.squaredNorm();
    const int r = static_cast<int>(coef.sigma.size());
    coef.a.resize(r);
    for (int k = 0; k < r; ++k) {
        const double gapk = lmax - coef.sigma(k);
        coef.a(k) = coef.n * gapk * gapk / (lmax * lmax * coef.sum_sq_spectral) -
                    tau_sq / (lmax * lmax);
    }
    coef.b = (coef.sigma.sum() - tau_sq) / lmax;
    Vector fitted = forward_apply(d, At / lmax);
    coef.c = (coef.tau - fitted).squaredNorm();
    coef.d = lmax - coef.tau.norm() * std::sqrt(coef.sum_sq_spectral) / std::sqrt(double(coef.n));
    return coef;
}

LambdaSequence lambda_sequence(const SelectionCoefficients& coef) {
    LambdaSequence seq;
    seq.lambda_max = coef.lambda_max;
    const int r = static_cast<int>(coef.a.size());
    seq.entries.resize(r);
    const double a_zero_tol = 1e-12 * (1.0 + std::abs(coef.a(0)));
    for (int k = 0; k < r; ++k) {
        const double ak = coef.a(k);
        LambdaThreshold& e = seq.entries[k];
        if (std::abs(ak) <= a_zero_tol) {
            if (coef.b < 0.0) {
                e.kind = ThresholdKind::lower_bound;
                e.lower = coef.c / (-2.0 * coef.b);
            }
            continue;
        }
        const double radicand = coef.b * coef.b + ak * coef.c;
        if (ak > 0.0) {
            // radicand >= 0 here since c >= 0
            e.kind = ThresholdKind::lower_bound;
            e.lower = std::max(0.0, (coef.b + std::sqrt(radicand)) / ak);
        } else if (radicand >= 0.0) {
            const double delta = std::sqrt(radicand);
            double lo = (coef.b + delta) / ak;
            double hi = (coef.b - delta) / ak;
            lo = std::max(lo, 0.0);
            if (lo < hi) {
                e.kind = ThresholdKind::interval;
                e.lower = lo;
                e.upper = hi;
            }
        }
    }
    return seq;
}

RankCertificate rank_bound_for_lambda(const LambdaSequence& seq, double lambda) {
    if (!(lambda > 0.0)) {
        throw std::invalid_argument("rank_bound_for_lambda: lambda must be positive");
    }
    RankCertificate cert;
    cert.lambda = lambda;
    cert.source = CertificateSource::closed_form;
    if (lambda > seq.lambda_max) {
        cert.certified_rank_bound = 0;
        return cert;
    }
    for (size_t k = 0; k < seq.entries.size(); ++k) {
        const LambdaThreshold& e = seq.entries[k];
        // the generating inequality is strict; require a small relative margin so a
        // floating-point tie at the boundary is never treated as a certificate
        const double margin = 1e-9 * (1.0 + std::abs(lambda));
        const bool hit =
            (e.kind == ThresholdKind::lower_bound && lambda > e.lower + margin) ||
            (e.kind == ThresholdKind::interval && lambda > e.lower + margin &&
             lambda < e.upper - margin);
        if (hit) {
            cert.certified_rank_bound = static_cast<int>(k);
            return cert;
        }
    }
    return cert;
}

RankCertificate certificate_from_thresholds(const Vector& thresholds, double lambda,
                                            CertificateSource source) {
    RankCertificate cert;
    cert.lambda = lambda;
    cert.source = source;
    // strict-inequality guard: at a tie (e.g. an exact dual point where the top
    // singular values equal lambda) rounding must not produce a certificate
    const double margin = 1e-9 * (1.0 + std::abs(lambda));
    for (Eigen::Index k = 0; k < thresholds.size(); ++k) {
        if (lambda > thresholds(k) + margin) {
            cert.certified_rank_bound = static_cast<int>(k);
            return cert;
        }
    }
    return cert;
}

}  // namespace nrm
