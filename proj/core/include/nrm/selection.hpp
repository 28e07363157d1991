#pragma once

#include "nrm/duality.hpp"

namespace nrm {

// Scalars of the closed-form parameter sequences. One code path serves both
// losses: tau = theta_max, which reduces to y for least squares.
struct SelectionCoefficients {
    double lambda_max;
    Vector tau;               // theta_max
    Vector sigma;             // singular values of A*(tau), nonincreasing
    Vector a;                 // a_k, k = 1..r
    double b;
    double c;
    double d;
    double sum_sq_spectral;   // sum_i ||X_i||_2^2
    int n;
};

enum class ThresholdKind { lower_bound, interval, empty };

// Per-k certified region below lambda_max:
//   lower_bound: lambda > lower  certifies rank <= k-1
//   interval:    lower < lambda < upper  certifies rank <= k-1
//   empty:       nothing certified for this k
struct LambdaThreshold {
    ThresholdKind kind = ThresholdKind::empty;
    double lower = 0.0;
    double upper = 0.0;
};

struct LambdaSequence {
    double lambda_max = 0.0;
    std::vector<LambdaThreshold> entries;  // index k-1 holds the rule for rank <= k-1
};

enum class CertificateSource { closed_form, gap_ball, exact_dual };

struct RankCertificate {
    double lambda = 0.0;
    std::optional<int> certified_rank_bound;  // in {0..r}, nullopt if uncertified
    CertificateSource source = CertificateSource::closed_form;
};

// Entry k (0-based k-1) is sigma_k(A*(theta)) + sqrt(2 Gap / alpha * sum ||X_i||_2^2 / n);
// lambda > entry certifies rank <= k-1.
Vector gap_ball_thresholds(const Dataset& d, const LossModel& loss, const FeasiblePair& pair);

SelectionCoefficients selection_coefficients(const Dataset& d, const LossModel& loss);

LambdaSequence lambda_sequence(const SelectionCoefficients& coef);

RankCertificate rank_bound_for_lambda(const LambdaSequence& seq, double lambda);

// Shared threshold scan for gap_ball / exact_dual style rules: smallest k-1
// with lambda strictly above thresholds[k-1].
RankCertificate certificate_from_thresholds(const Vector& thresholds, double lambda,
                                            CertificateSource source);

}  // namespace nrm
