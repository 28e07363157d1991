#include <doctest.h>

#include "nrm/matrix_core.hpp"
#include "nrm/problem.hpp"
#include "test_support.hpp"

using namespace nrm;
using nrm::testing::make_d0;
using nrm::testing::random_matrix;

TEST_CASE("singular values of simple matrices") {
    Matrix M = Matrix::Zero(2, 2);
    M(0, 0) = 3.0;
    M(1, 1) = 4.0;
    Vector s = singular_values(M);
    CHECK(s(0) == doctest::Approx(4.0));
    CHECK(s(1) == doctest::Approx(3.0));

    Vector z = singular_values(Matrix::Zero(2, 2));
    CHECK(z(0) == 0.0);
    CHECK(z(1) == 0.0);
}

TEST_CASE("singular values match symmetric-eigen oracle on M^T M") {
    Xoshiro256pp rng(11);
    Matrix M = random_matrix(rng, 5, 3);
    Vector s = singular_values(M);
    // independent route: eigenvalues of M^T M
    Eigen::SelfAdjointEigenSolver<Matrix> eig(M.transpose() * M);
    Vector ev = eig.eigenvalues();  // increasing
    for (int k = 0; k < 3; ++k) {
        CHECK(s(k) == doctest::Approx(std::sqrt(std::max(ev(2 - k), 0.0))).epsilon(1e-8));
    }
}

TEST_CASE("svd reconstruction and ordering") {
    Xoshiro256pp rng(12);
    for (int trial = 0; trial < 5; ++trial) {
        Matrix M = random_matrix(rng, 6, 4);
        SvdResult s = svd(M);
        Matrix rec = s.left_vectors * s.singular_values.asDiagonal() * s.right_vectors.transpose();
        CHECK((rec - M).norm() <= 1e-8 * std::max(1.0, M.norm()));
        for (int i = 0; i + 1 < s.singular_values.size(); ++i) {
            CHECK(s.singular_values(i) >= s.singular_values(i + 1));
        }
        CHECK(s.singular_values.minCoeff() >= 0.0);
    }
}

TEST_CASE("norm ordering: nuclear >= frobenius >= spectral") {
    Xoshiro256pp rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix M = random_matrix(rng, 4, 5);
        CHECK(nuclear_norm(M) >= frobenius_norm(M) - 1e-12);
        CHECK(frobenius_norm(M) >= spectral_norm(M) - 1e-12);
    }
}

TEST_CASE("svt shrinks singular values") {
    Matrix M = Matrix::Zero(2, 2);
    M(0, 0) = 3.0;
    M(1, 1) = 1.0;
    Matrix T = svt(M, 2.0);
    CHECK(T(0, 0) == doctest::Approx(1.0));
    CHECK(T(1, 1) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::abs(T(0, 1)) < 1e-12);

    Xoshiro256pp rng(14);
    Matrix R = random_matrix(rng, 3, 3);
    CHECK((svt(R, 0.0) - R).norm() == 0.0);
}

TEST_CASE("svt is the prox of the nuclear norm (brute-force scan)") {
    Xoshiro256pp rng(15);
    Matrix M = random_matrix(rng, 2, 2);
    const double tau = 0.7;
    Matrix Z = svt(M, tau);
    const auto prox_obj = [&](const Matrix& X) {
        return 0.5 * (X - M).squaredNorm() + tau * nuclear_norm(X);
    };
    const double at_min = prox_obj(Z);
    // scaled copies of the candidate bracket the scale axis
    double best_scaled = 1e300;
    for (int i = 0; i <= 400; ++i) {
        best_scaled = std::min(best_scaled, prox_obj((i / 200.0) * Z));
    }
    CHECK(at_min <= best_scaled + 1e-6);
    // random perturbation directions never improve
    for (int trial = 0; trial < 50; ++trial) {
        Matrix D = random_matrix(rng, 2, 2);
        D *= 1e-3 / D.norm();
        CHECK(prox_obj(Z + D) >= at_min - 1e-10);
    }
}

TEST_CASE("svt nonexpansiveness") {
    Xoshiro256pp rng(16);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix M = random_matrix(rng, 4, 3);
        Matrix N = random_matrix(rng, 4, 3);
        const double tau = rng.uniform() * 2.0;
        CHECK((svt(M, tau) - svt(N, tau)).norm() <= (M - N).norm() + 1e-10);
    }
}

TEST_CASE("forward and adjoint on D0") {
    Dataset d0 = make_d0();
    Vector theta(2);
    theta << 3.0, 4.0;
    Matrix At = adjoint_apply(d0, theta);
    CHECK(At(0, 0) == 3.0);
    CHECK(At(1, 1) == 4.0);
    CHECK(At(0, 1) == 0.0);

    CHECK(adjoint_apply(d0, Vector::Zero(2)).norm() == 0.0);

    Matrix B = Matrix::Zero(2, 2);
    B(0, 0) = 0.75;
    B(1, 1) = 1.0;
    Vector out = forward_apply(d0, B);
    CHECK(out(0) == 0.75);
    CHECK(out(1) == 1.0);
    CHECK(forward_apply(d0, Matrix::Zero(2, 2)).norm() == 0.0);
}

TEST_CASE("adjoint matches naive summation oracle") {
    Dataset d = nrm::testing::random_dataset(17, 7, 3, 4);
    Xoshiro256pp rng(18);
    Vector theta(7);
    for (int i = 0; i < 7; ++i) theta(i) = rng.gaussian();
    Matrix At = adjoint_apply(d, theta);
    Matrix naive = Matrix::Zero(3, 4);
    for (int i = 0; i < 7; ++i) {
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 4; ++b) {
                naive(a, b) += theta(i) * d.sensing(i)(a, b);
            }
        }
    }
    CHECK((At - naive).norm() <= 1e-12 * std::max(1.0, naive.norm()));
}

TEST_CASE("adjointness identity <A*(theta), B> = <theta, A(B)>") {
    Xoshiro256pp rng(19);
    for (int trial = 0; trial < 10; ++trial) {
        Dataset d = nrm::testing::random_dataset(100 + trial, 6, 4, 3);
        Vector theta(6);
        for (int i = 0; i < 6; ++i) theta(i) = rng.gaussian();
        Matrix B = random_matrix(rng, 4, 3);
        const double lhs = adjoint_apply(d, theta).cwiseProduct(B).sum();
        const double rhs = theta.dot(forward_apply(d, B));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("error paths") {
    Dataset d0 = make_d0();
    Matrix bad = Matrix::Zero(2, 2);
    bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(singular_values(bad), std::invalid_argument);
    CHECK_THROWS_AS(svt(Matrix::Zero(2, 2), -1.0), std::invalid_argument);
    CHECK_THROWS_AS(adjoint_apply(d0, Vector::Zero(3)), std::invalid_argument);
    CHECK_THROWS_AS(forward_apply(d0, Matrix::Zero(3, 2)), std::invalid_argument);
}
