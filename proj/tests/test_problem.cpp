#include <doctest.h>

#include "nrm/problem.hpp"
#include "nrm/rng.hpp"
#include "test_support.hpp"

using namespace nrm;
using nrm::testing::make_d0;

TEST_CASE("loss values and gradients") {
    LossModel ls = LossModel::least_squares();
    LossModel hub = LossModel::huber(2.5);

    CHECK(loss_eval(ls, 0.0).value == 0.0);
    CHECK(loss_eval(ls, 0.0).gradient == 0.0);

    auto h1 = loss_eval(hub, 1.0);
    CHECK(h1.value == doctest::Approx(0.5));
    CHECK(h1.gradient == doctest::Approx(1.0));

    auto h4 = loss_eval(hub, 4.0);
    CHECK(h4.value == doctest::Approx(6.875));
    CHECK(h4.gradient == doctest::Approx(2.5));

    auto hm4 = loss_eval(hub, -4.0);
    CHECK(hm4.value == doctest::Approx(6.875));
    CHECK(hm4.gradient == doctest::Approx(-2.5));
}

TEST_CASE("conjugates") {
    LossModel ls = LossModel::least_squares();
    LossModel hub = LossModel::huber(2.5);

    CHECK(*conjugate_eval(hub, 1.0) == doctest::Approx(0.5));
    CHECK(!conjugate_eval(hub, 3.0).has_value());
    CHECK(!conjugate_eval(hub, -2.6).has_value());
    CHECK(*conjugate_eval(ls, 7.0) == doctest::Approx(24.5));
}

TEST_CASE("least-squares conjugate matches grid maximization oracle") {
    LossModel ls = LossModel::least_squares();
    for (double xi : {-3.0, -0.4, 0.0, 1.7, 5.0}) {
        double best = -1e300;
        for (double t = -100.0; t <= 100.0; t += 1e-3) {
            best = std::max(best, t * xi - 0.5 * t * t);
        }
        CHECK(*conjugate_eval(ls, xi) == doctest::Approx(best).epsilon(1e-5));
    }
}

TEST_CASE("Fenchel-Young inequality with equality at the gradient") {
    Xoshiro256pp rng(21);
    for (LossModel loss : {LossModel::least_squares(), LossModel::huber(1.3)}) {
        for (int trial = 0; trial < 200; ++trial) {
            const double t = 6.0 * (rng.uniform() - 0.5);
            const double xi = 2.0 * loss.kappa * (rng.uniform() - 0.5);
            auto c = conjugate_eval(loss, xi);
            if (!c) continue;
            CHECK(loss_eval(loss, t).value + *c >= t * xi - 1e-8);
        }
        for (int trial = 0; trial < 50; ++trial) {
            const double t = 6.0 * (rng.uniform() - 0.5);
            auto e = loss_eval(loss, t);
            auto c = conjugate_eval(loss, e.gradient);
            REQUIRE(c.has_value());
            CHECK(e.value + *c == doctest::Approx(t * e.gradient).epsilon(1e-8));
        }
    }
}

TEST_CASE("gradient matches central finite differences") {
    Xoshiro256pp rng(22);
    const double h = 1e-5;
    for (LossModel loss : {LossModel::least_squares(), LossModel::huber(2.5)}) {
        for (int trial = 0; trial < 100; ++trial) {
            double t = 8.0 * (rng.uniform() - 0.5);
            if (loss.family == LossFamily::huber &&
                std::abs(std::abs(t) - loss.kappa) < 10 * h) {
                continue;  // kink neighborhood of the second derivative
            }
            const double fd = (loss_eval(loss, t + h).value - loss_eval(loss, t - h).value) /
                              (2.0 * h);
            CHECK(std::abs(loss_eval(loss, t).gradient - fd) <= 1e-5);
        }
    }
}

TEST_CASE("midpoint convexity spot check") {
    Xoshiro256pp rng(23);
    for (LossModel loss : {LossModel::least_squares(), LossModel::huber(0.8)}) {
        for (int trial = 0; trial < 100; ++trial) {
            const double u = 10.0 * (rng.uniform() - 0.5);
            const double v = 10.0 * (rng.uniform() - 0.5);
            const double mid = loss_eval(loss, 0.5 * (u + v)).value;
            CHECK(mid <= 0.5 * loss_eval(loss, u).value + 0.5 * loss_eval(loss, v).value + 1e-12);
        }
    }
}

TEST_CASE("primal objective on D0") {
    Dataset d0 = make_d0();
    NrmProblem prob(d0, LossModel::least_squares(), 2.0);

    CHECK(primal_objective(prob, Matrix::Zero(2, 2)) == doctest::Approx(12.5));

    Matrix B = Matrix::Zero(2, 2);
    B(0, 0) = 0.75;
    B(1, 1) = 1.0;
    CHECK(primal_objective(prob, B) == doctest::Approx(10.53125));
}

TEST_CASE("objective at zero equals sum of losses at y") {
    Dataset d = nrm::testing::random_dataset(24, 9, 3, 3);
    for (LossModel loss : {LossModel::least_squares(), LossModel::huber(1.1)}) {
        NrmProblem prob(d, loss, 0.7);
        double expect = 0.0;
        for (int i = 0; i < d.n(); ++i) {
            expect += loss_eval(loss, d.response()(i)).value;
        }
        CHECK(primal_objective(prob, Matrix::Zero(3, 3)) == doctest::Approx(expect));
    }
}

TEST_CASE("dataset cache equals recomputation") {
    Dataset d = nrm::testing::random_dataset(25, 5, 4, 2);
    double sum_sq = 0.0;
    for (int i = 0; i < d.n(); ++i) {
        const double s = spectral_norm(d.sensing(i));
        CHECK(d.spectral_norms()(i) == doctest::Approx(s).epsilon(1e-12));
        sum_sq += s * s;
    }
    CHECK(d.sum_sq_spectral() == doctest::Approx(sum_sq).epsilon(1e-12));
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(Dataset({}, Vector::Zero(0)), std::invalid_argument);
    CHECK_THROWS_AS(Dataset({Matrix::Zero(2, 2)}, Vector::Zero(2)), std::invalid_argument);
    CHECK_THROWS_AS(Dataset({Matrix::Zero(2, 2), Matrix::Zero(3, 2)}, Vector::Zero(2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(LossModel::huber(0.0), std::invalid_argument);
    Dataset d0 = make_d0();
    CHECK_THROWS_AS(NrmProblem(d0, LossModel::least_squares(), 0.0), std::invalid_argument);
}
