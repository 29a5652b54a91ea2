#include <cmath>

#include "doctest.h"
#include "lcc/logistic.hpp"

using lcc::Matrix;
using lcc::Vector;

namespace {

Matrix design(const Vector& x) {
    Matrix z(x.size(), 2);
    for (std::size_t i = 0; i < x.size(); ++i) {
        z(i, 0) = 1.0;
        z(i, 1) = x[i];
    }
    return z;
}

}  // namespace

TEST_CASE("sigma and log_sigma agree and stay finite in the tails") {
    CHECK(lcc::sigma(0.0) == 0.5);
    CHECK(lcc::sigma(3.0) == doctest::Approx(0.9525741268224334).epsilon(1e-15));
    CHECK(lcc::log_sigma(2.0) == doctest::Approx(-0.12692801104297263).epsilon(1e-15));
    for (double eta : {-745.0, -50.0, -1.0, 0.0, 1.0, 50.0, 745.0}) {
        CHECK(std::isfinite(lcc::log_sigma(eta)));
        if (std::fabs(eta) < 30)
            CHECK(lcc::log_sigma(eta) ==
                  doctest::Approx(std::log(lcc::sigma(eta))).epsilon(1e-13));
    }
    // Deep negative tail: log sigma(eta) ~ eta, where log(sigma(eta)) would
    // underflow to log(0).
    CHECK(lcc::log_sigma(-745.0) == doctest::Approx(-745.0).epsilon(1e-15));
}

TEST_CASE("ridge fit matches an independently optimized estimate") {
    // x = (-2,-1,0,1,2), y = (0,0,1,0,1), lambda = 0.5 on the slope only.
    const Matrix z = design({-2, -1, 0, 1, 2});
    const Vector y{0, 0, 1, 0, 1};
    const lcc::LogisticFit f = lcc::fit(z, y, 0.5);

    // The score tolerance of 1e-8 bounds the parameter error near 1e-8; the
    // unpenalized log-likelihood is first-order sensitive there (its gradient
    // at the penalized optimum is lambda * theta1), so it carries the same
    // accuracy, not machine precision.
    CHECK(f.converged);
    CHECK(f.coefficients[0] == doctest::Approx(-0.5222817874459547).epsilon(1e-7));
    CHECK(f.coefficients[1] == doctest::Approx(0.7821877604845532).epsilon(1e-7));
    CHECK(f.log_likelihood == doctest::Approx(-2.478675871698985).epsilon(1e-8));
    CHECK(f.lambda == 0.5);

    // The reported log-likelihood is the unpenalized one at the estimate.
    CHECK(f.log_likelihood ==
          doctest::Approx(lcc::log_likelihood(z, y, f.coefficients)).epsilon(1e-15));

    // Penalized score vanishes at the optimum: score - lambda * (0, slope).
    const Vector s = lcc::score(z, y, f.coefficients);
    CHECK(std::fabs(s[0]) <= 1e-8);
    CHECK(std::fabs(s[1] - 0.5 * f.coefficients[1]) <= 1e-8);
}

TEST_CASE("perfectly balanced data has the zero solution at lambda 0") {
    // Gradient at theta = 0 is identically zero: converges in 0 iterations
    // with log-likelihood 4 log(1/2).
    Matrix z(4, 2);
    const double xs[4] = {-1, -1, 1, 1};
    const double ys[4] = {0, 1, 0, 1};
    for (int i = 0; i < 4; ++i) {
        z(i, 0) = 1;
        z(i, 1) = xs[i];
    }
    const lcc::LogisticFit f = lcc::fit(z, {ys, ys + 4}, 0.0);
    CHECK(f.converged);
    CHECK(f.iterations == 0);
    CHECK(f.coefficients[0] == 0.0);
    CHECK(f.coefficients[1] == 0.0);
    CHECK(f.log_likelihood == doctest::Approx(-2.772588722239781).epsilon(1e-15));
    for (double mu : f.fitted_probabilities) CHECK(mu == 0.5);
}

TEST_CASE("intercept-only fit recovers the closed-form Bernoulli estimate") {
    Matrix z(4, 1, 1.0);
    const Vector y{1, 1, 1, 0};
    const lcc::LogisticFit f = lcc::fit(z, y, 0.0);
    CHECK(f.converged);
    // MLE of the mean is 3/4, so theta = logit(3/4) = log 3 by invariance.
    CHECK(f.coefficients[0] == doctest::Approx(std::log(3.0)).epsilon(1e-10));
    CHECK(f.log_likelihood ==
          doctest::Approx(3 * std::log(0.75) + std::log(0.25)).epsilon(1e-13));
    for (double mu : f.fitted_probabilities) CHECK(mu == doctest::Approx(0.75).epsilon(1e-10));
}

TEST_CASE("fitted probabilities average to the label mean at lambda 0") {
    const Matrix z = design({-3.2, -1.1, -0.4, 0.2, 0.9, 1.7, 2.8, 3.9});
    const Vector y{0, 0, 1, 0, 1, 1, 0, 1};
    const lcc::LogisticFit f = lcc::fit(z, y, 0.0);
    CHECK(f.converged);
    double mu_bar = 0, y_bar = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        mu_bar += f.fitted_probabilities[i];
        y_bar += y[i];
    }
    CHECK(std::fabs(mu_bar - y_bar) / y.size() <= 1e-8);
}

TEST_CASE("score and neg_hessian match finite differences of the log-likelihood") {
    const Matrix z = design({-2.5, -1.5, -0.5, 0.5, 1.5, 2.5});
    const Vector y{0, 1, 0, 1, 1, 1};
    const Vector theta{0.3, -0.7};

    const Vector s = lcc::score(z, y, theta);
    const double h = 5e-6;
    for (std::size_t j = 0; j < theta.size(); ++j) {
        Vector tp = theta, tm = theta;
        tp[j] += h;
        tm[j] -= h;
        const double fd =
            (lcc::log_likelihood(z, y, tp) - lcc::log_likelihood(z, y, tm)) / (2 * h);
        CHECK(s[j] == doctest::Approx(fd).epsilon(1e-7));
    }

    const Matrix nh = lcc::neg_hessian(z, theta);
    CHECK(nh.max_asymmetry() == 0.0);
    for (std::size_t j = 0; j < theta.size(); ++j) {
        Vector tp = theta, tm = theta;
        tp[j] += h;
        tm[j] -= h;
        const Vector sp = lcc::score(z, y, tp);
        const Vector sm = lcc::score(z, y, tm);
        for (std::size_t i = 0; i < theta.size(); ++i)
            CHECK(-nh(i, j) == doctest::Approx((sp[i] - sm[i]) / (2 * h)).epsilon(1e-6));
    }
}

TEST_CASE("log-likelihood clips vanishing probabilities at 1e-12") {
    Matrix z(1, 1, 1.0);
    // mu = sigma(40) is within 4e-18 of 1; log(1 - mu) would be about -40,
    // but the clip floors the term at log(1e-12).
    CHECK(lcc::log_likelihood(z, {0.0}, {40.0}) ==
          doctest::Approx(std::log(1e-12)).epsilon(1e-15));
    // The label-1 term is unaffected (log sigma(40) is approximately -4e-18).
    CHECK(lcc::log_likelihood(z, {1.0}, {40.0}) ==
          doctest::Approx(lcc::log_sigma(40.0)).epsilon(1e-12));
}

TEST_CASE("collinear design at lambda 0 raises on the first solve") {
    Matrix z(5, 2);
    for (int i = 0; i < 5; ++i) {
        z(i, 0) = 1;
        z(i, 1) = 2;  // duplicate of the intercept up to scale
    }
    CHECK_THROWS_AS((void)lcc::fit(z, {0, 1, 0, 1, 1}, 0.0), lcc::SingularHessian);
    // The same design is fittable once the ridge penalty regularizes it.
    CHECK(lcc::fit(z, {0, 1, 0, 1, 1}, 0.1).converged);
}

TEST_CASE("separable data at lambda 0 stops at a finite slope without raising") {
    // The supremum is at slope = infinity; damped Newton walks the slope up
    // until the score inf-norm passes the 1e-8 tolerance (around slope 20)
    // and stops there. Nothing raises, and the clip keeps every fitted
    // probability inside [1e-12, 1 - 1e-12].
    const Matrix z = design({-2, -1, 1, 2});
    const lcc::LogisticFit f = lcc::fit(z, {0, 0, 1, 1}, 0.0);
    CHECK(f.converged);
    CHECK(f.coefficients[1] > 15.0);
    CHECK(lcc::inf_norm(lcc::score(z, {0, 0, 1, 1}, f.coefficients)) <= 1e-8);
    for (double mu : f.fitted_probabilities) {
        CHECK(mu >= 1e-12);
        CHECK(mu <= 1 - 1e-12);
    }
}

TEST_CASE("fit_from honors the warm start and the penalty mask") {
    const Matrix z = design({-2, -1, 0, 1, 2});
    const Vector y{0, 0, 1, 0, 1};
    const lcc::LogisticFit base = lcc::fit(z, y, 0.5);

    // Restarting at the solution converges without taking a step.
    const lcc::LogisticFit warm =
        lcc::fit_from(z, y, 0.5, {0, 1}, base.coefficients);
    CHECK(warm.converged);
    CHECK(warm.iterations == 0);
    CHECK(warm.coefficients[0] == base.coefficients[0]);
    CHECK(warm.coefficients[1] == base.coefficients[1]);

    // An all-false mask turns the same problem into the unpenalized MLE.
    const lcc::LogisticFit free_fit = lcc::fit_from(z, y, 0.5, {0, 0}, {0.0, 0.0});
    const lcc::LogisticFit mle = lcc::fit(z, y, 0.0);
    CHECK(free_fit.coefficients[0] == doctest::Approx(mle.coefficients[0]).epsilon(1e-8));
    CHECK(free_fit.coefficients[1] == doctest::Approx(mle.coefficients[1]).epsilon(1e-8));
}

TEST_CASE("min_eigen_ratio equals the analytic value for an intercept-only fit") {
    // Z = ones(8,1), theta = 0: neg Hessian = 8 * 0.25, so H/n has eigenvalue
    // exactly 0.25.
    Matrix z(8, 1, 1.0);
    lcc::LogisticFit f;
    f.coefficients = {0.0};
    CHECK(lcc::min_eigen_ratio(f, z) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("fit validates dimensions") {
    const Matrix z = design({-1, 0, 1});
    CHECK_THROWS_AS((void)lcc::fit(z, {0, 1}, 0.0), lcc::DimensionMismatch);
}
