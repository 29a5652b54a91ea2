#pragma once

#include <cmath>

#include "lcc/matrix.hpp"

namespace lcc {

// Single global clip applied to fitted probabilities (and to the log terms of
// the reported log-likelihood) so downstream diagnostics never see 0 or 1.
inline constexpr double kProbClip = 1e-12;

inline double sigma(double eta) { return 1.0 / (1.0 + std::exp(-eta)); }

// log sigma(eta) without catastrophic cancellation for large |eta|.
inline double log_sigma(double eta) {
    if (eta >= 0.0) return -std::log1p(std::exp(-eta));
    return eta - std::log1p(std::exp(eta));
}

struct LogisticFit {
    Vector coefficients;          // first entry is the intercept
    Vector fitted_probabilities;  // sigma(Z theta), clipped into [kProbClip, 1-kProbClip]
    double log_likelihood = 0.0;  // unpenalized, evaluated at the estimate
    double lambda = 0.0;
    bool converged = false;
    int iterations = 0;
};

// Ridge-penalized logistic fit: maximizes loglik(theta) - (lambda/2) * sum of
// squared non-intercept coefficients, by damped Newton from theta = 0.
// Convergence: penalized score inf-norm <= 1e-8 within 100 iterations;
// non-convergence is reported in the fit, never raised. SingularHessian is
// raised only when the first Newton solve already fails (collinear design at
// lambda = 0).
LogisticFit fit(const Matrix& z, const Vector& y, double lambda);

// Same fit with an explicit per-coefficient penalty mask and start point.
// This is how carrier-extended refits keep their extra columns unpenalized
// and warm-start at the base estimate. penalized.size() == z.cols().
LogisticFit fit_from(const Matrix& z, const Vector& y, double lambda,
                     const std::vector<char>& penalized, const Vector& start);

// Unpenalized log-likelihood with clipped probabilities.
double log_likelihood(const Matrix& z, const Vector& y, const Vector& theta);

// Score Z'(y - sigma(Z theta)); no penalty, no clipping.
Vector score(const Matrix& z, const Vector& y, const Vector& theta);

// Z' W Z with W = diag(mu (1 - mu)); no penalty term.
Matrix neg_hessian(const Matrix& z, const Vector& theta);

// Smallest eigenvalue of neg_hessian(Z, theta_hat) / n; the regularity
// diagnostic for a single fitted model.
double min_eigen_ratio(const LogisticFit& f, const Matrix& z);

}  // namespace lcc
