#include "lcc/logistic.hpp"

#include <algorithm>
#include <cmath>

#include "lcc/linalg.hpp"
#include "lcc/newton.hpp"

namespace lcc {

namespace {

void check_dims(const Matrix& z, const Vector& y, const Vector& theta) {
    if (y.size() != z.rows()) throw DimensionMismatch("logistic: y length != rows");
    if (theta.size() != z.cols()) throw DimensionMismatch("logistic: theta length != cols");
}

const double kLogClip = std::log(kProbClip);

// Clipped Bernoulli log-likelihood of one row given its linear predictor.
inline double row_loglik(double eta, double y) {
    const double lp = std::max(log_sigma(eta), kLogClip);
    const double lq = std::max(log_sigma(-eta), kLogClip);
    return y * lp + (1.0 - y) * lq;
}

}  // namespace

double log_likelihood(const Matrix& z, const Vector& y, const Vector& theta) {
    check_dims(z, y, theta);
    double ll = 0.0;
    for (std::size_t i = 0; i < z.rows(); ++i) ll += row_loglik(dot(z.row(i), theta), y[i]);
    return ll;
}

Vector score(const Matrix& z, const Vector& y, const Vector& theta) {
    check_dims(z, y, theta);
    Vector residual(z.rows());
    for (std::size_t i = 0; i < z.rows(); ++i)
        residual[i] = y[i] - sigma(dot(z.row(i), theta));
    return z.transpose_multiply(residual);
}

Matrix neg_hessian(const Matrix& z, const Vector& theta) {
    if (theta.size() != z.cols()) throw DimensionMismatch("neg_hessian: theta length != cols");
    Vector w(z.rows());
    for (std::size_t i = 0; i < z.rows(); ++i) {
        const double mu = sigma(dot(z.row(i), theta));
        w[i] = mu * (1.0 - mu);
    }
    return z.weighted_gram(w);
}

LogisticFit fit_from(const Matrix& z, const Vector& y, double lambda,
                     const std::vector<char>& penalized, const Vector& start) {
    if (z.rows() == 0) throw DimensionMismatch("fit: empty design matrix");
    if (y.size() != z.rows()) throw DimensionMismatch("fit: y length != rows");
    if (penalized.size() != z.cols()) throw DimensionMismatch("fit: penalty mask length != cols");
    if (start.size() != z.cols()) throw DimensionMismatch("fit: start length != cols");

    NewtonProblem problem;
    problem.value = [&](const Vector& theta) {
        double v = 0.0;
        for (std::size_t i = 0; i < z.rows(); ++i) v += row_loglik(dot(z.row(i), theta), y[i]);
        if (lambda > 0.0)
            for (std::size_t j = 0; j < theta.size(); ++j)
                if (penalized[j]) v -= 0.5 * lambda * theta[j] * theta[j];
        return v;
    };
    problem.gradient = [&](const Vector& theta) {
        Vector g = score(z, y, theta);
        if (lambda > 0.0)
            for (std::size_t j = 0; j < g.size(); ++j)
                if (penalized[j]) g[j] -= lambda * theta[j];
        return g;
    };
    problem.neg_hessian = [&](const Vector& theta) {
        Matrix h = neg_hessian(z, theta);
        if (lambda > 0.0)
            for (std::size_t j = 0; j < h.cols(); ++j)
                if (penalized[j]) h(j, j) += lambda;
        return h;
    };

    const NewtonResult opt = newton_maximize(problem, start, 1e-8, 100);

    LogisticFit result;
    result.coefficients = opt.argmax;
    result.lambda = lambda;
    result.converged = opt.converged;
    result.iterations = opt.iterations;
    result.fitted_probabilities.resize(z.rows());
    for (std::size_t i = 0; i < z.rows(); ++i) {
        const double mu = sigma(dot(z.row(i), result.coefficients));
        result.fitted_probabilities[i] = std::clamp(mu, kProbClip, 1.0 - kProbClip);
    }
    result.log_likelihood = log_likelihood(z, y, result.coefficients);
    return result;
}

LogisticFit fit(const Matrix& z, const Vector& y, double lambda) {
    std::vector<char> penalized(z.cols(), 1);
    if (!penalized.empty()) penalized[0] = 0;  // intercept is never penalized
    return fit_from(z, y, lambda, penalized, Vector(z.cols(), 0.0));
}

double min_eigen_ratio(const LogisticFit& f, const Matrix& z) {
    Matrix h = neg_hessian(z, f.coefficients);
    const double n = static_cast<double>(z.rows());
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j) h(i, j) /= n;
    return sym_eigenvalues(h).eigenvalues.front();
}

}  // namespace lcc
