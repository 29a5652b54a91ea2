#include "lcc/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace lcc {

namespace {
constexpr double kPivotTol = 1e-12;
constexpr double kSymTol = 1e-10;
}  // namespace

Vector cholesky_solve(const Matrix& a, const Vector& b) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw DimensionMismatch("cholesky_solve: matrix not square");
    if (b.size() != n) throw DimensionMismatch("cholesky_solve: rhs length != dimension");

    // Lower-triangular factor, stored dense.
    Matrix l(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = a(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
        if (!(d > kPivotTol))
            throw NotPositiveDefinite("cholesky_solve: pivot " + std::to_string(d) +
                                      " at column " + std::to_string(j));
        const double ljj = std::sqrt(d);
        l(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = a(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            l(i, j) = s / ljj;
        }
    }

    // Forward substitution L z = b, then back substitution L' x = z.
    Vector x(b);
    for (std::size_t i = 0; i < n; ++i) {
        double s = x[i];
        for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * x[k];
        x[i] = s / l(i, i);
    }
    for (std::size_t ii = n; ii-- > 0;) {
        double s = x[ii];
        for (std::size_t k = ii + 1; k < n; ++k) s -= l(k, ii) * x[k];
        x[ii] = s / l(ii, ii);
    }
    return x;
}

SymEigenResult sym_eigenvalues(const Matrix& a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw DimensionMismatch("sym_eigenvalues: matrix not square");
    if (a.max_asymmetry() > kSymTol)
        throw NonSymmetric("sym_eigenvalues: asymmetry " + std::to_string(a.max_asymmetry()));

    Matrix b = a;
    if (n <= 1) {
        Vector ev(n);
        if (n == 1) ev[0] = b(0, 0);
        return {ev};
    }

    auto off_norm = [&](const Matrix& m) {
        double s = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) s += m(p, q) * m(p, q);
        return std::sqrt(2.0 * s);
    };

    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::fabs(b(i, j)));
    const double stop = 1e-12 * (1.0 + scale) * n;

    for (int sweep = 0; sweep < 100 && off_norm(b) > stop; ++sweep) {
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = b(p, q);
                if (std::fabs(apq) <= 1e-300) continue;
                // Classic Jacobi rotation that annihilates b(p,q).
                const double theta = (b(q, q) - b(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double bkp = b(k, p), bkq = b(k, q);
                    b(k, p) = c * bkp - s * bkq;
                    b(k, q) = s * bkp + c * bkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double bpk = b(p, k), bqk = b(q, k);
                    b(p, k) = c * bpk - s * bqk;
                    b(q, k) = s * bpk + c * bqk;
                }
            }
        }
    }

    Vector ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = b(i, i);
    std::sort(ev.begin(), ev.end());
    return {ev};
}

}  // namespace lcc
