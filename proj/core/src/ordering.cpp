#include "lcc/ordering.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace lcc {

namespace {

Vector label_column(const Matrix& y, std::size_t k) {
    Vector column(y.rows());
    for (std::size_t i = 0; i < y.rows(); ++i) column[i] = y(i, k);
    return column;
}

bool is_constant(const Vector& column) {
    for (double v : column)
        if (v != column.front()) return false;
    return true;
}

Matrix append_column(const Matrix& m, const Vector& column) {
    Matrix out(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto src = m.row(i);
        auto dst = out.row(i);
        for (std::size_t j = 0; j < src.size(); ++j) dst[j] = src[j];
        dst[src.size()] = column[i];
    }
    return out;
}

// Shared forward-selection loop; the two public entry points differ only in
// how a candidate is scored (lower is better for both).
template <typename ScoreFn>
Ordering forward_select(const Matrix& x, const Matrix& y, ScoreFn&& candidate_score) {
    if (y.rows() != x.rows()) throw DimensionMismatch("ordering: X/Y row counts differ");
    const std::size_t k_total = y.cols();
    if (k_total == 0) throw DimensionMismatch("ordering: no label columns");

    Ordering result;
    std::vector<std::size_t> remaining(k_total);
    std::iota(remaining.begin(), remaining.end(), 0);

    Matrix z_act = x;
    while (!remaining.empty()) {
        std::size_t best = remaining.size();  // index into remaining
        double best_score = std::numeric_limits<double>::infinity();
        char best_degraded = 0;

        for (std::size_t c = 0; c < remaining.size(); ++c) {
            const Vector column = label_column(y, remaining[c]);
            if (is_constant(column)) continue;  // constants go last
            double score;
            char degraded = 0;
            try {
                auto scored = candidate_score(z_act, column);
                score = scored.first;
                degraded = scored.second;
            } catch (const Error&) {
                score = 0.0;  // unusable fit: no evidence against this label
                degraded = 1;
            }
            if (score < best_score) {  // strict: ties keep the lowest index
                best = c;
                best_score = score;
                best_degraded = degraded;
            }
        }

        if (best == remaining.size()) {
            // Everything left is constant: take the lowest index, score 0.
            best = 0;
            best_score = 0.0;
            best_degraded = 0;
        }

        const std::size_t label = remaining[best];
        result.permutation.push_back(label);
        result.step_scores.push_back(best_score);
        result.degraded.push_back(best_degraded);
        z_act = append_column(z_act, label_column(y, label));
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return result;
}

}  // namespace

Ordering find_ordering(const Matrix& x, const Matrix& y, CarrierFamily family, double lambda) {
    return forward_select(x, y, [&](const Matrix& z, const Vector& column) {
        const SpecResult r = spec_deviance(z, column, lambda, family);
        return std::pair<double, char>(r.deviance, r.degraded ? 1 : 0);
    });
}

Ordering loglik_ordering(const Matrix& x, const Matrix& y, double lambda) {
    return forward_select(x, y, [&](const Matrix& z, const Vector& column) {
        const LogisticFit f = fit(z, column, lambda);
        return std::pair<double, char>(-f.log_likelihood, f.converged ? 0 : 1);
    });
}

}  // namespace lcc
