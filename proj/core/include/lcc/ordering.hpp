#pragma once

#include "lcc/speclink.hpp"

namespace lcc {

struct Ordering {
    std::vector<std::size_t> permutation;  // label indices in training order
    Vector step_scores;  // per step: the selected candidate's deviance (or minus
                         // log-likelihood for the log-likelihood variant)
    std::vector<char> degraded;  // per step: selection relied on a failed fit
};

// Forward selection: start from the feature matrix, at each step compute the
// specification deviance of every remaining label against the accumulated
// design and append the argmin (ties to the lowest label index). Labels that
// are constant in the training rows never compete; they are appended last
// with score 0. A candidate whose fit raises contributes deviance 0 and marks
// the step degraded, so the result is always a valid permutation.
Ordering find_ordering(const Matrix& x, const Matrix& y, CarrierFamily family, double lambda);

// Baseline variant selecting by minus log-likelihood instead of deviance.
Ordering loglik_ordering(const Matrix& x, const Matrix& y, double lambda);

}  // namespace lcc
