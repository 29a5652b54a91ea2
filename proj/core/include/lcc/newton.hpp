#pragma once

#include <functional>

#include "lcc/matrix.hpp"

namespace lcc {

// Concave objective handed to the Newton engine as callbacks.
struct NewtonProblem {
    std::function<double(const Vector&)> value;
    std::function<Vector(const Vector&)> gradient;
    std::function<Matrix(const Vector&)> neg_hessian;
};

struct NewtonResult {
    Vector argmax;
    double value = 0.0;
    bool converged = false;
    int iterations = 0;       // accepted Newton steps
    bool hessian_failure = false;  // solve failed after at least one accepted step
    bool stalled = false;          // line search found no usable step
};

// Damped Newton ascent: full step, halved up to 30 times whenever it does not
// increase the objective. Convergence means the gradient inf-norm fell to tol.
//
// A Cholesky failure on the very first step is raised as SingularHessian (the
// caller handed over an unsolvable problem). A failure after progress has been
// made is reported via hessian_failure/converged=false instead, so long-running
// experiment sweeps are never torn down by one ill-conditioned replication.
// NonFinite is raised when the objective is NaN/inf at the start point.
NewtonResult newton_maximize(const NewtonProblem& problem, Vector start, double tol = 1e-8,
                             int max_iter = 100);

}  // namespace lcc
