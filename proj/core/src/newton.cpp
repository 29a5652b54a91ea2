#include "lcc/newton.hpp"

#include <cmath>
#include <limits>

#include "lcc/linalg.hpp"

namespace lcc {

NewtonResult newton_maximize(const NewtonProblem& problem, Vector start, double tol,
                             int max_iter) {
    NewtonResult result;
    result.argmax = std::move(start);

    double value = problem.value(result.argmax);
    if (!std::isfinite(value))
        throw NonFinite("newton_maximize: objective not finite at start");

    while (true) {
        Vector grad = problem.gradient(result.argmax);
        if (inf_norm(grad) <= tol) {
            result.converged = true;
            break;
        }
        if (result.iterations >= max_iter) break;

        Vector step;
        try {
            step = cholesky_solve(problem.neg_hessian(result.argmax), grad);
        } catch (const NotPositiveDefinite& e) {
            if (result.iterations == 0)
                throw SingularHessian(std::string("newton_maximize: ") + e.what());
            result.hessian_failure = true;
            break;
        }

        // Once the quadratic model's predicted gain sinks below the
        // objective's floating-point granularity (which grows with |value|),
        // a line search would only compare rounding noise and can stall with
        // the gradient still above tol. At that point we are inside the
        // quadratic basin, where the raw Newton step contracts, so take it
        // unguarded and let the gradient test decide.
        const double predicted = 0.5 * dot(grad, step);
        const double granularity =
            8 * std::numeric_limits<double>::epsilon() * (1.0 + std::fabs(value));
        if (predicted <= granularity) {
            Vector candidate(result.argmax.size());
            for (std::size_t j = 0; j < candidate.size(); ++j)
                candidate[j] = result.argmax[j] + step[j];
            const double v = problem.value(candidate);
            if (!std::isfinite(v)) {
                result.stalled = true;
                break;
            }
            result.argmax = std::move(candidate);
            value = v;
            ++result.iterations;
            continue;
        }

        // Step-halving line search: accept the first scale that ascends.
        double t = 1.0;
        bool accepted = false;
        Vector candidate(result.argmax.size());
        for (int halving = 0; halving <= 30; ++halving) {
            for (std::size_t j = 0; j < candidate.size(); ++j)
                candidate[j] = result.argmax[j] + t * step[j];
            const double v = problem.value(candidate);
            if (std::isfinite(v) && v > value) {
                result.argmax = candidate;
                value = v;
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted) {
            result.stalled = true;
            break;
        }
        ++result.iterations;
    }

    result.value = value;
    return result;
}

}  // namespace lcc
