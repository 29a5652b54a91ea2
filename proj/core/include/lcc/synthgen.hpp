#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "lcc/chain.hpp"
#include "lcc/dataio.hpp"

namespace lcc {

// True parameters of a synthetic chain: theta_k has length p + k - 1
// (features including intercept, then the k-1 preceding labels).
struct ChainSpec {
    std::size_t p = 0;
    std::vector<Vector> thetas;

    std::size_t label_count() const { return thetas.size(); }
};

// The built-in model zoo M1..M12 (case-insensitive id). Raises UnknownModel.
ChainSpec model_spec(std::string_view id);
const std::vector<std::string>& model_ids();

// Two-label chain P(y1=1|x) = sigma(x), P(y2=1|x,y1) = sigma(x + a*y1); the
// worked example whose y2 marginal is NOT of logistic form.
ChainSpec two_label_example(double a);

// Closed-form marginal P(y2=1|x) = sigma(x) + sigma(x) (sigma(x+a) - sigma(x))
// of two_label_example.
double marginal_y2_example(double x, double a);

// Sample n rows: non-intercept features i.i.d. Uniform[-4,4], labels drawn
// sequentially through the chain. One RNG stream per dataset; the draw order
// is row by row (features first, then labels), so identical (seed, stream)
// always yields the identical dataset.
Dataset sample(const ChainSpec& spec, std::size_t n, std::uint64_t seed,
               std::uint64_t stream = 0);

// The chain whose links carry the TRUE parameters: lets the inference engines
// run against the exact distribution (true-mode oracles, counterexamples).
ChainModel exact_chain(const ChainSpec& spec);

}  // namespace lcc
