#pragma once

#include "lcc/chain.hpp"

namespace lcc {

struct Labelling {
    std::vector<int> bits;      // original label index space
    double probability = 0.0;   // joint probability of bits under the model
};

// Exact joint mode: walks the label tree depth-first with shared prefix
// log-probabilities. Ties broken toward the lexicographically smallest bit
// string in original label space. Refuses K > cap with TooManyLabels.
Labelling exhaustive_mode(const ChainModel& model, std::span<const double> x,
                          std::size_t cap = 25);

// Chain-order pass setting each bit to I(conditional >= 0.5); a conditional of
// exactly 0.5 resolves to 1.
Labelling greedy_mode(const ChainModel& model, std::span<const double> x);

// Breadth-first beam search keeping the beam_width highest-probability
// prefixes per level (log-space scores; ties broken lexicographically on the
// chain-order prefix). The final winner among surviving leaves uses the same
// rule as exhaustive_mode.
Labelling beam_mode(const ChainModel& model, std::span<const double> x, std::size_t beam_width);

}  // namespace lcc
