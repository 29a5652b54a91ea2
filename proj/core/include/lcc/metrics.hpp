#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "lcc/dataio.hpp"
#include "lcc/speclink.hpp"

namespace lcc {

struct Scores {
    double hamming = 0.0;          // agreement fraction: higher is better
    double subset_accuracy = 0.0;  // exact-match indicator
    double recall = 0.0;
    double precision = 0.0;
    double f_measure = 0.0;
};

// Per-instance measures. Degenerate denominators: recall with no true
// positives (and precision with no predicted positives) is 1 when the other
// side is also empty, else 0; F is 0 when precision + recall = 0.
Scores evaluate(std::span<const int> y_true, std::span<const int> y_pred);

struct EvalReport {
    Scores mean;
    Scores stdev;  // sample standard deviation across folds
    int folds = 0;
};

enum class InferenceKind { exhaustive, greedy, beam };
InferenceKind parse_engine(std::string_view name);

// What to train and how to predict inside each cross-validation fold.
struct MethodSpec {
    enum class Model { br, cc } model = Model::cc;
    enum class OrderSource { original, selected, given } order = OrderSource::original;
    CarrierFamily family = CarrierFamily::pregibon;  // for OrderSource::selected
    InferenceKind engine = InferenceKind::exhaustive;
    std::size_t beam_width = 2;
    double lambda = 0.001;
    std::vector<std::size_t> given_order;
    std::size_t exhaustive_cap = 25;
    std::string name;  // row label in CSV reports
};

// The five stock benchmark methods, by row label:
// "BR", "CC EX", "CC PREIGBON EX", "CC GR", "CC PREIGBON GR".
MethodSpec standard_method(std::string_view name, double lambda, std::size_t exhaustive_cap);
const std::vector<std::string>& standard_method_names();

// A trained per-fold predictor: feature row (with intercept) -> label bits.
using Predictor = std::function<std::vector<int>(std::span<const double>)>;
// Trainer: build a predictor from a training fold.
using Trainer = std::function<Predictor(const Dataset&)>;

// Seeded shuffle, then contiguous blocks (the first n % folds blocks get one
// extra row). Returns the test-row indices per fold, each sorted ascending.
std::vector<std::vector<std::size_t>> fold_assignment(std::size_t n, int folds,
                                                      std::uint64_t seed);

// 5-fold style cross-validation: per fold, train on the remaining rows and
// average the per-instance measures over the fold's test rows; report mean
// and sample standard deviation across folds. Training errors are annotated
// with the fold index. threads > 1 runs folds in parallel (reduction order is
// fixed, so results are identical).
EvalReport cross_validate_fn(const Dataset& ds, const Trainer& trainer, int folds,
                             std::uint64_t seed, unsigned threads = 1);
EvalReport cross_validate(const Dataset& ds, const MethodSpec& method, int folds,
                          std::uint64_t seed, unsigned threads = 1);

// The trainer cross_validate uses; exposed so callers can train on a full
// dataset with the same method descriptors.
Trainer method_trainer(const MethodSpec& method);

}  // namespace lcc
