#pragma once

#include <cstdint>
#include <string>

#include "lcc/metrics.hpp"

namespace lcc {

// Shared configuration for the experiment drivers. A sweep is a pure function
// of this struct: identical configs give identical CSV bytes, regardless of
// thread count.
struct SweepConfig {
    std::string model;               // synthetic model id (sweeps)
    std::string dataset;             // data file path (benchmark)
    std::vector<std::size_t> n_grid;  // ascending training sizes
    std::size_t repetitions = 200;
    std::vector<CarrierFamily> families{CarrierFamily::pregibon};
    std::uint64_t seed = 1;
    std::string engine = "auto";     // auto | exhaustive | greedy | beam
    std::size_t beam_width = 2;
    double lambda = 0.001;
    std::string output;              // optional CSV output path
    bool long_run = false;           // unlock the expensive 10-label model
    std::size_t test_points = 200;   // per repetition (mode sweep)
    int folds = 5;
    std::size_t arff_labels = 0;     // trailing label count for ARFF/CSV inputs
    std::size_t top_labels = 0;      // 0 = keep all labels
    std::size_t subsample_rows = 0;  // 0 = keep all rows
    unsigned threads = 1;
    bool standardize = false;
    std::vector<std::string> methods;  // benchmark rows; empty = the standard five
    std::size_t exhaustive_cap = 25;
};

// Estimated probability of recovering the identity ordering per family and
// training size, with the minus-log-likelihood baseline and the 1/K! random
// reference. CSV columns: family,n,repetitions,successes,rate.
std::string run_ordering_sweep(const SweepConfig& config);

// Estimated probability that the fitted chain's inferred mode equals the true
// mode, per ordering regime (correct / selected / reversed) and training
// size, over repetitions x fresh test points. CSV columns:
// regime,n,repetitions,test_points,successes,rate.
std::string run_mode_sweep(const SweepConfig& config);

// Cross-validated benchmark table over the requested methods. CSV columns:
// method,folds,<measure>_mean,<measure>_std for the five measures.
std::string run_benchmark(const SweepConfig& config);

// Load a dataset by file extension (.arff or .csv) and apply the configured
// preprocessing: label filtering, row subsampling, standardization.
Dataset load_dataset(const SweepConfig& config);

// Comma-separated helpers used by the CLI and the config file path.
std::vector<std::size_t> parse_n_grid(const std::string& csv);
std::vector<CarrierFamily> parse_families(const std::string& csv);
std::vector<std::string> parse_methods(const std::string& csv);

}  // namespace lcc
