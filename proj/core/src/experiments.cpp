#include "lcc/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "lcc/chain.hpp"
#include "lcc/inference.hpp"
#include "lcc/ordering.hpp"
#include "lcc/parallel.hpp"
#include "lcc/synthgen.hpp"

namespace lcc {

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Substream layout: each (n, repetition) pair owns stream n * 2^20 + rep for
// its training draw and n * 2^20 + 2^19 + rep for its test draw, so streams
// never depend on grid order, loop order, or worker count.
constexpr std::uint64_t kStreamBlock = 1ull << 20;
constexpr std::uint64_t kTestOffset = 1ull << 19;

std::uint64_t train_stream(std::size_t n, std::size_t rep) {
    return static_cast<std::uint64_t>(n) * kStreamBlock + rep;
}
std::uint64_t test_stream(std::size_t n, std::size_t rep) {
    return static_cast<std::uint64_t>(n) * kStreamBlock + kTestOffset + rep;
}

void check_common(const SweepConfig& config) {
    if (config.repetitions < 1) throw Error("config: repetitions must be >= 1");
    if (config.repetitions >= kTestOffset)
        throw Error("config: repetitions exceed the substream block");
    if (config.n_grid.empty()) throw Error("config: n grid is empty");
    if (!std::is_sorted(config.n_grid.begin(), config.n_grid.end()))
        throw Error("config: n grid must be ascending");
    for (std::size_t n : config.n_grid)
        if (n < 1) throw Error("config: n must be >= 1");
}

ChainSpec sweep_model(const SweepConfig& config) {
    if (config.model.empty()) throw Error("config: model id required (M1..M12)");
    ChainSpec spec = model_spec(config.model);
    if (spec.label_count() >= 10 && !config.long_run)
        throw Error("model " + config.model +
                    " is gated behind the long-run flag (hours of compute at full scale)");
    return spec;
}

bool is_identity(const std::vector<std::size_t>& pi) {
    for (std::size_t k = 0; k < pi.size(); ++k)
        if (pi[k] != k) return false;
    return true;
}

void finish_csv(const std::string& csv, const SweepConfig& config) {
    if (config.output.empty()) return;
    std::ofstream out(config.output);
    if (!out) throw Error("cannot write output file: " + config.output);
    out << csv;
}

}  // namespace

std::vector<std::size_t> parse_n_grid(const std::string& csv) {
    std::vector<std::size_t> grid;
    std::istringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(item, &pos);
        if (pos != item.size()) throw Error("bad n value: " + item);
        grid.push_back(static_cast<std::size_t>(v));
    }
    return grid;
}

std::vector<CarrierFamily> parse_families(const std::string& csv) {
    std::vector<CarrierFamily> families;
    std::istringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "all") {
            families = all_families();
            continue;
        }
        families.push_back(parse_family(item));
    }
    if (families.empty()) throw Error("no carrier families given");
    return families;
}

std::vector<std::string> parse_methods(const std::string& csv) {
    std::vector<std::string> methods;
    std::istringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        // Trim around names so "BR, CC EX" works.
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        methods.push_back(item.substr(b, e - b + 1));
    }
    if (methods.empty()) throw Error("no methods given");
    return methods;
}

std::string run_ordering_sweep(const SweepConfig& config) {
    check_common(config);
    const ChainSpec spec = sweep_model(config);
    const std::size_t k_total = spec.label_count();
    if (config.families.empty()) throw Error("config: no carrier families");

    const std::size_t fam_count = config.families.size();
    const std::size_t grid_count = config.n_grid.size();
    const std::size_t reps = config.repetitions;

    // successes[n_idx][family] plus the log-likelihood baseline in the last slot.
    std::vector<std::vector<std::size_t>> successes(grid_count,
                                                    std::vector<std::size_t>(fam_count + 1, 0));

    for (std::size_t g = 0; g < grid_count; ++g) {
        const std::size_t n = config.n_grid[g];
        std::vector<std::vector<char>> rep_hits(reps, std::vector<char>(fam_count + 1, 0));
        parallel_for(reps, config.threads, [&](std::size_t rep) {
            const Dataset ds = sample(spec, n, config.seed, train_stream(n, rep));
            for (std::size_t f = 0; f < fam_count; ++f) {
                const Ordering found =
                    find_ordering(ds.X, ds.Y, config.families[f], config.lambda);
                rep_hits[rep][f] = is_identity(found.permutation);
            }
            const Ordering baseline = loglik_ordering(ds.X, ds.Y, config.lambda);
            rep_hits[rep][fam_count] = is_identity(baseline.permutation);
        });
        for (std::size_t rep = 0; rep < reps; ++rep)
            for (std::size_t f = 0; f <= fam_count; ++f) successes[g][f] += rep_hits[rep][f];
    }

    double k_factorial = 1.0;
    for (std::size_t k = 2; k <= k_total; ++k) k_factorial *= static_cast<double>(k);

    std::ostringstream out;
    out << "family,n,repetitions,successes,rate\n";
    auto emit = [&](const std::string& family, std::size_t g, std::size_t hits) {
        out << family << ',' << config.n_grid[g] << ',' << reps << ',' << hits << ','
            << format_double(static_cast<double>(hits) / static_cast<double>(reps)) << "\n";
    };
    for (std::size_t f = 0; f < fam_count; ++f)
        for (std::size_t g = 0; g < grid_count; ++g)
            emit(family_name(config.families[f]), g, successes[g][f]);
    for (std::size_t g = 0; g < grid_count; ++g) emit("loglik", g, successes[g][fam_count]);
    for (std::size_t g = 0; g < grid_count; ++g)
        out << "random," << config.n_grid[g] << ',' << reps << ",,"
            << format_double(1.0 / k_factorial) << "\n";

    const std::string csv = out.str();
    finish_csv(csv, config);
    return csv;
}

std::string run_mode_sweep(const SweepConfig& config) {
    check_common(config);
    if (config.test_points < 1) throw Error("config: test_points must be >= 1");
    const ChainSpec spec = sweep_model(config);
    const std::size_t k_total = spec.label_count();
    const ChainModel truth = exact_chain(spec);

    InferenceKind engine;
    if (config.engine == "auto")
        engine = k_total >= 10 ? InferenceKind::greedy : InferenceKind::exhaustive;
    else
        engine = parse_engine(config.engine);

    const std::vector<std::string> regimes = {"correct", "selected", "reversed"};
    std::vector<std::size_t> identity(k_total), reversed(k_total);
    std::iota(identity.begin(), identity.end(), 0);
    std::reverse_copy(identity.begin(), identity.end(), reversed.begin());

    const std::size_t grid_count = config.n_grid.size();
    const std::size_t reps = config.repetitions;
    std::vector<std::array<std::size_t, 3>> totals(grid_count, {0, 0, 0});

    for (std::size_t g = 0; g < grid_count; ++g) {
        const std::size_t n = config.n_grid[g];
        std::vector<std::array<std::size_t, 3>> rep_hits(reps, {0, 0, 0});
        parallel_for(reps, config.threads, [&](std::size_t rep) {
            const Dataset train = sample(spec, n, config.seed, train_stream(n, rep));
            const Dataset test =
                sample(spec, config.test_points, config.seed, test_stream(n, rep));

            std::array<ChainModel, 3> models;
            models[0] = train_chain(train.X, train.Y, identity, config.lambda);
            models[1] = train_chain(
                train.X, train.Y,
                find_ordering(train.X, train.Y, config.families.front(), config.lambda)
                    .permutation,
                config.lambda);
            models[2] = train_chain(train.X, train.Y, reversed, config.lambda);

            for (std::size_t t = 0; t < config.test_points; ++t) {
                const auto x = test.X.row(t);
                const std::vector<int> true_mode = exhaustive_mode(truth, x).bits;
                for (std::size_t r = 0; r < 3; ++r) {
                    std::vector<int> predicted;
                    switch (engine) {
                        case InferenceKind::exhaustive:
                            predicted = exhaustive_mode(models[r], x, config.exhaustive_cap).bits;
                            break;
                        case InferenceKind::greedy:
                            predicted = greedy_mode(models[r], x).bits;
                            break;
                        case InferenceKind::beam:
                            predicted = beam_mode(models[r], x, config.beam_width).bits;
                            break;
                    }
                    rep_hits[rep][r] += predicted == true_mode;
                }
            }
        });
        for (std::size_t rep = 0; rep < reps; ++rep)
            for (std::size_t r = 0; r < 3; ++r) totals[g][r] += rep_hits[rep][r];
    }

    std::ostringstream out;
    out << "regime,n,repetitions,test_points,successes,rate\n";
    const double denom = static_cast<double>(reps) * static_cast<double>(config.test_points);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t g = 0; g < grid_count; ++g)
            out << regimes[r] << ',' << config.n_grid[g] << ',' << reps << ','
                << config.test_points << ',' << totals[g][r] << ','
                << format_double(static_cast<double>(totals[g][r]) / denom) << "\n";

    const std::string csv = out.str();
    finish_csv(csv, config);
    return csv;
}

Dataset load_dataset(const SweepConfig& config) {
    if (config.dataset.empty()) throw Error("config: dataset path required");
    const std::string& path = config.dataset;
    Dataset ds;
    const auto dot = path.find_last_of('.');
    const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
    if (ext == ".arff") {
        if (config.arff_labels == 0)
            throw Error("ARFF input needs the trailing label count (labels option)");
        ds = load_arff(path, config.arff_labels);
    } else if (ext == ".csv") {
        ds = config.arff_labels > 0 ? load_csv(path, config.arff_labels) : load_csv(path);
    } else {
        throw Error("unrecognized dataset extension (want .arff or .csv): " + path);
    }
    if (config.top_labels > 0) ds = top_k_labels(ds, config.top_labels);
    if (config.subsample_rows > 0) ds = subsample(ds, config.subsample_rows, config.seed);
    if (config.standardize) ds = standardize_features(ds);
    return ds;
}

std::string run_benchmark(const SweepConfig& config) {
    if (config.folds < 2) throw Error("config: folds must be >= 2");
    const Dataset ds = load_dataset(config);

    std::vector<std::string> methods =
        config.methods.empty() ? standard_method_names() : config.methods;

    std::ostringstream out;
    out << "method,folds,hamming_mean,hamming_std,subset_accuracy_mean,subset_accuracy_std,"
           "recall_mean,recall_std,precision_mean,precision_std,f_measure_mean,f_measure_std\n";
    for (const std::string& name : methods) {
        MethodSpec method = standard_method(name, config.lambda, config.exhaustive_cap);
        method.beam_width = config.beam_width;
        const EvalReport r = cross_validate(ds, method, config.folds, config.seed,
                                            config.threads);
        out << name << ',' << r.folds;
        const double cols[10] = {r.mean.hamming,        r.stdev.hamming,
                                 r.mean.subset_accuracy, r.stdev.subset_accuracy,
                                 r.mean.recall,          r.stdev.recall,
                                 r.mean.precision,       r.stdev.precision,
                                 r.mean.f_measure,       r.stdev.f_measure};
        for (double c : cols) out << ',' << format_double(c);
        out << "\n";
    }

    const std::string csv = out.str();
    finish_csv(csv, config);
    return csv;
}

}  // namespace lcc
