#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "lcc/experiments.hpp"
#include "lcc/synthgen.hpp"

using lcc::SweepConfig;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> cells_of(const std::string& line) {
    std::vector<std::string> cells;
    std::istringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

}  // namespace

TEST_CASE("comma-separated option values parse into their typed forms") {
    CHECK(lcc::parse_n_grid("100,500,2000") ==
          std::vector<std::size_t>{100, 500, 2000});
    CHECK_THROWS_AS((void)lcc::parse_n_grid("100,abc"), std::exception);
    CHECK_THROWS_AS((void)lcc::parse_n_grid("100x"), lcc::Error);

    const auto fams = lcc::parse_families("pregibon,stukel");
    REQUIRE(fams.size() == 2);
    CHECK(fams[0] == lcc::CarrierFamily::pregibon);
    CHECK(fams[1] == lcc::CarrierFamily::stukel);
    CHECK(lcc::parse_families("all").size() == lcc::all_families().size());
    CHECK_THROWS_AS((void)lcc::parse_families("cauchit"), lcc::Error);

    CHECK(lcc::parse_methods("BR, CC EX") ==
          std::vector<std::string>{"BR", "CC EX"});
    CHECK_THROWS_AS((void)lcc::parse_methods(" , "), lcc::Error);
}

TEST_CASE("the ordering sweep emits one row per family, baseline, and reference") {
    SweepConfig cfg;
    cfg.model = "M1";
    cfg.n_grid = {120};
    cfg.repetitions = 8;
    cfg.families = {lcc::CarrierFamily::pregibon, lcc::CarrierFamily::stukel};
    cfg.seed = 3;
    cfg.lambda = 0.001;

    const std::string csv = lcc::run_ordering_sweep(cfg);
    const auto lines = lines_of(csv);
    REQUIRE(lines.size() == 1 + (2 + 2) * 1);  // header + 2 families + loglik + random
    CHECK(lines[0] == "family,n,repetitions,successes,rate");

    const auto preg = cells_of(lines[1]);
    REQUIRE(preg.size() == 5);
    CHECK(preg[0] == "pregibon");
    CHECK(preg[1] == "120");
    CHECK(preg[2] == "8");
    const int hits = std::stoi(preg[3]);
    CHECK(hits >= 0);
    CHECK(hits <= 8);
    CHECK(std::stod(preg[4]) == doctest::Approx(hits / 8.0).epsilon(1e-15));

    CHECK(cells_of(lines[2])[0] == "stukel");
    CHECK(cells_of(lines[3])[0] == "loglik");
    const auto random_row = cells_of(lines[4]);
    REQUIRE(random_row.size() == 5);
    CHECK(random_row[0] == "random");
    CHECK(random_row[3].empty());  // no success count for the analytic reference
    CHECK(std::stod(random_row[4]) == doctest::Approx(0.5).epsilon(1e-15));  // 1/2!
}

TEST_CASE("the ordering sweep is a pure function of its configuration") {
    SweepConfig cfg;
    cfg.model = "M1";
    cfg.n_grid = {80, 160};
    cfg.repetitions = 6;
    cfg.seed = 17;

    const std::string once = lcc::run_ordering_sweep(cfg);
    CHECK(lcc::run_ordering_sweep(cfg) == once);

    SweepConfig threaded = cfg;
    threaded.threads = 2;
    CHECK(lcc::run_ordering_sweep(threaded) == once);  // byte-identical
}

TEST_CASE("the mode sweep reports all three ordering regimes per grid point") {
    SweepConfig cfg;
    cfg.model = "M1";
    cfg.n_grid = {150};
    cfg.repetitions = 4;
    cfg.test_points = 30;
    cfg.seed = 7;

    const std::string csv = lcc::run_mode_sweep(cfg);
    const auto lines = lines_of(csv);
    REQUIRE(lines.size() == 1 + 3);
    CHECK(lines[0] == "regime,n,repetitions,test_points,successes,rate");
    CHECK(cells_of(lines[1])[0] == "correct");
    CHECK(cells_of(lines[2])[0] == "selected");
    CHECK(cells_of(lines[3])[0] == "reversed");
    for (int r = 1; r <= 3; ++r) {
        const auto cells = cells_of(lines[r]);
        REQUIRE(cells.size() == 6);
        CHECK(cells[1] == "150");
        CHECK(cells[2] == "4");
        CHECK(cells[3] == "30");
        const double rate = std::stod(cells[5]);
        CHECK(rate >= 0.0);
        CHECK(rate <= 1.0);
        CHECK(std::stoi(cells[4]) <= 4 * 30);
        // M1 at n = 150 recovers the true mode most of the time.
        CHECK(rate > 0.5);
    }

    CHECK(lcc::run_mode_sweep(cfg) == csv);
    SweepConfig threaded = cfg;
    threaded.threads = 2;
    CHECK(lcc::run_mode_sweep(threaded) == csv);
}

TEST_CASE("sweep configurations are validated before any work starts") {
    SweepConfig cfg;
    cfg.model = "M1";
    cfg.n_grid = {100};

    SweepConfig bad = cfg;
    bad.n_grid = {};
    CHECK_THROWS_AS((void)lcc::run_ordering_sweep(bad), lcc::Error);

    bad = cfg;
    bad.n_grid = {500, 100};
    CHECK_THROWS_AS((void)lcc::run_ordering_sweep(bad), lcc::Error);

    bad = cfg;
    bad.repetitions = 0;
    CHECK_THROWS_AS((void)lcc::run_ordering_sweep(bad), lcc::Error);

    bad = cfg;
    bad.repetitions = std::size_t{1} << 19;  // would collide with test streams
    CHECK_THROWS_AS((void)lcc::run_ordering_sweep(bad), lcc::Error);

    bad = cfg;
    bad.model = "M12";
    bad.repetitions = 1;
    CHECK_THROWS_AS((void)lcc::run_ordering_sweep(bad), lcc::Error);  // long-run gate

    bad = cfg;
    bad.model = "";
    CHECK_THROWS_AS((void)lcc::run_ordering_sweep(bad), lcc::Error);

    bad = cfg;
    bad.test_points = 0;
    CHECK_THROWS_AS((void)lcc::run_mode_sweep(bad), lcc::Error);
}

TEST_CASE("dataset loading dispatches on extension and applies preprocessing") {
    const lcc::Dataset ds = lcc::sample(lcc::model_spec("M4"), 80, 5, 0);
    const std::string arff = "/tmp/lcc_test_load.arff";
    lcc::save_arff(ds, arff);

    SweepConfig cfg;
    cfg.dataset = arff;
    CHECK_THROWS_AS((void)lcc::load_dataset(cfg), lcc::Error);  // label count required

    cfg.arff_labels = 5;
    const lcc::Dataset base = lcc::load_dataset(cfg);
    CHECK(base.rows() == 80);
    CHECK(base.label_count() == 5);

    cfg.top_labels = 3;
    cfg.subsample_rows = 40;
    cfg.standardize = true;
    const lcc::Dataset cooked = lcc::load_dataset(cfg);
    CHECK(cooked.label_count() == 3);
    CHECK(cooked.rows() <= 40);
    double mean = 0.0;
    for (std::size_t i = 0; i < cooked.rows(); ++i) mean += cooked.X(i, 1);
    CHECK(std::abs(mean / static_cast<double>(cooked.rows())) < 1e-10);

    SweepConfig wrong;
    wrong.dataset = "/tmp/lcc_test_load.parquet";
    CHECK_THROWS_AS((void)lcc::load_dataset(wrong), lcc::Error);
    SweepConfig none;
    CHECK_THROWS_AS((void)lcc::load_dataset(none), lcc::Error);
    std::remove(arff.c_str());
}

TEST_CASE("the benchmark driver produces one row per method and writes its file") {
    const lcc::Dataset ds = lcc::sample(lcc::model_spec("M4"), 90, 9, 0);
    const std::string arff = "/tmp/lcc_test_bench.arff";
    lcc::save_arff(ds, arff);

    SweepConfig cfg;
    cfg.dataset = arff;
    cfg.arff_labels = 5;
    cfg.folds = 3;
    cfg.seed = 11;
    cfg.output = "/tmp/lcc_test_bench.csv";

    const std::string csv = lcc::run_benchmark(cfg);
    const auto lines = lines_of(csv);
    REQUIRE(lines.size() == 1 + 5);  // header + the standard five methods
    CHECK(lines[0] ==
          "method,folds,hamming_mean,hamming_std,subset_accuracy_mean,subset_accuracy_std,"
          "recall_mean,recall_std,precision_mean,precision_std,f_measure_mean,f_measure_std");
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const auto cells = cells_of(lines[r]);
        REQUIRE(cells.size() == 12);
        CHECK(cells[0] == lcc::standard_method_names()[r - 1]);
        CHECK(cells[1] == "3");
        for (std::size_t c = 2; c < 12; c += 2) {
            const double m = std::stod(cells[c]);
            CHECK(m >= 0.0);
            CHECK(m <= 1.0);
        }
    }

    std::ifstream in(cfg.output);
    REQUIRE(in.good());
    std::stringstream sink;
    sink << in.rdbuf();
    CHECK(sink.str() == csv);
    std::remove(arff.c_str());
    std::remove(cfg.output.c_str());

    SweepConfig subset = cfg;
    subset.output.clear();
    subset.methods = {"BR", "CC GR"};
    lcc::save_arff(ds, arff);
    const auto rows = lines_of(lcc::run_benchmark(subset));
    REQUIRE(rows.size() == 3);
    CHECK(cells_of(rows[1])[0] == "BR");
    CHECK(cells_of(rows[2])[0] == "CC GR");
    CHECK_THROWS_AS((void)lcc::run_benchmark([&] {
                        SweepConfig c = subset;
                        c.folds = 1;
                        return c;
                    }()),
                    lcc::Error);
    std::remove(arff.c_str());
}
