#include <cmath>
#include <vector>

#include "doctest.h"
#include "lcc/inference.hpp"
#include "lcc/rng.hpp"
#include "lcc/synthgen.hpp"

using lcc::ChainModel;
using lcc::Labelling;
using lcc::LogisticFit;
using lcc::Vector;

namespace {

ChainModel intercept_chain(const std::vector<Vector>& thetas) {
    ChainModel m;
    m.p = 1;
    for (std::size_t k = 0; k < thetas.size(); ++k) {
        m.ordering.push_back(k);
        LogisticFit f;
        f.coefficients = thetas[k];
        f.converged = true;
        m.fits.push_back(f);
    }
    return m;
}

// Brute-force joint mode with the same tie rule the engines document:
// highest probability, ties to the lexicographically smallest bit string.
Labelling brute_force_mode(const ChainModel& m, std::span<const double> x) {
    const std::size_t k = m.label_count();
    Labelling best;
    best.probability = -1.0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::vector<int> y(k);
        for (std::size_t j = 0; j < k; ++j) y[j] = (mask >> j) & 1;
        const double p = m.joint_probability(x, y);
        if (p > best.probability || (p == best.probability && y < best.bits)) {
            best.probability = p;
            best.bits = y;
        }
    }
    return best;
}

}  // namespace

TEST_CASE("greedy decoding can miss the joint mode that exhaustive search finds") {
    // P(y1=1) = 0.6; P(y2=1 | y1=1) = 0.5; P(y2=1 | y1=0) = 0.9.
    // Joint: (0,1) -> 0.36, (1,0) = (1,1) -> 0.30, (0,0) -> 0.04.
    const double a = std::log(0.6 / 0.4);
    const double b = std::log(0.9 / 0.1);
    const ChainModel m = intercept_chain({{a}, {b, -b}});
    const Vector x{1.0};

    const Labelling ex = lcc::exhaustive_mode(m, x);
    CHECK(ex.bits == std::vector<int>{0, 1});
    CHECK(ex.probability == doctest::Approx(0.36).epsilon(1e-13));

    const Labelling gr = lcc::greedy_mode(m, x);
    CHECK(gr.bits == std::vector<int>{1, 1});  // the 0.5 tie resolves to 1
    CHECK(gr.probability == doctest::Approx(0.30).epsilon(1e-13));

    const Labelling bm = lcc::beam_mode(m, x, 2);
    CHECK(bm.bits == std::vector<int>{0, 1});
    CHECK(bm.probability == doctest::Approx(0.36).epsilon(1e-13));
}

TEST_CASE("a fully uniform chain splits the engines only through their tie rules") {
    const ChainModel m = intercept_chain({{0.0}, {0.0, 0.0}});
    const Vector x{1.0};

    // Every labelling has probability 0.25. Exhaustive and beam prefer the
    // lexicographically smallest string; greedy resolves each 0.5 to 1.
    CHECK(lcc::exhaustive_mode(m, x).bits == std::vector<int>{0, 0});
    CHECK(lcc::greedy_mode(m, x).bits == std::vector<int>{1, 1});
    CHECK(lcc::beam_mode(m, x, 1).bits == std::vector<int>{0, 0});
    CHECK(lcc::beam_mode(m, x, 4).bits == std::vector<int>{0, 0});
    CHECK(lcc::exhaustive_mode(m, x).probability == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("exhaustive search agrees with a brute-force scan of all labellings") {
    const ChainModel m = lcc::exact_chain(lcc::model_spec("M4"));
    lcc::Rng rng(91, 0);
    for (int t = 0; t < 40; ++t) {
        const Vector x{1.0, rng.uniform(-4.0, 4.0), rng.uniform(-4.0, 4.0)};
        const Labelling ex = lcc::exhaustive_mode(m, x);
        const Labelling bf = brute_force_mode(m, x);
        CHECK(ex.bits == bf.bits);
        CHECK(ex.probability == doctest::Approx(bf.probability).epsilon(1e-13));
    }
}

TEST_CASE("a beam of width one retraces greedy decoding exactly") {
    const ChainModel m = lcc::exact_chain(lcc::model_spec("M3"));
    lcc::Rng rng(92, 0);
    for (int t = 0; t < 40; ++t) {
        const Vector x{1.0, rng.uniform(-4.0, 4.0), rng.uniform(-4.0, 4.0)};
        const Labelling gr = lcc::greedy_mode(m, x);
        const Labelling b1 = lcc::beam_mode(m, x, 1);
        CHECK(b1.bits == gr.bits);
        CHECK(b1.probability == gr.probability);  // same path, same sum
    }
}

TEST_CASE("a beam wide enough to hold every leaf reproduces exhaustive search") {
    const ChainModel m = lcc::exact_chain(lcc::model_spec("M3"));  // 6 labels
    const std::size_t full = std::size_t{1} << m.label_count();
    lcc::Rng rng(93, 0);
    for (int t = 0; t < 40; ++t) {
        const Vector x{1.0, rng.uniform(-4.0, 4.0), rng.uniform(-4.0, 4.0)};
        const Labelling ex = lcc::exhaustive_mode(m, x);
        const Labelling bw = lcc::beam_mode(m, x, full);
        CHECK(bw.bits == ex.bits);
        CHECK(bw.probability == ex.probability);
    }
}

TEST_CASE("the same engine relations hold on a trained rather than exact chain") {
    const lcc::Dataset ds = lcc::sample(lcc::model_spec("M4"), 800, 71, 0);
    const ChainModel m = lcc::train_chain(ds.X, ds.Y, {4, 2, 0, 1, 3}, 0.01);
    lcc::Rng rng(94, 0);
    for (int t = 0; t < 25; ++t) {
        const Vector x{1.0, rng.uniform(-4.0, 4.0), rng.uniform(-4.0, 4.0)};
        const Labelling ex = lcc::exhaustive_mode(m, x);
        CHECK(ex.bits == brute_force_mode(m, x).bits);
        CHECK(lcc::beam_mode(m, x, 32).bits == ex.bits);
        CHECK(lcc::beam_mode(m, x, 1).bits == lcc::greedy_mode(m, x).bits);
    }
}

TEST_CASE("every engine reports the joint probability of the labelling it returns") {
    const ChainModel m = lcc::exact_chain(lcc::model_spec("M6"));
    const Vector x{1.0, 0.7, -1.3};
    for (const Labelling& r : {lcc::exhaustive_mode(m, x), lcc::greedy_mode(m, x),
                               lcc::beam_mode(m, x, 2), lcc::beam_mode(m, x, 3)}) {
        CHECK(r.bits.size() == m.label_count());
        CHECK(r.probability ==
              doctest::Approx(m.joint_probability(x, r.bits)).epsilon(1e-13));
    }
}

TEST_CASE("exhaustive search refuses label counts beyond its cap") {
    std::vector<Vector> thetas;
    for (std::size_t k = 0; k < 26; ++k) thetas.emplace_back(1 + k, 0.0);
    const ChainModel wide = intercept_chain(thetas);
    CHECK_THROWS_AS((void)lcc::exhaustive_mode(wide, Vector{1.0}), lcc::TooManyLabels);

    const ChainModel m = lcc::exact_chain(lcc::model_spec("M6"));  // 4 labels
    const Vector x{1.0, 0.0, 0.0};
    CHECK_THROWS_AS((void)lcc::exhaustive_mode(m, x, 3), lcc::TooManyLabels);
    CHECK(lcc::exhaustive_mode(m, x, 4).bits.size() == 4);
}

TEST_CASE("inference rejects malformed inputs") {
    const ChainModel m = lcc::exact_chain(lcc::model_spec("M1"));
    CHECK_THROWS_AS((void)lcc::exhaustive_mode(m, Vector{1.0}), lcc::DimensionMismatch);
    CHECK_THROWS_AS((void)lcc::greedy_mode(m, Vector{1.0, 0.0, 3.0}), lcc::DimensionMismatch);
    CHECK_THROWS_AS((void)lcc::beam_mode(m, Vector{1.0, 0.0}, 0), lcc::Error);
}
