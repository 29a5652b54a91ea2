#include "lcc/inference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lcc {

namespace {

void check_x(const ChainModel& model, std::span<const double> x) {
    if (x.size() != model.p) throw DimensionMismatch("inference: feature vector length != p");
}

// Linear predictor of link k over a working vector holding (x, chain bits).
double link_eta(const ChainModel& model, const Vector& z, std::size_t k) {
    const auto& theta = model.fits[k].coefficients;
    return dot({z.data(), theta.size()}, theta);
}

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

Labelling exhaustive_mode(const ChainModel& model, std::span<const double> x, std::size_t cap) {
    check_x(model, x);
    const std::size_t k_total = model.label_count();
    if (k_total > cap)
        throw TooManyLabels("exhaustive_mode: " + std::to_string(k_total) + " labels exceed cap " +
                            std::to_string(cap));

    Vector z(model.p + k_total);
    std::copy(x.begin(), x.end(), z.begin());
    std::vector<int> bits_orig(k_total, 0);

    double best_log = -std::numeric_limits<double>::infinity();
    std::vector<int> best_bits;

    // Depth-first walk; the prefix log-probability is shared by both subtrees.
    auto descend = [&](auto&& self, std::size_t k, double log_p) -> void {
        if (k == k_total) {
            if (log_p > best_log || (log_p == best_log && (best_bits.empty() ||
                                                           lex_less(bits_orig, best_bits)))) {
                best_log = log_p;
                best_bits = bits_orig;
            }
            return;
        }
        const double eta = link_eta(model, z, k);
        const std::size_t label = model.ordering[k];
        for (int bit = 0; bit <= 1; ++bit) {
            z[model.p + k] = bit;
            bits_orig[label] = bit;
            self(self, k + 1, log_p + (bit ? log_sigma(eta) : log_sigma(-eta)));
        }
        z[model.p + k] = 0.0;
        bits_orig[label] = 0;
    };
    descend(descend, 0, 0.0);

    return {best_bits, std::exp(best_log)};
}

Labelling greedy_mode(const ChainModel& model, std::span<const double> x) {
    check_x(model, x);
    const std::size_t k_total = model.label_count();
    Vector z(model.p + k_total);
    std::copy(x.begin(), x.end(), z.begin());

    std::vector<int> bits_orig(k_total, 0);
    double log_p = 0.0;
    for (std::size_t k = 0; k < k_total; ++k) {
        const double eta = link_eta(model, z, k);
        const int bit = sigma(eta) >= 0.5 ? 1 : 0;
        z[model.p + k] = bit;
        bits_orig[model.ordering[k]] = bit;
        log_p += bit ? log_sigma(eta) : log_sigma(-eta);
    }
    return {bits_orig, std::exp(log_p)};
}

Labelling beam_mode(const ChainModel& model, std::span<const double> x, std::size_t beam_width) {
    check_x(model, x);
    if (beam_width < 1) throw Error("beam_mode: beam width must be >= 1");
    const std::size_t k_total = model.label_count();

    struct Candidate {
        double log_p;
        std::vector<int> prefix;  // chain-order bits
    };
    std::vector<Candidate> frontier{{0.0, {}}};

    Vector z(model.p + k_total);
    std::copy(x.begin(), x.end(), z.begin());

    for (std::size_t k = 0; k < k_total; ++k) {
        std::vector<Candidate> expanded;
        expanded.reserve(frontier.size() * 2);
        for (const Candidate& c : frontier) {
            for (std::size_t j = 0; j < k; ++j) z[model.p + j] = c.prefix[j];
            const double eta = link_eta(model, z, k);
            for (int bit = 0; bit <= 1; ++bit) {
                Candidate child{c.log_p + (bit ? log_sigma(eta) : log_sigma(-eta)), c.prefix};
                child.prefix.push_back(bit);
                expanded.push_back(std::move(child));
            }
        }
        std::sort(expanded.begin(), expanded.end(), [](const Candidate& a, const Candidate& b) {
            if (a.log_p != b.log_p) return a.log_p > b.log_p;
            return lex_less(a.prefix, b.prefix);
        });
        if (expanded.size() > beam_width) expanded.resize(beam_width);
        frontier = std::move(expanded);
    }

    // Same winner rule as exhaustive_mode: highest probability, ties to the
    // lexicographically smallest bit string in original space.
    double best_log = -std::numeric_limits<double>::infinity();
    std::vector<int> best_bits;
    for (const Candidate& c : frontier) {
        std::vector<int> bits_orig(k_total, 0);
        for (std::size_t k = 0; k < k_total; ++k) bits_orig[model.ordering[k]] = c.prefix[k];
        if (c.log_p > best_log ||
            (c.log_p == best_log && (best_bits.empty() || lex_less(bits_orig, best_bits)))) {
            best_log = c.log_p;
            best_bits = std::move(bits_orig);
        }
    }
    return {best_bits, std::exp(best_log)};
}

}  // namespace lcc
