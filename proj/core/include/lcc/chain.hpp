#pragma once

#include <span>
#include <string>

#include "lcc/logistic.hpp"

namespace lcc {

// Classifier chain: link k regresses label pi(k) on the features plus the
// labels pi(0..k-1). All public operations take label vectors in ORIGINAL
// index space; translation into chain order happens internally.
struct ChainModel {
    std::size_t p = 0;                     // feature count including intercept
    std::vector<std::size_t> ordering;     // pi: original label index per chain position
    std::vector<LogisticFit> fits;         // fit k has p + k coefficients
    double lambda = 0.0;
    std::vector<std::string> label_names;  // optional, kept for prediction output

    std::size_t label_count() const { return ordering.size(); }

    // sigma(z_k' theta_k) at chain position k (0-based) given the bits of the
    // k preceding chain labels.
    double conditional_probability(std::span<const double> x, std::size_t k,
                                   std::span<const int> prefix) const;

    // log P(y | x) for a full labelling y in original index space.
    double joint_log_probability(std::span<const double> x, std::span<const int> y) const;
    double joint_probability(std::span<const double> x, std::span<const int> y) const;

    // Parameter count: p*K + K(K-1)/2.
    std::size_t parameter_count() const;
};

// Binary relevance baseline: one logistic fit per label on the features only.
struct BRModel {
    std::size_t p = 0;
    std::vector<LogisticFit> fits;
    double lambda = 0.0;
    std::vector<std::string> label_names;

    std::size_t label_count() const { return fits.size(); }
    double marginal_probability(std::span<const double> x, std::size_t k) const;
    double joint_probability(std::span<const double> x, std::span<const int> y) const;
    // Per-label threshold at 0.5 (ties to 1). For a product of independent
    // Bernoullis this is exactly the joint mode.
    std::vector<int> predict(std::span<const double> x) const;
};

ChainModel train_chain(const Matrix& x, const Matrix& y, const std::vector<std::size_t>& pi,
                       double lambda);
BRModel train_br(const Matrix& x, const Matrix& y, double lambda);

// Design matrix (X | Y[prefix...]) used when fitting or diagnosing one link.
Matrix chain_design(const Matrix& x, const Matrix& y, std::span<const std::size_t> prefix);

// Minimum over links of min_eigen_ratio on the link's training design.
double chain_regularity_diagnostic(const ChainModel& model, const Matrix& x, const Matrix& y);

// Versioned plain-text serialization; numbers at 17 significant digits so the
// decimal round trip is exact. save/load work for both model kinds.
void save_chain(const ChainModel& model, const std::string& path);
ChainModel load_chain(const std::string& path);
void save_br(const BRModel& model, const std::string& path);
BRModel load_br(const std::string& path);
// Peek at a model file's kind: "chain" or "br".
std::string model_file_kind(const std::string& path);

}  // namespace lcc
