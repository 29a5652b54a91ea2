#pragma once

#include <cstdint>
#include <string>

#include "lcc/matrix.hpp"

namespace lcc {

struct Dataset {
    Matrix X;  // leading all-ones column, then features
    Matrix Y;  // binary labels
    std::vector<std::string> feature_names;  // excludes the intercept
    std::vector<std::string> label_names;

    std::size_t rows() const { return X.rows(); }
    std::size_t feature_count() const { return X.cols() == 0 ? 0 : X.cols() - 1; }
    std::size_t label_count() const { return Y.cols(); }
};

// ARFF ingestion (MULAN-style): numeric attributes become features; declared
// label attributes must be nominal {0,1}. Nominal non-label attributes whose
// values are all numeric are read as numeric features (flag datasets encode
// categorical features that way). Sparse {index value} data rows supported.
// Missing values ('?') are rejected.
Dataset load_arff(const std::string& path, const std::vector<std::string>& label_names);
Dataset load_arff(const std::string& path, std::size_t label_count_from_end);
void save_arff(const Dataset& ds, const std::string& path,
               const std::string& relation = "dataset");

// CSV with a header row; label columns carry a "label:" name prefix, or are
// taken as the trailing label_count_from_end columns. 17 significant digits
// on output.
Dataset load_csv(const std::string& path);
Dataset load_csv(const std::string& path, std::size_t label_count_from_end);
void save_csv(const Dataset& ds, const std::string& path);
std::string to_csv(const Dataset& ds);

// Keep the k most frequent labels (ties to the lower original index), then
// drop every row whose retained labels are all zero or all one. Raises
// EmptyDataset when nothing survives (e.g. k = 1, where every row is
// degenerate by construction).
Dataset top_k_labels(const Dataset& ds, std::size_t k);

// Seeded row subsample without replacement (n >= rows returns a copy).
Dataset subsample(const Dataset& ds, std::size_t n, std::uint64_t seed);

// Per-feature standardization to mean 0 / unit sample variance (constant
// columns are centered only). The intercept column is untouched.
Dataset standardize_features(const Dataset& ds);

// Strip the intercept column: the plain feature block.
Matrix feature_block(const Dataset& ds);

struct PrincipalComponent {
    Vector scores;                  // projections of the centered rows
    double explained_variance_ratio;  // top eigenvalue over covariance trace
};

// First principal component of a plain feature matrix (no intercept column)
// via power iteration on the sample covariance. Raises NoVariance when all
// rows are identical.
PrincipalComponent first_principal_component(const Matrix& features);

}  // namespace lcc
