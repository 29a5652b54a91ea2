#include "lcc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>

#include "lcc/chain.hpp"
#include "lcc/inference.hpp"
#include "lcc/ordering.hpp"
#include "lcc/parallel.hpp"
#include "lcc/rng.hpp"

namespace lcc {

Scores evaluate(std::span<const int> y_true, std::span<const int> y_pred) {
    if (y_true.size() != y_pred.size())
        throw DimensionMismatch("evaluate: labelling lengths differ");
    const std::size_t k = y_true.size();
    if (k == 0) throw DimensionMismatch("evaluate: empty labellings");

    std::size_t agree = 0, true_pos = 0, truth_ones = 0, pred_ones = 0;
    for (std::size_t j = 0; j < k; ++j) {
        agree += y_true[j] == y_pred[j];
        truth_ones += y_true[j] != 0;
        pred_ones += y_pred[j] != 0;
        true_pos += (y_true[j] != 0 && y_pred[j] != 0);
    }

    Scores s;
    s.hamming = static_cast<double>(agree) / static_cast<double>(k);
    s.subset_accuracy = agree == k ? 1.0 : 0.0;
    s.recall = truth_ones > 0 ? static_cast<double>(true_pos) / static_cast<double>(truth_ones)
                              : (pred_ones == 0 ? 1.0 : 0.0);
    s.precision = pred_ones > 0 ? static_cast<double>(true_pos) / static_cast<double>(pred_ones)
                                : (truth_ones == 0 ? 1.0 : 0.0);
    s.f_measure = (s.precision + s.recall) > 0.0
                      ? 2.0 * s.precision * s.recall / (s.precision + s.recall)
                      : 0.0;
    return s;
}

InferenceKind parse_engine(std::string_view name) {
    std::string k(name);
    std::transform(k.begin(), k.end(), k.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (k == "exhaustive" || k == "ex") return InferenceKind::exhaustive;
    if (k == "greedy" || k == "gr") return InferenceKind::greedy;
    if (k == "beam") return InferenceKind::beam;
    throw Error("unknown inference engine: " + std::string(name));
}

const std::vector<std::string>& standard_method_names() {
    static const std::vector<std::string> names = {"BR", "CC EX", "CC PREIGBON EX", "CC GR",
                                                   "CC PREIGBON GR"};
    return names;
}

MethodSpec standard_method(std::string_view name, double lambda, std::size_t exhaustive_cap) {
    MethodSpec m;
    m.name = std::string(name);
    m.lambda = lambda;
    m.exhaustive_cap = exhaustive_cap;
    if (name == "BR") {
        m.model = MethodSpec::Model::br;
        return m;
    }
    m.model = MethodSpec::Model::cc;
    if (name == "CC EX") {
        m.order = MethodSpec::OrderSource::original;
        m.engine = InferenceKind::exhaustive;
    } else if (name == "CC PREIGBON EX") {
        m.order = MethodSpec::OrderSource::selected;
        m.family = CarrierFamily::pregibon;
        m.engine = InferenceKind::exhaustive;
    } else if (name == "CC GR") {
        m.order = MethodSpec::OrderSource::original;
        m.engine = InferenceKind::greedy;
    } else if (name == "CC PREIGBON GR") {
        m.order = MethodSpec::OrderSource::selected;
        m.family = CarrierFamily::pregibon;
        m.engine = InferenceKind::greedy;
    } else {
        throw Error("unknown method name: " + std::string(name));
    }
    return m;
}

Trainer method_trainer(const MethodSpec& method) {
    return [method](const Dataset& train) -> Predictor {
        if (method.model == MethodSpec::Model::br) {
            auto model = std::make_shared<BRModel>(train_br(train.X, train.Y, method.lambda));
            return [model](std::span<const double> x) { return model->predict(x); };
        }

        std::vector<std::size_t> pi;
        switch (method.order) {
            case MethodSpec::OrderSource::original:
                pi.resize(train.label_count());
                std::iota(pi.begin(), pi.end(), 0);
                break;
            case MethodSpec::OrderSource::selected:
                pi = find_ordering(train.X, train.Y, method.family, method.lambda).permutation;
                break;
            case MethodSpec::OrderSource::given:
                pi = method.given_order;
                break;
        }

        auto model =
            std::make_shared<ChainModel>(train_chain(train.X, train.Y, pi, method.lambda));
        const InferenceKind engine = method.engine;
        const std::size_t beam_width = method.beam_width;
        const std::size_t cap = method.exhaustive_cap;
        return [model, engine, beam_width, cap](std::span<const double> x) {
            switch (engine) {
                case InferenceKind::exhaustive: return exhaustive_mode(*model, x, cap).bits;
                case InferenceKind::greedy: return greedy_mode(*model, x).bits;
                case InferenceKind::beam: return beam_mode(*model, x, beam_width).bits;
            }
            return std::vector<int>();
        };
    };
}

std::vector<std::vector<std::size_t>> fold_assignment(std::size_t n, int folds,
                                                      std::uint64_t seed) {
    if (folds < 2) throw Error("fold_assignment: folds must be >= 2");
    if (n < static_cast<std::size_t>(folds))
        throw Error("fold_assignment: fewer rows than folds");

    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    Rng rng(seed);
    for (std::size_t i = n; i-- > 1;) {
        const std::size_t j = static_cast<std::size_t>(rng.below(i + 1));
        std::swap(idx[i], idx[j]);
    }

    std::vector<std::vector<std::size_t>> assignment(folds);
    const std::size_t base = n / static_cast<std::size_t>(folds);
    const std::size_t extra = n % static_cast<std::size_t>(folds);
    std::size_t at = 0;
    for (int f = 0; f < folds; ++f) {
        const std::size_t size = base + (static_cast<std::size_t>(f) < extra ? 1 : 0);
        assignment[f].assign(idx.begin() + at, idx.begin() + at + size);
        std::sort(assignment[f].begin(), assignment[f].end());
        at += size;
    }
    return assignment;
}

namespace {

Dataset rows_subset(const Dataset& ds, const std::vector<std::size_t>& rows) {
    Dataset out;
    out.feature_names = ds.feature_names;
    out.label_names = ds.label_names;
    out.X = Matrix(rows.size(), ds.X.cols());
    out.Y = Matrix(rows.size(), ds.Y.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto src = ds.X.row(rows[i]);
        std::copy(src.begin(), src.end(), out.X.row(i).begin());
        for (std::size_t j = 0; j < ds.Y.cols(); ++j) out.Y(i, j) = ds.Y(rows[i], j);
    }
    return out;
}

}  // namespace

EvalReport cross_validate_fn(const Dataset& ds, const Trainer& trainer, int folds,
                             std::uint64_t seed, unsigned threads) {
    if (ds.rows() == 0) throw EmptyDataset("cross_validate: empty dataset");
    const auto assignment = fold_assignment(ds.rows(), folds, seed);

    std::vector<Scores> per_fold(folds);
    parallel_for(static_cast<std::size_t>(folds), threads, [&](std::size_t f) {
        const std::vector<std::size_t>& test_rows = assignment[f];
        std::vector<std::size_t> train_rows;
        train_rows.reserve(ds.rows() - test_rows.size());
        {
            std::vector<char> is_test(ds.rows(), 0);
            for (std::size_t r : test_rows) is_test[r] = 1;
            for (std::size_t r = 0; r < ds.rows(); ++r)
                if (!is_test[r]) train_rows.push_back(r);
        }

        Predictor predict;
        try {
            predict = trainer(rows_subset(ds, train_rows));
        } catch (const Error& e) {
            throw Error("fold " + std::to_string(f) + ": " + e.what());
        }

        Scores sum;
        std::vector<int> truth(ds.label_count());
        for (std::size_t r : test_rows) {
            for (std::size_t j = 0; j < ds.label_count(); ++j)
                truth[j] = static_cast<int>(ds.Y(r, j));
            const std::vector<int> pred = predict(ds.X.row(r));
            const Scores s = evaluate(truth, pred);
            sum.hamming += s.hamming;
            sum.subset_accuracy += s.subset_accuracy;
            sum.recall += s.recall;
            sum.precision += s.precision;
            sum.f_measure += s.f_measure;
        }
        const double m = static_cast<double>(test_rows.size());
        per_fold[f] = {sum.hamming / m, sum.subset_accuracy / m, sum.recall / m,
                       sum.precision / m, sum.f_measure / m};
    });

    EvalReport report;
    report.folds = folds;
    auto reduce = [&](double Scores::*field) {
        double mean = 0.0;
        for (const Scores& s : per_fold) mean += s.*field;
        mean /= folds;
        double var = 0.0;
        for (const Scores& s : per_fold) {
            const double d = s.*field - mean;
            var += d * d;
        }
        var /= folds - 1;
        return std::pair<double, double>(mean, std::sqrt(var));
    };
    std::tie(report.mean.hamming, report.stdev.hamming) = reduce(&Scores::hamming);
    std::tie(report.mean.subset_accuracy, report.stdev.subset_accuracy) =
        reduce(&Scores::subset_accuracy);
    std::tie(report.mean.recall, report.stdev.recall) = reduce(&Scores::recall);
    std::tie(report.mean.precision, report.stdev.precision) = reduce(&Scores::precision);
    std::tie(report.mean.f_measure, report.stdev.f_measure) = reduce(&Scores::f_measure);
    return report;
}

EvalReport cross_validate(const Dataset& ds, const MethodSpec& method, int folds,
                          std::uint64_t seed, unsigned threads) {
    return cross_validate_fn(ds, method_trainer(method), folds, seed, threads);
}

}  // namespace lcc
