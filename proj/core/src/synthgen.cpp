#include "lcc/synthgen.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "lcc/rng.hpp"

namespace lcc {

namespace {

// theta vector built from a feature block plus trailing label coefficients.
Vector with_labels(const Vector& base, std::initializer_list<double> labels) {
    Vector v = base;
    v.insert(v.end(), labels);
    return v;
}

ChainSpec make_spec(std::size_t p, std::vector<Vector> thetas) {
    ChainSpec s;
    s.p = p;
    s.thetas = std::move(thetas);
    for (std::size_t k = 0; k < s.thetas.size(); ++k)
        if (s.thetas[k].size() != p + k)
            throw UnknownModel("model table entry has inconsistent dimensions");
    return s;
}

const Vector kA10 = {1, -1, 1, -1, 1, -1, 1, -1, 1, -1};

}  // namespace

ChainSpec model_spec(std::string_view id) {
    std::string key(id);
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });

    if (key == "M1")
        return make_spec(2, {{0, 1}, {0, 1, 3}});
    if (key == "M2")
        return make_spec(2, {{0, 1}, {0, 1, 5}});
    if (key == "M3")
        return make_spec(3, {{2, -2, 1},
                             {2, -2, 1, 5},
                             {2, -2, 1, 5, -5},
                             {2, -2, 1, -5, 5, -5},
                             {2, -2, 1, 5, -5, 5, -5},
                             {2, -2, 1, 5, -5, 5, -5, 5}});
    if (key == "M4")
        return make_spec(3, {{2, -2, 1},
                             {2, -2, 1, 5},
                             {2, -2, 1, 5, -5},
                             {2, -2, 1, -5, 5, -5},
                             {2, -2, 1, 5, -5, 5, -5}});
    if (key == "M5")
        return make_spec(10, {kA10, with_labels(kA10, {5}), with_labels(kA10, {5, -5}),
                              with_labels(kA10, {-5, 5, -5})});
    if (key == "M6")
        return make_spec(3, {{1, -3, 0.5},
                             {1.5, -2.5, 1, 5},
                             {2, -2, 1.5, 5, -5},
                             {2.5, -1.5, 2, -5, 5, -5}});
    if (key == "M7")
        return make_spec(3, {{2, -2, 1},
                             {2, -2, 1, 5},
                             {2, -2, 1, 5, -5},
                             {2, -2, 1, -5, 5, -5}});
    if (key == "M8")
        return make_spec(3, {{2, -2, 1},
                             {2, -2, 1, 2},
                             {2, -2, 1, 2, -2},
                             {2, -2, 1, -2, 2, -2}});
    if (key == "M9")
        return make_spec(3, {{2, -2, 1},
                             {2, -2, 1, 10},
                             {2, -2, 1, 10, -10},
                             {2, -2, 1, -10, 10, -10}});
    if (key == "M10")
        return make_spec(3, {{5, -5, 2},
                             {5, -5, 2, 5},
                             {5, -5, 2, 5, -5},
                             {5, -5, 2, -5, 5, -5}});
    if (key == "M11")
        return make_spec(10, {kA10, with_labels(kA10, {-8}), with_labels(kA10, {1, 3}),
                              with_labels(kA10, {0.5, 5, 10})});
    if (key == "M12") {
        std::vector<Vector> thetas;
        for (std::size_t k = 0; k < 10; ++k) {
            Vector v = kA10;
            for (std::size_t j = 0; j < k; ++j) v.push_back(j % 2 == 0 ? 5.0 : -5.0);
            thetas.push_back(std::move(v));
        }
        return make_spec(10, std::move(thetas));
    }
    throw UnknownModel("unknown model id: " + std::string(id));
}

const std::vector<std::string>& model_ids() {
    static const std::vector<std::string> ids = {"M1", "M2", "M3", "M4",  "M5",  "M6",
                                                 "M7", "M8", "M9", "M10", "M11", "M12"};
    return ids;
}

ChainSpec two_label_example(double a) { return make_spec(2, {{0, 1}, {0, 1, a}}); }

double marginal_y2_example(double x, double a) {
    const double s = sigma(x);
    return s + s * (sigma(x + a) - s);
}

Dataset sample(const ChainSpec& spec, std::size_t n, std::uint64_t seed, std::uint64_t stream) {
    if (n < 1) throw Error("sample: n must be >= 1");
    const std::size_t p = spec.p;
    const std::size_t k_total = spec.label_count();

    Dataset ds;
    ds.X = Matrix(n, p);
    ds.Y = Matrix(n, k_total);
    for (std::size_t j = 1; j < p; ++j) ds.feature_names.push_back("x" + std::to_string(j));
    for (std::size_t k = 0; k < k_total; ++k) ds.label_names.push_back("y" + std::to_string(k + 1));

    Rng rng(seed, stream);
    Vector z(p + k_total);
    for (std::size_t i = 0; i < n; ++i) {
        z[0] = 1.0;
        ds.X(i, 0) = 1.0;
        for (std::size_t j = 1; j < p; ++j) {
            const double x = rng.uniform(-4.0, 4.0);
            ds.X(i, j) = x;
            z[j] = x;
        }
        for (std::size_t k = 0; k < k_total; ++k) {
            const double eta = dot({z.data(), p + k}, spec.thetas[k]);
            const int bit = rng.uniform() < sigma(eta) ? 1 : 0;
            ds.Y(i, k) = bit;
            z[p + k] = bit;
        }
    }
    return ds;
}

ChainModel exact_chain(const ChainSpec& spec) {
    ChainModel model;
    model.p = spec.p;
    model.ordering.resize(spec.label_count());
    std::iota(model.ordering.begin(), model.ordering.end(), 0);
    model.fits.resize(spec.label_count());
    for (std::size_t k = 0; k < spec.label_count(); ++k) {
        model.fits[k].coefficients = spec.thetas[k];
        model.fits[k].converged = true;
    }
    for (std::size_t k = 0; k < spec.label_count(); ++k)
        model.label_names.push_back("y" + std::to_string(k + 1));
    return model;
}

}  // namespace lcc
