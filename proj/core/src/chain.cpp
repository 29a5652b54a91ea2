#include "lcc/chain.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

namespace lcc {

namespace {

void check_x(const ChainModel& m, std::span<const double> x) {
    if (x.size() != m.p) throw DimensionMismatch("chain: feature vector length != p");
}

void check_y(const ChainModel& m, std::span<const int> y) {
    if (y.size() != m.label_count()) throw DimensionMismatch("chain: labelling length != K");
}

// Linear predictor of link k for features x and chain-order prefix bits.
double link_eta(const LogisticFit& f, std::span<const double> x, std::span<const int> prefix) {
    const auto& theta = f.coefficients;
    double eta = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) eta += theta[j] * x[j];
    for (std::size_t j = 0; j < prefix.size(); ++j)
        eta += theta[x.size() + j] * static_cast<double>(prefix[j]);
    return eta;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

double ChainModel::conditional_probability(std::span<const double> x, std::size_t k,
                                           std::span<const int> prefix) const {
    check_x(*this, x);
    if (k >= fits.size()) throw DimensionMismatch("chain: link index out of range");
    if (prefix.size() != k) throw DimensionMismatch("chain: prefix length != position");
    return sigma(link_eta(fits[k], x, prefix));
}

double ChainModel::joint_log_probability(std::span<const double> x,
                                         std::span<const int> y) const {
    check_x(*this, x);
    check_y(*this, y);
    std::vector<int> prefix(label_count());
    double log_p = 0.0;
    for (std::size_t k = 0; k < fits.size(); ++k) {
        const int bit = y[ordering[k]];
        const double eta = link_eta(fits[k], x, {prefix.data(), k});
        log_p += bit ? log_sigma(eta) : log_sigma(-eta);
        prefix[k] = bit;
    }
    return log_p;
}

double ChainModel::joint_probability(std::span<const double> x, std::span<const int> y) const {
    return std::exp(joint_log_probability(x, y));
}

std::size_t ChainModel::parameter_count() const {
    const std::size_t k = label_count();
    return p * k + k * (k - 1) / 2;
}

double BRModel::marginal_probability(std::span<const double> x, std::size_t k) const {
    if (x.size() != p) throw DimensionMismatch("br: feature vector length != p");
    if (k >= fits.size()) throw DimensionMismatch("br: label index out of range");
    return sigma(dot(x, {fits[k].coefficients.data(), p}));
}

double BRModel::joint_probability(std::span<const double> x, std::span<const int> y) const {
    if (y.size() != fits.size()) throw DimensionMismatch("br: labelling length != K");
    double log_p = 0.0;
    for (std::size_t k = 0; k < fits.size(); ++k) {
        const double eta = dot(x, {fits[k].coefficients.data(), p});
        log_p += y[k] ? log_sigma(eta) : log_sigma(-eta);
    }
    return std::exp(log_p);
}

std::vector<int> BRModel::predict(std::span<const double> x) const {
    std::vector<int> bits(fits.size());
    for (std::size_t k = 0; k < fits.size(); ++k)
        bits[k] = marginal_probability(x, k) >= 0.5 ? 1 : 0;
    return bits;
}

Matrix chain_design(const Matrix& x, const Matrix& y, std::span<const std::size_t> prefix) {
    Matrix z(x.rows(), x.cols() + prefix.size());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        auto dst = z.row(i);
        auto src = x.row(i);
        for (std::size_t j = 0; j < src.size(); ++j) dst[j] = src[j];
        for (std::size_t j = 0; j < prefix.size(); ++j) dst[src.size() + j] = y(i, prefix[j]);
    }
    return z;
}

ChainModel train_chain(const Matrix& x, const Matrix& y, const std::vector<std::size_t>& pi,
                       double lambda) {
    if (x.rows() != y.rows()) throw DimensionMismatch("train_chain: X/Y row counts differ");
    if (pi.size() != y.cols()) throw DimensionMismatch("train_chain: ordering length != K");
    {
        std::vector<char> seen(y.cols(), 0);
        for (std::size_t label : pi) {
            if (label >= y.cols() || seen[label])
                throw DimensionMismatch("train_chain: ordering is not a permutation");
            seen[label] = 1;
        }
    }

    ChainModel model;
    model.p = x.cols();
    model.ordering = pi;
    model.lambda = lambda;
    model.fits.reserve(pi.size());
    for (std::size_t k = 0; k < pi.size(); ++k) {
        const Matrix z = chain_design(x, y, {pi.data(), k});
        Vector column(y.rows());
        for (std::size_t i = 0; i < y.rows(); ++i) column[i] = y(i, pi[k]);
        try {
            model.fits.push_back(fit(z, column, lambda));
        } catch (const SingularHessian& e) {
            throw SingularHessian("link " + std::to_string(k) + ": " + e.what());
        } catch (const DimensionMismatch& e) {
            throw DimensionMismatch("link " + std::to_string(k) + ": " + e.what());
        }
    }
    return model;
}

BRModel train_br(const Matrix& x, const Matrix& y, double lambda) {
    if (x.rows() != y.rows()) throw DimensionMismatch("train_br: X/Y row counts differ");
    BRModel model;
    model.p = x.cols();
    model.lambda = lambda;
    model.fits.reserve(y.cols());
    for (std::size_t k = 0; k < y.cols(); ++k) {
        Vector column(y.rows());
        for (std::size_t i = 0; i < y.rows(); ++i) column[i] = y(i, k);
        try {
            model.fits.push_back(fit(x, column, lambda));
        } catch (const SingularHessian& e) {
            throw SingularHessian("label " + std::to_string(k) + ": " + e.what());
        }
    }
    return model;
}

double chain_regularity_diagnostic(const ChainModel& model, const Matrix& x, const Matrix& y) {
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < model.fits.size(); ++k) {
        const Matrix z = chain_design(x, y, {model.ordering.data(), k});
        worst = std::min(worst, min_eigen_ratio(model.fits[k], z));
    }
    return worst;
}

namespace {

void write_model(std::ostream& out, const std::string& kind, std::size_t p, double lambda,
                 const std::vector<std::size_t>& ordering,
                 const std::vector<LogisticFit>& fits,
                 const std::vector<std::string>& label_names) {
    out << kind << " 1\n";
    out << "p " << p << "\n";
    out << "k " << fits.size() << "\n";
    out << "lambda " << format_double(lambda) << "\n";
    if (!ordering.empty()) {
        out << "order";
        for (std::size_t v : ordering) out << ' ' << v;
        out << "\n";
    }
    if (!label_names.empty()) {
        out << "labels";
        for (const auto& name : label_names) out << ' ' << name;
        out << "\n";
    }
    for (const auto& f : fits) {
        out << "link " << (f.converged ? 1 : 0);
        for (double c : f.coefficients) out << ' ' << format_double(c);
        out << "\n";
    }
}

struct ParsedModel {
    std::string kind;
    std::size_t p = 0;
    double lambda = 0.0;
    std::vector<std::size_t> ordering;
    std::vector<LogisticFit> fits;
    std::vector<std::string> label_names;
};

ParsedModel read_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open model file: " + path);

    ParsedModel m;
    std::string line;
    std::size_t line_no = 0;
    std::size_t k = 0;

    auto next_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) {
                out = line;
                return true;
            }
        }
        return false;
    };

    std::string header;
    if (!next_line(header)) throw ParseError("empty model file: " + path, line_no);
    {
        std::istringstream hs(header);
        int version = 0;
        hs >> m.kind >> version;
        if ((m.kind != "lcc-chain" && m.kind != "lcc-br") || version != 1)
            throw ParseError("unrecognized model header '" + header + "'", line_no);
    }

    std::string row;
    while (next_line(row)) {
        std::istringstream rs(row);
        std::string key;
        rs >> key;
        if (key == "p") {
            rs >> m.p;
        } else if (key == "k") {
            rs >> k;
        } else if (key == "lambda") {
            rs >> m.lambda;
        } else if (key == "order") {
            std::size_t v;
            while (rs >> v) m.ordering.push_back(v);
        } else if (key == "labels") {
            std::string name;
            while (rs >> name) m.label_names.push_back(name);
        } else if (key == "link") {
            LogisticFit f;
            int converged = 0;
            rs >> converged;
            f.converged = converged != 0;
            double c;
            while (rs >> c) f.coefficients.push_back(c);
            f.lambda = m.lambda;
            m.fits.push_back(std::move(f));
        } else {
            throw ParseError("unrecognized model line '" + row + "'", line_no);
        }
        if (rs.bad()) throw ParseError("malformed model line '" + row + "'", line_no);
    }

    if (m.fits.size() != k) throw ParseError("link count does not match header", line_no);
    if (m.p == 0) throw ParseError("model file missing p", line_no);
    return m;
}

}  // namespace

void save_chain(const ChainModel& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write model file: " + path);
    write_model(out, "lcc-chain", model.p, model.lambda, model.ordering, model.fits,
                model.label_names);
}

ChainModel load_chain(const std::string& path) {
    ParsedModel m = read_model(path);
    if (m.kind != "lcc-chain") throw Error("not a chain model file: " + path);
    ChainModel model;
    model.p = m.p;
    model.lambda = m.lambda;
    model.ordering = m.ordering;
    model.fits = std::move(m.fits);
    model.label_names = std::move(m.label_names);
    if (model.ordering.size() != model.fits.size())
        throw Error("model file ordering/link count mismatch: " + path);
    for (std::size_t k = 0; k < model.fits.size(); ++k)
        if (model.fits[k].coefficients.size() != model.p + k)
            throw Error("model file link " + std::to_string(k) + " has wrong width: " + path);
    return model;
}

void save_br(const BRModel& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write model file: " + path);
    write_model(out, "lcc-br", model.p, model.lambda, {}, model.fits, model.label_names);
}

BRModel load_br(const std::string& path) {
    ParsedModel m = read_model(path);
    if (m.kind != "lcc-br") throw Error("not a binary-relevance model file: " + path);
    BRModel model;
    model.p = m.p;
    model.lambda = m.lambda;
    model.fits = std::move(m.fits);
    model.label_names = std::move(m.label_names);
    for (const auto& f : model.fits)
        if (f.coefficients.size() != model.p)
            throw Error("model file link has wrong width: " + path);
    return model;
}

std::string model_file_kind(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open model file: " + path);
    std::string kind;
    in >> kind;
    if (kind == "lcc-chain") return "chain";
    if (kind == "lcc-br") return "br";
    throw Error("unrecognized model file: " + path);
}

}  // namespace lcc
