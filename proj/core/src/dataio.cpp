#include "lcc/dataio.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "lcc/rng.hpp"

namespace lcc {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string unquote(const std::string& s) {
    if (s.size() >= 2 && ((s.front() == '\'' && s.back() == '\'') ||
                          (s.front() == '"' && s.back() == '"')))
        return s.substr(1, s.size() - 2);
    return s;
}

bool parse_double(const std::string& s, double& out) {
    const std::string t = trim(s);
    if (t.empty()) return false;
    char* end = nullptr;
    out = std::strtod(t.c_str(), &end);
    return end == t.c_str() + t.size() && std::isfinite(out);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct ArffAttribute {
    std::string name;
    bool nominal = false;
    std::vector<std::string> values;  // nominal domain
    bool is_label = false;
};

struct ArffFile {
    std::vector<ArffAttribute> attributes;
    std::vector<Vector> rows;  // one value per attribute
};

ArffFile parse_arff(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open ARFF file: " + path);

    ArffFile file;
    std::string line;
    std::size_t line_no = 0;
    bool in_data = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string t = trim(line);
        if (t.empty() || t.front() == '%') continue;

        if (!in_data) {
            const std::string lt = lower(t);
            if (lt.rfind("@relation", 0) == 0) continue;
            if (lt.rfind("@data", 0) == 0) {
                if (file.attributes.empty())
                    throw ParseError("@data before any @attribute", line_no);
                in_data = true;
                continue;
            }
            if (lt.rfind("@attribute", 0) == 0) {
                std::string rest = trim(t.substr(std::string("@attribute").size()));
                // Attribute name: quoted (may contain spaces) or a bare token.
                std::string name;
                if (!rest.empty() && (rest.front() == '\'' || rest.front() == '"')) {
                    const char quote = rest.front();
                    const std::size_t close = rest.find(quote, 1);
                    if (close == std::string::npos)
                        throw ParseError("unterminated attribute name quote", line_no);
                    name = rest.substr(1, close - 1);
                    rest = trim(rest.substr(close + 1));
                } else {
                    const std::size_t space = rest.find_first_of(" \t");
                    if (space == std::string::npos)
                        throw ParseError("attribute without a type", line_no);
                    name = rest.substr(0, space);
                    rest = trim(rest.substr(space));
                }

                ArffAttribute attr;
                attr.name = name;
                if (!rest.empty() && rest.front() == '{') {
                    const std::size_t close = rest.find('}');
                    if (close == std::string::npos)
                        throw ParseError("unterminated nominal domain", line_no);
                    attr.nominal = true;
                    for (const std::string& v : split_csv(rest.substr(1, close - 1)))
                        attr.values.push_back(unquote(v));
                    if (attr.values.empty())
                        throw ParseError("empty nominal domain", line_no);
                } else {
                    const std::string type = lower(rest);
                    if (type != "numeric" && type != "real" && type != "integer")
                        throw ParseError("unsupported attribute type '" + rest + "'", line_no);
                }
                file.attributes.push_back(std::move(attr));
                continue;
            }
            throw ParseError("unrecognized header line '" + t + "'", line_no);
        }

        // Data section.
        const std::size_t width = file.attributes.size();
        Vector row(width, 0.0);
        if (t.front() == '{') {
            // Sparse row: {index value, index value, ...}; 0-based indices,
            // everything unmentioned is 0.
            const std::size_t close = t.find('}');
            if (close == std::string::npos) throw ParseError("unterminated sparse row", line_no);
            const std::string body = trim(t.substr(1, close - 1));
            if (!body.empty()) {
                for (const std::string& pair : split_csv(body)) {
                    std::istringstream ps(pair);
                    std::string idx_s, val_s;
                    ps >> idx_s;
                    std::getline(ps, val_s);
                    val_s = trim(val_s);
                    if (val_s == "?") throw ParseError("missing value", line_no);
                    double idx, val;
                    if (!parse_double(idx_s, idx) || idx < 0 ||
                        idx >= static_cast<double>(width) || idx != std::floor(idx))
                        throw ParseError("bad sparse index '" + idx_s + "'", line_no);
                    if (!parse_double(unquote(val_s), val))
                        throw ParseError("bad sparse value '" + val_s + "'", line_no);
                    row[static_cast<std::size_t>(idx)] = val;
                }
            }
        } else {
            const std::vector<std::string> cells = split_csv(t);
            if (cells.size() != width)
                throw ParseError("row has " + std::to_string(cells.size()) +
                                     " values, expected " + std::to_string(width),
                                 line_no);
            for (std::size_t j = 0; j < width; ++j) {
                if (cells[j] == "?") throw ParseError("missing value", line_no);
                double v;
                if (!parse_double(unquote(cells[j]), v))
                    throw ParseError("non-numeric value '" + cells[j] + "'", line_no);
                row[j] = v;
            }
        }
        file.rows.push_back(std::move(row));
    }

    if (!in_data) throw ParseError("no @data section", line_no);
    return file;
}

bool binary_domain(const ArffAttribute& attr) {
    if (!attr.nominal || attr.values.size() != 2) return false;
    std::vector<std::string> v = attr.values;
    std::sort(v.begin(), v.end());
    return v[0] == "0" && v[1] == "1";
}

Dataset assemble_arff(ArffFile&& file, const std::string& path) {
    // Labels must be nominal {0,1}; nominal features must be numeric-coded
    // (the flag-style datasets encode categorical features as {1,2,3,...}).
    for (const ArffAttribute& attr : file.attributes) {
        if (attr.is_label) {
            if (!binary_domain(attr))
                throw NonBinaryLabel("label attribute '" + attr.name +
                                     "' is not nominal {0,1} in " + path);
        } else if (attr.nominal) {
            for (const std::string& v : attr.values) {
                double ignored;
                if (!parse_double(v, ignored))
                    throw ParseError("nominal feature '" + attr.name +
                                         "' has non-numeric value '" + v + "' in " + path,
                                     0);
            }
        }
    }

    Dataset ds;
    std::vector<std::size_t> feature_idx, label_idx;
    for (std::size_t j = 0; j < file.attributes.size(); ++j) {
        if (file.attributes[j].is_label) {
            label_idx.push_back(j);
            ds.label_names.push_back(file.attributes[j].name);
        } else {
            feature_idx.push_back(j);
            ds.feature_names.push_back(file.attributes[j].name);
        }
    }

    const std::size_t n = file.rows.size();
    ds.X = Matrix(n, feature_idx.size() + 1);
    ds.Y = Matrix(n, label_idx.size());
    for (std::size_t i = 0; i < n; ++i) {
        ds.X(i, 0) = 1.0;
        for (std::size_t j = 0; j < feature_idx.size(); ++j)
            ds.X(i, j + 1) = file.rows[i][feature_idx[j]];
        for (std::size_t j = 0; j < label_idx.size(); ++j) {
            const double v = file.rows[i][label_idx[j]];
            if (v != 0.0 && v != 1.0)
                throw NonBinaryLabel("label '" + ds.label_names[j] + "' holds value " +
                                     format_double(v) + " in " + path);
            ds.Y(i, j) = v;
        }
    }
    return ds;
}

}  // namespace

Dataset load_arff(const std::string& path, const std::vector<std::string>& label_names) {
    ArffFile file = parse_arff(path);
    for (const std::string& name : label_names) {
        bool found = false;
        for (ArffAttribute& attr : file.attributes) {
            if (attr.name == name) {
                attr.is_label = true;
                found = true;
                break;
            }
        }
        if (!found) throw UnknownLabelName("no attribute named '" + name + "' in " + path);
    }
    return assemble_arff(std::move(file), path);
}

Dataset load_arff(const std::string& path, std::size_t label_count_from_end) {
    ArffFile file = parse_arff(path);
    if (label_count_from_end > file.attributes.size())
        throw UnknownLabelName("file has " + std::to_string(file.attributes.size()) +
                               " attributes, cannot take " +
                               std::to_string(label_count_from_end) + " labels: " + path);
    for (std::size_t j = file.attributes.size() - label_count_from_end;
         j < file.attributes.size(); ++j)
        file.attributes[j].is_label = true;
    return assemble_arff(std::move(file), path);
}

void save_arff(const Dataset& ds, const std::string& path, const std::string& relation) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write ARFF file: " + path);
    out << "@relation " << relation << "\n\n";
    for (const std::string& name : ds.feature_names) out << "@attribute " << name << " numeric\n";
    for (const std::string& name : ds.label_names) out << "@attribute " << name << " {0,1}\n";
    out << "\n@data\n";
    for (std::size_t i = 0; i < ds.rows(); ++i) {
        bool first = true;
        for (std::size_t j = 1; j < ds.X.cols(); ++j) {
            if (!first) out << ',';
            out << format_double(ds.X(i, j));
            first = false;
        }
        for (std::size_t j = 0; j < ds.Y.cols(); ++j) {
            if (!first) out << ',';
            out << static_cast<int>(ds.Y(i, j));
            first = false;
        }
        out << "\n";
    }
}

namespace {

Dataset parse_csv_file(const std::string& path, bool trailing_labels,
                       std::size_t label_count_from_end) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open CSV file: " + path);

    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw ParseError("empty CSV file: " + path, 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    const std::vector<std::string> header = split_csv(line);
    if (header.empty() || (header.size() == 1 && header[0].empty()))
        throw ParseError("empty CSV header", line_no);
    if (trailing_labels && label_count_from_end > header.size())
        throw UnknownLabelName("CSV has " + std::to_string(header.size()) +
                               " columns, cannot take " + std::to_string(label_count_from_end) +
                               " labels: " + path);

    std::vector<char> is_label(header.size(), 0);
    Dataset ds;
    for (std::size_t j = 0; j < header.size(); ++j) {
        std::string name = header[j];
        bool label = name.rfind("label:", 0) == 0;
        if (label) name = name.substr(6);
        if (trailing_labels) label = j >= header.size() - label_count_from_end;
        if (label) {
            is_label[j] = 1;
            ds.label_names.push_back(name);
        } else {
            ds.feature_names.push_back(name);
        }
    }

    std::vector<Vector> feature_rows, label_rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        const std::vector<std::string> cells = split_csv(line);
        if (cells.size() != header.size())
            throw ParseError("row has " + std::to_string(cells.size()) + " values, expected " +
                                 std::to_string(header.size()),
                             line_no);
        Vector fr, lr;
        fr.reserve(ds.feature_names.size());
        lr.reserve(ds.label_names.size());
        for (std::size_t j = 0; j < cells.size(); ++j) {
            double v;
            if (!parse_double(cells[j], v))
                throw ParseError("non-numeric value '" + cells[j] + "'", line_no);
            if (is_label[j]) {
                if (v != 0.0 && v != 1.0)
                    throw NonBinaryLabel("label column holds value " + format_double(v) +
                                         " at line " + std::to_string(line_no) + ": " + path);
                lr.push_back(v);
            } else {
                fr.push_back(v);
            }
        }
        feature_rows.push_back(std::move(fr));
        label_rows.push_back(std::move(lr));
    }

    const std::size_t n = feature_rows.size();
    ds.X = Matrix(n, ds.feature_names.size() + 1);
    ds.Y = Matrix(n, ds.label_names.size());
    for (std::size_t i = 0; i < n; ++i) {
        ds.X(i, 0) = 1.0;
        for (std::size_t j = 0; j < feature_rows[i].size(); ++j) ds.X(i, j + 1) = feature_rows[i][j];
        for (std::size_t j = 0; j < label_rows[i].size(); ++j) ds.Y(i, j) = label_rows[i][j];
    }
    return ds;
}

}  // namespace

Dataset load_csv(const std::string& path) { return parse_csv_file(path, false, 0); }

Dataset load_csv(const std::string& path, std::size_t label_count_from_end) {
    return parse_csv_file(path, true, label_count_from_end);
}

std::string to_csv(const Dataset& ds) {
    std::ostringstream out;
    bool first = true;
    for (const std::string& name : ds.feature_names) {
        if (!first) out << ',';
        out << name;
        first = false;
    }
    for (const std::string& name : ds.label_names) {
        if (!first) out << ',';
        out << "label:" << name;
        first = false;
    }
    out << "\n";
    for (std::size_t i = 0; i < ds.rows(); ++i) {
        first = true;
        for (std::size_t j = 1; j < ds.X.cols(); ++j) {
            if (!first) out << ',';
            out << format_double(ds.X(i, j));
            first = false;
        }
        for (std::size_t j = 0; j < ds.Y.cols(); ++j) {
            if (!first) out << ',';
            out << static_cast<int>(ds.Y(i, j));
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

void save_csv(const Dataset& ds, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write CSV file: " + path);
    out << to_csv(ds);
}

Dataset top_k_labels(const Dataset& ds, std::size_t k) {
    if (k < 1 || k > ds.label_count())
        throw Error("top_k_labels: k must be in 1.." + std::to_string(ds.label_count()));

    std::vector<std::size_t> order(ds.label_count());
    std::iota(order.begin(), order.end(), 0);
    Vector counts(ds.label_count(), 0.0);
    for (std::size_t j = 0; j < ds.label_count(); ++j)
        for (std::size_t i = 0; i < ds.rows(); ++i) counts[j] += ds.Y(i, j);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return counts[a] > counts[b];  // stable keeps ties on the lower index
    });
    std::vector<std::size_t> kept(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(kept.begin(), kept.end());  // preserve original column order

    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < ds.rows(); ++i) {
        double sum = 0.0;
        for (std::size_t j : kept) sum += ds.Y(i, j);
        if (sum > 0.0 && sum < static_cast<double>(k)) rows.push_back(i);
    }
    if (rows.empty())
        throw EmptyDataset("top_k_labels: every row is all-zero or all-one on the " +
                           std::to_string(k) + " retained labels");

    Dataset out;
    out.feature_names = ds.feature_names;
    for (std::size_t j : kept) out.label_names.push_back(ds.label_names[j]);
    out.X = Matrix(rows.size(), ds.X.cols());
    out.Y = Matrix(rows.size(), k);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto src = ds.X.row(rows[i]);
        auto dst = out.X.row(i);
        std::copy(src.begin(), src.end(), dst.begin());
        for (std::size_t j = 0; j < kept.size(); ++j) out.Y(i, j) = ds.Y(rows[i], kept[j]);
    }
    return out;
}

Dataset subsample(const Dataset& ds, std::size_t n, std::uint64_t seed) {
    if (n >= ds.rows()) return ds;

    // Partial Fisher-Yates over the row indices, then restore original order.
    std::vector<std::size_t> idx(ds.rows());
    std::iota(idx.begin(), idx.end(), 0);
    Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(idx.size() - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(n);
    std::sort(idx.begin(), idx.end());

    Dataset out;
    out.feature_names = ds.feature_names;
    out.label_names = ds.label_names;
    out.X = Matrix(n, ds.X.cols());
    out.Y = Matrix(n, ds.Y.cols());
    for (std::size_t i = 0; i < n; ++i) {
        auto sx = ds.X.row(idx[i]);
        std::copy(sx.begin(), sx.end(), out.X.row(i).begin());
        for (std::size_t j = 0; j < ds.Y.cols(); ++j) out.Y(i, j) = ds.Y(idx[i], j);
    }
    return out;
}

Dataset standardize_features(const Dataset& ds) {
    Dataset out = ds;
    const std::size_t n = ds.rows();
    if (n < 2) return out;
    for (std::size_t j = 1; j < ds.X.cols(); ++j) {
        double mean = 0.0;
        for (std::size_t i = 0; i < n; ++i) mean += ds.X(i, j);
        mean /= static_cast<double>(n);
        double var = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = ds.X(i, j) - mean;
            var += d * d;
        }
        var /= static_cast<double>(n - 1);
        const double sd = std::sqrt(var);
        for (std::size_t i = 0; i < n; ++i)
            out.X(i, j) = sd > 0.0 ? (ds.X(i, j) - mean) / sd : ds.X(i, j) - mean;
    }
    return out;
}

Matrix feature_block(const Dataset& ds) {
    Matrix f(ds.rows(), ds.feature_count());
    for (std::size_t i = 0; i < ds.rows(); ++i)
        for (std::size_t j = 0; j < ds.feature_count(); ++j) f(i, j) = ds.X(i, j + 1);
    return f;
}

PrincipalComponent first_principal_component(const Matrix& features) {
    const std::size_t n = features.rows();
    const std::size_t q = features.cols();
    if (n < 2) throw DimensionMismatch("first_principal_component: need at least 2 rows");

    Matrix centered = features;
    for (std::size_t j = 0; j < q; ++j) {
        double mean = 0.0;
        for (std::size_t i = 0; i < n; ++i) mean += features(i, j);
        mean /= static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i) centered(i, j) -= mean;
    }

    Matrix cov = centered.weighted_gram({});
    const double denom = static_cast<double>(n - 1);
    double trace = 0.0;
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = 0; j < q; ++j) cov(i, j) /= denom;
        trace += cov(i, i);
    }
    if (!(trace > 0.0))
        throw NoVariance("first_principal_component: all rows identical");

    // Power iteration from the highest-variance coordinate axis.
    std::size_t start = 0;
    for (std::size_t j = 1; j < q; ++j)
        if (cov(j, j) > cov(start, start)) start = j;
    Vector v(q, 0.0);
    v[start] = 1.0;

    for (int iter = 0; iter < 1000; ++iter) {
        Vector w = cov.multiply(v);
        double norm = std::sqrt(dot(w, w));
        if (norm <= 1e-300) break;  // v fell into the null space; keep last iterate
        double delta = 0.0;
        for (std::size_t j = 0; j < q; ++j) {
            w[j] /= norm;
            delta = std::max(delta, std::fabs(w[j] - v[j]));
        }
        v = std::move(w);
        if (delta < 1e-13) break;
    }

    // Deterministic sign: the largest-magnitude loading is positive.
    std::size_t peak = 0;
    for (std::size_t j = 1; j < q; ++j)
        if (std::fabs(v[j]) > std::fabs(v[peak])) peak = j;
    if (v[peak] < 0.0)
        for (double& c : v) c = -c;

    const double lambda1 = dot(v, cov.multiply(v));

    PrincipalComponent pc;
    pc.explained_variance_ratio = lambda1 / trace;
    pc.scores = centered.multiply(v);
    return pc;
}

}  // namespace lcc
