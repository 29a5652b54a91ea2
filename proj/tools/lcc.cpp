// lcc: command-line front end for the classifier-chain toolkit.
//
//   lcc order-sweep --model M1 --n 500,2000 --reps 200
//   lcc mode-sweep  --model M1 --n 100,500,2000
//   lcc benchmark   --data emotions.arff --labels 6
//   lcc fit         --data train.csv --type cc --order selected --out model.txt
//   lcc predict     --model model.txt --data features.csv
//
// Every subcommand also reads a plain key=value file via --config FILE
// (command-line values win).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "lcc/chain.hpp"
#include "lcc/experiments.hpp"
#include "lcc/inference.hpp"
#include "lcc/ordering.hpp"

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Options the three experiment drivers share. String-valued lists stay
// strings here so config files remain flat key=value.
struct SweepCli {
    lcc::SweepConfig cfg;
    std::string n_csv;
    std::string families_csv = "pregibon";
    std::string methods_csv;
};

void add_common(CLI::App& sub, SweepCli& s) {
    sub.add_option("--seed", s.cfg.seed, "base RNG seed")->capture_default_str();
    sub.add_option("--lambda", s.cfg.lambda, "ridge penalty")->capture_default_str();
    sub.add_option("--threads", s.cfg.threads, "worker threads (results identical)")
        ->capture_default_str();
    sub.add_option("--output", s.cfg.output, "write the CSV here instead of stdout");
}

void add_model_grid(CLI::App& sub, SweepCli& s) {
    sub.add_option("--model", s.cfg.model, "synthetic model id (M1..M12)")->required();
    sub.add_option("--n", s.n_csv, "comma-separated ascending training sizes")->required();
    sub.add_option("--reps", s.cfg.repetitions, "repetitions per grid point")
        ->capture_default_str();
    sub.add_flag("--long", s.cfg.long_run, "allow the 10-label model (hours at full scale)");
}

void emit(const std::string& csv, const lcc::SweepConfig& cfg) {
    if (cfg.output.empty())
        std::cout << csv;
    else
        std::cerr << "wrote " << cfg.output << "\n";
}

std::vector<std::size_t> identity_order(std::size_t k) {
    std::vector<std::size_t> pi(k);
    std::iota(pi.begin(), pi.end(), 0);
    return pi;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"logistic classifier chains: ordering recovery, mode inference, benchmarks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "lcc 1.0.0");
    // Options for a subcommand live in its [section] (or dotted keys):
    //   [mode-sweep]
    //   model=M1
    //   n=100,500
    app.set_config("--config", "", "read options from an INI file (one [section] per subcommand)");

    // ---- order-sweep ----
    SweepCli os;
    CLI::App* order_sweep =
        app.add_subcommand("order-sweep", "ordering-recovery rate per carrier family");
    add_common(*order_sweep, os);
    add_model_grid(*order_sweep, os);
    order_sweep->add_option("--families", os.families_csv,
                            "comma-separated carrier families, or 'all'")
        ->capture_default_str();
    order_sweep->callback([&] {
        os.cfg.n_grid = lcc::parse_n_grid(os.n_csv);
        os.cfg.families = lcc::parse_families(os.families_csv);
        emit(lcc::run_ordering_sweep(os.cfg), os.cfg);
    });

    // ---- mode-sweep ----
    SweepCli ms;
    CLI::App* mode_sweep = app.add_subcommand(
        "mode-sweep", "true-mode recovery per ordering regime (correct/selected/reversed)");
    add_common(*mode_sweep, ms);
    add_model_grid(*mode_sweep, ms);
    mode_sweep->add_option("--family", ms.families_csv,
                           "carrier family driving the 'selected' regime")
        ->capture_default_str();
    mode_sweep->add_option("--test-points", ms.cfg.test_points, "fresh test points per rep")
        ->capture_default_str();
    mode_sweep->add_option("--engine", ms.cfg.engine,
                           "auto | exhaustive | greedy | beam (auto: exhaustive, greedy at 10+ labels)")
        ->capture_default_str();
    mode_sweep->add_option("--beam-width", ms.cfg.beam_width, "beam width for --engine beam")
        ->capture_default_str();
    mode_sweep->add_option("--cap", ms.cfg.exhaustive_cap, "exhaustive-enumeration label cap")
        ->capture_default_str();
    mode_sweep->callback([&] {
        ms.cfg.n_grid = lcc::parse_n_grid(ms.n_csv);
        ms.cfg.families = lcc::parse_families(ms.families_csv);
        emit(lcc::run_mode_sweep(ms.cfg), ms.cfg);
    });

    // ---- benchmark ----
    SweepCli bm;
    CLI::App* benchmark =
        app.add_subcommand("benchmark", "cross-validated method comparison on a dataset");
    add_common(*benchmark, bm);
    benchmark->add_option("--data", bm.cfg.dataset, "dataset file (.arff or .csv)")->required();
    benchmark->add_option("--labels", bm.cfg.arff_labels,
                          "trailing label count (required for ARFF)");
    benchmark->add_option("--top-labels", bm.cfg.top_labels,
                          "keep only the k most frequent labels");
    benchmark->add_option("--subsample", bm.cfg.subsample_rows, "subsample to this many rows");
    benchmark->add_flag("--standardize", bm.cfg.standardize, "standardize features");
    benchmark->add_option("--methods", bm.methods_csv,
                          "comma-separated method names (default: the standard five)");
    benchmark->add_option("--folds", bm.cfg.folds, "cross-validation folds")
        ->capture_default_str();
    benchmark->add_option("--beam-width", bm.cfg.beam_width, "beam width for beam methods")
        ->capture_default_str();
    benchmark->add_option("--cap", bm.cfg.exhaustive_cap, "exhaustive-enumeration label cap")
        ->capture_default_str();
    benchmark->callback([&] {
        if (!bm.methods_csv.empty()) bm.cfg.methods = lcc::parse_methods(bm.methods_csv);
        emit(lcc::run_benchmark(bm.cfg), bm.cfg);
    });

    // ---- fit ----
    SweepCli ft;
    std::string fit_type = "cc";
    std::string fit_order = "original";
    std::string fit_family = "pregibon";
    std::string fit_given;
    std::string fit_out;
    CLI::App* fit = app.add_subcommand("fit", "train a model on a full dataset and save it");
    fit->add_option("--data", ft.cfg.dataset, "dataset file (.arff or .csv)")->required();
    fit->add_option("--labels", ft.cfg.arff_labels, "trailing label count (required for ARFF)");
    fit->add_option("--top-labels", ft.cfg.top_labels, "keep only the k most frequent labels");
    fit->add_option("--subsample", ft.cfg.subsample_rows, "subsample to this many rows");
    fit->add_flag("--standardize", ft.cfg.standardize, "standardize features");
    fit->add_option("--seed", ft.cfg.seed, "seed (subsampling)")->capture_default_str();
    fit->add_option("--lambda", ft.cfg.lambda, "ridge penalty")->capture_default_str();
    fit->add_option("--type", fit_type, "br | cc")
        ->check(CLI::IsMember({"br", "cc"}))
        ->capture_default_str();
    fit->add_option("--order", fit_order, "original | selected | reversed | given")
        ->check(CLI::IsMember({"original", "selected", "reversed", "given"}))
        ->capture_default_str();
    fit->add_option("--family", fit_family, "carrier family for --order selected")
        ->capture_default_str();
    fit->add_option("--given", fit_given, "comma-separated 0-based label order for --order given");
    fit->add_option("--out", fit_out, "model output path")->required();
    fit->callback([&] {
        const lcc::Dataset ds = lcc::load_dataset(ft.cfg);
        if (fit_type == "br") {
            lcc::BRModel model = lcc::train_br(ds.X, ds.Y, ft.cfg.lambda);
            model.label_names = ds.label_names;
            lcc::save_br(model, fit_out);
            std::cout << "saved br model: " << ds.label_count() << " labels, "
                      << ds.feature_count() << " features -> " << fit_out << "\n";
            return;
        }
        std::vector<std::size_t> pi;
        if (fit_order == "original") {
            pi = identity_order(ds.label_count());
        } else if (fit_order == "reversed") {
            pi = identity_order(ds.label_count());
            std::reverse(pi.begin(), pi.end());
        } else if (fit_order == "selected") {
            pi = lcc::find_ordering(ds.X, ds.Y, lcc::parse_family(fit_family), ft.cfg.lambda)
                     .permutation;
        } else {
            for (std::size_t v : lcc::parse_n_grid(fit_given)) pi.push_back(v);
        }
        lcc::ChainModel model = lcc::train_chain(ds.X, ds.Y, pi, ft.cfg.lambda);
        model.label_names = ds.label_names;
        lcc::save_chain(model, fit_out);
        std::cout << "saved cc model: " << ds.label_count() << " labels, "
                  << ds.feature_count() << " features -> " << fit_out << "\nchain order:";
        for (std::size_t k : model.ordering)
            std::cout << ' '
                      << (k < model.label_names.size() ? model.label_names[k]
                                                       : "y" + std::to_string(k + 1));
        std::cout << "\n";
    });

    // ---- predict ----
    std::string pr_model, pr_data, pr_output;
    std::string pr_engine = "exhaustive";
    std::size_t pr_beam = 2, pr_cap = 25, pr_labels = 0;
    CLI::App* predict =
        app.add_subcommand("predict", "predict label sets (and their probability) for rows");
    predict->add_option("--model", pr_model, "model file from 'fit'")->required();
    predict->add_option("--data", pr_data, "feature rows (.csv or .arff)")->required();
    predict->add_option("--labels", pr_labels,
                        "trailing label columns to ignore in --data (ARFF needs this)");
    predict->add_option("--engine", pr_engine, "exhaustive | greedy | beam (chain models)")
        ->capture_default_str();
    predict->add_option("--beam-width", pr_beam, "beam width for --engine beam")
        ->capture_default_str();
    predict->add_option("--cap", pr_cap, "exhaustive-enumeration label cap")
        ->capture_default_str();
    predict->add_option("--output", pr_output, "write the CSV here instead of stdout");
    predict->callback([&] {
        lcc::Dataset ds;
        if (pr_data.size() >= 5 && pr_data.substr(pr_data.size() - 5) == ".arff")
            ds = lcc::load_arff(pr_data, pr_labels);
        else
            ds = pr_labels > 0 ? lcc::load_csv(pr_data, pr_labels) : lcc::load_csv(pr_data);

        const std::string kind = lcc::model_file_kind(pr_model);
        std::vector<std::string> names;
        std::ostringstream out;
        auto write_header = [&](const std::vector<std::string>& label_names, std::size_t k) {
            for (std::size_t j = 0; j < k; ++j)
                out << (j < label_names.size() ? label_names[j] : "y" + std::to_string(j + 1))
                    << ',';
            out << "probability\n";
        };
        auto write_row = [&](const std::vector<int>& bits, double prob) {
            for (int b : bits) out << b << ',';
            out << fmt17(prob) << "\n";
        };

        if (kind == "br") {
            const lcc::BRModel model = lcc::load_br(pr_model);
            if (model.p != ds.X.cols())
                throw lcc::DimensionMismatch("model expects " + std::to_string(model.p - 1) +
                                             " features, data has " +
                                             std::to_string(ds.feature_count()));
            write_header(model.label_names, model.label_count());
            for (std::size_t i = 0; i < ds.rows(); ++i) {
                const auto x = ds.X.row(i);
                const std::vector<int> bits = model.predict(x);
                write_row(bits, model.joint_probability(x, bits));
            }
        } else {
            const lcc::ChainModel model = lcc::load_chain(pr_model);
            if (model.p != ds.X.cols())
                throw lcc::DimensionMismatch("model expects " + std::to_string(model.p - 1) +
                                             " features, data has " +
                                             std::to_string(ds.feature_count()));
            const lcc::InferenceKind engine = lcc::parse_engine(pr_engine);
            write_header(model.label_names, model.label_count());
            for (std::size_t i = 0; i < ds.rows(); ++i) {
                const auto x = ds.X.row(i);
                lcc::Labelling lab;
                switch (engine) {
                    case lcc::InferenceKind::exhaustive:
                        lab = lcc::exhaustive_mode(model, x, pr_cap);
                        break;
                    case lcc::InferenceKind::greedy:
                        lab = lcc::greedy_mode(model, x);
                        break;
                    case lcc::InferenceKind::beam:
                        lab = lcc::beam_mode(model, x, pr_beam);
                        break;
                }
                write_row(lab.bits, lab.probability);
            }
        }

        if (pr_output.empty()) {
            std::cout << out.str();
        } else {
            std::ofstream f(pr_output);
            if (!f) throw lcc::Error("cannot write output file: " + pr_output);
            f << out.str();
            std::cerr << "wrote " << pr_output << "\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const lcc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
