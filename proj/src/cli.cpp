#include "twlab/cli.hpp"

#include "twlab/cache.hpp"
#include "twlab/distributions.hpp"
#include "twlab/ensembles.hpp"
#include "twlab/errors.hpp"
#include "twlab/fredholm.hpp"
#include "twlab/gof.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace tw {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt_sig(double v, int digits) {
    char buf[48];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, digits);
    return std::string(buf, res.ptr);
}

std::string fmt_shortest(double v) {
    char buf[48];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::vector<int> parse_beta_selection(const std::string& beta) {
    if (beta == "all")
        return {1, 2, 4};
    if (beta == "1")
        return {1};
    if (beta == "2")
        return {2};
    if (beta == "4")
        return {4};
    throw invalid_argument_error("--beta must be 1, 2, 4, or all");
}

std::shared_ptr<const PainleveTable> acquire_table(const std::string& cache_flag) {
    return std::make_shared<const PainleveTable>(
        load_or_build_table(resolve_cache_path(cache_flag)));
}

// Options shared by `sample` and the inline-model form of `compare`.
struct ModelOptions {
    std::string model;
    int n = 0;
    int k = 0;
    int t = 0;
    int samples = 100;
    std::uint64_t seed = 1;
    int threads = 0;
    bool tridiag = false;
    std::string law = "rademacher";
    std::string service = "exponential";
    std::string scaling = "fixed_k";
    double c1 = std::numeric_limits<double>::quiet_NaN();
    double c2 = std::numeric_limits<double>::quiet_NaN();
    double p = 0.5;
    double p_lo = std::numeric_limits<double>::quiet_NaN();
    double p_hi = std::numeric_limits<double>::quiet_NaN();
    std::string mode = "annealed";
    std::string update = "sequential";
};

void add_model_options(CLI::App* cmd, ModelOptions& opt, bool require_model) {
    auto* model = cmd->add_option("--model", opt.model,
                                  "goe|gue|gse|wigner|lis|queue|growth");
    if (require_model)
        model->required();
    cmd->add_option("--n", opt.n, "matrix dimension / permutation size / stations");
    cmd->add_option("--k", opt.k, "queue customers");
    cmd->add_option("--t", opt.t, "growth steps");
    cmd->add_option("--samples", opt.samples, "sample count");
    cmd->add_option("--seed", opt.seed, "RNG seed");
    cmd->add_option("--threads", opt.threads, "worker threads (0 = hardware)");
    cmd->add_flag("--tridiag", opt.tridiag, "tridiagonal fast path for goe|gue|gse");
    cmd->add_option("--law", opt.law, "wigner entry law: rademacher|uniform");
    cmd->add_option("--service", opt.service,
                    "queue service law: exponential|geometric|deterministic");
    cmd->add_option("--scaling", opt.scaling, "queue scaling: fixed_k|cube_root");
    cmd->add_option("--c1", opt.c1, "cube_root constant c1");
    cmd->add_option("--c2", opt.c2, "cube_root constant c2");
    cmd->add_option("--p", opt.p, "growth: constant p");
    cmd->add_option("--p-lo", opt.p_lo, "growth: uniform p lower bound");
    cmd->add_option("--p-hi", opt.p_hi, "growth: uniform p upper bound");
    cmd->add_option("--mode", opt.mode, "growth: quenched|annealed");
    cmd->add_option("--update", opt.update, "growth: sequential|cascade");
}

SampleSet make_sample_set(const ModelOptions& opt) {
    if (opt.samples < 1)
        throw invalid_argument_error("--samples must be positive");
    if (opt.model == "goe" || opt.model == "gue" || opt.model == "gse") {
        const int beta = opt.model == "goe" ? 1 : (opt.model == "gue" ? 2 : 4);
        if (opt.n < 1)
            throw invalid_argument_error("--n is required and must be positive");
        SampleSet raw = opt.tridiag
                            ? sample_gaussian_tridiag(beta, opt.n, opt.samples, opt.seed,
                                                      opt.threads)
                            : sample_gaussian_ensemble(beta, opt.n, opt.samples, opt.seed,
                                                       opt.threads);
        return center_scale(raw, ensemble_scaling(beta, opt.n));
    }
    if (opt.model == "wigner") {
        if (opt.n < 1)
            throw invalid_argument_error("--n is required and must be positive");
        EntryLaw law;
        if (opt.law == "rademacher")
            law = EntryLaw::rademacher;
        else if (opt.law == "uniform")
            law = EntryLaw::uniform;
        else
            throw invalid_argument_error("--law must be rademacher or uniform");
        return sample_wigner(opt.n, law, opt.samples, opt.seed, opt.threads);
    }
    if (opt.model == "lis") {
        if (opt.n < 1)
            throw invalid_argument_error("--n is required and must be positive");
        return sample_lis(opt.n, opt.samples, opt.seed, opt.threads);
    }
    if (opt.model == "queue") {
        if (opt.k < 1 || opt.n < 1)
            throw invalid_argument_error("--k and --n are required and must be positive");
        ServiceLaw service;
        if (opt.service == "exponential")
            service = ServiceLaw::exponential;
        else if (opt.service == "geometric")
            service = ServiceLaw::geometric;
        else if (opt.service == "deterministic")
            service = ServiceLaw::deterministic;
        else
            throw invalid_argument_error(
                "--service must be exponential, geometric, or deterministic");
        QueueOptions qopts;
        if (opt.scaling == "fixed_k")
            qopts.scaling = QueueScaling::fixed_k;
        else if (opt.scaling == "cube_root")
            qopts.scaling = QueueScaling::cube_root;
        else
            throw invalid_argument_error("--scaling must be fixed_k or cube_root");
        qopts.c1 = opt.c1;
        qopts.c2 = opt.c2;
        return sample_queue(opt.k, opt.n, service, opt.samples, opt.seed, qopts,
                            opt.threads);
    }
    if (opt.model == "growth") {
        if (opt.t < 1)
            throw invalid_argument_error("--t is required and must be positive");
        GrowthOptions gopts;
        const bool lo_set = !std::isnan(opt.p_lo);
        const bool hi_set = !std::isnan(opt.p_hi);
        if (lo_set != hi_set)
            throw invalid_argument_error("--p-lo and --p-hi must be given together");
        if (lo_set) {
            gopts.p_law.kind = PLawKind::uniform;
            gopts.p_law.lo = opt.p_lo;
            gopts.p_law.hi = opt.p_hi;
        } else {
            gopts.p_law.kind = PLawKind::constant;
            gopts.p_law.p = opt.p;
        }
        if (opt.mode == "quenched")
            gopts.mode = GrowthMode::quenched;
        else if (opt.mode == "annealed")
            gopts.mode = GrowthMode::annealed;
        else
            throw invalid_argument_error("--mode must be quenched or annealed");
        if (opt.update == "sequential")
            gopts.update = GrowthUpdate::sequential;
        else if (opt.update == "cascade")
            gopts.update = GrowthUpdate::cascade;
        else
            throw invalid_argument_error("--update must be sequential or cascade");
        return sample_growth_env(gopts, opt.t, opt.samples, opt.seed, opt.threads).set;
    }
    throw invalid_argument_error("unknown model '" + opt.model + "'");
}

ordered_json sample_set_json(const SampleSet& set) {
    ordered_json doc;
    doc["model"] = set.model;
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : set.params)
        params[key] = value;
    doc["params"] = std::move(params);
    doc["seed"] = set.seed;
    doc["version"] = twlab_version;
    doc["values"] = set.values;
    if (!set.raw.empty())
        doc["raw"] = set.raw;
    return doc;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw data_error("cannot open '" + out_path + "' for writing");
    f << text;
    f.flush();
    if (!f)
        throw data_error("write to '" + out_path + "' failed");
}

int run_table(const std::string& cache_flag, const std::string& beta,
              double from, double to, double step, const std::string& format,
              const std::string& out_path, bool beta4_plain, std::ostream& out) {
    if (!(from < to) || !(step > 0.0))
        throw invalid_argument_error("need --from < --to and --step > 0");
    if (format != "csv" && format != "json")
        throw invalid_argument_error("--format must be csv or json");
    const std::vector<int> betas = parse_beta_selection(beta);

    DistributionEvaluator ev(acquire_table(cache_flag), beta4_plain);
    const long long rows = static_cast<long long>(std::floor((to - from) / step + 1e-9)) + 1;

    std::vector<std::string> header{"s"};
    for (int b : betas) {
        header.push_back("F" + std::to_string(b));
        header.push_back("f" + std::to_string(b));
    }

    std::ostringstream text;
    if (format == "csv") {
        for (std::size_t i = 0; i < header.size(); ++i)
            text << (i ? "," : "") << header[i];
        text << "\n";
        for (long long i = 0; i < rows; ++i) {
            const double s = from + step * static_cast<double>(i);
            text << fmt_sig(s, 12);
            for (int b : betas)
                text << "," << fmt_sig(ev.cdf(b, s), 12)
                     << "," << fmt_sig(ev.pdf(b, s), 12);
            text << "\n";
        }
    } else {
        ordered_json doc;
        doc["header"] = header;
        ordered_json data = ordered_json::array();
        for (long long i = 0; i < rows; ++i) {
            const double s = from + step * static_cast<double>(i);
            ordered_json row = ordered_json::array();
            row.push_back(s);
            for (int b : betas) {
                row.push_back(ev.cdf(b, s));
                row.push_back(ev.pdf(b, s));
            }
            data.push_back(std::move(row));
        }
        doc["rows"] = std::move(data);
        text << doc.dump(2) << "\n";
    }
    emit(text.str(), out_path, out);
    return exit_ok;
}

int run_moments(const std::string& cache_flag, const std::string& beta, bool json,
                bool beta4_plain, std::ostream& out) {
    const std::vector<int> betas = parse_beta_selection(beta);
    DistributionEvaluator ev(acquire_table(cache_flag), beta4_plain);

    if (json) {
        ordered_json doc;
        doc["moment_convention"] = "population";
        doc["kurtosis_convention"] = "excess";
        if (std::find(betas.begin(), betas.end(), 4) != betas.end())
            doc["beta4_argument"] = beta4_plain ? "plain" : "table";
        ordered_json rows = ordered_json::array();
        for (int b : betas) {
            const SummaryStats m = ev.moments(b);
            ordered_json row;
            row["beta"] = b;
            row["mean"] = m.mean;
            row["sd"] = m.sd;
            row["skewness"] = m.skewness;
            row["excess_kurtosis"] = m.excess_kurtosis;
            rows.push_back(std::move(row));
        }
        doc["rows"] = std::move(rows);
        out << doc.dump(2) << "\n";
        return exit_ok;
    }

    out << "beta        mean          sd    skewness    ex.kurtosis\n";
    for (int b : betas) {
        const SummaryStats m = ev.moments(b);
        out << b
            << "  " << fmt_sig(m.mean, 6)
            << "  " << fmt_sig(m.sd, 6)
            << "  " << fmt_sig(m.skewness, 6)
            << "  " << fmt_sig(m.excess_kurtosis, 6) << "\n";
    }
    return exit_ok;
}

int run_sample(const ModelOptions& opt, const std::string& format,
               const std::string& out_path, std::ostream& out) {
    if (format != "csv" && format != "json")
        throw invalid_argument_error("--format must be csv or json");
    const SampleSet set = make_sample_set(opt);

    std::ostringstream text;
    if (format == "json") {
        text << sample_set_json(set).dump(2) << "\n";
    } else {
        const bool with_raw = !set.raw.empty();
        text << (with_raw ? "index,value,raw\n" : "index,value\n");
        for (std::size_t i = 0; i < set.values.size(); ++i) {
            text << i << "," << fmt_shortest(set.values[i]);
            if (with_raw)
                text << "," << fmt_shortest(set.raw[i]);
            text << "\n";
        }
    }
    emit(text.str(), out_path, out);
    return exit_ok;
}

SampleSet load_sample_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw data_error("cannot open sample file '" + path + "'");
    SampleSet set;
    try {
        ordered_json doc = ordered_json::parse(f);
        set.model = doc.value("model", std::string("unknown"));
        if (doc.contains("params"))
            for (const auto& [key, value] : doc.at("params").items())
                set.params[key] = value.is_string() ? value.get<std::string>() : value.dump();
        set.seed = doc.value("seed", std::uint64_t{0});
        set.values = doc.at("values").get<std::vector<double>>();
        if (doc.contains("raw"))
            set.raw = doc.at("raw").get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
        throw data_error("malformed sample file '" + path + "': " + e.what());
    }
    if (set.values.empty())
        throw data_error("sample file '" + path + "' holds no values");
    for (double v : set.values)
        if (!std::isfinite(v))
            throw data_error("sample file '" + path + "' holds non-finite values");
    return set;
}

int run_compare(const std::string& cache_flag, const std::string& in_path,
                const ModelOptions& opt, int beta, bool beta4_plain,
                const std::string& out_path, std::ostream& out) {
    if (beta != 1 && beta != 2 && beta != 4)
        throw invalid_argument_error("--beta must be 1, 2, or 4");
    if (in_path.empty() == opt.model.empty())
        throw invalid_argument_error("give exactly one of --in FILE or --model SPEC");

    const SampleSet set = in_path.empty() ? make_sample_set(opt)
                                          : load_sample_file(in_path);

    DistributionEvaluator ev(acquire_table(cache_flag), beta4_plain);
    const double ks = ks_distance(set.values,
                                  [&](double x) { return ev.cdf(beta, x); });
    const SummaryStats sample = summary_stats(set.values);
    const SummaryStats ref = ev.moments(beta);

    ordered_json doc;
    doc["model"] = set.model;
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : set.params)
        params[key] = value;
    doc["params"] = std::move(params);
    doc["beta"] = beta;
    if (beta == 4)
        doc["beta4_argument"] = beta4_plain ? "plain" : "table";
    doc["n"] = sample.n;
    doc["ks"] = ks;
    doc["sample"] = {{"mean", sample.mean},
                     {"sd", sample.sd},
                     {"skewness", sample.skewness},
                     {"excess_kurtosis", sample.excess_kurtosis},
                     {"degenerate", sample.degenerate}};
    doc["reference"] = {{"mean", ref.mean},
                        {"sd", ref.sd},
                        {"skewness", ref.skewness},
                        {"excess_kurtosis", ref.excess_kurtosis}};
    emit(doc.dump(2) + "\n", out_path, out);
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Tracy-Widom distributions: Painleve II and Fredholm evaluators, "
                 "universality Monte Carlo, goodness of fit",
                 "twlab"};
    app.require_subcommand(1);
    std::string cache_flag;
    app.add_option("--cache", cache_flag,
                   "Painleve table cache path (default: TWLAB_CACHE or ./tw_cache.bin)");

    auto* table_cmd = app.add_subcommand("table", "CDF/density table (plot-ready)");
    table_cmd->fallthrough();
    std::string table_beta = "all", table_format = "csv", table_out;
    double from = -8.0, to = 4.0, step = 0.05;
    bool table_plain4 = false;
    table_cmd->add_option("--beta", table_beta, "1|2|4|all");
    table_cmd->add_option("--from", from, "start abscissa");
    table_cmd->add_option("--to", to, "end abscissa");
    table_cmd->add_option("--step", step, "grid step");
    table_cmd->add_option("--format", table_format, "csv|json");
    table_cmd->add_option("--out", table_out, "output file (default stdout)");
    table_cmd->add_flag("--beta4-plain", table_plain4, "plain-argument F4 convention");

    auto* moments_cmd = app.add_subcommand("moments", "mean/sd/skewness/excess kurtosis");
    moments_cmd->fallthrough();
    std::string moments_beta = "all";
    bool moments_json = false, moments_plain4 = false;
    moments_cmd->add_option("--beta", moments_beta, "1|2|4|all");
    moments_cmd->add_flag("--json", moments_json, "machine-readable output");
    moments_cmd->add_flag("--beta4-plain", moments_plain4, "plain-argument F4 convention");

    auto* sample_cmd = app.add_subcommand("sample", "Monte Carlo sampling");
    sample_cmd->fallthrough();
    ModelOptions sample_opt;
    std::string sample_format = "json", sample_out;
    add_model_options(sample_cmd, sample_opt, true);
    sample_cmd->add_option("--format", sample_format, "json|csv");
    sample_cmd->add_option("--out", sample_out, "output file (default stdout)");

    auto* compare_cmd = app.add_subcommand("compare", "KS + moments against F_beta");
    compare_cmd->fallthrough();
    ModelOptions compare_opt;
    std::string compare_in, compare_out;
    int compare_beta = 2;
    bool compare_plain4 = false;
    add_model_options(compare_cmd, compare_opt, false);
    compare_cmd->add_option("--in", compare_in, "sample JSON produced by `sample`");
    compare_cmd->add_option("--beta", compare_beta, "reference beta: 1|2|4")->required();
    compare_cmd->add_flag("--beta4-plain", compare_plain4, "plain-argument F4 convention");
    compare_cmd->add_option("--out", compare_out, "output file (default stdout)");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (table_cmd->parsed())
            return run_table(cache_flag, table_beta, from, to, step, table_format,
                             table_out, table_plain4, out);
        if (moments_cmd->parsed())
            return run_moments(cache_flag, moments_beta, moments_json, moments_plain4, out);
        if (sample_cmd->parsed())
            return run_sample(sample_opt, sample_format, sample_out, out);
        return run_compare(cache_flag, compare_in, compare_opt, compare_beta,
                           compare_plain4, compare_out, out);
    } catch (const convergence_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_numeric;
    } catch (const divergence_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_numeric;
    } catch (const resolution_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_numeric;
    } catch (const data_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_data;
    } catch (const invalid_argument_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return exit_data;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_data;
    }
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? argc - 1 : 0);
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run_cli(args, std::cout, std::cerr);
}

} // namespace tw
