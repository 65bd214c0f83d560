// sampcard: estimate the number of distinct elements in a stream from which
// only a sampled fraction is observed. Subcommands:
//   estimate  - single pass over stdin/file, JSON report on stdout
//   simulate  - built-in experiment presets, CSV (or NDJSON) on stdout
//   analyze   - closed-form unseen-share and variance formulas, JSON
//   optimize  - split a storage budget between sketch and subsample, JSON
// Exit codes: 0 ok, 2 usage/flag error, 3 degenerate sample, 4 empty input.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sampcard/analysis.hpp"
#include "sampcard/errors.hpp"
#include "sampcard/estimators.hpp"
#include "sampcard/hash.hpp"
#include "sampcard/tables.hpp"

using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitEmptyInput = 4;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag_seed) {
    if (flag_seed) return *flag_seed;
    if (const char* env = std::getenv("SAMPLED_CARD_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw CLI::ValidationError("SAMPLED_CARD_SEED", "not an unsigned integer");
        }
    }
    return 0;
}

struct EstimateArgs {
    std::string algorithm = "alg1";
    std::uint32_t m = 1024;
    std::uint32_t u = 1024;
    std::string format = "text";
    std::string input = "-";
    std::optional<std::uint64_t> seed;
    std::optional<double> sampling_rate;
    std::optional<std::string> freq_model;
    double are = 1.0;
};

class FileHandle {
public:
    explicit FileHandle(const std::string& path) {
        if (path == "-") {
            f_ = stdin;
        } else {
            f_ = std::fopen(path.c_str(), "rb");
            owned_ = f_ != nullptr;
            if (!f_) throw CLI::ValidationError("--input", "cannot open '" + path + "'");
        }
    }
    ~FileHandle() {
        if (owned_ && f_) std::fclose(f_);
    }
    FileHandle(const FileHandle&) = delete;
    FileHandle& operator=(const FileHandle&) = delete;
    std::FILE* get() const { return f_; }

private:
    std::FILE* f_ = nullptr;
    bool owned_ = false;
};

// Feeds newline-delimited tokens (optionally parsed as JSON values) or
// little-endian u64 records into the pipeline using one reusable buffer.
void feed_stream(sampcard::EstimatePipeline& pipeline, std::FILE* in, const std::string& format) {
    constexpr std::size_t kChunk = 1 << 20;
    std::vector<char> buf(kChunk);
    std::string carry;

    const bool binary = format == "binary-u64";
    const bool ndjson = format == "ndjson";

    if (binary) {
        std::size_t have = 0;
        while (true) {
            const std::size_t got = std::fread(buf.data() + have, 1, kChunk - have, in);
            if (got == 0 && have < 8) break;
            const std::size_t total = have + got;
            std::size_t pos = 0;
            for (; pos + 8 <= total; pos += 8) {
                std::uint64_t v;
                std::memcpy(&v, buf.data() + pos, 8);
                pipeline.offer_value(v);
            }
            have = total - pos;
            std::memmove(buf.data(), buf.data() + pos, have);
            if (got == 0) break;
        }
        return;
    }

    const auto emit_line = [&](const char* data, std::size_t len) {
        if (len > 0 && data[len - 1] == '\r') --len;
        if (len == 0) return;  // blank lines are not elements
        if (ndjson) {
            const json value = json::parse(std::string_view(data, len));
            const std::string canon = value.dump();
            pipeline.offer_bytes(canon.data(), canon.size());
        } else {
            pipeline.offer_bytes(data, len);
        }
    };

    while (true) {
        const std::size_t got = std::fread(buf.data(), 1, kChunk, in);
        if (got == 0) break;
        std::size_t start = 0;
        for (std::size_t i = 0; i < got; ++i) {
            if (buf[i] != '\n') continue;
            if (carry.empty()) {
                emit_line(buf.data() + start, i - start);
            } else {
                carry.append(buf.data() + start, i - start);
                emit_line(carry.data(), carry.size());
                carry.clear();
            }
            start = i + 1;
        }
        carry.append(buf.data() + start, got - start);
    }
    if (!carry.empty()) emit_line(carry.data(), carry.size());
}

json report_to_json(const sampcard::EstimateReport& report, std::uint64_t seed,
                    const std::optional<double>& sampling_rate) {
    json j{
        {"n_s_hat", report.n_s_hat},
        {"p0_hat", report.p0_hat},
        {"correction", report.correction},
        {"n_hat", report.n_hat},
        {"sample_length", report.sample_length},
        {"singletons", report.singletons},
        {"storage", {{"sketch_registers", report.sketch_registers},
                     {"singleton_units", report.singleton_units}}},
        {"seed", seed},
    };
    if (sampling_rate) j["sampling_rate"] = *sampling_rate;
    if (report.predicted_rel_variance) j["predicted_rel_variance"] = *report.predicted_rel_variance;
    return j;
}

int cmd_estimate(const EstimateArgs& args) {
    const std::uint64_t seed = resolve_seed(args.seed);

    sampcard::PipelineConfig config;
    config.sketch_registers = args.m;
    config.subsample_capacity = args.u;
    config.hash_seed = seed;
    config.reservoir_seed = sampcard::derive_seed(seed, 0x7265736572766f69ULL);
    if (args.algorithm == "alg1") config.algorithm = sampcard::Algorithm::Exact;
    else if (args.algorithm == "alg2") config.algorithm = sampcard::Algorithm::Subsampled;
    else config.algorithm = sampcard::Algorithm::SketchOnly;
    try {
        config.validate();
    } catch (const std::invalid_argument& e) {
        std::cerr << "sampcard: " << e.what() << "\n";
        return kExitUsage;
    }

    sampcard::EstimatePipeline pipeline(config);
    {
        FileHandle in(args.input);
        try {
            feed_stream(pipeline, in.get(), args.format);
        } catch (const json::parse_error& e) {
            std::cerr << "sampcard: ndjson input: " << e.what() << "\n";
            return kExitUsage;
        }
    }

    if (pipeline.length() == 0) {
        std::cerr << "sampcard: empty input\n";
        return kExitEmptyInput;
    }

    try {
        sampcard::EstimateReport report = pipeline.finish();
        if (args.sampling_rate && config.algorithm != sampcard::Algorithm::SketchOnly) {
            double p0 = report.p0_hat;
            double p1 = pipeline.p1_plugin();
            if (args.freq_model) {
                const auto model = sampcard::FrequencyModel::parse(*args.freq_model);
                const auto grid = model.quantile_grid();
                p0 = sampcard::expected_p0(grid, *args.sampling_rate);
                p1 = sampcard::expected_p1(grid, *args.sampling_rate);
            }
            if (p0 < 1.0) {
                const double m = static_cast<double>(report.sketch_registers);
                report.predicted_rel_variance =
                    config.algorithm == sampcard::Algorithm::Exact
                        ? sampcard::rel_variance_exact(
                              p0, p1, static_cast<double>(report.sample_length), m) +
                              (1.0 / args.are - 1.0) / m
                        : sampcard::rel_variance_subsampled(
                              p0, p1, static_cast<double>(report.singleton_units), m, args.are);
            }
        }
        std::cout << report_to_json(report, seed, args.sampling_rate).dump(2) << "\n";
        return kExitOk;
    } catch (const sampcard::DegenerateSampleError& e) {
        const json j{{"error", "degenerate_sample"},
                     {"message", e.what()},
                     {"sample_length", e.sample_length},
                     {"singletons", e.singletons},
                     {"n_s_hat", e.sketch_estimate}};
        std::cout << j.dump(2) << "\n";
        return kExitDegenerate;
    } catch (const std::invalid_argument& e) {
        std::cerr << "sampcard: " << e.what() << "\n";
        return kExitUsage;
    }
}

int cmd_simulate(const std::string& table, std::uint32_t trials, bool trials_given,
                 const std::optional<std::uint64_t>& seed, bool fast, bool as_json) {
    const auto preset = sampcard::tables::parse_preset(table);
    if (!preset) {
        std::cerr << "sampcard: unknown table '" << table
                  << "' (expected intro, 1a, 1b, 2a, 2b, 3, 4a, 4b)\n";
        return kExitUsage;
    }
    sampcard::tables::RunOptions options;
    options.trials = trials;
    options.seed = resolve_seed(seed);
    options.fast = fast;
    if (fast && !trials_given) options.trials = 50;

    const auto report = sampcard::tables::run_preset(*preset, options);
    if (!as_json) {
        std::cout << sampcard::tables::to_csv(report);
        return kExitOk;
    }
    for (const auto& row : report.rows) {
        json j{{"table", sampcard::tables::preset_name(report.preset)},
               {"estimator", row.estimator},
               {"rate", row.rate},
               {"m", row.m},
               {"u", row.u},
               {"m_run", row.m_run},
               {"trials", row.trials},
               {"degenerate", row.degenerate},
               {"mean_ratio", row.mean_ratio},
               {"bias", row.bias}};
        if (row.budget > 0) j["budget"] = row.budget;
        if (row.expected_sample_length > 0) j["expected_l"] = row.expected_sample_length;
        if (row.analysis_variance) j["analysis_variance"] = *row.analysis_variance;
        if (row.sim_variance) j["sim_variance"] = *row.sim_variance;
        std::cout << j.dump() << "\n";
    }
    return kExitOk;
}

int cmd_analyze(const std::string& model_text, double rate, std::uint32_t m,
                const std::optional<double>& u, const std::optional<double>& l,
                const std::optional<std::uint64_t>& n, double are, bool exact_tail) {
    sampcard::FrequencyModel model = sampcard::FrequencyModel::parse(model_text);
    const auto grid = model.quantile_grid();
    const double p0 = sampcard::expected_p0(grid, rate, exact_tail);
    const double p1 = sampcard::expected_p1(grid, rate, exact_tail);

    json j{{"freq_model", model.to_string()}, {"sampling_rate", rate},
           {"p0", p0}, {"p1", p1}, {"m", m}, {"are", are}};
    if (u) {
        j["u"] = *u;
        j["variant"] = "subsampled";
        j["rel_variance"] = sampcard::rel_variance_subsampled(p0, p1, *u, m, are);
    } else {
        double sample_length = 0.0;
        if (l) {
            sample_length = *l;
        } else if (n) {
            sample_length = rate * static_cast<double>(*n) * model.mean();
        } else {
            std::cerr << "sampcard: analyze needs --u, --l or --n\n";
            return kExitUsage;
        }
        j["l"] = sample_length;
        j["variant"] = "exact";
        const double base = sampcard::rel_variance_exact(p0, p1, sample_length, m);
        j["rel_variance"] = base + (1.0 / are - 1.0) / static_cast<double>(m);
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_optimize(std::int64_t budget, const std::string& model_text, double rate, double are) {
    sampcard::FrequencyModel model = sampcard::FrequencyModel::parse(model_text);
    const auto grid = model.quantile_grid();
    const double p0 = sampcard::expected_p0(grid, rate);
    const double p1 = sampcard::expected_p1(grid, rate);
    try {
        const sampcard::BudgetSplit split = sampcard::optimal_split(budget, p0, p1, are);
        const json j{{"budget", split.budget},
                     {"m", split.sketch_units},
                     {"u", split.subsample_units},
                     {"predicted_rel_variance", split.predicted_rel_variance},
                     {"freq_model", model.to_string()},
                     {"sampling_rate", rate},
                     {"p0", p0},
                     {"p1", p1},
                     {"are", are}};
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    } catch (const sampcard::InfeasibleBudgetError& e) {
        std::cerr << "sampcard: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cardinality estimation for sampled streams"};
    app.require_subcommand(1);

    EstimateArgs est;
    CLI::App* estimate = app.add_subcommand("estimate", "estimate distinct count from a stream");
    estimate->add_option("--algorithm", est.algorithm, "alg1 | alg2 | naive")
        ->check(CLI::IsMember({"alg1", "alg2", "naive"}));
    estimate->add_option("--m", est.m, "sketch registers (power of two, 16..65536)");
    estimate->add_option("--u", est.u, "subsample capacity (alg2)");
    estimate->add_option("--format", est.format, "text | ndjson | binary-u64")
        ->check(CLI::IsMember({"text", "ndjson", "binary-u64"}));
    estimate->add_option("--input", est.input, "input file, '-' for stdin");
    estimate->add_option("--seed", est.seed, "hash seed (default env SAMPLED_CARD_SEED or 0)");
    estimate->add_option("--sampling-rate", est.sampling_rate,
                         "fraction of the raw stream that was sampled (report metadata)")
        ->check(CLI::Range(0.0, 1.0));
    estimate->add_option("--freq-model", est.freq_model,
                         "uniform:LO:HI | pareto:ALPHA:SCALE, for the variance prediction");
    estimate->add_option("--are", est.are, "sketch asymptotic relative efficiency")
        ->check(CLI::PositiveNumber);

    std::string table;
    std::uint32_t trials = 200;
    std::optional<std::uint64_t> sim_seed;
    bool fast = false;
    bool sim_json = false;
    CLI::App* simulate = app.add_subcommand("simulate", "run a built-in experiment preset");
    CLI::Option* trials_opt = simulate->add_option("--trials", trials, "trials per row");
    simulate->add_option("--table", table, "intro | 1a | 1b | 2a | 2b | 3 | 4a | 4b")->required();
    simulate->add_option("--seed", sim_seed, "base seed (default env SAMPLED_CARD_SEED or 0)");
    simulate->add_flag("--fast", fast, "desk-scale smoke run (n=1000, 50 trials)");
    simulate->add_flag("--json", sim_json, "emit NDJSON rows instead of CSV");

    std::string an_model;
    double an_rate = 0.0;
    std::uint32_t an_m = 1024;
    std::optional<double> an_u, an_l;
    std::optional<std::uint64_t> an_n;
    double an_are = 1.0;
    bool an_exact = false;
    CLI::App* analyze = app.add_subcommand("analyze", "evaluate the closed-form variance");
    analyze->add_option("--freq-model", an_model, "uniform:LO:HI | pareto:ALPHA:SCALE")->required();
    analyze->add_option("--sampling-rate", an_rate, "sampling rate in (0,1)")->required();
    analyze->add_option("--m", an_m, "sketch registers");
    analyze->add_option("--u", an_u, "subsample units (subsampled variant)");
    analyze->add_option("--l", an_l, "sample length (exact variant)");
    analyze->add_option("--n", an_n, "distinct count; derives l = rate*n*mean_frequency");
    analyze->add_option("--are", an_are, "sketch asymptotic relative efficiency")
        ->check(CLI::PositiveNumber);
    analyze->add_flag("--exact-tail", an_exact, "use (1-P)^f instead of exp(-P f)");

    std::int64_t budget = 0;
    std::string opt_model;
    double opt_rate = 0.0;
    double opt_are = 1.0;
    CLI::App* optimize = app.add_subcommand("optimize", "split a storage budget");
    optimize->add_option("--budget", budget, "total units to split")->required();
    optimize->add_option("--freq-model", opt_model, "uniform:LO:HI | pareto:ALPHA:SCALE")->required();
    optimize->add_option("--sampling-rate", opt_rate, "sampling rate in (0,1)")->required();
    optimize->add_option("--are", opt_are, "sketch asymptotic relative efficiency")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (estimate->parsed()) return cmd_estimate(est);
        if (simulate->parsed()) {
            return cmd_simulate(table, trials, trials_opt->count() > 0, sim_seed, fast, sim_json);
        }
        if (analyze->parsed()) {
            return cmd_analyze(an_model, an_rate, an_m, an_u, an_l, an_n, an_are, an_exact);
        }
        if (optimize->parsed()) return cmd_optimize(budget, opt_model, opt_rate, opt_are);
    } catch (const std::invalid_argument& e) {
        std::cerr << "sampcard: " << e.what() << "\n";
        return kExitUsage;
    } catch (const sampcard::EmptySampleError& e) {
        std::cerr << "sampcard: " << e.what() << "\n";
        return kExitEmptyInput;
    }
    return kExitUsage;
}
