#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qjunta/boolfn.hpp"
#include "qjunta/generators.hpp"
#include "qjunta/junta_test.hpp"
#include "qjunta/statevec.hpp"
#include "qjunta/validate.hpp"

namespace {

using namespace qjunta;

constexpr int kExitOk = 0;
constexpr int kExitSpecError = 1;
constexpr int kExitValidationFailure = 2;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string hex_word(std::uint32_t x) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%x", x);
    return buf;
}

// Output path resolution: a relative --out lands under $QJUNTA_OUT_DIR
// when that is set.
std::string resolve_out_path(const std::string& path) {
    namespace fs = std::filesystem;
    const char* dir = std::getenv("QJUNTA_OUT_DIR");
    if (dir && *dir && fs::path(path).is_relative())
        return (fs::path(dir) / path).string();
    return path;
}

struct OutputSink {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    explicit OutputSink(const std::string& out_path) {
        if (!out_path.empty()) {
            const std::string resolved = resolve_out_path(out_path);
            file.open(resolved, std::ios::binary);
            if (!file) throw std::runtime_error("cannot open output file " + resolved);
            stream = &file;
        }
    }
    std::ostream& out() { return *stream; }
};

struct FunctionSource {
    std::string anf_text;
    std::vector<std::string> table_args;  // {"n=K", "<hex>"}
    std::string generator;
    int gen_n = 4;
    int gen_m = 0;  // 0 = full width, for single-term-m
};

int count_sources(const FunctionSource& src) {
    return (src.anf_text.empty() ? 0 : 1) + (src.table_args.empty() ? 0 : 1) +
           (src.generator.empty() ? 0 : 1);
}

// Builds the tested function. Generator fixtures draw from a stream
// derived from the run seed so the whole run is reproducible from it.
TruthTable build_function(const FunctionSource& src, std::uint64_t seed, std::string& label) {
    if (!src.anf_text.empty()) {
        const AnfFunction f = parse_anf(src.anf_text);
        label = f.to_string();
        return to_truth_table(f);
    }
    if (!src.table_args.empty()) {
        const std::string& spec = src.table_args[0];
        if (spec.rfind("n=", 0) != 0)
            throw ParseError("expected 'n=<arity>' before the hex table", 1, 1);
        const int arity = std::stoi(spec.substr(2));
        TruthTable t = parse_table_hex(arity, src.table_args[1]);
        label = "table " + to_hex(t);
        return t;
    }
    Rng rng(derive_seed(seed, 0x66697874));  // fixture stream
    if (src.generator == "random") {
        label = "random(n=" + std::to_string(src.gen_n) + ")";
        return gen_random_function(src.gen_n, rng);
    }
    if (src.generator == "affine-random") {
        const AnfFunction f = gen_random_affine(src.gen_n, rng);
        label = "affine:" + f.to_string();
        return to_truth_table(f);
    }
    if (src.generator == "single-term-m") {
        const int m = src.gen_m > 0 ? src.gen_m : src.gen_n;
        const AnfFunction f = gen_single_term(src.gen_n, m, rng);
        label = "single-term:" + f.to_string();
        return to_truth_table(f);
    }
    if (src.generator == "majority") {
        label = "majority(n=" + std::to_string(src.gen_n) + ")";
        return gen_majority(src.gen_n);
    }
    throw std::invalid_argument("unknown generator '" + src.generator + "'");
}

const char* kTestCsvHeader = "variable,trial,verdict,witness_hex,shortcut_hit,g_queries,"
                             "f_queries,rounds,seed";

std::string test_csv_row(const TestReport& r, int trial) {
    std::string row = std::to_string(r.variable) + "," + std::to_string(trial) + "," +
                      verdict_name(r.verdict) + ",";
    row += r.witness ? hex_word(*r.witness) : std::string("-");
    row += std::string(",") + (r.shortcut_hit ? "1" : "0") + "," +
           std::to_string(r.queries.total_g_queries()) + "," +
           std::to_string(r.queries.total_f_queries()) + "," +
           std::to_string(r.queries.rounds) + "," + std::to_string(r.seed);
    return row;
}

int run_test(const FunctionSource& src, int var, bool all_vars, int trials, std::uint64_t seed,
             const SearchBudget& budget, bool json_format, bool with_trace, bool with_influence,
             const std::string& out_path) {
    std::string label;
    const TruthTable f = build_function(src, seed, label);
    if (f.arity() > kMaxSimArity) {
        std::cerr << "error: arity " << f.arity() << " exceeds the simulation cap of "
                  << kMaxSimArity << "\n";
        return kExitSpecError;
    }
    if (!all_vars && (var < 0 || var >= f.arity())) {
        std::cerr << "error: variable index " << var << " out of range for arity " << f.arity()
                  << "\n";
        return kExitSpecError;
    }

    TestConfig config;
    config.budget = budget;
    config.trials = trials;
    config.record_influence = with_influence;
    config.record_trace = with_trace;

    // Rows ordered by (variable, trial); per-trial seed is seed + trial.
    std::vector<int> variables;
    if (all_vars)
        for (int v = 0; v < f.arity(); ++v) variables.push_back(v);
    else
        variables.push_back(var);

    OutputSink sink(out_path);
    std::ostream& out = sink.out();
    if (!json_format) out << kTestCsvHeader << "\n";
    bool first = true;
    if (json_format) out << "[";
    for (int v : variables) {
        for (int trial = 0; trial < trials; ++trial) {
            TestConfig per = config;
            per.seed = seed + static_cast<std::uint64_t>(trial);
            if (all_vars) per.seed = derive_seed(per.seed, static_cast<std::uint64_t>(v));
            const TestReport report = test_variable(f, v, per);
            if (json_format) {
                if (!first) out << ",";
                out << "\n" << report_to_json(report, 1);
            } else {
                out << test_csv_row(report, trial) << "\n";
            }
            first = false;
        }
    }
    if (json_format) out << "\n]\n";
    return kExitOk;
}

int run_validate(int nmax, bool eq6_only, const std::string& golden_dir) {
    if (eq6_only) {
        std::cout << format_success_table(nmax);
        return kExitOk;
    }
    bool failed = false;

    const GridReport grid = run_recurrence_grid(nmax);
    std::cout << "recurrence grid: " << grid.points << " (n, M) points\n"
              << "  max simulator/recurrence amplitude deviation: " << fmt(grid.max_amplitude_dev)
              << "\n"
              << "  max simulated-mass/closed-form deviation:     " << fmt(grid.max_probability_dev)
              << "\n"
              << "  max recurrence/closed-form deviation:         "
              << fmt(grid.max_recurrence_prob_dev) << "\n"
              << "  max in-group amplitude spread:                " << fmt(grid.max_group_spread)
              << "\n"
              << "  max norm error:                               " << fmt(grid.max_norm_err)
              << "\n"
              << "  iteration-count bound: " << (grid.bound_ok ? "ok" : "VIOLATED") << "\n";
    for (const auto& flag : grid.coverage_flags)
        std::cout << "  coverage flag: " << flag << "\n";
    for (const auto& v : grid.violations) std::cout << "  VIOLATION: " << v << "\n";
    failed = failed || !grid.ok();

    for (const char* name : {"recurrence_grid.csv", "iteration_counts.csv"}) {
        const std::string path = golden_dir + "/" + name;
        const GoldenReport rep = std::string(name) == "recurrence_grid.csv"
                                     ? check_recurrence_golden(path)
                                     : check_iteration_golden(path);
        std::cout << path << ": " << rep.rows << " rows, max deviation " << fmt(rep.max_dev)
                  << "\n";
        for (const auto& v : rep.violations) std::cout << "  VIOLATION: " << v << "\n";
        failed = failed || !rep.ok();
    }

    return failed ? kExitValidationFailure : kExitOk;
}

struct SweepAccumulator {
    std::uint64_t not_junta = 0;
    std::uint64_t g_queries = 0;
    std::uint64_t f_queries = 0;
    int trials = 0;
};

int run_sweep(int nmin, int nmax, const std::vector<std::string>& fixtures, int trials,
              std::uint64_t seed, int term_width, const SearchBudget& budget,
              const std::string& out_path) {
    static const std::vector<std::string> known = {"junta", "single-term", "affine", "random"};
    for (const auto& f : fixtures)
        if (std::find(known.begin(), known.end(), f) == known.end())
            throw std::invalid_argument("unknown fixture family '" + f + "'");

    OutputSink sink(out_path);
    std::ostream& out = sink.out();
    out << "n,fixture,verdict_rate,mean_g_queries,mean_f_queries,seed\n";
    for (int n = nmin; n <= nmax; ++n) {
        for (std::size_t fi = 0; fi < fixtures.size(); ++fi) {
            const std::string& family = fixtures[fi];
            const std::uint64_t family_seed =
                derive_seed(seed, static_cast<std::uint64_t>(n) * 8 + fi);
            SweepAccumulator acc;
            for (int trial = 0; trial < trials; ++trial) {
                const std::uint64_t trial_seed =
                    family_seed + static_cast<std::uint64_t>(trial);
                Rng fixture_rng(derive_seed(trial_seed, 1));

                TruthTable f(1);
                int var = 0;
                if (family == "junta") {
                    var = static_cast<int>(uniform_below(fixture_rng, n));
                    f = gen_random_junta(n, var, fixture_rng);
                } else if (family == "single-term") {
                    const int m = term_width > 0 ? std::min(term_width, n) : n;
                    const AnfFunction fn = gen_single_term(n, m, fixture_rng);
                    f = to_truth_table(fn);
                    const Term mask = fn.terms().front();
                    std::vector<int> members;
                    for (int j = 0; j < n; ++j)
                        if (mask & (1u << j)) members.push_back(j);
                    var = members[uniform_below(fixture_rng, members.size())];
                } else if (family == "affine") {
                    var = static_cast<int>(uniform_below(fixture_rng, n));
                    AnfFunction fn = gen_random_affine(n, fixture_rng);
                    if (!fn.has_term(1u << var)) fn.toggle_term(1u << var);
                    f = to_truth_table(fn);
                } else {  // random, conditioned on the variable mattering
                    var = static_cast<int>(uniform_below(fixture_rng, n));
                    f = gen_random_dependent(n, var, fixture_rng);
                }

                TestConfig config;
                config.budget = budget;
                config.seed = derive_seed(trial_seed, 2);
                config.record_trace = false;
                const TestReport report = test_variable(f, var, config);
                acc.not_junta += report.verdict == Verdict::NotJunta ? 1 : 0;
                acc.g_queries += report.queries.total_g_queries();
                acc.f_queries += report.queries.total_f_queries();
                ++acc.trials;
            }
            out << n << "," << family << ","
                << fmt(static_cast<double>(acc.not_junta) / acc.trials) << ","
                << fmt(static_cast<double>(acc.g_queries) / acc.trials) << ","
                << fmt(static_cast<double>(acc.f_queries) / acc.trials) << "," << seed << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tester for whether a single variable of a black-box Boolean function "
                 "is irrelevant, by exact simulation of partial-diffusion amplitude "
                 "amplification"};
    app.require_subcommand(1);

    // --- test ---
    auto* test = app.add_subcommand("test", "Run the variable test on one function");
    FunctionSource src;
    int var = -1;
    bool all_vars = false;
    int trials = 1;
    std::uint64_t seed = 0;
    SearchBudget budget;
    std::string format = "csv";
    std::string out_path;
    bool with_trace = false;
    bool with_influence = false;
    test->add_option("--fn", src.anf_text, "Function as XOR of product terms, e.g. \"x0x1 ^ x2\"");
    test->add_option("--table", src.table_args,
                     "Truth table as 'n=<arity> <hex>', e.g. --table n=3 0x96")
        ->expected(2);
    test->add_option("--gen", src.generator,
                     "Named generator: random | affine-random | single-term-m | majority");
    test->add_option("--n", src.gen_n, "Arity for generated functions");
    test->add_option("--m", src.gen_m, "Term width for single-term-m (default: n)");
    test->add_option("--var", var, "Variable index to test");
    test->add_flag("--all", all_vars, "Test every variable");
    test->add_option("--trials", trials, "Independent trials per variable")
        ->check(CLI::PositiveNumber);
    test->add_option("--seed", seed, "Base seed; trial t uses seed + t");
    test->add_option("--budget-multiplier", budget.cutoff_multiplier,
                     "Post-cap iteration budget multiplier c (budget = ceil(c sqrt(N)))");
    test->add_option("--post-cap-rounds", budget.post_cap_rounds,
                     "Post-cap round allowance (0 = auto)");
    test->add_option("--format", format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    test->add_option("--out", out_path, "Output path (default stdout; relative paths land "
                                        "in $QJUNTA_OUT_DIR when set)");
    test->add_flag("--trace", with_trace, "Embed per-round traces (JSON only)");
    test->add_flag("--influence", with_influence, "Attach the brute-force influence diagnostic");

    // --- validate ---
    auto* validate = app.add_subcommand("validate", "Run the closed-form vs simulator grids");
    int nmax = 8;
    bool eq6_only = false;
    std::string golden_dir = "tests/golden";
    validate->add_option("--nmax", nmax, "Largest register width in the grid")
        ->check(CLI::Range(2, kMaxSimArity));
    validate->add_flag("--eq6-only", eq6_only, "Print the (n, M, q*, P_s) table and exit");
    validate->add_option("--golden-dir", golden_dir, "Directory holding the golden CSV grids");

    // --- sweep ---
    auto* sweep = app.add_subcommand("sweep", "Query-scaling sweep over register widths");
    int nmin = 4;
    int sweep_nmax = 10;
    std::string fixtures_arg = "junta,single-term,affine,random";
    int sweep_trials = 200;
    int term_width = 0;
    sweep->add_option("--nmin", nmin, "Smallest register width");
    sweep->add_option("--nmax", sweep_nmax, "Largest register width");
    sweep->add_option("--fixtures", fixtures_arg,
                      "Comma list of junta | single-term | affine | random");
    sweep->add_option("--trials", sweep_trials, "Trials per (n, fixture) cell")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--seed", seed, "Base seed for fixtures and trials");
    sweep->add_option("--term-width", term_width, "Width of single-term fixtures (0 = n)");
    sweep->add_option("--budget-multiplier", budget.cutoff_multiplier,
                      "Post-cap iteration budget multiplier");
    sweep->add_option("--out", out_path, "Output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (test->parsed()) {
            if (count_sources(src) != 1) {
                std::cerr << "error: exactly one of --fn, --table, --gen is required\n";
                return kExitSpecError;
            }
            if (all_vars == (var >= 0)) {
                std::cerr << "error: exactly one of --var, --all is required\n";
                return kExitSpecError;
            }
            return run_test(src, var, all_vars, trials, seed, budget, format == "json",
                            with_trace, with_influence, out_path);
        }
        if (validate->parsed()) return run_validate(nmax, eq6_only, golden_dir);
        if (sweep->parsed()) {
            std::vector<std::string> fixtures;
            std::stringstream ss(fixtures_arg);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) fixtures.push_back(item);
            if (nmin < 2 || sweep_nmax > kMaxSimArity || nmin > sweep_nmax) {
                std::cerr << "error: width range must satisfy 2 <= nmin <= nmax <= "
                          << kMaxSimArity << "\n";
                return kExitSpecError;
            }
            return run_sweep(nmin, sweep_nmax, fixtures, sweep_trials, seed, term_width, budget,
                             out_path);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSpecError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSpecError;
    }
    return kExitOk;
}
