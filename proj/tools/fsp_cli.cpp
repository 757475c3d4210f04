// fsp: command-line front end over the C API in fsp/fsp.h.
//
//   fsp simulate --model rgg,er --n 1000,10000 --avg-degree 4,8,10,16 --trials 1000 \
//                --seed 42 --threads 8 --out records.csv --summary-out summary.csv
//   fsp bounds --n 10000 --avg-degree 10 [--tau 0.8]
//   fsp rw-prob --a 3 --b 3
//   fsp verify
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "fsp/fsp.h"

namespace {

struct CliFailure {
    int code;
};

void check(fsp_status status, const char* what) {
    if (status == FSP_OK) return;
    std::cerr << "fsp: " << what << ": " << fsp_status_name(status) << ": " << fsp_last_error() << '\n';
    throw CliFailure{static_cast<int>(status) + 1};
}

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

void print_aligned(const std::vector<std::pair<std::string, std::string>>& rows) {
    std::size_t width = 0;
    for (const auto& [key, value] : rows) width = std::max(width, key.size());
    for (const auto& [key, value] : rows) {
        std::cout << key << std::string(width - key.size(), ' ') << " = " << value << '\n';
    }
}

template <class T, void (*Free)(T*)>
struct Handle {
    T* ptr = nullptr;
    Handle() = default;
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    ~Handle() { Free(ptr); }
};

struct SimulateOptions {
    std::vector<std::string> models{"rgg", "er"};
    std::vector<std::uint64_t> n_values{1000, 5000, 10000};
    std::vector<double> degrees{4, 8, 10, 16};
    std::uint64_t trials = 1000;
    std::uint64_t seed = 42;
    unsigned threads = 1;
    std::string out = "records.csv";
    std::string summary_out;
    std::string plot_out;
    std::string dump_graphs;
    bool timing = false;
};

int run_simulate(const SimulateOptions& opt) {
    Handle<fsp_config, fsp_config_free> config;
    check(fsp_config_create(&config.ptr), "create config");

    std::vector<fsp_model> models;
    for (const auto& m : opt.models) {
        if (m == "rgg") models.push_back(FSP_MODEL_RGG);
        else if (m == "er") models.push_back(FSP_MODEL_ER);
        else {
            std::cerr << "fsp: unknown model '" << m << "' (expected rgg or er)\n";
            return 2;
        }
    }
    check(fsp_config_set_models(config.ptr, models.data(), models.size()), "set models");
    check(fsp_config_set_n_values(config.ptr, opt.n_values.data(), opt.n_values.size()), "set n");
    check(fsp_config_set_degrees(config.ptr, opt.degrees.data(), opt.degrees.size()), "set avg-degree");
    check(fsp_config_set_trials(config.ptr, opt.trials), "set trials");
    check(fsp_config_set_seed(config.ptr, opt.seed), "set seed");
    check(fsp_config_set_threads(config.ptr, opt.threads), "set threads");
    check(fsp_config_set_timing(config.ptr, opt.timing ? 1 : 0), "set timing");
    check(fsp_config_set_dump_dir(config.ptr, opt.dump_graphs.c_str()), "set dump dir");

    Handle<fsp_records, fsp_records_free> records;
    check(fsp_experiment_run(config.ptr, &records.ptr), "run experiment");

    std::size_t count = 0;
    check(fsp_records_count(records.ptr, &count), "count records");
    for (std::size_t i = 0; i < count; ++i) {
        fsp_trial_record rec;
        check(fsp_records_get(records.ptr, i, &rec), "read record");
        if (rec.has_error) {
            const char* message = nullptr;
            check(fsp_records_error_message(records.ptr, i, &message), "read record error");
            std::cerr << "fsp: cell skipped: " << message << '\n';
        }
    }
    check(fsp_records_write_csv(records.ptr, opt.out.c_str()), "write records");
    std::cerr << "wrote " << count << " records to " << opt.out << '\n';

    if (opt.summary_out.empty() && opt.plot_out.empty()) return 0;
    Handle<fsp_summary, fsp_summary_free> summary;
    check(fsp_summarize(records.ptr, &summary.ptr), "summarize");
    std::size_t warnings = 0;
    check(fsp_summary_warning_count(summary.ptr, &warnings), "count warnings");
    for (std::size_t i = 0; i < warnings; ++i) {
        const char* message = nullptr;
        check(fsp_summary_warning(summary.ptr, i, &message), "read warning");
        std::cerr << "fsp: warning: " << message << '\n';
    }
    if (!opt.summary_out.empty()) {
        check(fsp_summary_write_csv(summary.ptr, opt.summary_out.c_str()), "write summary");
        std::cerr << "wrote summary to " << opt.summary_out << '\n';
    }
    if (!opt.plot_out.empty()) {
        check(fsp_summary_write_plot_data(summary.ptr, opt.plot_out.c_str()), "write plot data");
        std::cerr << "wrote plot data to " << opt.plot_out << '\n';
    }
    return 0;
}

int run_bounds(std::uint64_t n, double degree, const std::vector<double>& taus) {
    std::vector<std::pair<std::string, std::string>> rows;
    rows.emplace_back("n", std::to_string(n));
    rows.emplace_back("avg_degree", num(degree));

    double bound = 0.0;
    int dropped = 0;
    const fsp_status st = fsp_theorem1_bound(degree, &bound, &dropped);
    if (st == FSP_OK) {
        rows.emplace_back("theorem1_bound", num(bound));
        rows.emplace_back("theorem1_asymptotic_factor", dropped ? "dropped" : "applied");
    } else {
        rows.emplace_back("theorem1_bound", std::string("undefined (") + fsp_last_error() + ")");
    }

    double radius = 0.0;
    if (fsp_radius_for_degree(n, degree, &radius) == FSP_OK) rows.emplace_back("rgg_radius", num(radius));
    else rows.emplace_back("rgg_radius", std::string("invalid (") + fsp_last_error() + ")");

    double p = 0.0;
    check(fsp_er_probability_for_degree(n, degree, &p), "er probability");
    rows.emplace_back("er_p", num(p));
    double exact = 0.0;
    double np2 = 0.0;
    check(fsp_er_common_empty_probability(n, p, &exact, &np2), "er common neighborhood");
    rows.emplace_back("er_common_empty_exact", num(exact));
    rows.emplace_back("er_common_nonempty", num(1.0 - exact));
    rows.emplace_back("er_common_nonempty_bound", num(np2));

    for (double tau : taus) {
        fsp_region_measures m;
        check(fsp_region_measures_compute(n, degree, tau, &m), "region measures");
        const std::string suffix = taus.size() > 1 ? "@" + num(tau) : "";
        rows.emplace_back("tau" + suffix, num(m.tau));
        rows.emplace_back("mu_common" + suffix, num(m.mu_common));
        rows.emplace_back("mu_u_exclusive" + suffix, num(m.mu_u_exclusive));
        rows.emplace_back("mu_v_exclusive" + suffix, num(m.mu_v_exclusive));
        rows.emplace_back("mu_outside" + suffix, num(m.mu_outside));
        if (tau <= 1.0) {
            double within = 0.0;
            check(fsp_edge_within_tau_fraction(tau, &within), "edge fraction");
            rows.emplace_back("edge_within_tau_fraction" + suffix, num(within));
        }
    }
    print_aligned(rows);
    return 0;
}

std::string fraction(std::uint64_t a, std::uint64_t b, fsp_rw_outcome which) {
    std::size_t required = 0;
    std::string buffer(64, '\0');
    fsp_status st = fsp_rw_abs_compare_fraction(a, b, which, buffer.data(), buffer.size(), &required);
    if (st == FSP_ERR_CAPACITY && required > buffer.size()) {
        buffer.assign(required, '\0');
        st = fsp_rw_abs_compare_fraction(a, b, which, buffer.data(), buffer.size(), &required);
    }
    check(st, "random-walk fraction");
    buffer.resize(required - 1);
    return buffer;
}

int run_rw_prob(std::uint64_t a, std::uint64_t b) {
    fsp_rw_probs probs;
    check(fsp_rw_abs_compare(a, b, &probs), "random-walk comparison");
    std::vector<std::pair<std::string, std::string>> rows;
    rows.emplace_back("a", std::to_string(a));
    rows.emplace_back("b", std::to_string(b));
    rows.emplace_back("P(|A|<|B|)", fraction(a, b, FSP_RW_LESS) + " (" + num(probs.less) + ")");
    rows.emplace_back("P(|A|=|B|)", fraction(a, b, FSP_RW_EQUAL) + " (" + num(probs.equal) + ")");
    rows.emplace_back("P(|A|>|B|)", fraction(a, b, FSP_RW_GREATER) + " (" + num(probs.greater) + ")");
    if (a <= b) {
        double lower = 0.0;
        check(fsp_rw_lower_bound(a, b, &lower), "random-walk lower bound");
        rows.emplace_back("lower_bound", num(lower));
    }
    print_aligned(rows);
    return 0;
}

void report_check(const char* name, int passed, const char* detail, void*) {
    std::cout << (passed ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
    std::cout.flush();
}

int run_verify() {
    std::size_t failures = 0;
    check(fsp_verify(report_check, nullptr, &failures), "verify");
    std::cout << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed") << '\n';
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Flip-Schelling simulation and exact-bound toolkit"};
    app.set_version_flag("--version", std::string(fsp_version()));
    app.require_subcommand(1);

    SimulateOptions sim;
    auto* simulate = app.add_subcommand("simulate", "run seeded FSP trials over a (model, n, degree) grid");
    simulate->add_option("--model", sim.models, "comma-separated models: rgg, er")->delimiter(',');
    simulate->add_option("--n", sim.n_values, "comma-separated vertex counts")->delimiter(',');
    simulate->add_option("--avg-degree", sim.degrees, "comma-separated expected average degrees")->delimiter(',');
    simulate->add_option("--trials", sim.trials, "graphs per cell")->check(CLI::PositiveNumber);
    simulate->add_option("--seed", sim.seed, "master seed");
    simulate->add_option("--threads", sim.threads, "worker threads")->check(CLI::PositiveNumber);
    simulate->add_option("--out", sim.out, "records CSV path");
    simulate->add_option("--summary-out", sim.summary_out, "summary CSV path");
    simulate->add_option("--plot-out", sim.plot_out, "plot data path");
    simulate->add_option("--dump-graphs", sim.dump_graphs, "directory for per-trial edge lists");
    simulate->add_flag("--timing", sim.timing, "record wall_time_ms (makes output non-reproducible)");

    std::uint64_t bounds_n = 10000;
    double bounds_degree = 10.0;
    std::vector<double> taus;
    auto* bounds = app.add_subcommand("bounds", "print closed-form bounds and region measures");
    bounds->add_option("--n", bounds_n, "vertex count")->required();
    bounds->add_option("--avg-degree", bounds_degree, "expected average degree")->required();
    bounds->add_option("--tau", taus, "normalized edge length(s) in [0,2]")->delimiter(',');

    std::uint64_t walk_a = 0;
    std::uint64_t walk_b = 0;
    auto* rw = app.add_subcommand("rw-prob", "exact comparison of two +-1 random walks");
    rw->add_option("--a", walk_a, "steps of walk A")->required();
    rw->add_option("--b", walk_b, "steps of walk B")->required();

    auto* verify = app.add_subcommand("verify", "run property sweeps; nonzero exit on any violation");

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) return run_simulate(sim);
        if (bounds->parsed()) return run_bounds(bounds_n, bounds_degree, taus);
        if (rw->parsed()) return run_rw_prob(walk_a, walk_b);
        if (verify->parsed()) return run_verify();
    } catch (const CliFailure& f) {
        return f.code;
    }
    return 0;
}
