#include "fsp/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "fsp/dynamics.hpp"
#include "fsp/errors.hpp"
#include "fsp/graph.hpp"

namespace fsp {

std::string_view model_name(Model m) noexcept { return m == Model::Rgg ? "rgg" : "er"; }

Model parse_model(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "rgg") return Model::Rgg;
    if (lower == "er") return Model::Er;
    throw ParameterError("unknown model '" + std::string(text) + "' (expected rgg or er)");
}

void validate_config(const ExperimentConfig& config) {
    if (config.models.empty()) throw ParameterError("experiment config: no models");
    if (config.n_values.empty()) throw ParameterError("experiment config: no vertex counts");
    if (config.degree_values.empty()) throw ParameterError("experiment config: no average degrees");
    if (config.trials < 1) throw ParameterError("experiment config: trials must be at least 1");
}

Quartiles quartiles(std::vector<double> values) {
    if (values.empty()) throw ParameterError("quartiles: empty input");
    std::sort(values.begin(), values.end());
    auto median_of = [&](std::size_t first, std::size_t count) {
        const std::size_t mid = first + count / 2;
        return count % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
    };
    const std::size_t m = values.size();
    if (m == 1) return {values[0], values[0], values[0]};
    const std::size_t half = m / 2;
    return {median_of(0, half), median_of(0, m), median_of(m - half, half)};
}

std::string format_exact(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

std::string format_fraction(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::string cell_label(Model model, std::size_t n, double avg_degree) {
    return std::string(model_name(model)) + "|" + std::to_string(n) + "|" + format_exact(avg_degree);
}

TrialRecord run_trial(Model model, std::size_t n, double avg_degree, std::uint64_t trial, MasterSeed master,
                      bool record_timing, const std::string& dump_dir) {
    const auto start = std::chrono::steady_clock::now();
    const std::string label = cell_label(model, n, avg_degree);

    TrialRecord rec;
    rec.model = model;
    rec.n = n;
    rec.avg_degree = avg_degree;
    rec.trial = trial;
    rec.seed = derive_seed(master, label + "|graph", trial);

    RngStream graph_stream(rec.seed);
    RngStream type_stream = derive_stream(master, label + "|types", trial);
    RngStream step_stream = derive_stream(master, label + "|step", trial);

    Graph g = model == Model::Rgg ? generate_rgg(n, avg_degree, graph_stream).graph
                                  : generate_er(n, avg_degree, graph_stream);
    rec.empirical_avg_degree = 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(n);

    const TypeAssignment before = initial_types(n, type_stream);
    const TypeAssignment after = fsp_step(g, before, step_stream);
    if (g.edge_count() > 0) {
        rec.frac_before = monochrome_fraction(g, before);
        rec.frac_after = monochrome_fraction(g, after);
    }
    if (!dump_dir.empty()) {
        std::filesystem::create_directories(dump_dir);
        const auto file = std::filesystem::path(dump_dir) /
                          (std::string(model_name(model)) + "_" + std::to_string(n) + "_" +
                           format_exact(avg_degree) + "_" + std::to_string(trial) + ".edges");
        write_edge_list(g, file.string());
    }
    if (record_timing) {
        rec.wall_time_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    return rec;
}

std::vector<TrialRecord> run_experiment(const ExperimentConfig& config) {
    validate_config(config);

    struct Task {
        Model model;
        std::size_t n;
        double degree;
        std::uint64_t trial;
    };
    std::vector<Task> tasks;
    std::vector<TrialRecord> results;
    std::vector<std::size_t> pending;  // indices into results still to be computed

    for (Model model : config.models) {
        for (std::size_t n : config.n_values) {
            for (double degree : config.degree_values) {
                std::string problem;
                try {
                    if (model == Model::Rgg) radius_for_degree(n, degree);
                    else er_probability_for_degree(n, degree);
                } catch (const ParameterError& e) {
                    problem = e.what();
                }
                if (!problem.empty()) {
                    TrialRecord rec;
                    rec.model = model;
                    rec.n = n;
                    rec.avg_degree = degree;
                    rec.seed = derive_seed(config.master_seed, cell_label(model, n, degree) + "|graph", 0);
                    rec.error = problem;
                    results.push_back(std::move(rec));
                    continue;
                }
                for (std::uint64_t t = 0; t < config.trials; ++t) {
                    pending.push_back(results.size());
                    tasks.push_back({model, n, degree, t});
                    results.emplace_back();
                }
            }
        }
    }

    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;
    std::exception_ptr failure;
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
            const Task& task = tasks[i];
            try {
                results[pending[i]] = run_trial(task.model, task.n, task.degree, task.trial, config.master_seed,
                                                config.record_timing, config.dump_graphs_dir);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(tasks.size());
            }
        }
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(config.thread_count,
                                                             static_cast<unsigned>(std::max<std::size_t>(1, tasks.size()))));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return results;
}

std::vector<SummaryRow> summarize(const std::vector<TrialRecord>& records, std::vector<std::string>* warnings) {
    struct Cell {
        Model model;
        std::size_t n;
        double degree;
        std::size_t count = 0;
        std::vector<double> before;
        std::vector<double> after;
    };
    std::vector<Cell> cells;
    std::map<std::tuple<int, std::size_t, double>, std::size_t> index;
    for (const auto& r : records) {
        const auto key = std::make_tuple(static_cast<int>(r.model), r.n, r.avg_degree);
        auto [it, inserted] = index.try_emplace(key, cells.size());
        if (inserted) cells.push_back(Cell{r.model, r.n, r.avg_degree, 0, {}, {}});
        Cell& c = cells[it->second];
        ++c.count;
        if (r.frac_before) c.before.push_back(*r.frac_before);
        if (r.frac_after) c.after.push_back(*r.frac_after);
    }

    auto mean = [](const std::vector<double>& xs) {
        long double s = 0.0L;
        for (double x : xs) s += x;
        return static_cast<double>(s / static_cast<long double>(xs.size()));
    };

    std::vector<SummaryRow> rows;
    for (const auto& c : cells) {
        if (c.after.empty() || c.before.empty()) {
            if (warnings) {
                warnings->push_back("cell " + cell_label(c.model, c.n, c.degree) +
                                    " has no defined monochrome fractions; omitted from summary");
            }
            continue;
        }
        const Quartiles q = quartiles(c.after);
        rows.push_back({c.model, c.n, c.degree, c.count, mean(c.before), mean(c.after), q.median, q.q25, q.q75});
    }
    return rows;
}

namespace {

std::string optional_field(const std::optional<double>& x) { return x ? format_fraction(*x) : std::string(); }

std::ofstream open_for_write(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    return out;
}

void finish_write(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) throw IoError("write failed for '" + path + "'");
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    std::istringstream ss(line);
    while (std::getline(ss, current, ',')) fields.push_back(current);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

template <class T>
T parse_number(const std::string& text, const char* column) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParameterError(std::string("records CSV: bad value '") + text + "' in column " + column);
    }
    return value;
}

std::optional<double> parse_optional(const std::string& text, const char* column) {
    if (text.empty()) return std::nullopt;
    return parse_number<double>(text, column);
}

} // namespace

void write_csv(const std::vector<TrialRecord>& records, std::ostream& out) {
    out << kRecordsHeader << '\n';
    for (const auto& r : records) {
        out << model_name(r.model) << ',' << r.n << ',' << format_exact(r.avg_degree) << ',' << r.trial << ','
            << r.seed << ',' << optional_field(r.frac_before) << ',' << optional_field(r.frac_after) << ','
            << optional_field(r.empirical_avg_degree) << ',' << optional_field(r.wall_time_ms) << '\n';
    }
}

void write_csv(const std::vector<SummaryRow>& rows, std::ostream& out) {
    out << kSummaryHeader << '\n';
    for (const auto& r : rows) {
        out << model_name(r.model) << ',' << r.n << ',' << format_exact(r.avg_degree) << ',' << r.trials << ','
            << format_fraction(r.mean_before) << ',' << format_fraction(r.mean_after) << ','
            << format_fraction(r.median_after) << ',' << format_fraction(r.q25_after) << ','
            << format_fraction(r.q75_after) << '\n';
    }
}

void write_csv(const std::vector<TrialRecord>& records, const std::string& path) {
    auto out = open_for_write(path);
    write_csv(records, out);
    finish_write(out, path);
}

void write_csv(const std::vector<SummaryRow>& rows, const std::string& path) {
    auto out = open_for_write(path);
    write_csv(rows, out);
    finish_write(out, path);
}

std::vector<TrialRecord> read_records_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kRecordsHeader) {
        throw ParameterError("records CSV: missing or unexpected header");
    }
    std::vector<TrialRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_fields(line);
        if (f.size() != 9) throw ParameterError("records CSV: expected 9 fields in line '" + line + "'");
        TrialRecord r;
        r.model = parse_model(f[0]);
        r.n = parse_number<std::size_t>(f[1], "n");
        r.avg_degree = parse_number<double>(f[2], "avg_degree");
        r.trial = parse_number<std::uint64_t>(f[3], "trial");
        r.seed = parse_number<std::uint64_t>(f[4], "seed");
        r.frac_before = parse_optional(f[5], "frac_before");
        r.frac_after = parse_optional(f[6], "frac_after");
        r.empirical_avg_degree = parse_optional(f[7], "empirical_avg_degree");
        r.wall_time_ms = parse_optional(f[8], "wall_time_ms");
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<TrialRecord> read_records_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return read_records_csv(in);
}

void emit_plot_data(const std::vector<SummaryRow>& rows, std::ostream& out) {
    std::vector<std::pair<Model, std::size_t>> series;
    for (const auto& r : rows) {
        const auto key = std::make_pair(r.model, r.n);
        if (std::find(series.begin(), series.end(), key) == series.end()) series.push_back(key);
    }
    bool first = true;
    for (auto [model, n] : series) {
        std::vector<const SummaryRow*> block;
        for (const auto& r : rows)
            if (r.model == model && r.n == n) block.push_back(&r);
        std::stable_sort(block.begin(), block.end(),
                         [](const SummaryRow* a, const SummaryRow* b) { return a->avg_degree < b->avg_degree; });
        if (!first) out << "\n\n";
        first = false;
        out << "# model=" << model_name(model) << " n=" << n << '\n';
        out << "# avg_degree mean_after q25_after q75_after\n";
        for (const SummaryRow* r : block) {
            out << format_exact(r->avg_degree) << ' ' << format_fraction(r->mean_after) << ' '
                << format_fraction(r->q25_after) << ' ' << format_fraction(r->q75_after) << '\n';
        }
    }
}

void emit_plot_data(const std::vector<SummaryRow>& rows, const std::string& path) {
    auto out = open_for_write(path);
    emit_plot_data(rows, out);
    finish_write(out, path);
}

} // namespace fsp
