#include "fsp/fsp.h"

#include <cmath>
#include <limits>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "fsp/dynamics.hpp"
#include "fsp/errors.hpp"
#include "fsp/exactmath.hpp"
#include "fsp/graph.hpp"
#include "fsp/harness.hpp"
#include "fsp/verify.hpp"

struct fsp_graph {
    fsp::Graph graph;
};

struct fsp_config {
    fsp::ExperimentConfig config;
};

struct fsp_records {
    std::vector<fsp::TrialRecord> records;
};

struct fsp_summary {
    std::vector<fsp::SummaryRow> rows;
    std::vector<std::string> warnings;
};

namespace {

thread_local std::string g_last_error;

fsp_status fail(fsp_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

template <class F>
fsp_status guarded(F&& body) noexcept {
    try {
        body();
        g_last_error.clear();
        return FSP_OK;
    } catch (const fsp::ParameterError& e) {
        return fail(FSP_ERR_PARAMETER, e.what());
    } catch (const fsp::DomainError& e) {
        return fail(FSP_ERR_DOMAIN, e.what());
    } catch (const fsp::CapacityError& e) {
        return fail(FSP_ERR_CAPACITY, e.what());
    } catch (const fsp::IoError& e) {
        return fail(FSP_ERR_IO, e.what());
    } catch (const std::bad_alloc&) {
        return fail(FSP_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(FSP_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(FSP_ERR_INTERNAL, "unknown exception");
    }
}

#define FSP_REQUIRE(ptr)                                                   \
    do {                                                                   \
        if ((ptr) == nullptr) return fail(FSP_ERR_PARAMETER, #ptr " is NULL"); \
    } while (0)

fsp::Model to_model(fsp_model m) {
    switch (m) {
        case FSP_MODEL_RGG: return fsp::Model::Rgg;
        case FSP_MODEL_ER: return fsp::Model::Er;
    }
    throw fsp::ParameterError("unknown model enumerator");
}

fsp_model from_model(fsp::Model m) { return m == fsp::Model::Rgg ? FSP_MODEL_RGG : FSP_MODEL_ER; }

double or_nan(const std::optional<double>& x) { return x ? *x : std::numeric_limits<double>::quiet_NaN(); }

} // namespace

extern "C" {

const char* fsp_version(void) { return "fsp 1.0.0 (fsp-rng v1)"; }

const char* fsp_last_error(void) { return g_last_error.c_str(); }

const char* fsp_status_name(fsp_status status) {
    switch (status) {
        case FSP_OK: return "ok";
        case FSP_ERR_PARAMETER: return "parameter error";
        case FSP_ERR_DOMAIN: return "domain error";
        case FSP_ERR_CAPACITY: return "capacity error";
        case FSP_ERR_IO: return "I/O error";
        case FSP_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

fsp_status fsp_radius_for_degree(uint64_t n, double avg_degree, double* radius) {
    FSP_REQUIRE(radius);
    return guarded([&] { *radius = fsp::radius_for_degree(n, avg_degree); });
}

fsp_status fsp_er_probability_for_degree(uint64_t n, double avg_degree, double* p) {
    FSP_REQUIRE(p);
    return guarded([&] { *p = fsp::er_probability_for_degree(n, avg_degree); });
}

fsp_status fsp_graph_generate(fsp_model model, uint64_t n, double avg_degree, uint64_t seed, const char* context,
                              uint64_t trial, fsp_graph** out) {
    FSP_REQUIRE(context);
    FSP_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        auto stream = fsp::derive_stream(fsp::MasterSeed{seed}, context, trial);
        auto handle = std::make_unique<fsp_graph>();
        handle->graph = to_model(model) == fsp::Model::Rgg ? fsp::generate_rgg(n, avg_degree, stream).graph
                                                           : fsp::generate_er(n, avg_degree, stream);
        *out = handle.release();
    });
}

fsp_status fsp_graph_from_edges(uint64_t n, const uint32_t* pairs, size_t edge_count, fsp_graph** out) {
    FSP_REQUIRE(out);
    *out = nullptr;
    if (edge_count > 0) FSP_REQUIRE(pairs);
    return guarded([&] {
        std::vector<fsp::Edge> edges(edge_count);
        for (size_t i = 0; i < edge_count; ++i) edges[i] = {pairs[2 * i], pairs[2 * i + 1]};
        auto handle = std::make_unique<fsp_graph>();
        handle->graph = fsp::Graph::from_edges(n, edges);
        *out = handle.release();
    });
}

void fsp_graph_free(fsp_graph* graph) { delete graph; }

fsp_status fsp_graph_vertex_count(const fsp_graph* graph, uint64_t* n) {
    FSP_REQUIRE(graph);
    FSP_REQUIRE(n);
    *n = graph->graph.vertex_count();
    return FSP_OK;
}

fsp_status fsp_graph_edge_count(const fsp_graph* graph, uint64_t* m) {
    FSP_REQUIRE(graph);
    FSP_REQUIRE(m);
    *m = graph->graph.edge_count();
    return FSP_OK;
}

fsp_status fsp_graph_write_edge_list(const fsp_graph* graph, const char* path) {
    FSP_REQUIRE(graph);
    FSP_REQUIRE(path);
    return guarded([&] { fsp::write_edge_list(graph->graph, std::string(path)); });
}

fsp_status fsp_exact_monochrome_probability(const fsp_graph* graph, uint32_t u, uint32_t v, double* probability) {
    FSP_REQUIRE(graph);
    FSP_REQUIRE(probability);
    return guarded([&] { *probability = fsp::to_double(fsp::exact_monochrome_probability(graph->graph, u, v)); });
}

fsp_status fsp_exact_decisiveness_probability(const fsp_graph* graph, uint32_t u, uint32_t v,
                                              double* probability) {
    FSP_REQUIRE(graph);
    FSP_REQUIRE(probability);
    return guarded([&] { *probability = fsp::to_double(fsp::exact_decisiveness_probability(graph->graph, u, v)); });
}

fsp_status fsp_rw_abs_compare(uint64_t a, uint64_t b, fsp_rw_probs* out) {
    FSP_REQUIRE(out);
    return guarded([&] {
        const auto r = fsp::rw_abs_compare(a, b);
        *out = {fsp::to_double(r.less), fsp::to_double(r.equal), fsp::to_double(r.greater)};
    });
}

fsp_status fsp_rw_abs_compare_fraction(uint64_t a, uint64_t b, fsp_rw_outcome which, char* buffer, size_t capacity,
                                       size_t* required) {
    std::string text;
    const fsp_status status = guarded([&] {
        const auto r = fsp::rw_abs_compare(a, b);
        const fsp::Rational* q = nullptr;
        switch (which) {
            case FSP_RW_LESS: q = &r.less; break;
            case FSP_RW_EQUAL: q = &r.equal; break;
            case FSP_RW_GREATER: q = &r.greater; break;
        }
        if (q == nullptr) throw fsp::ParameterError("unknown random-walk outcome");
        text = numerator(*q).str() + "/" + denominator(*q).str();
    });
    if (status != FSP_OK) return status;
    if (required != nullptr) *required = text.size() + 1;
    if (buffer == nullptr || capacity < text.size() + 1) {
        return fail(FSP_ERR_CAPACITY, "buffer too small for fraction of " + std::to_string(text.size()) + " chars");
    }
    text.copy(buffer, text.size());
    buffer[text.size()] = '\0';
    return FSP_OK;
}

fsp_status fsp_rw_lower_bound(uint64_t a, uint64_t b, double* out) {
    FSP_REQUIRE(out);
    return guarded([&] { *out = fsp::to_double(fsp::rw_lower_bound(a, b)); });
}

fsp_status fsp_region_measures_compute(uint64_t n, double avg_degree, double tau, fsp_region_measures* out) {
    FSP_REQUIRE(out);
    return guarded([&] {
        const auto m = fsp::region_measures(n, avg_degree, tau);
        *out = {m.mu_common, m.mu_u_exclusive, m.mu_v_exclusive, m.mu_outside, m.tau};
    });
}

fsp_status fsp_edge_within_tau_fraction(double tau, double* out) {
    FSP_REQUIRE(out);
    return guarded([&] { *out = fsp::edge_within_tau_fraction(tau); });
}

fsp_status fsp_theorem1_bound(double avg_degree, double* bound, int* asymptotic_factor_dropped) {
    FSP_REQUIRE(bound);
    return guarded([&] {
        const auto b = fsp::theorem1_bound(avg_degree);
        *bound = b.value;
        if (asymptotic_factor_dropped != nullptr) *asymptotic_factor_dropped = b.asymptotic_factor_dropped ? 1 : 0;
    });
}

fsp_status fsp_er_common_empty_probability(uint64_t n, double p, double* exact, double* bound) {
    FSP_REQUIRE(exact);
    FSP_REQUIRE(bound);
    return guarded([&] {
        const auto r = fsp::er_common_empty_probability(n, p);
        *exact = r.exact;
        *bound = r.bound;
    });
}

fsp_status fsp_binom_pmf(uint64_t n, double p, uint64_t k, double* out) {
    FSP_REQUIRE(out);
    return guarded([&] { *out = fsp::binom_pmf(n, p, k); });
}

fsp_status fsp_binomial_mode(uint64_t n, double p, uint64_t* out) {
    FSP_REQUIRE(out);
    return guarded([&] { *out = fsp::binomial_mode(n, p); });
}

fsp_status fsp_binom_ge_prob(uint64_t n, double p, double q, double* ge, double* gt, double* eq) {
    FSP_REQUIRE(ge);
    FSP_REQUIRE(gt);
    FSP_REQUIRE(eq);
    return guarded([&] {
        const auto r = fsp::binom_ge_prob(n, p, q);
        *ge = r.ge;
        *gt = r.gt;
        *eq = r.eq;
    });
}

fsp_status fsp_binom_collision_upper_bound(uint64_t n, double p, double* out) {
    FSP_REQUIRE(out);
    return guarded([&] { *out = fsp::binom_collision_upper_bound(n, p); });
}

fsp_status fsp_prob_gt_one_and_bound(uint64_t n, double p, double* exact, double* bound) {
    FSP_REQUIRE(exact);
    FSP_REQUIRE(bound);
    return guarded([&] {
        const auto r = fsp::prob_gt_one_and_bound(n, p);
        *exact = r.exact;
        *bound = r.bound;
    });
}

fsp_status fsp_config_create(fsp_config** out) {
    FSP_REQUIRE(out);
    return guarded([&] { *out = new fsp_config(); });
}

void fsp_config_free(fsp_config* config) { delete config; }

fsp_status fsp_config_set_models(fsp_config* config, const fsp_model* models, size_t count) {
    FSP_REQUIRE(config);
    FSP_REQUIRE(models);
    return guarded([&] {
        std::vector<fsp::Model> parsed;
        for (size_t i = 0; i < count; ++i) parsed.push_back(to_model(models[i]));
        config->config.models = std::move(parsed);
    });
}

fsp_status fsp_config_set_n_values(fsp_config* config, const uint64_t* values, size_t count) {
    FSP_REQUIRE(config);
    FSP_REQUIRE(values);
    return guarded([&] { config->config.n_values.assign(values, values + count); });
}

fsp_status fsp_config_set_degrees(fsp_config* config, const double* values, size_t count) {
    FSP_REQUIRE(config);
    FSP_REQUIRE(values);
    return guarded([&] { config->config.degree_values.assign(values, values + count); });
}

fsp_status fsp_config_set_trials(fsp_config* config, uint64_t trials) {
    FSP_REQUIRE(config);
    if (trials < 1) return fail(FSP_ERR_PARAMETER, "trials must be at least 1");
    config->config.trials = trials;
    return FSP_OK;
}

fsp_status fsp_config_set_seed(fsp_config* config, uint64_t seed) {
    FSP_REQUIRE(config);
    config->config.master_seed = fsp::MasterSeed{seed};
    return FSP_OK;
}

fsp_status fsp_config_set_threads(fsp_config* config, unsigned threads) {
    FSP_REQUIRE(config);
    config->config.thread_count = threads == 0 ? 1 : threads;
    return FSP_OK;
}

fsp_status fsp_config_set_timing(fsp_config* config, int enabled) {
    FSP_REQUIRE(config);
    config->config.record_timing = enabled != 0;
    return FSP_OK;
}

fsp_status fsp_config_set_dump_dir(fsp_config* config, const char* directory) {
    FSP_REQUIRE(config);
    return guarded([&] { config->config.dump_graphs_dir = directory ? directory : ""; });
}

fsp_status fsp_experiment_run(const fsp_config* config, fsp_records** out) {
    FSP_REQUIRE(config);
    FSP_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        auto handle = std::make_unique<fsp_records>();
        handle->records = fsp::run_experiment(config->config);
        *out = handle.release();
    });
}

void fsp_records_free(fsp_records* records) { delete records; }

fsp_status fsp_records_read_csv(const char* path, fsp_records** out) {
    FSP_REQUIRE(path);
    FSP_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        auto handle = std::make_unique<fsp_records>();
        handle->records = fsp::read_records_csv(std::string(path));
        *out = handle.release();
    });
}

fsp_status fsp_records_count(const fsp_records* records, size_t* count) {
    FSP_REQUIRE(records);
    FSP_REQUIRE(count);
    *count = records->records.size();
    return FSP_OK;
}

fsp_status fsp_records_get(const fsp_records* records, size_t index, fsp_trial_record* out) {
    FSP_REQUIRE(records);
    FSP_REQUIRE(out);
    if (index >= records->records.size()) return fail(FSP_ERR_PARAMETER, "record index out of range");
    const auto& r = records->records[index];
    *out = {from_model(r.model), r.n, r.avg_degree, r.trial, r.seed, or_nan(r.frac_before), or_nan(r.frac_after),
            or_nan(r.empirical_avg_degree), or_nan(r.wall_time_ms), r.error.empty() ? 0 : 1};
    return FSP_OK;
}

fsp_status fsp_records_error_message(const fsp_records* records, size_t index, const char** message) {
    FSP_REQUIRE(records);
    FSP_REQUIRE(message);
    if (index >= records->records.size()) return fail(FSP_ERR_PARAMETER, "record index out of range");
    *message = records->records[index].error.c_str();
    return FSP_OK;
}

fsp_status fsp_records_write_csv(const fsp_records* records, const char* path) {
    FSP_REQUIRE(records);
    FSP_REQUIRE(path);
    return guarded([&] { fsp::write_csv(records->records, std::string(path)); });
}

fsp_status fsp_summarize(const fsp_records* records, fsp_summary** out) {
    FSP_REQUIRE(records);
    FSP_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        auto handle = std::make_unique<fsp_summary>();
        handle->rows = fsp::summarize(records->records, &handle->warnings);
        *out = handle.release();
    });
}

void fsp_summary_free(fsp_summary* summary) { delete summary; }

fsp_status fsp_summary_count(const fsp_summary* summary, size_t* count) {
    FSP_REQUIRE(summary);
    FSP_REQUIRE(count);
    *count = summary->rows.size();
    return FSP_OK;
}

fsp_status fsp_summary_get(const fsp_summary* summary, size_t index, fsp_summary_row* out) {
    FSP_REQUIRE(summary);
    FSP_REQUIRE(out);
    if (index >= summary->rows.size()) return fail(FSP_ERR_PARAMETER, "summary index out of range");
    const auto& r = summary->rows[index];
    *out = {from_model(r.model), r.n,           r.avg_degree,   r.trials,   r.mean_before,
            r.mean_after,        r.median_after, r.q25_after, r.q75_after};
    return FSP_OK;
}

fsp_status fsp_summary_warning_count(const fsp_summary* summary, size_t* count) {
    FSP_REQUIRE(summary);
    FSP_REQUIRE(count);
    *count = summary->warnings.size();
    return FSP_OK;
}

fsp_status fsp_summary_warning(const fsp_summary* summary, size_t index, const char** message) {
    FSP_REQUIRE(summary);
    FSP_REQUIRE(message);
    if (index >= summary->warnings.size()) return fail(FSP_ERR_PARAMETER, "warning index out of range");
    *message = summary->warnings[index].c_str();
    return FSP_OK;
}

fsp_status fsp_summary_write_csv(const fsp_summary* summary, const char* path) {
    FSP_REQUIRE(summary);
    FSP_REQUIRE(path);
    return guarded([&] { fsp::write_csv(summary->rows, std::string(path)); });
}

fsp_status fsp_summary_write_plot_data(const fsp_summary* summary, const char* path) {
    FSP_REQUIRE(summary);
    FSP_REQUIRE(path);
    return guarded([&] { fsp::emit_plot_data(summary->rows, std::string(path)); });
}

fsp_status fsp_verify(fsp_check_callback callback, void* user, size_t* failures) {
    FSP_REQUIRE(failures);
    return guarded([&] {
        std::size_t failed = 0;
        fsp::run_property_sweeps([&](const fsp::CheckResult& r) {
            if (!r.passed) ++failed;
            if (callback != nullptr) callback(r.name.c_str(), r.passed ? 1 : 0, r.detail.c_str(), user);
        });
        *failures = failed;
    });
}

} // extern "C"
