#include "ldpcb/ldpcb.h"

#include <cstring>
#include <new>
#include <string>

#include "ldpcb/cw_bounds.hpp"
#include "ldpcb/dist_bounds.hpp"
#include "ldpcb/entropy.hpp"
#include "ldpcb/error.hpp"
#include "ldpcb/tanner.hpp"
#include "ldpcb/weight_enum.hpp"

struct ldpcb_enumerator {
    ldpcb::WeightEnumerator value;
};
struct ldpcb_matrix {
    ldpcb::ParityCheckMatrix value;
};
struct ldpcb_graph {
    ldpcb::TannerGraph value;
};
struct ldpcb_rho {
    ldpcb::RowDegreeDistribution value;
};
struct ldpcb_code {
    ldpcb::CodeDescription value;
};

namespace {

std::string& last_error() {
    thread_local std::string message;
    return message;
}

ldpcb_status to_status(ldpcb::ErrorKind kind) {
    using ldpcb::ErrorKind;
    switch (kind) {
        case ErrorKind::Domain: return LDPCB_ERR_DOMAIN;
        case ErrorKind::NoSolution: return LDPCB_ERR_NO_SOLUTION;
        case ErrorKind::Degenerate: return LDPCB_ERR_DEGENERATE;
        case ErrorKind::Guard: return LDPCB_ERR_GUARD;
        case ErrorKind::Unsupported: return LDPCB_ERR_UNSUPPORTED;
        case ErrorKind::Parse: return LDPCB_ERR_PARSE;
        case ErrorKind::Io: return LDPCB_ERR_IO;
        case ErrorKind::Infeasible: return LDPCB_ERR_INFEASIBLE;
    }
    return LDPCB_ERR_INTERNAL;
}

ldpcb_status failed(ldpcb_status status, const char* message) {
    last_error() = message;
    return status;
}

// Runs `body`, translating exceptions into status codes.
template <class Body>
ldpcb_status guarded(Body&& body) {
    try {
        body();
        return LDPCB_OK;
    } catch (const ldpcb::Error& e) {
        return failed(to_status(e.kind()), e.what());
    } catch (const std::bad_alloc&) {
        return failed(LDPCB_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return failed(LDPCB_ERR_INTERNAL, e.what());
    } catch (...) {
        return failed(LDPCB_ERR_INTERNAL, "unknown error");
    }
}

#define LDPCB_REQUIRE_ARG(ptr) \
    if (!(ptr)) return failed(LDPCB_ERR_NULL_ARGUMENT, "null argument: " #ptr)

ldpcb_status copy_out(const std::string& text, char* buf, std::size_t cap, std::size_t* needed) {
    if (needed) *needed = text.size();
    if (!buf || cap <= text.size()) return failed(LDPCB_ERR_BUFFER_TOO_SMALL, "output buffer too small");
    std::memcpy(buf, text.c_str(), text.size() + 1);
    return LDPCB_OK;
}

const ldpcb::CwRateBound& cw_or_default(const char* name) {
    return ldpcb::cw_bound(name ? name : "composite");
}

}  // namespace

extern "C" {

const char* ldpcb_version(void) { return "1.0.0"; }

const char* ldpcb_last_error(void) { return last_error().c_str(); }

const char* ldpcb_status_name(ldpcb_status status) {
    switch (status) {
        case LDPCB_OK: return "ok";
        case LDPCB_ERR_DOMAIN: return "domain error";
        case LDPCB_ERR_NO_SOLUTION: return "no solution";
        case LDPCB_ERR_DEGENERATE: return "degenerate denominator";
        case LDPCB_ERR_GUARD: return "exhaustive guard exceeded";
        case LDPCB_ERR_UNSUPPORTED: return "unsupported field";
        case LDPCB_ERR_PARSE: return "parse error";
        case LDPCB_ERR_IO: return "i/o error";
        case LDPCB_ERR_INFEASIBLE: return "infeasible graph";
        case LDPCB_ERR_NULL_ARGUMENT: return "null argument";
        case LDPCB_ERR_BUFFER_TOO_SMALL: return "buffer too small";
        case LDPCB_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

ldpcb_status ldpcb_q_ary_entropy(double x, uint64_t q, unsigned power, double* out) {
    LDPCB_REQUIRE_ARG(out);
    return guarded([&] { *out = ldpcb::q_ary_entropy(x, ldpcb::EntropyBase(q, power)); });
}

ldpcb_status ldpcb_entropy_of_distribution(const double* probs, size_t count, uint64_t q, double* out) {
    LDPCB_REQUIRE_ARG(out);
    if (count) LDPCB_REQUIRE_ARG(probs);
    return guarded([&] { *out = ldpcb::entropy_of_distribution({probs, count}, ldpcb::EntropyBase(q)); });
}

ldpcb_status ldpcb_min_entropy_lower_bound(double p_star, uint64_t t, uint64_t q, double* out) {
    LDPCB_REQUIRE_ARG(out);
    return guarded([&] { *out = ldpcb::min_entropy_lower_bound(p_star, t, ldpcb::EntropyBase(q)); });
}

ldpcb_status ldpcb_enumerator_spc(uint32_t q, size_t n0, ldpcb_enumerator** out) {
    LDPCB_REQUIRE_ARG(out);
    return guarded([&] { *out = new ldpcb_enumerator{ldpcb::spc_enumerator(q, n0)}; });
}

ldpcb_status ldpcb_enumerator_mds(uint32_t q, size_t n0, size_t d0, ldpcb_enumerator** out) {
    LDPCB_REQUIRE_ARG(out);
    return guarded([&] { *out = new ldpcb_enumerator{ldpcb::mds_enumerator(q, n0, d0)}; });
}

ldpcb_status ldpcb_enumerator_parse(const char* text, ldpcb_enumerator** out) {
    LDPCB_REQUIRE_ARG(text);
    LDPCB_REQUIRE_ARG(out);
    return guarded([&] { *out = new ldpcb_enumerator{ldpcb::WeightEnumerator::parse(text)}; });
}

void ldpcb_enumerator_free(ldpcb_enumerator* e) { delete e; }
size_t ldpcb_enumerator_length(const ldpcb_enumerator* e) { return e ? e->value.length() : 0; }
uint32_t ldpcb_enumerator_field_order(const ldpcb_enumerator* e) { return e ? e->value.field_order() : 0; }
size_t ldpcb_enumerator_dimension(const ldpcb_enumerator* e) { return e ? e->value.dimension() : 0; }
size_t ldpcb_enumerator_min_distance(const ldpcb_enumerator* e) { return e ? e->value.min_distance() : 0; }

int ldpcb_enumerator_equal(const ldpcb_enumerator* a, const ldpcb_enumerator* b) {
    return a && b && a->value == b->value;
}

ldpcb_status ldpcb_enumerator_coefficient(const ldpcb_enumerator* e, size_t weight, char* buf, size_t cap,
                                          size_t* needed) {
    LDPCB_REQUIRE_ARG(e);
    if (weight > e->value.length()) return failed(LDPCB_ERR_DOMAIN, "weight exceeds the code length");
    return copy_out(e->value[weight].str(), buf, cap, needed);
}

ldpcb_status ldpcb_enumerator_to_text(const ldpcb_enumerator* e, char* buf, size_t cap, size_t* needed) {
    LDPCB_REQUIRE_ARG(e);
    return copy_out(e->value.to_text(), buf, cap, needed);
}

ldpcb_status ldpcb_enumerator_evaluate(const ldpcb_enumerator* e, double s, double* out) {
    LDPCB_REQUIRE_ARG(e);
    LDPCB_REQUIRE_ARG(out);
    return guarded([&] { *out = ldpcb::evaluate_enumerator(e->value, s); });
}

ldpcb_status ldpcb_spc_closed_form(uint32_t q, size_t n0, double s, double* out) {
    LDPCB_REQUIRE_ARG(out);
    return guarded([&] { *out = ldpcb::spc_closed_form(q, n0, s); });
}

ldpcb_status ldpcb_matrix_create(size_t rows, size_t cols, uint32_t q, const uint8_t* entries, ldpcb_matrix** out) {
    LDPCB_REQUIRE_ARG(out);
    if (rows != 0 && cols != 0) LDPCB_REQUIRE_ARG(entries);
    return guarded([&] {
        std::vector<std::uint8_t> data(entries, entries + rows * cols);
        *out = new ldpcb_matrix{ldpcb::ParityCheckMatrix(rows, cols, q, std::move(data))};
    });
}

ldpcb_status ldpcb_matrix_parse(const char* text, ldpcb_matrix** out) {
    LDPCB_REQUIRE_ARG(text);
    LDPCB_REQUIRE_ARG(out);
    return guarded([&] { *out = new ldpcb_matrix{ldpcb::ParityCheckMatrix::parse(text)}; });
}

void ldpcb_matrix_free(ldpcb_matrix* m) { delete m; }
size_t ldpcb_matrix_rows(const ldpcb_matrix* m) { return m ? m->value.rows() : 0; }
size_t ldpcb_matrix_cols(const ldpcb_matrix* m) { return m ? m->value.cols() : 0; }
uint32_t ldpcb_matrix_field_order(const ldpcb_matrix* m) { return m ? m->value.field_order() : 0; }

ldpcb_status ldpcb_matrix_entry(const ldpcb_matrix* m, size_t row, size_t col, uint8_t* out) {
    LDPCB_REQUIRE_ARG(m);
    LDPCB_REQUIRE_ARG(out);
    if (row >= m->value.rows() || col >= m->value.cols()) return failed(LDPCB_ERR_DOMAIN, "matrix index out of range");
    *out = m->value.at(row, col);
    return LDPCB_OK;
}

ldpcb_status ldpcb_matrix_to_text(const ldpcb_matrix* m, char* buf, size_t cap, size_t* needed) {
    LDPCB_REQUIRE_ARG(m);
    return copy_out(m->value.to_text(), buf, cap, needed);
}

ldpcb_status ldpcb_matrix_rank(const ldpcb_matrix* m, size_t* out) {
    LDPCB_REQUIRE_ARG(m);
    LDPCB_REQUIRE_ARG(out);
    return guarded([&] { *out = ldpcb::rank(m->value); });
}

ldpcb_status ldpcb_matrix_syndrome(const ldpcb_matrix* m, const uint8_t* word, size_t length, uint8_t* out) {
    LDPCB_REQUIRE_ARG(m);
    LDPCB_REQUIRE_ARG(word);
    if (m->value.rows()) LDPCB_REQUIRE_ARG(out);
    return guarded([&] {
        const auto s = ldpcb::syndrome(m->value, {word, length});
        std::copy(s.begin(), s.end(), out);
    });
}

ldpcb_status ldpcb_matrix_min_distance(const ldpcb_matrix* m, int64_t* out) {
    LDPCB_REQUIRE_ARG(m);
    LDPCB_REQUIRE_ARG(out);
    return guarded([&] {
        const auto d = ldpcb::min_distance_exhaustive(m->value);
        *out = d ? static_cast<int64_t>(*d) : -1;
    });
}

ldpcb_status ldpcb_matrix_enumerator(const ldpcb_matrix* m, ldpcb_enumerator** out) {
    LDPCB_REQUIRE_ARG(m);
    LDPCB_REQUIRE_ARG(out);
    return guarded([&] { *out = new ldpcb_enumerator{ldpcb::brute_force_enumerator(m->value)}; });
}

ldpcb_status ldpcb_graph_create(size_t variables, size_t checks, const size_t* edge_variables,
                                const size_t* edge_checks, size_t edge_count, ldpcb_graph** out) {
    LDPCB_REQUIRE_ARG(out);
    if (edge_count) {
        LDPCB_REQUIRE_ARG(edge_variables);
        LDPCB_REQUIRE_ARG(edge_checks);
    }
    return guarded([&] {
        std::vector<ldpcb::Edge> edges;
        for (size_t i = 0; i < edge_count; ++i) edges.push_back({edge_variables[i], edge_checks[i]});
        *out = new ldpcb_graph{ldpcb::TannerGraph(variables, checks, std::move(edges))};
    });
}

ldpcb_status ldpcb_graph_sample_regular(size_t ell, size_t n0, size_t n, uint64_t seed, ldpcb_graph** out) {
    LDPCB_REQUIRE_ARG(out);
    return guarded([&] {
        ldpcb::Rng rng(seed);
        *out = new ldpcb_graph{ldpcb::sample_regular_graph(ell, n0, n, rng)};
    });
}

void ldpcb_graph_free(ldpcb_graph* g) { delete g; }
size_t ldpcb_graph_variables(const ldpcb_graph* g) { return g ? g->value.variables() : 0; }
size_t ldpcb_graph_checks(const ldpcb_graph* g) { return g ? g->value.checks() : 0; }
size_t ldpcb_graph_edge_count(const ldpcb_graph* g) { return g ? g->value.edges().size() : 0; }

ldpcb_status ldpcb_graph_edge(const ldpcb_graph* g, size_t index, size_t* variable, size_t* check) {
    LDPCB_REQUIRE_ARG(g);
    LDPCB_REQUIRE_ARG(variable);
    LDPCB_REQUIRE_ARG(check);
    if (index >= g->value.edges().size()) return failed(LDPCB_ERR_DOMAIN, "edge index out of range");
    *variable = g->value.edges()[index].variable;
    *check = g->value.edges()[index].check;
    return LDPCB_OK;
}

ldpcb_status ldpcb_graph_parity_check(const ldpcb_graph* g, uint32_t q, const uint8_t* labels, uint64_t seed,
                                      const ldpcb_matrix* constituent, ldpcb_matrix** out) {
    LDPCB_REQUIRE_ARG(g);
    LDPCB_REQUIRE_ARG(out);
    return guarded([&] {
        ldpcb::EdgeLabels edge_labels = ldpcb::RandomLabels{seed};
        if (labels) edge_labels = std::vector<std::uint8_t>(labels, labels + g->value.edges().size());
        std::optional<ldpcb::ParityCheckMatrix> h0;
        if (constituent) h0 = constituent->value;
        *out = new ldpcb_matrix{ldpcb::build_parity_check(g->value, q, edge_labels, h0)};
    });
}

ldpcb_status ldpcb_ensemble_smoke(uint32_t q, size_t ell, size_t n0, size_t n, size_t trials, uint64_t seed,
                                  size_t* distances, ldpcb_smoke_stats* out) {
    LDPCB_REQUIRE_ARG(out);
    return guarded([&] {
        const auto stats = ldpcb::ensemble_smoke(q, ell, n0, n, trials, seed);
        if (distances) std::copy(stats.distances.begin(), stats.distances.end(), distances);
        *out = {stats.mean, stats.min, stats.max};
    });
}

ldpcb_status ldpcb_rho_create(const uint32_t* degrees, const double* fractions, size_t count, ldpcb_rho** out) {
    LDPCB_REQUIRE_ARG(out);
    if (count) {
        LDPCB_REQUIRE_ARG(degrees);
        LDPCB_REQUIRE_ARG(fractions);
    }
    return guarded([&] {
        std::map<std::uint32_t, double> entries;
        for (size_t i = 0; i < count; ++i)
            ldpcb::require(entries.emplace(degrees[i], fractions[i]).second, "row degree listed twice");
        *out = new ldpcb_rho{ldpcb::RowDegreeDistribution(std::move(entries), 1e-9)};
    });
}

ldpcb_status ldpcb_rho_parse(const char* text, ldpcb_rho** out) {
    LDPCB_REQUIRE_ARG(text);
    LDPCB_REQUIRE_ARG(out);
    return guarded([&] { *out = new ldpcb_rho{ldpcb::RowDegreeDistribution::parse(text)}; });
}

void ldpcb_rho_free(ldpcb_rho* r) { delete r; }

ldpcb_status ldpcb_rho_mean_degree(const ldpcb_rho* r, double* out) {
    LDPCB_REQUIRE_ARG(r);
    LDPCB_REQUIRE_ARG(out);
    *out = r->value.mean_degree();
    return LDPCB_OK;
}

ldpcb_status ldpcb_rho_evaluate(const ldpcb_rho* r, double x, double* out) {
    LDPCB_REQUIRE_ARG(r);
    LDPCB_REQUIRE_ARG(out);
    *out = r->value(x);
    return LDPCB_OK;
}

ldpcb_status ldpcb_code_parse(uint32_t q, const char* text, ldpcb_code** out) {
    LDPCB_REQUIRE_ARG(text);
    LDPCB_REQUIRE_ARG(out);
    return guarded([&] { *out = new ldpcb_code{ldpcb::parse_code(q, text)}; });
}

ldpcb_status ldpcb_code_from_constituent(const ldpcb_enumerator* e, ldpcb_code** out) {
    LDPCB_REQUIRE_ARG(e);
    LDPCB_REQUIRE_ARG(out);
    return guarded([&] { *out = new ldpcb_code{ldpcb::ConstituentSpec(e->value)}; });
}

ldpcb_status ldpcb_code_from_rho(const ldpcb_rho* r, ldpcb_code** out) {
    LDPCB_REQUIRE_ARG(r);
    LDPCB_REQUIRE_ARG(out);
    return guarded([&] { *out = new ldpcb_code{r->value}; });
}

void ldpcb_code_free(ldpcb_code* c) { delete c; }

ldpcb_status ldpcb_code_describe(const ldpcb_code* c, char* buf, size_t cap, size_t* needed) {
    LDPCB_REQUIRE_ARG(c);
    return copy_out(ldpcb::describe(c->value), buf, cap, needed);
}

size_t ldpcb_cw_bound_count(void) { return ldpcb::cw_bound_names().size(); }

const char* ldpcb_cw_bound_name(size_t index) {
    static const std::vector<std::string> names = ldpcb::cw_bound_names();
    return index < names.size() ? names[index].c_str() : nullptr;
}

ldpcb_status ldpcb_cw_evaluate(const char* name, uint32_t q, double omega, double delta, double* out) {
    LDPCB_REQUIRE_ARG(name);
    LDPCB_REQUIRE_ARG(out);
    return guarded([&] { *out = ldpcb::cw_bound(name).evaluate(q, omega, delta); });
}

ldpcb_status ldpcb_p0_regular(const ldpcb_enumerator* constituent, double omega, double* out) {
    LDPCB_REQUIRE_ARG(constituent);
    LDPCB_REQUIRE_ARG(out);
    return guarded([&] { *out = ldpcb::p0_regular(ldpcb::ConstituentSpec(constituent->value), omega); });
}

ldpcb_status ldpcb_rate_bound_regular(const ldpcb_enumerator* constituent, double delta, const char* cw,
                                      ldpcb_bound_result* out) {
    LDPCB_REQUIRE_ARG(constituent);
    LDPCB_REQUIRE_ARG(out);
    return guarded([&] {
        const auto r = ldpcb::rate_bound_regular(ldpcb::ConstituentSpec(constituent->value), delta, cw_or_default(cw));
        *out = {r.rate_bound, r.omega_star, r.objective};
    });
}

ldpcb_status ldpcb_rate_bound_irregular(uint32_t q, const ldpcb_rho* rho, double delta, const char* cw,
                                        ldpcb_bound_result* out) {
    LDPCB_REQUIRE_ARG(rho);
    LDPCB_REQUIRE_ARG(out);
    return guarded([&] {
        const auto r = ldpcb::rate_bound_irregular(q, rho->value, delta, cw_or_default(cw));
        *out = {r.rate_bound, r.omega_star, r.objective};
    });
}

ldpcb_status ldpcb_rate_bound(uint32_t q, const ldpcb_code* code, double delta, const char* cw,
                              ldpcb_bound_result* out) {
    LDPCB_REQUIRE_ARG(code);
    LDPCB_REQUIRE_ARG(out);
    return guarded([&] {
        const auto r = ldpcb::rate_bound(q, code->value, delta, cw_or_default(cw));
        *out = {r.rate_bound, r.omega_star, r.objective};
    });
}

ldpcb_status ldpcb_rate_bound_trace(uint32_t q, const ldpcb_code* code, double delta, const char* cw, size_t points,
                                    double* omegas, double* values) {
    LDPCB_REQUIRE_ARG(code);
    LDPCB_REQUIRE_ARG(omegas);
    LDPCB_REQUIRE_ARG(values);
    if (points < 2) return failed(LDPCB_ERR_DOMAIN, "trace needs at least 2 points");
    return guarded([&] {
        const auto r = ldpcb::rate_bound(q, code->value, delta, cw_or_default(cw), {.trace_points = points});
        for (size_t i = 0; i < r.trace.size(); ++i) {
            omegas[i] = r.trace[i].first;
            values[i] = r.trace[i].second;
        }
    });
}

ldpcb_status ldpcb_invert_to_delta(uint32_t q, const ldpcb_code* code, double rate, const char* cw,
                                   ldpcb_inversion* out) {
    LDPCB_REQUIRE_ARG(code);
    LDPCB_REQUIRE_ARG(out);
    return guarded([&] {
        const auto r = ldpcb::invert_to_delta(q, code->value, rate, cw_or_default(cw));
        *out = {r.delta, r.omega_star, r.rate_bound};
    });
}

ldpcb_status ldpcb_gv_delta(uint32_t q, double rate, double* out) {
    LDPCB_REQUIRE_ARG(out);
    return guarded([&] { *out = ldpcb::gv_delta(q, rate); });
}

ldpcb_status ldpcb_regular_comparison(uint32_t q, const ldpcb_rho* rho, double delta, const char* cw,
                                      double* irregular_bound, double* regular_bound, int* dominates) {
    LDPCB_REQUIRE_ARG(rho);
    return guarded([&] {
        const auto c = ldpcb::regular_comparison(q, rho->value, delta, cw_or_default(cw));
        if (irregular_bound) *irregular_bound = c.irregular_bound;
        if (regular_bound) *regular_bound = c.regular_bound;
        if (dominates) *dominates = c.dominates ? 1 : 0;
    });
}

}  // extern "C"
