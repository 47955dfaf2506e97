#include "ldpcb/tanner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "ldpcb/error.hpp"
#include "ldpcb/galois.hpp"

namespace ldpcb {

std::uint64_t Rng::below(std::uint64_t n) {
    require(n >= 1, "empty draw range");
    constexpr std::uint64_t top = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = top - (top % n + 1) % n;  // largest multiple of n, minus one
    std::uint64_t x = engine_();
    while (x > limit) x = engine_();
    return x % n;
}

TannerGraph::TannerGraph(std::size_t variables, std::size_t checks, std::vector<Edge> edges)
    : variables_(variables), checks_(checks), edges_(std::move(edges)) {
    require(variables >= 1, "graph needs at least one variable node");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : edges_) {
        require(e.variable < variables_ && e.check < checks_, "edge endpoint out of range");
        require(seen.emplace(e.variable, e.check).second, "duplicate edge");
    }
    for (auto d : check_degrees()) require(d >= 2, "every check node needs degree >= 2");
}

std::vector<std::size_t> TannerGraph::check_degrees() const {
    std::vector<std::size_t> d(checks_, 0);
    for (const auto& e : edges_) ++d[e.check];
    return d;
}

std::vector<std::size_t> TannerGraph::variable_degrees() const {
    std::vector<std::size_t> d(variables_, 0);
    for (const auto& e : edges_) ++d[e.variable];
    return d;
}

bool TannerGraph::right_regular(std::size_t n0) const {
    const auto d = check_degrees();
    return std::all_of(d.begin(), d.end(), [n0](std::size_t v) { return v == n0; });
}

std::vector<std::size_t> TannerGraph::check_edges(std::size_t check) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].check == check) out.push_back(i);
    return out;
}

TannerGraph sample_regular_graph(std::size_t ell, std::size_t n0, std::size_t n, Rng& rng) {
    if (ell < 1 || n0 < 2 || n < n0 || (ell * n) % n0 != 0)
        fail(ErrorKind::Infeasible, "need ell >= 1, 2 <= n0 <= N and n0 | ell*N");
    const std::size_t m = ell * n / n0;
    if (ell > m) fail(ErrorKind::Infeasible, "ell exceeds the number of checks; duplicate edges are unavoidable");
    std::vector<std::size_t> stubs;
    for (std::size_t v = 0; v < n; ++v) stubs.insert(stubs.end(), ell, v);
    constexpr int kMaxAttempts = 10000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        for (std::size_t i = stubs.size() - 1; i > 0; --i) std::swap(stubs[i], stubs[rng.below(i + 1)]);
        std::vector<Edge> edges;
        std::set<std::pair<std::size_t, std::size_t>> seen;
        bool ok = true;
        for (std::size_t s = 0; s < stubs.size() && ok; ++s) {
            const Edge e{stubs[s], s / n0};
            ok = seen.emplace(e.variable, e.check).second;
            edges.push_back(e);
        }
        if (ok) return TannerGraph(n, m, std::move(edges));
    }
    fail(ErrorKind::Infeasible, "no simple graph found after " + std::to_string(kMaxAttempts) + " draws");
}

ParityCheckMatrix build_parity_check(const TannerGraph& graph, std::uint32_t q, const EdgeLabels& labels,
                                     const std::optional<ParityCheckMatrix>& h0) {
    const FieldTable field(q);
    std::vector<std::uint8_t> edge_labels;
    if (const auto* fixed = std::get_if<std::vector<std::uint8_t>>(&labels)) {
        require(fixed->size() == graph.edges().size(), "one label per edge required");
        for (auto v : *fixed) {
            require(v != 0, "edge label 0 would delete the edge");
            require(v < q, "edge label outside GF(q)");
        }
        edge_labels = *fixed;
    } else {
        Rng rng(std::get<RandomLabels>(labels).seed);
        for (std::size_t i = 0; i < graph.edges().size(); ++i)
            edge_labels.push_back(static_cast<std::uint8_t>(1 + rng.below(q - 1)));
    }
    const std::size_t rows_per_check = h0 ? h0->rows() : 1;
    if (h0) require(h0->field_order() == q, "constituent parity-check is over a different field");
    ParityCheckMatrix h(graph.checks() * rows_per_check, graph.variables(), q);
    for (std::size_t c = 0; c < graph.checks(); ++c) {
        const auto incident = graph.check_edges(c);
        if (h0) require(incident.size() == h0->cols(), "check degree differs from the constituent length");
        for (std::size_t r = 0; r < rows_per_check; ++r) {
            for (std::size_t j = 0; j < incident.size(); ++j) {
                const Edge& e = graph.edges()[incident[j]];
                const std::uint8_t base = h0 ? h0->at(r, j) : 1;
                h.set(c * rows_per_check + r, e.variable, field.mul(base, edge_labels[incident[j]]));
            }
        }
    }
    return h;
}

SmokeStats ensemble_smoke(std::uint32_t q, std::size_t ell, std::size_t n0, std::size_t n, std::size_t trials,
                          std::uint64_t seed) {
    if (!is_supported_field(q)) fail(ErrorKind::Unsupported, "unsupported field order " + std::to_string(q));
    require(trials >= 1, "need at least one trial");
    require(ell < n0, "need ell < n0 for a nonzero code");
    if (n < n0 || (ell * n) % n0 != 0) fail(ErrorKind::Infeasible, "need n0 <= N and n0 | ell*N");
    const std::size_t m = ell * n / n0;
    if (static_cast<double>(n - m) * std::log10(static_cast<double>(q)) > 7.0 + 1e-12)
        fail(ErrorKind::Guard, "q^(N-M) exceeds the 10^7 exhaustive guard");

    Rng rng(seed);
    SmokeStats stats{{}, {}, 0.0, 1.0, 0.0};
    for (std::size_t t = 0; t < trials; ++t) {
        const TannerGraph graph = sample_regular_graph(ell, n0, n, rng);
        const std::uint64_t label_seed = rng.below(std::numeric_limits<std::uint64_t>::max());
        const ParityCheckMatrix h = build_parity_check(graph, q, RandomLabels{label_seed});
        const auto d = min_distance_exhaustive(h);
        // ell < n0 leaves at least N - M > 0 free coordinates
        const std::size_t distance = d.value_or(n);
        const double rel = static_cast<double>(distance) / static_cast<double>(n);
        stats.distances.push_back(distance);
        stats.relative.push_back(rel);
        stats.mean += rel;
        stats.min = std::min(stats.min, rel);
        stats.max = std::max(stats.max, rel);
    }
    stats.mean /= static_cast<double>(trials);
    return stats;
}

}  // namespace ldpcb
