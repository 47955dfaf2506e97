#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <variant>
#include <vector>

#include "ldpcb/linear_code.hpp"

namespace ldpcb {

/// Seeded generator for graph sampling and edge labels: std::mt19937_64 with
/// bounded draws by rejection, so streams are reproducible across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform integer in [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n);

private:
    std::mt19937_64 engine_;
};

struct Edge {
    std::size_t variable;
    std::size_t check;
    friend bool operator==(const Edge&, const Edge&) = default;
};

class TannerGraph {
public:
    /// Rejects duplicate edges, out-of-range endpoints and checks of degree < 2.
    TannerGraph(std::size_t variables, std::size_t checks, std::vector<Edge> edges);

    std::size_t variables() const noexcept { return variables_; }
    std::size_t checks() const noexcept { return checks_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::vector<std::size_t> check_degrees() const;
    std::vector<std::size_t> variable_degrees() const;
    bool right_regular(std::size_t n0) const;
    /// Indices into edges() touching `check`, in edge order.
    std::vector<std::size_t> check_edges(std::size_t check) const;

    friend bool operator==(const TannerGraph&, const TannerGraph&) = default;

private:
    std::size_t variables_;
    std::size_t checks_;
    std::vector<Edge> edges_;
};

/// Configuration-model sample of an (ell, n0)-regular graph on N variables:
/// variable stubs are Fisher-Yates shuffled against check stubs in order, and
/// samples with a repeated (variable, check) pair are redrawn.
TannerGraph sample_regular_graph(std::size_t ell, std::size_t n0, std::size_t n, Rng& rng);

struct RandomLabels {
    std::uint64_t seed;
};
using EdgeLabels = std::variant<std::vector<std::uint8_t>, RandomLabels>;

/// One row per check with the edge labels as coefficients or, when `h0` is
/// given, m0 rows per check with H0's columns mapped to the check's edges in
/// order and scaled by the edge label.
ParityCheckMatrix build_parity_check(const TannerGraph& graph, std::uint32_t q, const EdgeLabels& labels,
                                     const std::optional<ParityCheckMatrix>& h0 = std::nullopt);

struct SmokeStats {
    std::vector<std::size_t> distances;
    std::vector<double> relative;  // d / N per trial
    double mean;
    double min;
    double max;
};

/// Samples `trials` random (ell, n0)-regular codes over GF(q) with random
/// nonzero labels and computes each exact minimum distance.
SmokeStats ensemble_smoke(std::uint32_t q, std::size_t ell, std::size_t n0, std::size_t n, std::size_t trials,
                          std::uint64_t seed);

}  // namespace ldpcb
