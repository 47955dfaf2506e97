#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ldpcb/cw_bounds.hpp"
#include "ldpcb/weight_enum.hpp"

namespace ldpcb {

/// Check-node degree polynomial rho(x) = sum rho_i x^i.
class RowDegreeDistribution {
public:
    /// Fractions must be positive and sum to 1 within `sum_tolerance`; they
    /// are renormalized to sum to 1. Degrees must be >= 2.
    explicit RowDegreeDistribution(std::map<std::uint32_t, double> entries, double sum_tolerance = 1e-12);

    /// x^n0.
    static RowDegreeDistribution regular(std::uint32_t n0);
    /// Parses `i:frac,i:frac,...` (fractions summing to 1 within 1e-9).
    static RowDegreeDistribution parse(const std::string& text);

    const std::map<std::uint32_t, double>& entries() const noexcept { return entries_; }
    std::uint32_t min_degree() const { return entries_.begin()->first; }
    std::uint32_t max_degree() const { return entries_.rbegin()->first; }
    /// b = sum i rho_i.
    double mean_degree() const;
    double operator()(double x) const;
    /// 1 - rho(x), accurate for x close to 1.
    double complement(double x) const;
    std::string to_string() const;

private:
    std::map<std::uint32_t, double> entries_;
};

using CodeDescription = std::variant<ConstituentSpec, RowDegreeDistribution>;

/// Parses `spc:<n0>`, `mds:<n0>:<d0>`, `file:<enumerator path>` (constituent
/// codes over GF(q)) or `rho:<i:frac,...>` (irregular SPC ensembles).
CodeDescription parse_code(std::uint32_t q, const std::string& text);

/// Canonical text form: `rho:...` or `constituent:<n0>,<k>,<d0>`.
std::string describe(const CodeDescription& code);

struct BoundResult {
    double rate_bound;
    double omega_star;
    double objective;  // value of the maximized ratio at omega_star
    std::vector<std::pair<double, double>> trace;
};

struct BoundOptions {
    /// When nonzero, the objective is sampled on this many uniform points and
    /// returned in BoundResult::trace.
    std::size_t trace_points = 0;
};

/// Probability that a constituent's syndrome vanishes when the word is drawn
/// uniformly from weight-omega vectors, as N grows:
/// sum_i A(i) omega^i (1-omega)^(n0-i) (q-1)^-i.
double p0_regular(const ConstituentSpec& spec, double omega);
/// 1 - p0_regular, computed without cancellation for small omega.
double p0_complement(const ConstituentSpec& spec, double omega);

/// Generalized LDPC codes with a right-regular Tanner graph and a common
/// constituent code: 1 - max over omega in [delta/2, 1] of
/// (h_q(omega) - R_CW) / h_{q^m0}(1 - p0(omega)), clamped to [0,1].
BoundResult rate_bound_regular(const ConstituentSpec& spec, double delta, const CwRateBound& cw,
                               const BoundOptions& options = {});

/// Irregular LDPC codes (SPC checks) with row degree distribution rho:
/// denominator h_q(((q-1)/q)(1 - rho(1 - q omega/(q-1)))).
BoundResult rate_bound_irregular(std::uint32_t q, const RowDegreeDistribution& rho, double delta,
                                 const CwRateBound& cw, const BoundOptions& options = {});

BoundResult rate_bound(std::uint32_t q, const CodeDescription& code, double delta, const CwRateBound& cw,
                       const BoundOptions& options = {});

struct Inversion {
    double delta;
    double omega_star;
    double rate_bound;  // bound evaluated at `delta`
};

inline constexpr double kInversionTolerance = 1e-9;

/// Largest delta in (0, 1] whose rate bound still admits `rate`, by bisection.
/// Throws NoSolution when even delta -> 0+ forbids the rate.
Inversion invert_to_delta(std::uint32_t q, const CodeDescription& code, double rate, const CwRateBound& cw,
                          double tolerance = kInversionTolerance);

/// Gilbert-Varshamov relative distance: the delta in (0, (q-1)/q) with
/// 1 - h_q(delta) = rate.
double gv_delta(std::uint32_t q, double rate);

struct RegularComparison {
    double irregular_bound;
    double regular_bound;  // rho_reg(x) = x^b, b the mean degree
    bool dominates;        // regular_bound >= irregular_bound
};

RegularComparison regular_comparison(std::uint32_t q, const RowDegreeDistribution& rho, double delta,
                                     const CwRateBound& cw);

}  // namespace ldpcb
