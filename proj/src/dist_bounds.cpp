#include "ldpcb/dist_bounds.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "ldpcb/entropy.hpp"
#include "ldpcb/error.hpp"
#include "ldpcb/galois.hpp"
#include "ldpcb/optimize.hpp"

namespace ldpcb {

namespace {

constexpr double kDenominatorFloor = 1e-15;
constexpr double kNumeratorFloor = 1e-12;
constexpr double kSmallestDelta = 1e-12;

// 1 - x^e for real e > 0 and x in [-1, 1]; for x < 0 and non-integer e the
// real part of the principal power, |x|^e cos(pi e), is used.
double power_complement(double x, double e) {
    if (x > 0.0) return -std::expm1(e * std::log(x));
    if (x == 0.0) return 1.0;
    if (std::floor(e) == e) return 1.0 - std::pow(x, e);
    return 1.0 - std::pow(-x, e) * std::cos(std::numbers::pi * e);
}

void check_field(std::uint32_t q) {
    if (!is_prime_power(q)) fail(ErrorKind::Unsupported, "field order " + std::to_string(q) + " is not a prime power");
}

void check_delta(double delta) { require(delta > 0.0 && delta <= 1.0, "delta must lie in (0, 1]"); }

// 1 - max over omega in [delta/2, 1] of (h_q(omega) - R_CW) / denominator(omega).
template <class Denominator>
BoundResult maximize_ratio(std::uint32_t q, double delta, const CwRateBound& cw, Denominator&& denominator,
                           const BoundOptions& options) {
    const EntropyBase base(q);
    bool saw_regular_point = false;
    auto objective = [&](double omega) {
        const double numerator = q_ary_entropy(omega, base) - cw.evaluate(q, omega, delta);
        const double den = denominator(omega);
        if (den < kDenominatorFloor)
            return numerator > kNumeratorFloor ? std::numeric_limits<double>::infinity()
                                               : std::numeric_limits<double>::quiet_NaN();
        saw_regular_point = true;
        return numerator / den;
    };
    const double lo = delta / 2.0;
    const double hi = 1.0;
    Maximum best{lo, 0.0};
    if (lo < hi) {
        try {
            best = maximize_over_omega(objective, lo, hi);
        } catch (const Error&) {
            if (saw_regular_point) throw;
        }
    } else {
        best = {lo, objective(lo)};
        if (std::isnan(best.value)) saw_regular_point = false;
    }
    if (!saw_regular_point)
        fail(ErrorKind::Degenerate, "syndrome entropy vanishes on the whole interval [delta/2, 1]");

    BoundResult result{std::clamp(1.0 - best.value, 0.0, 1.0), best.argument, best.value, {}};
    if (options.trace_points >= 2 && lo < hi) {
        const double step = (hi - lo) / static_cast<double>(options.trace_points - 1);
        for (std::size_t i = 0; i < options.trace_points; ++i) {
            const double omega = i + 1 == options.trace_points ? hi : lo + step * static_cast<double>(i);
            result.trace.emplace_back(omega, objective(omega));
        }
    }
    return result;
}

// Argument of the irregular-code syndrome entropy: ((q-1)/q)(1 - rho(1 - q omega/(q-1))).
template <class Complement>
auto spc_argument(std::uint32_t q, Complement&& complement) {
    const double theta = static_cast<double>(q - 1) / q;
    return [=](double omega) {
        const double alpha = 1.0 - omega / theta;
        return theta * complement(std::max(alpha, -1.0));
    };
}

}  // namespace

RowDegreeDistribution::RowDegreeDistribution(std::map<std::uint32_t, double> entries, double sum_tolerance)
    : entries_(std::move(entries)) {
    require(!entries_.empty(), "row degree distribution is empty");
    double total = 0.0;
    for (const auto& [degree, fraction] : entries_) {
        require(degree >= 2, "row degrees must be >= 2");
        require(fraction > 0.0 && fraction <= 1.0, "row degree fractions must lie in (0, 1]");
        total += fraction;
    }
    require(std::abs(total - 1.0) <= sum_tolerance, "row degree fractions must sum to 1");
    for (auto& [degree, fraction] : entries_) fraction /= total;
}

RowDegreeDistribution RowDegreeDistribution::regular(std::uint32_t n0) { return RowDegreeDistribution({{n0, 1.0}}); }

RowDegreeDistribution RowDegreeDistribution::parse(const std::string& text) {
    std::map<std::uint32_t, double> entries;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) fail(ErrorKind::Parse, "rho entry `" + item + "` is not `degree:fraction`");
        std::size_t used = 0;
        long degree = 0;
        double fraction = 0.0;
        try {
            degree = std::stol(item.substr(0, colon), &used);
            if (used != colon) throw std::invalid_argument(item);
            const std::string frac = item.substr(colon + 1);
            const auto [end, ec] = std::from_chars(frac.data(), frac.data() + frac.size(), fraction);
            if (ec != std::errc{} || end != frac.data() + frac.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            fail(ErrorKind::Parse, "rho entry `" + item + "` is not `degree:fraction`");
        }
        if (degree < 2) fail(ErrorKind::Domain, "row degrees must be >= 2");
        if (!entries.emplace(static_cast<std::uint32_t>(degree), fraction).second)
            fail(ErrorKind::Parse, "rho degree " + std::to_string(degree) + " listed twice");
    }
    return RowDegreeDistribution(std::move(entries), 1e-9);
}

double RowDegreeDistribution::mean_degree() const {
    double b = 0.0;
    for (const auto& [degree, fraction] : entries_) b += degree * fraction;
    return b;
}

double RowDegreeDistribution::operator()(double x) const {
    double acc = 0.0;
    for (const auto& [degree, fraction] : entries_) acc += fraction * std::pow(x, static_cast<double>(degree));
    return acc;
}

double RowDegreeDistribution::complement(double x) const {
    double acc = 0.0;
    for (const auto& [degree, fraction] : entries_) acc += fraction * power_complement(x, degree);
    return acc;
}

std::string RowDegreeDistribution::to_string() const {
    std::ostringstream out;
    out.precision(17);
    bool first = true;
    for (const auto& [degree, fraction] : entries_) {
        out << (first ? "" : ",") << degree << ':' << fraction;
        first = false;
    }
    return out.str();
}

CodeDescription parse_code(std::uint32_t q, const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        fail(ErrorKind::Parse, "code `" + text + "` must start with spc:, mds:, file: or rho:");
    const std::string kind = text.substr(0, colon);
    const std::string rest = text.substr(colon + 1);
    auto parse_size = [&](const std::string& s) {
        std::size_t used = 0;
        long long v = -1;
        try {
            v = std::stoll(s, &used);
        } catch (const std::logic_error&) {
            used = 0;
        }
        if (used != s.size() || s.empty() || v < 0) fail(ErrorKind::Parse, "`" + s + "` in code `" + text + "` is not a count");
        return static_cast<std::size_t>(v);
    };
    if (kind == "rho") return RowDegreeDistribution::parse(rest);
    if (kind == "spc") return ConstituentSpec(spc_enumerator(q, parse_size(rest)));
    if (kind == "mds") {
        const auto sep = rest.find(':');
        if (sep == std::string::npos) fail(ErrorKind::Parse, "mds code needs `mds:<n0>:<d0>`");
        return ConstituentSpec(mds_enumerator(q, parse_size(rest.substr(0, sep)), parse_size(rest.substr(sep + 1))));
    }
    if (kind == "file") {
        std::ifstream in(rest);
        if (!in) fail(ErrorKind::Io, "cannot read enumerator file `" + rest + "`");
        std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        ConstituentSpec spec(WeightEnumerator::parse(body));
        require(spec.field_order() == q, "enumerator file is over GF(" + std::to_string(spec.field_order()) +
                                             "), query is over GF(" + std::to_string(q) + ")");
        return spec;
    }
    fail(ErrorKind::Parse, "unknown code kind `" + kind + "`");
}

std::string describe(const CodeDescription& code) {
    if (const auto* spec = std::get_if<ConstituentSpec>(&code))
        return "constituent:" + std::to_string(spec->length()) + "," + std::to_string(spec->dimension()) + "," +
               std::to_string(spec->min_distance());
    return "rho:" + std::get<RowDegreeDistribution>(code).to_string();
}

namespace {

long double p0_tail(const ConstituentSpec& spec, double omega) {
    const auto& g = spec.enumerator();
    const std::size_t n0 = spec.length();
    const double ln_q1 = std::log(static_cast<double>(spec.field_order() - 1));
    if (omega <= 0.0) return 0.0L;
    long double tail = 0.0L;
    if (omega >= 1.0) {
        // only the all-nonzero weight survives
        const double l = g.log_coefficient(n0);
        return std::isfinite(l) ? std::exp(static_cast<long double>(l - static_cast<double>(n0) * ln_q1)) : 0.0L;
    }
    const long double lw = std::log(static_cast<long double>(omega));
    const long double l1w = std::log1p(-static_cast<long double>(omega));
    for (std::size_t i = 1; i <= n0; ++i) {
        const double l = g.log_coefficient(i);
        if (!std::isfinite(l)) continue;
        const long double e = l - static_cast<long double>(i) * ln_q1 + static_cast<long double>(i) * lw +
                              static_cast<long double>(n0 - i) * l1w;
        tail += std::exp(e);
    }
    return tail;
}

void check_omega(double omega) { require(omega >= 0.0 && omega <= 1.0, "omega must lie in [0,1]"); }

}  // namespace

double p0_regular(const ConstituentSpec& spec, double omega) {
    check_omega(omega);
    const long double head = std::pow(1.0L - static_cast<long double>(omega), static_cast<long double>(spec.length()));
    return static_cast<double>(std::clamp(head + p0_tail(spec, omega), 0.0L, 1.0L));
}

double p0_complement(const ConstituentSpec& spec, double omega) {
    check_omega(omega);
    const long double n0 = spec.length();
    const long double head_complement = -std::expm1(n0 * std::log1p(-static_cast<long double>(omega)));
    return static_cast<double>(std::clamp(head_complement - p0_tail(spec, omega), 0.0L, 1.0L));
}

BoundResult rate_bound_regular(const ConstituentSpec& spec, double delta, const CwRateBound& cw,
                               const BoundOptions& options) {
    check_delta(delta);
    const EntropyBase syndrome_base(spec.field_order(), static_cast<unsigned>(spec.checks()));
    auto denominator = [&](double omega) { return q_ary_entropy(p0_complement(spec, omega), syndrome_base); };
    return maximize_ratio(spec.field_order(), delta, cw, denominator, options);
}

BoundResult rate_bound_irregular(std::uint32_t q, const RowDegreeDistribution& rho, double delta,
                                 const CwRateBound& cw, const BoundOptions& options) {
    check_field(q);
    check_delta(delta);
    const EntropyBase base(q);
    const auto argument = spc_argument(q, [&](double alpha) { return rho.complement(alpha); });
    auto denominator = [&](double omega) { return q_ary_entropy(argument(omega), base); };
    return maximize_ratio(q, delta, cw, denominator, options);
}

BoundResult rate_bound(std::uint32_t q, const CodeDescription& code, double delta, const CwRateBound& cw,
                       const BoundOptions& options) {
    if (const auto* spec = std::get_if<ConstituentSpec>(&code)) {
        require(spec->field_order() == q, "constituent code is over a different field");
        return rate_bound_regular(*spec, delta, cw, options);
    }
    return rate_bound_irregular(q, std::get<RowDegreeDistribution>(code), delta, cw, options);
}

Inversion invert_to_delta(std::uint32_t q, const CodeDescription& code, double rate, const CwRateBound& cw,
                          double tolerance) {
    require(rate > 0.0 && rate < 1.0, "rate must lie in (0, 1)");
    require(tolerance > 0.0, "inversion tolerance must be positive");
    auto at = [&](double delta) { return rate_bound(q, code, delta, cw); };

    BoundResult lo_result = at(kSmallestDelta);
    if (lo_result.rate_bound < rate)
        fail(ErrorKind::NoSolution, "the bound forbids rate " + std::to_string(rate) + " for every delta > 0");
    BoundResult hi_result = at(1.0);
    if (hi_result.rate_bound >= rate) return {1.0, hi_result.omega_star, hi_result.rate_bound};

    double lo = kSmallestDelta;
    double hi = 1.0;
    while (hi - lo > tolerance) {
        const double mid = 0.5 * (lo + hi);
        BoundResult r = at(mid);
        if (r.rate_bound >= rate) {
            lo = mid;
            lo_result = std::move(r);
        } else {
            hi = mid;
        }
    }
    return {lo, lo_result.omega_star, lo_result.rate_bound};
}

double gv_delta(std::uint32_t q, double rate) {
    require(q >= 2, "field order must be >= 2");
    require(rate > 0.0 && rate < 1.0, "rate must lie in (0, 1)");
    const EntropyBase base(q);
    double lo = 0.0;
    double hi = base.peak();
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        if (1.0 - q_ary_entropy(mid, base) > rate) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

RegularComparison regular_comparison(std::uint32_t q, const RowDegreeDistribution& rho, double delta,
                                     const CwRateBound& cw) {
    check_field(q);
    check_delta(delta);
    const double b = rho.mean_degree();
    const EntropyBase base(q);
    const BoundResult irregular = rate_bound_irregular(q, rho, delta, cw);
    const auto argument = spc_argument(q, [b](double alpha) { return power_complement(alpha, b); });
    auto denominator = [&](double omega) { return q_ary_entropy(argument(omega), base); };
    const BoundResult regular = maximize_ratio(q, delta, cw, denominator, BoundOptions{});
    // slack covers golden-section rounding between the two objectives
    return {irregular.rate_bound, regular.rate_bound, regular.rate_bound >= irregular.rate_bound - 1e-12};
}

}  // namespace ldpcb
