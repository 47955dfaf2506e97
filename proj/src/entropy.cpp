#include "ldpcb/entropy.hpp"

#include <cmath>
#include <string>

#include "ldpcb/error.hpp"

namespace ldpcb {

namespace {

constexpr double kClampSlack = 1e-12;

double clamp_unit(double x, const char* what) {
    if (!(x >= -kClampSlack && x <= 1.0 + kClampSlack))
        fail(ErrorKind::Domain, std::string(what) + " must lie in [0,1], got " + std::to_string(x));
    return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x);
}

// -x ln x with the 0 ln 0 = 0 limit.
double xlnx_neg(double x) { return x > 0.0 ? -x * std::log(x) : 0.0; }

}  // namespace

EntropyBase::EntropyBase(std::uint64_t q) : EntropyBase(q, 1) {}

EntropyBase::EntropyBase(std::uint64_t q, unsigned power) {
    require(q >= 2, "entropy base must be >= 2");
    require(power >= 1, "entropy base exponent must be >= 1");
    ln_q_ = static_cast<double>(power) * std::log(static_cast<double>(q));
    // ln(Q-1) = ln Q + ln(1 - 1/Q); exp(-ln Q) underflows gracefully for huge Q.
    const double inv_q = std::exp(-ln_q_);
    ln_q_minus_1_ = ln_q_ + std::log1p(-inv_q);
    peak_ = 1.0 - inv_q;
}

double q_ary_entropy(double x, const EntropyBase& base) {
    x = clamp_unit(x, "entropy argument");
    const double nats = xlnx_neg(x) + xlnx_neg(1.0 - x) + x * base.ln_q_minus_1();
    return nats / base.ln_q();
}

double entropy_of_distribution(std::span<const double> probs, const EntropyBase& base) {
    double total = 0.0;
    for (double p : probs) {
        require(p >= 0.0, "probabilities must be nonnegative");
        total += p;
    }
    require(std::abs(total - 1.0) <= 1e-12, "probabilities must sum to 1");
    double nats = 0.0;
    for (double p : probs) nats += xlnx_neg(p);
    return nats / base.ln_q();
}

double min_entropy_lower_bound(double p_star, std::uint64_t t, const EntropyBase& base) {
    require(t >= 1, "support size must be >= 1");
    require(p_star > 0.0 && p_star <= 1.0, "p_star must lie in (0,1]");
    // p* >= 1/t, with relative slack for the tight uniform case.
    require(p_star * static_cast<double>(t) >= 1.0 - 1e-12, "p_star must be >= 1/t");
    return -std::log(p_star) / base.ln_q();
}

}  // namespace ldpcb
