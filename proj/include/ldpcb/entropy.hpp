#pragma once

#include <cstdint>
#include <span>

namespace ldpcb {

/// Logarithm base for entropies. Stored through ln(Q) and ln(Q-1) so that
/// bases like q^m0 (far beyond 64-bit range) stay representable.
class EntropyBase {
public:
    explicit EntropyBase(std::uint64_t q);
    /// Base q^power.
    EntropyBase(std::uint64_t q, unsigned power);

    double ln_q() const noexcept { return ln_q_; }
    double ln_q_minus_1() const noexcept { return ln_q_minus_1_; }
    /// (Q-1)/Q, the point where the Q-ary entropy peaks.
    double peak() const noexcept { return peak_; }

private:
    double ln_q_;
    double ln_q_minus_1_;
    double peak_;
};

/// h_Q(x) = -x log_Q x - (1-x) log_Q (1-x) + x log_Q (Q-1).
/// Inputs within 1e-12 of [0,1] are clamped.
double q_ary_entropy(double x, const EntropyBase& base);

/// Shannon entropy (base Q) of a finite distribution.
double entropy_of_distribution(std::span<const double> probs, const EntropyBase& base);

/// -log_Q(p_star): lower bound on the entropy of any variable over t values
/// whose atoms never exceed p_star.
double min_entropy_lower_bound(double p_star, std::uint64_t t, const EntropyBase& base);

}  // namespace ldpcb
