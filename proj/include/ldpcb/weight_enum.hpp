#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ldpcb/linear_code.hpp"

namespace ldpcb {

using BigInt = boost::multiprecision::cpp_int;

/// Exact weight distribution A(0..n0) of a linear [n0, k] code over GF(q).
class WeightEnumerator {
public:
    /// Validates A(0) = 1 and sum A(i) = q^k.
    WeightEnumerator(std::uint32_t q, std::size_t k, std::vector<BigInt> coeffs);

    std::size_t length() const noexcept { return coeffs_.size() - 1; }
    std::uint32_t field_order() const noexcept { return q_; }
    std::size_t dimension() const noexcept { return k_; }
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
    const BigInt& operator[](std::size_t i) const { return coeffs_.at(i); }
    /// Smallest nonzero weight; length()+1 when the code is {0}.
    std::size_t min_distance() const;
    /// ln A(i), -inf where A(i) = 0.
    double log_coefficient(std::size_t i) const { return log_coeffs_.at(i); }

    /// `n0 q k` on the first line, the n0+1 coefficients on the second.
    std::string to_text() const;
    static WeightEnumerator parse(const std::string& text);

    friend bool operator==(const WeightEnumerator& a, const WeightEnumerator& b) {
        return a.q_ == b.q_ && a.k_ == b.k_ && a.coeffs_ == b.coeffs_;
    }

private:
    std::uint32_t q_;
    std::size_t k_;
    std::vector<BigInt> coeffs_;
    std::vector<double> log_coeffs_;
};

/// Natural log of a nonnegative big integer without overflowing double.
double log_of(const BigInt& v);

/// Weight distribution of an [n0, n0-d0+1, d0] MDS code over GF(q).
WeightEnumerator mds_enumerator(std::uint32_t q, std::size_t n0, std::size_t d0);

/// Weight distribution of the single parity-check code (MDS with d0 = 2).
WeightEnumerator spc_enumerator(std::uint32_t q, std::size_t n0);

/// G(s) = sum A(i) s^i, summed in the log domain.
double evaluate_enumerator(const WeightEnumerator& g, double s);

/// (1/q)(1+(q-1)s)^n0 + ((q-1)/q)(1-s)^n0.
double spc_closed_form(std::uint32_t q, std::size_t n0, double s);

/// Tallies codeword weights of the null space of H by exhaustive enumeration.
WeightEnumerator brute_force_enumerator(const ParityCheckMatrix& h);

/// An [n0, R0 = k/n0, d0] constituent code with its enumerator.
class ConstituentSpec {
public:
    explicit ConstituentSpec(WeightEnumerator enumerator);

    std::uint32_t field_order() const noexcept { return enumerator_.field_order(); }
    std::size_t length() const noexcept { return enumerator_.length(); }
    std::size_t dimension() const noexcept { return enumerator_.dimension(); }
    /// m0 = (1 - R0) n0.
    std::size_t checks() const noexcept { return length() - dimension(); }
    double rate() const noexcept { return static_cast<double>(dimension()) / static_cast<double>(length()); }
    std::size_t min_distance() const { return enumerator_.min_distance(); }
    const WeightEnumerator& enumerator() const noexcept { return enumerator_; }

private:
    WeightEnumerator enumerator_;
};

}  // namespace ldpcb
