#include "ldpcb/weight_enum.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "ldpcb/error.hpp"
#include "ldpcb/galois.hpp"

namespace ldpcb {

namespace {

BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt power(std::uint64_t base, std::size_t exp) {
    BigInt r = 1;
    for (std::size_t i = 0; i < exp; ++i) r *= base;
    return r;
}

double log_sum_exp(const std::vector<double>& logs) {
    double peak = -std::numeric_limits<double>::infinity();
    for (double v : logs) peak = std::max(peak, v);
    if (!std::isfinite(peak)) return peak;
    double acc = 0.0;
    for (double v : logs) acc += std::exp(v - peak);
    return peak + std::log(acc);
}

}  // namespace

double log_of(const BigInt& v) {
    if (v <= 0) return -std::numeric_limits<double>::infinity();
    const std::size_t bits = boost::multiprecision::msb(v);
    if (bits < 1000) return std::log(v.convert_to<double>());
    const std::size_t shift = bits - 60;
    const BigInt top = v >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

WeightEnumerator::WeightEnumerator(std::uint32_t q, std::size_t k, std::vector<BigInt> coeffs)
    : q_(q), k_(k), coeffs_(std::move(coeffs)) {
    require(q >= 2, "field order must be >= 2");
    require(coeffs_.size() >= 2, "enumerator needs n0 >= 1");
    require(k <= length(), "dimension exceeds length");
    require(coeffs_[0] == 1, "A(0) must be 1 for a linear code");
    BigInt total = 0;
    for (const auto& a : coeffs_) {
        require(a >= 0, "coefficients must be nonnegative");
        total += a;
    }
    require(total == power(q, k), "coefficients must sum to q^k");
    log_coeffs_.reserve(coeffs_.size());
    for (const auto& a : coeffs_) log_coeffs_.push_back(log_of(a));
}

std::size_t WeightEnumerator::min_distance() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return i;
    return coeffs_.size();
}

std::string WeightEnumerator::to_text() const {
    std::ostringstream out;
    out << length() << ' ' << q_ << ' ' << k_ << '\n';
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out << (i ? " " : "") << coeffs_[i];
    out << '\n';
    return out.str();
}

WeightEnumerator WeightEnumerator::parse(const std::string& text) {
    std::istringstream in(text);
    long long n0 = 0, q = 0, k = -1;
    if (!(in >> n0 >> q >> k) || n0 < 1 || q < 2 || k < 0)
        fail(ErrorKind::Parse, "enumerator header must be `n0 q k` with n0 >= 1, q >= 2, k >= 0");
    std::vector<BigInt> coeffs;
    for (long long i = 0; i <= n0; ++i) {
        std::string tok;
        if (!(in >> tok)) fail(ErrorKind::Parse, "enumerator needs n0+1 coefficients");
        for (char c : tok)
            if (c < '0' || c > '9') fail(ErrorKind::Parse, "coefficient `" + tok + "` is not a base-10 integer");
        coeffs.emplace_back(tok);
    }
    std::string extra;
    if (in >> extra) fail(ErrorKind::Parse, "trailing data after enumerator coefficients");
    try {
        return {static_cast<std::uint32_t>(q), static_cast<std::size_t>(k), std::move(coeffs)};
    } catch (const Error& e) {
        fail(ErrorKind::Parse, e.what());
    }
}

WeightEnumerator mds_enumerator(std::uint32_t q, std::size_t n0, std::size_t d0) {
    if (!is_prime_power(q)) fail(ErrorKind::Unsupported, "field order " + std::to_string(q) + " is not a prime power");
    require(n0 >= 1, "length must be >= 1");
    require(d0 >= 1 && d0 <= n0, "MDS distance must lie in [1, n0]");
    std::vector<BigInt> q_pow(n0 + 1, 1);
    for (std::size_t i = 1; i <= n0; ++i) q_pow[i] = q_pow[i - 1] * q;
    std::vector<BigInt> a(n0 + 1, 0);
    a[0] = 1;
    for (std::size_t w = d0; w <= n0; ++w) {
        // A(W) = C(n0,W)(q-1) sum_{j=0}^{W-d0} (-1)^j C(W-1,j) q^{W-d0-j}
        BigInt inner = 0;
        BigInt choose = 1;  // C(W-1, j)
        for (std::size_t j = 0; j <= w - d0; ++j) {
            if (j > 0) choose = choose * (w - j) / j;
            if (j % 2) inner -= choose * q_pow[w - d0 - j];
            else inner += choose * q_pow[w - d0 - j];
        }
        a[w] = binomial(n0, w) * (q - 1) * inner;
    }
    return {q, n0 - d0 + 1, std::move(a)};
}

WeightEnumerator spc_enumerator(std::uint32_t q, std::size_t n0) {
    require(n0 >= 2, "SPC length must be >= 2");
    return mds_enumerator(q, n0, 2);
}

double evaluate_enumerator(const WeightEnumerator& g, double s) {
    require(s >= 0.0, "enumerator argument must be >= 0");
    if (s == 0.0) return 1.0;
    const double ls = std::log(s);
    std::vector<double> logs;
    for (std::size_t i = 0; i <= g.length(); ++i) logs.push_back(g.log_coefficient(i) + static_cast<double>(i) * ls);
    return std::exp(log_sum_exp(logs));
}

double spc_closed_form(std::uint32_t q, std::size_t n0, double s) {
    require(q >= 2, "field order must be >= 2");
    require(s >= 0.0, "enumerator argument must be >= 0");
    const double qd = q;
    const double n = static_cast<double>(n0);
    return std::pow(1.0 + (qd - 1.0) * s, n) / qd + (qd - 1.0) / qd * std::pow(1.0 - s, n);
}

WeightEnumerator brute_force_enumerator(const ParityCheckMatrix& h) {
    std::vector<BigInt> counts(h.cols() + 1, 0);
    std::size_t k = 0;
    std::uint64_t seen = 0;
    for_each_codeword_weight(h, [&](std::size_t w) {
        counts[w] += 1;
        ++seen;
        return true;
    });
    for (std::uint64_t v = seen; v > 1; v /= h.field_order()) ++k;
    return {h.field_order(), k, std::move(counts)};
}

ConstituentSpec::ConstituentSpec(WeightEnumerator enumerator) : enumerator_(std::move(enumerator)) {
    require(length() >= 2, "constituent length must be >= 2");
    require(dimension() < length(), "constituent needs at least one parity check (m0 >= 1)");
    require(dimension() >= 1, "constituent rate must be positive");
    if (!is_prime_power(field_order()))
        fail(ErrorKind::Unsupported, "field order " + std::to_string(field_order()) + " is not a prime power");
}

}  // namespace ldpcb
