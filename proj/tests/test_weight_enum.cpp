#include <cmath>
#include <vector>

#include "doctest.h"
#include "ldpcb/error.hpp"
#include "ldpcb/weight_enum.hpp"

using namespace ldpcb;

namespace {

std::vector<BigInt> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

BigInt pow_big(std::uint64_t base, unsigned e) {
    BigInt r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

ParityCheckMatrix spc_matrix(std::uint32_t q, std::size_t n0) {
    return ParityCheckMatrix(1, n0, q, std::vector<std::uint8_t>(n0, 1));
}

ParityCheckMatrix hamming74() {
    // columns are the binary expansions of 1..7
    std::vector<std::uint8_t> e(21);
    for (std::size_t c = 0; c < 7; ++c)
        for (std::size_t r = 0; r < 3; ++r) e[r * 7 + c] = static_cast<std::uint8_t>(((c + 1) >> r) & 1u);
    return ParityCheckMatrix(3, 7, 2, e);
}

}  // namespace

TEST_CASE("SPC enumerator coefficients") {
    CHECK(spc_enumerator(3, 4).coefficients() == ints({1, 0, 12, 8, 6}));
    CHECK(spc_enumerator(2, 3).coefficients() == ints({1, 0, 3, 0}));
    const auto g = spc_enumerator(8, 10);
    BigInt total = 0;
    for (const auto& a : g.coefficients()) total += a;
    CHECK(total == pow_big(8, 9));
    CHECK_THROWS_AS(spc_enumerator(6, 4), Error);
    CHECK_THROWS_AS(spc_enumerator(2, 1), Error);
}

TEST_CASE("SPC enumerators stay exact at q = n0 = 64") {
    const auto g = spc_enumerator(64, 64);
    BigInt total = 0;
    for (const auto& a : g.coefficients()) total += a;
    CHECK(total == pow_big(64, 63));
    CHECK(g[1] == 0);
    CHECK(g.dimension() == 63);
}

TEST_CASE("SPC codes have no weight-1 codewords and size q^(n0-1)") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 16u, 27u, 64u}) {
        for (std::size_t n0 = 2; n0 <= 40; n0 += 3) {
            const auto g = spc_enumerator(q, n0);
            CHECK(g[1] == 0);
            BigInt total = 0;
            for (const auto& a : g.coefficients()) total += a;
            CHECK(total == pow_big(q, static_cast<unsigned>(n0 - 1)));
        }
    }
}

TEST_CASE("MDS enumerator matches a Reed-Solomon code") {
    // [4,2,3] over GF(5): Vandermonde parity checks
    const ParityCheckMatrix h(2, 4, 5, {1, 1, 1, 1, 1, 2, 3, 4});
    const auto brute = brute_force_enumerator(h);
    CHECK(brute.coefficients() == ints({1, 0, 0, 16, 8}));
    CHECK(mds_enumerator(5, 4, 3) == brute);
}

TEST_CASE("enumerator evaluation") {
    const auto g = spc_enumerator(3, 4);
    CHECK(evaluate_enumerator(g, 0.0) == 1.0);
    CHECK(evaluate_enumerator(g, 2.0) == doctest::Approx(209.0).epsilon(1e-14));
    CHECK(evaluate_enumerator(spc_enumerator(8, 10), 1.0) == doctest::Approx(std::pow(8.0, 9)).epsilon(1e-14));
    CHECK_THROWS_AS(evaluate_enumerator(g, -1.0), Error);
    // intermediate A(i) s^i far beyond 1e300 is handled in the log domain
    const double big = evaluate_enumerator(spc_enumerator(2, 64), 1e4);
    CHECK(std::isfinite(big));
    CHECK(big == doctest::Approx(spc_closed_form(2, 64, 1e4)).epsilon(1e-10));
}

TEST_CASE("SPC closed form") {
    CHECK(spc_closed_form(3, 4, 2.0) == doctest::Approx(209.0));
    CHECK(spc_closed_form(7, 5, 0.0) == doctest::Approx(1.0));
    CHECK(spc_closed_form(7, 5, 1.0) == doctest::Approx(std::pow(7.0, 4)));
    for (std::uint32_t q : {2u, 3u, 8u, 64u}) {
        for (std::size_t n0 : {2u, 5u, 10u, 30u, 64u}) {
            const auto g = spc_enumerator(q, n0);
            for (double s : {0.01, 0.1, 0.5, 1.0, 2.0, 10.0}) {
                const double closed = spc_closed_form(q, n0, s);
                const double summed = evaluate_enumerator(g, s);
                CHECK_MESSAGE(std::abs(closed - summed) <= 1e-10 * std::abs(closed),
                              "q=" << q << " n0=" << n0 << " s=" << s);
            }
        }
    }
}

TEST_CASE("brute-force enumerator") {
    CHECK(brute_force_enumerator(spc_matrix(3, 4)).coefficients() == ints({1, 0, 12, 8, 6}));
    CHECK(brute_force_enumerator(ParityCheckMatrix(0, 3, 2)).coefficients() == ints({1, 3, 3, 1}));
    const ParityCheckMatrix identity(3, 3, 2, {1, 0, 0, 0, 1, 0, 0, 0, 1});
    const auto zero_code = brute_force_enumerator(identity);
    CHECK(zero_code.coefficients() == ints({1, 0, 0, 0}));
    CHECK(zero_code.dimension() == 0);
    const auto ham = brute_force_enumerator(hamming74());
    CHECK(ham.coefficients() == ints({1, 0, 0, 7, 7, 0, 0, 1}));
    CHECK(ham.dimension() == 4);
    CHECK(ham.min_distance() == 3);
}

TEST_CASE("SPC formula equals brute force for small fields") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u})
        for (std::size_t n0 = 2; n0 <= 8; ++n0) CHECK(spc_enumerator(q, n0) == brute_force_enumerator(spc_matrix(q, n0)));
}

TEST_CASE("enumerator text format") {
    const auto g = spc_enumerator(3, 4);
    CHECK(g.to_text() == "4 3 3\n1 0 12 8 6\n");
    CHECK(WeightEnumerator::parse(g.to_text()) == g);
    // big coefficients survive the round trip exactly
    const auto big = spc_enumerator(64, 40);
    CHECK(WeightEnumerator::parse(big.to_text()) == big);

    CHECK_THROWS_AS(WeightEnumerator::parse("4 3 3\n1 0 12 8\n"), Error);
    CHECK_THROWS_AS(WeightEnumerator::parse("4 3 3\n1 0 12 8 7\n"), Error);  // sum != 27
    CHECK_THROWS_AS(WeightEnumerator::parse("4 3 3\n2 0 12 8 5\n"), Error);  // A(0) != 1
    CHECK_THROWS_AS(WeightEnumerator::parse("4 3\n"), Error);
    CHECK_THROWS_AS(WeightEnumerator::parse("4 3 3\n1 0 12 8 6 9\n"), Error);
    CHECK_THROWS_AS(WeightEnumerator::parse("4 3 3\n1 0 1x 8 6\n"), Error);
}

TEST_CASE("constituent spec") {
    const ConstituentSpec spc(spc_enumerator(8, 10));
    CHECK(spc.checks() == 1);
    CHECK(spc.length() == 10);
    CHECK(spc.min_distance() == 2);
    CHECK(spc.rate() == doctest::Approx(0.9));

    const ConstituentSpec ham(brute_force_enumerator(hamming74()));
    CHECK(ham.checks() == 3);
    CHECK(ham.min_distance() == 3);

    CHECK_THROWS_AS(ConstituentSpec(brute_force_enumerator(ParityCheckMatrix(0, 3, 2))), Error);
}
