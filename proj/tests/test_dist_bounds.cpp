#include <cmath>
#include <random>

#include "doctest.h"
#include "ldpcb/dist_bounds.hpp"
#include "ldpcb/entropy.hpp"
#include "ldpcb/error.hpp"
#include "ldpcb/optimize.hpp"

using namespace ldpcb;

namespace {

const CwRateBound kFullSphere{"full-sphere",
                              [](std::uint32_t q, double omega, double) { return q_ary_entropy(omega, EntropyBase(q)); }};

double spc_p0_closed(std::uint32_t q, std::size_t n0, double omega) {
    const double theta = static_cast<double>(q - 1) / q;
    return 1.0 / q + theta * std::pow(1.0 - omega / theta, static_cast<double>(n0));
}

}  // namespace

TEST_CASE("maximize over omega") {
    const auto peak = maximize_over_omega([](double w) { return -(w - 0.3) * (w - 0.3); }, 0.0, 1.0);
    CHECK(std::abs(peak.argument - 0.3) < 1e-8);
    CHECK(peak.value == doctest::Approx(0.0));

    const auto flat = maximize_over_omega([](double) { return 2.5; }, 0.2, 0.9);
    CHECK(flat.argument == 0.2);
    CHECK(flat.value == 2.5);

    const auto edge = maximize_over_omega([](double w) { return -w; }, 0.1, 1.0);
    CHECK(edge.argument == 0.1);

    const auto skip_nan = maximize_over_omega([](double w) { return w > 0.5 ? NAN : w; }, 0.0, 1.0);
    CHECK(skip_nan.argument <= 0.5);
    CHECK(skip_nan.argument > 0.49);

    CHECK_THROWS_AS(maximize_over_omega([](double) { return NAN; }, 0.0, 1.0), Error);
    CHECK_THROWS_AS(maximize_over_omega([](double w) { return w; }, 1.0, 1.0), Error);
}

TEST_CASE("grid-and-refine agrees with an exhaustive grid on the irregular objective") {
    // q=8, rho=x^30, delta=0.05, composite: max of the ratio over a 10^6-point
    // grid computed independently with numpy, confirmed with mpmath at omega=delta/2
    const auto r = rate_bound_irregular(8, RowDegreeDistribution::regular(30), 0.05, cw_bound("composite"));
    CHECK(std::abs(r.objective - 0.0984226756014538) < 1e-6);
    CHECK(r.omega_star == doctest::Approx(0.025));
}

TEST_CASE("p0 in summation form") {
    const ConstituentSpec spc3(spc_enumerator(3, 4));
    CHECK(p0_regular(spc3, 0.0) == 1.0);
    CHECK(p0_complement(spc3, 0.0) == 0.0);
    CHECK(p0_regular(spc3, 2.0 / 3.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(std::abs(p0_regular(spc3, 0.3) - spc_p0_closed(3, 4, 0.3)) <= 1e-12);
    // finite at omega = 1: only A(n0)/(q-1)^n0 survives
    CHECK(p0_regular(spc3, 1.0) == doctest::Approx(6.0 / 16.0));
    CHECK(p0_complement(spc3, 1.0) == doctest::Approx(10.0 / 16.0));
    for (std::uint32_t q : {2u, 8u, 64u}) {
        const ConstituentSpec spec(spc_enumerator(q, 30));
        CHECK(p0_regular(spec, static_cast<double>(q - 1) / q) == doctest::Approx(1.0 / q).epsilon(1e-12));
        for (double w : {1e-9, 1e-4, 0.01, 0.2, 0.7, 0.99}) {
            CHECK(std::abs(p0_regular(spec, w) + p0_complement(spec, w) - 1.0) <= 1e-14);
            CHECK(std::abs(p0_regular(spec, w) - spc_p0_closed(q, 30, w)) <= 1e-12);
        }
    }
    CHECK_THROWS_AS(p0_regular(spc3, 1.5), Error);
}

TEST_CASE("regular bound basics") {
    const ConstituentSpec spec(spc_enumerator(8, 10));
    CHECK(rate_bound_regular(spec, 0.1, kFullSphere).rate_bound == 1.0);

    const double delta = 0.08;
    const auto r = rate_bound_regular(spec, delta, cw_bound("zero-floor"));
    const double point = q_ary_entropy(delta / 2, EntropyBase(8)) /
                         q_ary_entropy(p0_complement(spec, delta / 2), EntropyBase(8, spec.checks()));
    CHECK(r.rate_bound <= 1.0 - point + 1e-15);
    CHECK(r.omega_star >= delta / 2);
    CHECK(r.rate_bound == doctest::Approx(1.0 - r.objective));

    CHECK_THROWS_AS(rate_bound_regular(spec, 0.0, cw_bound("composite")), Error);
    CHECK_THROWS_AS(rate_bound_regular(spec, 1.2, cw_bound("composite")), Error);
}

TEST_CASE("regular bound reference value") {
    // q=2, SPC n0=30, delta=0.02, composite; numpy 10^6-point grid located the
    // maximizer at omega=delta/2 and mpmath evaluated the ratio there
    const auto r = rate_bound_regular(ConstituentSpec(spc_enumerator(2, 30)), 0.02, cw_bound("composite"));
    CHECK(std::abs(r.rate_bound - 0.895508154226712) < 1e-6);
    CHECK(r.omega_star == doctest::Approx(0.01));
}

TEST_CASE("generalized constituent with several checks") {
    // [7,4,3] Hamming: m0 = 3, denominator in base 8^... = q^m0
    const ParityCheckMatrix h(3, 7, 2, {1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 1, 1, 1, 1});
    const ConstituentSpec ham(brute_force_enumerator(h));
    const auto r = rate_bound_regular(ham, 0.05, cw_bound("composite"));
    CHECK(r.rate_bound > 0.0);
    CHECK(r.rate_bound < 1.0);
    const auto looser = rate_bound_regular(ham, 0.05, cw_bound("zero-floor"));
    CHECK(looser.rate_bound >= r.rate_bound);
}

TEST_CASE("irregular bound reduces to the regular SPC bound") {
    for (std::uint32_t q : {2u, 8u, 64u}) {
        for (std::uint32_t n0 : {10u, 30u, 52u}) {
            const ConstituentSpec spec(spc_enumerator(q, n0));
            const auto rho = RowDegreeDistribution::regular(n0);
            for (double delta : {0.01, 0.1, 0.4}) {
                const auto a = rate_bound_regular(spec, delta, cw_bound("composite"));
                const auto b = rate_bound_irregular(q, rho, delta, cw_bound("composite"));
                CHECK_MESSAGE(std::abs(a.rate_bound - b.rate_bound) <= 1e-10, "q=" << q << " n0=" << n0);
            }
        }
    }
}

TEST_CASE("irregular mixture from the q=8 comparison is tighter than x^30") {
    const auto regular = RowDegreeDistribution::parse("30:1.0");
    const auto mixed = RowDegreeDistribution::parse("30:0.5,15:0.25,45:0.25");
    for (double delta : {0.03, 0.05, 0.1}) {
        const double irr = rate_bound_irregular(8, mixed, delta, cw_bound("composite")).rate_bound;
        const double reg = rate_bound_irregular(8, regular, delta, cw_bound("composite")).rate_bound;
        CHECK(irr <= reg);
    }
}

TEST_CASE("row degree distributions") {
    const auto rho = RowDegreeDistribution::parse("15:0.25,30:0.5,45:0.25");
    CHECK(rho.min_degree() == 15);
    CHECK(rho.max_degree() == 45);
    CHECK(rho.mean_degree() == doctest::Approx(30.0));
    CHECK(rho(1.0) == doctest::Approx(1.0));
    CHECK(rho.complement(0.5) == doctest::Approx(1.0 - rho(0.5)));
    CHECK(RowDegreeDistribution::parse(rho.to_string()).entries() == rho.entries());
    CHECK_THROWS_AS(RowDegreeDistribution::parse("30:0.5"), Error);
    CHECK_THROWS_AS(RowDegreeDistribution::parse("1:1.0"), Error);
    CHECK_THROWS_AS(RowDegreeDistribution::parse("30"), Error);
    CHECK_THROWS_AS(RowDegreeDistribution::parse("30:x"), Error);
    CHECK_THROWS_AS(RowDegreeDistribution::parse("30:0.5,30:0.5"), Error);
    CHECK_THROWS_AS(RowDegreeDistribution::parse("30:0.0,20:1.0"), Error);
    CHECK_NOTHROW(RowDegreeDistribution::parse("30:0.3333333333,20:0.6666666667"));
}

TEST_CASE("entropy argument of the irregular bound stays in [0,1]") {
    std::mt19937_64 rng(7);
    for (std::uint32_t q : {2u, 3u, 8u, 64u}) {
        const double theta = static_cast<double>(q - 1) / q;
        for (int t = 0; t < 20; ++t) {
            std::map<std::uint32_t, double> entries;
            for (int k = 0; k < 4; ++k) entries[2 + rng() % 59] += 1.0 + static_cast<double>(rng() % 100);
            double total = 0.0;
            for (auto& [d, f] : entries) total += f;
            for (auto& [d, f] : entries) f /= total;
            const RowDegreeDistribution rho(entries, 1e-9);
            for (int i = 0; i <= 1000; ++i) {
                const double omega = i / 1000.0;
                const double arg = theta * rho.complement(1.0 - omega / theta);
                CHECK(arg >= -1e-12);
                CHECK(arg <= 1.0 + 1e-12);
            }
        }
    }
}

TEST_CASE("rate bound is nonincreasing in delta") {
    const auto rho = RowDegreeDistribution::parse("20:0.5,40:0.5");
    for (const char* cw : {"composite", "zero-floor"}) {
        double prev = 1.0;
        for (int i = 1; i <= 50; ++i) {
            const double r = rate_bound_irregular(8, rho, i / 50.0, cw_bound(cw)).rate_bound;
            CHECK(r <= prev + 1e-12);
            prev = r;
        }
    }
}

TEST_CASE("objective trace") {
    const auto r = rate_bound_irregular(8, RowDegreeDistribution::regular(30), 0.1, cw_bound("composite"),
                                        {.trace_points = 11});
    REQUIRE(r.trace.size() == 11);
    CHECK(r.trace.front().first == 0.05);
    CHECK(r.trace.back().first == 1.0);
    for (const auto& [w, v] : r.trace) CHECK(v <= r.objective + 1e-15);
}

TEST_CASE("inversion to delta") {
    const CodeDescription x30 = RowDegreeDistribution::regular(30);
    // independent mpmath root of 1 - h_8(d/2)/h_8((7/8)(1-(1-8d/14)^30)) = 0.9
    const auto inv = invert_to_delta(8, x30, 0.9, cw_bound("zero-floor"));
    CHECK(std::abs(inv.delta - 0.051669230206643) < 1e-5);
    CHECK(inv.rate_bound >= 0.9);
    CHECK(std::abs(rate_bound(8, x30, inv.delta, cw_bound("zero-floor")).rate_bound - 0.9) < 1e-5);

    // the bound at delta -> 0+ tends to 1 - 1/n0; rates approaching it force delta -> 0
    const double d1 = invert_to_delta(8, x30, 0.95, cw_bound("composite")).delta;
    const double d2 = invert_to_delta(8, x30, 0.955, cw_bound("composite")).delta;
    const double d3 = invert_to_delta(8, x30, 0.96, cw_bound("composite")).delta;
    CHECK(d1 > d2);
    CHECK(d2 > d3);
    CHECK(d3 < 1e-6);

    CHECK_THROWS_AS(invert_to_delta(8, x30, 0.99, cw_bound("composite")), Error);
    try {
        invert_to_delta(8, x30, 0.9, cw_bound("zero"));
        FAIL("expected no solution");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoSolution);
    }
    CHECK_THROWS_AS(invert_to_delta(8, x30, 1.0, cw_bound("composite")), Error);
    CHECK_THROWS_AS(invert_to_delta(8, x30, 0.0, cw_bound("composite")), Error);
}

TEST_CASE("inversion with a generalized constituent matches the rho route for SPC") {
    const CodeDescription spc = ConstituentSpec(spc_enumerator(8, 10));
    const CodeDescription rho = RowDegreeDistribution::regular(10);
    const double a = invert_to_delta(8, spc, 0.7, cw_bound("composite")).delta;
    const double b = invert_to_delta(8, rho, 0.7, cw_bound("composite")).delta;
    CHECK(std::abs(a - b) < 1e-8);
}

TEST_CASE("Gilbert-Varshamov distance") {
    CHECK(std::abs(gv_delta(8, 0.7) - 0.1260) <= 5e-5);
    CHECK(std::abs(gv_delta(64, 0.125) - 0.7400) <= 5e-5);
    CHECK(gv_delta(8, 1.0 - 1e-12) < 1e-12);
    for (std::uint32_t q : {2u, 3u, 8u, 64u}) {
        const EntropyBase base(q);
        for (double x : {1e-4, 0.01, 0.1, 0.3}) {
            if (x >= base.peak()) continue;
            CHECK(std::abs(gv_delta(q, 1.0 - q_ary_entropy(x, base)) - x) <= 1e-8);
        }
    }
    CHECK_THROWS_AS(gv_delta(8, 1.0), Error);
    CHECK_THROWS_AS(gv_delta(8, 0.0), Error);
}

TEST_CASE("regular comparison") {
    const auto regular = RowDegreeDistribution::regular(30);
    const auto same = regular_comparison(8, regular, 0.05, cw_bound("composite"));
    CHECK(same.irregular_bound == same.regular_bound);
    CHECK(same.dominates);

    const auto mixed = regular_comparison(8, RowDegreeDistribution::parse("15:0.25,30:0.5,45:0.25"), 0.05,
                                          cw_bound("composite"));
    CHECK(mixed.dominates);
    CHECK(mixed.regular_bound == doctest::Approx(same.regular_bound).epsilon(1e-12));
    CHECK(mixed.irregular_bound < mixed.regular_bound);

    // non-integer mean degree compares against x^b with real b
    const auto frac = regular_comparison(8, RowDegreeDistribution::parse("3:0.5,4:0.5"), 0.05, cw_bound("composite"));
    CHECK(frac.dominates);
}

TEST_CASE("code descriptions") {
    const auto spc = parse_code(8, "spc:10");
    CHECK(describe(spc) == "constituent:10,9,2");
    const auto mds = parse_code(5, "mds:4:3");
    CHECK(describe(mds) == "constituent:4,2,3");
    CHECK(describe(parse_code(8, "rho:30:1")) == "rho:30:1");
    CHECK_THROWS_AS(parse_code(8, "spc:x"), Error);
    CHECK_THROWS_AS(parse_code(8, "ldpc:3"), Error);
    CHECK_THROWS_AS(parse_code(8, "file:/nonexistent/enum.txt"), Error);
    CHECK_THROWS_AS(rate_bound(4, spc, 0.1, cw_bound("composite")), Error);
}
