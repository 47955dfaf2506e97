#include "ldpcb/cw_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "ldpcb/entropy.hpp"
#include "ldpcb/error.hpp"

namespace ldpcb {

namespace {

void check_args(std::uint32_t q, double omega, double delta) {
    require(q >= 2, "field order must be >= 2");
    require(omega >= 0.0 && omega <= 1.0, "omega must lie in [0,1]");
    require(delta >= 0.0 && delta <= 1.0, "delta must lie in [0,1]");
}

const std::map<std::string, CwRateBound>& registry() {
    static const std::map<std::string, CwRateBound> bounds = {
        {"zero-floor", {"zero-floor", cw_zero_floor}},
        {"composite", {"composite", cw_composite}},
        {"zero", {"zero", cw_zero}},
    };
    return bounds;
}

}  // namespace

double cw_zero_floor(std::uint32_t q, double omega, double delta) {
    check_args(q, omega, delta);
    if (omega <= delta / 2.0) return 0.0;
    return q_ary_entropy(omega, EntropyBase(q));
}

double johnson_radius(std::uint32_t q, double delta) {
    const double theta = static_cast<double>(q - 1) / q;
    require(delta >= 0.0 && delta <= theta, "Johnson radius needs delta in [0, (q-1)/q]");
    return theta * (1.0 - std::sqrt(std::max(0.0, 1.0 - delta / theta)));
}

double cw_composite(std::uint32_t q, double omega, double delta) {
    check_args(q, omega, delta);
    const double theta = static_cast<double>(q - 1) / q;
    if (omega <= delta / 2.0 || delta >= theta) return 0.0;
    const EntropyBase base(q);
    const double sphere = q_ary_entropy(omega, base);
    const double singleton = 1.0 - delta;
    const double elias = 1.0 - q_ary_entropy(johnson_radius(q, delta), base);
    return std::max(0.0, std::min({sphere, singleton, elias}));
}

double cw_zero(std::uint32_t q, double omega, double delta) {
    check_args(q, omega, delta);
    return 0.0;
}

const CwRateBound& cw_bound(const std::string& name) {
    const auto& bounds = registry();
    auto it = bounds.find(name);
    if (it == bounds.end()) fail(ErrorKind::Domain, "unknown constant-weight bound `" + name + "`");
    return it->second;
}

std::vector<std::string> cw_bound_names() {
    std::vector<std::string> names;
    for (const auto& [name, _] : registry()) names.push_back(name);
    return names;
}

}  // namespace ldpcb
