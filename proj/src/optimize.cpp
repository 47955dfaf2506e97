#include "ldpcb/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ldpcb/error.hpp"

namespace ldpcb {

namespace {

double finite_or_floor(double v) { return std::isnan(v) ? -std::numeric_limits<double>::infinity() : v; }

}  // namespace

Maximum maximize_over_omega(const std::function<double(double)>& objective, double lo, double hi, double tol,
                            std::size_t grid_points) {
    require(lo < hi, "maximization interval must satisfy lo < hi");
    require(grid_points >= 3, "maximization grid needs at least 3 points");
    const double step = (hi - lo) / static_cast<double>(grid_points - 1);
    auto grid_at = [&](std::size_t i) { return i + 1 == grid_points ? hi : lo + step * static_cast<double>(i); };

    std::size_t best_index = grid_points;
    double best_value = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid_points; ++i) {
        const double v = objective(grid_at(i));
        if (std::isnan(v)) continue;
        if (best_index == grid_points || v > best_value) {
            best_index = i;
            best_value = v;
        }
    }
    if (best_index == grid_points) fail(ErrorKind::Domain, "objective is NaN on the whole grid");
    Maximum best{grid_at(best_index), best_value};
    if (std::isinf(best_value)) return best;

    double a = best_index == 0 ? lo : grid_at(best_index - 1);
    double b = best_index + 1 == grid_points ? hi : grid_at(best_index + 1);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = finite_or_floor(objective(c));
    double fd = finite_or_floor(objective(d));
    while (b - a > tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = finite_or_floor(objective(c));
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = finite_or_floor(objective(d));
        }
    }
    for (auto [x, fx] : {std::pair{c, fc}, std::pair{d, fd}}) {
        if (fx > best.value) best = {x, fx};
    }
    return best;
}

}  // namespace ldpcb
