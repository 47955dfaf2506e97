#pragma once

#include <cstddef>
#include <functional>

namespace ldpcb {

struct Maximum {
    double argument;
    double value;
};

inline constexpr std::size_t kOmegaGridPoints = 4096;
inline constexpr double kOmegaTolerance = 1e-9;

/// Global maximum of a one-dimensional objective on [lo, hi]: a uniform grid
/// of `grid_points` (endpoints included) followed by golden-section refinement
/// around the best grid point. NaN values are skipped; ties resolve to the
/// smallest argument. Throws Domain when the objective is NaN everywhere.
Maximum maximize_over_omega(const std::function<double(double)>& objective, double lo, double hi,
                            double tol = kOmegaTolerance, std::size_t grid_points = kOmegaGridPoints);

}  // namespace ldpcb
