#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ldpcb {

/// Upper bound R_CW(q, omega, delta) on the asymptotic rate of q-ary
/// constant-weight codes of relative weight omega and relative distance delta.
struct CwRateBound {
    std::string name;
    std::function<double(std::uint32_t q, double omega, double delta)> evaluate;
};

/// 0 for omega <= delta/2, h_q(omega) beyond. The weakest admissible bound.
double cw_zero_floor(std::uint32_t q, double omega, double delta);

/// 0 for omega <= delta/2 or delta >= (q-1)/q; otherwise
/// min(h_q(omega), 1 - delta, 1 - h_q(J_q(delta))).
double cw_composite(std::uint32_t q, double omega, double delta);

/// Identically 0. Not a valid constant-weight bound; it lower-brackets every
/// admissible bound and so brackets distance bounds from below.
double cw_zero(std::uint32_t q, double omega, double delta);

/// q-ary Johnson radius theta (1 - sqrt(1 - delta/theta)), theta = (q-1)/q.
double johnson_radius(std::uint32_t q, double delta);

/// Looks up a registered bound: `zero-floor`, `composite`, `zero`.
/// Throws Domain for an unknown name.
const CwRateBound& cw_bound(const std::string& name);

std::vector<std::string> cw_bound_names();

}  // namespace ldpcb
