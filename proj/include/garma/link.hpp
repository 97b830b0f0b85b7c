#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace garma {

// All unit-interval values (observations and conditional means alike) are
// clamped into [kUnitEps, 1 - kUnitEps] before any log or link evaluation;
// the conditional densities are undefined at the boundary.
inline constexpr double kUnitEps = 1e-6;

inline double clamp_unit(double y) {
    return std::clamp(y, kUnitEps, 1.0 - kUnitEps);
}

// Logit link g(y) = log(y / (1 - y)). With clamp disabled, values outside
// [kUnitEps, 1 - kUnitEps] raise std::domain_error instead of being clamped.
inline double link_eval(double y, bool clamp = true) {
    if (clamp) {
        y = clamp_unit(y);
    } else if (!(y >= kUnitEps && y <= 1.0 - kUnitEps)) {
        throw std::domain_error("link_eval: value outside [eps, 1-eps]");
    }
    return std::log(y / (1.0 - y));
}

// Inverse link g^{-1}(eta) = 1 / (1 + exp(-eta)), clamped to [eps, 1-eps].
inline double link_inv(double eta) {
    return clamp_unit(1.0 / (1.0 + std::exp(-eta)));
}

} // namespace garma
