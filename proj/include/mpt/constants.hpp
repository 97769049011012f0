#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mpt {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Wrap an angle into [0, 2pi).
inline double wrap_two_pi(double a) {
    double w = std::fmod(a, two_pi);
    return w < 0.0 ? w + two_pi : w;
}

/// Constants context. h is derived from hbar at the single point below, so
/// the two can never drift apart.
struct PhysicalConstants {
    double hbar = 1.0;
    double c = 1.0;

    PhysicalConstants() = default;
    PhysicalConstants(double hbar_, double c_) : hbar(hbar_), c(c_) {
        if (!(hbar > 0.0) || !(c > 0.0))
            throw std::invalid_argument("physical constants must be positive");
    }

    double h() const { return two_pi * hbar; }

    static PhysicalConstants natural() { return {}; }
    static PhysicalConstants si() { return {1.054571817e-34, 299792458.0}; }

    friend bool operator==(const PhysicalConstants& a, const PhysicalConstants& b) {
        return a.hbar == b.hbar && a.c == b.c;
    }
};

}  // namespace mpt
