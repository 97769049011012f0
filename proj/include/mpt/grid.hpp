#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace mpt {

/// Uniform sample grid over the closed interval [lo, hi] with n >= 2 points.
struct Grid1d {
    double lo;
    double hi;
    std::size_t n;

    Grid1d(double lo_, double hi_, std::size_t n_) : lo(lo_), hi(hi_), n(n_) {
        if (!(hi > lo)) throw std::invalid_argument("grid needs hi > lo");
        if (n < 2) throw std::invalid_argument("grid needs at least 2 points");
    }

    double step() const { return (hi - lo) / static_cast<double>(n - 1); }
    double point(std::size_t i) const { return lo + step() * static_cast<double>(i); }
    std::size_t size() const { return n; }
};

inline double trapezoid(const std::vector<double>& f, double h) {
    if (f.size() < 2) return 0.0;
    double s = 0.5 * (f.front() + f.back());
    for (std::size_t i = 1; i + 1 < f.size(); ++i) s += f[i];
    return s * h;
}

}  // namespace mpt
