#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "mpt/constants.hpp"
#include "mpt/grid.hpp"

namespace mpt {

/// Two slits at (slit_x, +-slit_sep/2), screen plane at x = screen_x, loop
/// phase offset delta between the slits, de Broglie wavelength lambda.
struct SlitScenario {
    double slit_x;     // d
    double slit_sep;   // y
    double screen_x;   // S
    double delta;      // wrapped into [0, 2pi)
    double lambda;

    SlitScenario(double d, double y, double S, double delta_, double lambda_)
        : slit_x(d), slit_sep(y), screen_x(S), delta(wrap_two_pi(delta_)), lambda(lambda_) {
        if (!(d >= 0.0)) throw std::invalid_argument("slit plane must satisfy d >= 0");
        if (!(S > d)) throw std::invalid_argument("screen must lie beyond the slits (S > d)");
        if (!(y > 0.0)) throw std::invalid_argument("slit separation must be positive");
        if (!(lambda_ > 0.0)) throw std::invalid_argument("wavelength must be positive");
    }
};

/// DL(y) = |P - S2| - |P - S1| for P = (screen_x, y). Odd and strictly
/// increasing in y, with range (-slit_sep, +slit_sep).
inline double path_difference(const SlitScenario& scn, double screen_y) {
    const double dx = scn.screen_x - scn.slit_x;
    const double l1 = std::hypot(dx, screen_y - 0.5 * scn.slit_sep);
    const double l2 = std::hypot(dx, screen_y + 0.5 * scn.slit_sep);
    return l2 - l1;
}

/// Intensity of the two equal-amplitude paths: slit 2 leads by the loop
/// offset delta while spatial phase accumulates with path length, so
/// I = |e^{i 2pi L1/lambda} + e^{i (2pi L2/lambda - delta)}|^2
///   = 2 + 2 cos(2pi DL/lambda - delta),
/// with maxima exactly at DL = (n + delta/2pi) lambda.
inline double slit_intensity(const SlitScenario& scn, double screen_y) {
    const double dx = scn.screen_x - scn.slit_x;
    const double l1 = std::hypot(dx, screen_y - 0.5 * scn.slit_sep);
    const double l2 = std::hypot(dx, screen_y + 0.5 * scn.slit_sep);
    const std::complex<double> psi1 = std::polar(1.0, two_pi * l1 / scn.lambda);
    const std::complex<double> psi2 = std::polar(1.0, two_pi * l2 / scn.lambda - scn.delta);
    return std::norm(psi1 + psi2);
}

struct AllowedPoint {
    int n;
    double screen_y;
};

struct AllowedPoints {
    std::vector<AllowedPoint> points;  // sorted by screen_y
    std::vector<int> omitted;          // n values with no root in the span
};

namespace detail {

// Spot check that DL is increasing across the span before trusting bisection.
inline void check_monotone(const SlitScenario& scn, double y_max) {
    double prev = path_difference(scn, -y_max);
    for (int i = 1; i <= 64; ++i) {
        const double y = -y_max + (2.0 * y_max) * (static_cast<double>(i) / 64.0);
        const double cur = path_difference(scn, y);
        if (!(cur > prev)) throw std::runtime_error("path difference not monotone on span");
        prev = cur;
    }
}

inline double bisect_target(const SlitScenario& scn, double target, double lo, double hi) {
    double flo = path_difference(scn, lo) - target;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double fm = path_difference(scn, mid) - target;
        if ((flo <= 0.0) == (fm <= 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

/// Screen positions where DL = (n + delta/2pi) lambda for each integer n in
/// [n_min, n_max], searched within |y| <= y_max. Targets without a root in
/// the span are reported in `omitted`.
inline AllowedPoints allowed_points(const SlitScenario& scn, int n_min, int n_max,
                                    double y_max) {
    if (n_min > n_max) throw std::invalid_argument("empty n range");
    if (!(y_max > 0.0)) throw std::invalid_argument("y_max must be positive");
    detail::check_monotone(scn, y_max);
    const double dl_lo = path_difference(scn, -y_max);
    const double dl_hi = path_difference(scn, y_max);

    AllowedPoints out;
    for (int n = n_min; n <= n_max; ++n) {
        const double target = (static_cast<double>(n) + scn.delta / two_pi) * scn.lambda;
        if (target <= dl_lo || target >= dl_hi) {
            out.omitted.push_back(n);
            continue;
        }
        const double y = detail::bisect_target(scn, target, -y_max, y_max);
        if (std::abs(path_difference(scn, y) - target) > 1e-10 * scn.lambda) {
            out.omitted.push_back(n);
            continue;
        }
        out.points.push_back({n, y});
    }
    std::sort(out.points.begin(), out.points.end(),
              [](const AllowedPoint& a, const AllowedPoint& b) { return a.screen_y < b.screen_y; });
    return out;
}

struct FringePattern {
    std::vector<double> screen_ys;
    std::vector<double> intensity;
    std::vector<double> maxima;  // refined peak positions with I within 1e-9 of 4
};

namespace detail {

// Refine a bracketed unimodal peak of the intensity by ternary search.
inline double refine_maximum(const SlitScenario& scn, double lo, double hi) {
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (slit_intensity(scn, m1) < slit_intensity(scn, m2))
            lo = m1;
        else
            hi = m2;
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

/// Sampled two-path intensity over the screen grid, with constructive maxima
/// located from the samples alone (local maximum bracket, then ternary
/// refinement on the intensity).
inline FringePattern intensity_pattern(const SlitScenario& scn, const Grid1d& screen) {
    FringePattern out;
    out.screen_ys.resize(screen.size());
    out.intensity.resize(screen.size());
    for (std::size_t i = 0; i < screen.size(); ++i) {
        out.screen_ys[i] = screen.point(i);
        out.intensity[i] = slit_intensity(scn, out.screen_ys[i]);
    }
    for (std::size_t i = 1; i + 1 < screen.size(); ++i) {
        if (out.intensity[i] > out.intensity[i - 1] && out.intensity[i] >= out.intensity[i + 1]) {
            const double y = detail::refine_maximum(scn, out.screen_ys[i - 1], out.screen_ys[i + 1]);
            if (slit_intensity(scn, y) >= 4.0 - 1e-9) out.maxima.push_back(y);
        }
    }
    return out;
}

struct ConsistencyReport {
    double grid_step = 0.0;
    double max_deviation = 0.0;
    std::size_t matched = 0;
    std::vector<int> offending_n;  // allowed points farther than one grid step
    std::vector<int> omitted;      // carried over from allowed_points
    bool pass = false;
};

/// Cross-validation: every allowed point must coincide with a constructive
/// maximum of the sampled intensity to within one grid step.
inline ConsistencyReport verify_consistency(const SlitScenario& scn, int n_min, int n_max,
                                            double y_max, double max_step = 0.0) {
    double step = scn.lambda / 50.0;
    if (max_step > 0.0) step = std::min(step, max_step);
    const std::size_t n_points =
        static_cast<std::size_t>(std::ceil(2.0 * y_max / step)) + 2;
    const Grid1d screen(-y_max, y_max, n_points);

    const AllowedPoints allowed = allowed_points(scn, n_min, n_max, y_max);
    const FringePattern pattern = intensity_pattern(scn, screen);

    ConsistencyReport rep;
    rep.grid_step = screen.step();
    rep.omitted = allowed.omitted;
    for (const auto& ap : allowed.points) {
        double best = std::numeric_limits<double>::infinity();
        for (double m : pattern.maxima) best = std::min(best, std::abs(m - ap.screen_y));
        rep.max_deviation = std::max(rep.max_deviation, best);
        if (best <= rep.grid_step)
            ++rep.matched;
        else
            rep.offending_n.push_back(ap.n);
    }
    rep.pass = rep.offending_n.empty() && !allowed.points.empty();
    return rep;
}

}  // namespace mpt
