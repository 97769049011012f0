#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>

#include "mpt/constants.hpp"
#include "mpt/phase_loops.hpp"

namespace mpt {

using Point6 = std::array<double, 6>;
using Mat4 = std::array<std::array<double, 4>, 4>;
using ScalarField6 = std::function<double(const Point6&)>;

inline Mat4 minkowski4() {
    return {{{1.0, 0.0, 0.0, 0.0},
             {0.0, -1.0, 0.0, 0.0},
             {0.0, 0.0, -1.0, 0.0},
             {0.0, 0.0, 0.0, -1.0}}};
}

namespace detail {

inline double det4(Mat4 m) {
    // Gaussian elimination with partial pivoting.
    double det = 1.0;
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        if (m[piv][col] == 0.0) return 0.0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (int r = col + 1; r < 4; ++r) {
            const double f = m[r][col] / m[col][col];
            for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

}  // namespace detail

/// Block-diagonal 6-d metric: g4 on x0..x3, +psi(pt)^2 on the x4 slot and
/// the fixed -1 on x5. Off-diagonal blocks are zero by construction.
struct Metric6 {
    Mat4 g4;
    ScalarField6 psi;
    static constexpr double g55 = -1.0;
};

inline Metric6 build_metric(const Mat4& g4, ScalarField6 psi) {
    double scale = 0.0;
    for (const auto& row : g4)
        for (double v : row) scale = std::max(scale, std::abs(v));
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (std::abs(g4[i][j] - g4[j][i]) > 1e-12 * std::max(scale, 1.0))
                throw std::invalid_argument("g4 must be symmetric");
    if (std::abs(detail::det4(g4)) <= 1e-12 * std::max(scale * scale * scale * scale, 1e-300))
        throw std::invalid_argument("g4 must be nondegenerate");
    return {g4, std::move(psi)};
}

/// ds^2 of displacement d at pt: blockwise sum of the three blocks.
inline double line_element(const Metric6& m, const Point6& pt, const Point6& d) {
    double s = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) s += m.g4[a][b] * d[a] * d[b];
    const double psi = m.psi(pt);
    s += psi * psi * d[4] * d[4];
    s += Metric6::g55 * d[5] * d[5];
    return s;
}

/// Central-difference d'Alembertian sum_A sgn_A d^2_A psi with the flat
/// signature (+,-,-,-,+,-); the x4 sign matches the metric's +psi^2 slot at
/// psi == 1. Second-order accurate in h.
inline double box6_residual(const ScalarField6& psi, const Point6& pt, double h) {
    static constexpr std::array<double, 6> sgn{1.0, -1.0, -1.0, -1.0, 1.0, -1.0};
    if (!(h > 0.0)) throw std::invalid_argument("step must be positive");
    const double f0 = psi(pt);
    const double ih2 = 1.0 / (h * h);
    double r = 0.0;
    for (int axis = 0; axis < 6; ++axis) {
        Point6 pp = pt, pm = pt;
        pp[axis] += h;
        pm[axis] -= h;
        r += sgn[axis] * (psi(pp) - 2.0 * f0 + psi(pm)) * ih2;
    }
    return r;
}

/// (E^2 - |p|^2 c^2 - m0^2 c^4) / (hbar c)^2; zero exactly on the mass shell.
inline double klein_gordon_residual(double E, const Vec3& p, double m0,
                                    const PhysicalConstants& k = {}) {
    const double c2 = k.c * k.c;
    const double defect = E * E - dot(p, p) * c2 - m0 * m0 * c2 * c2;
    return defect / (k.hbar * k.hbar * c2);
}

inline double klein_gordon_residual(const PlaneWave& w, double m0,
                                    const PhysicalConstants& k = {}) {
    return klein_gordon_residual(w.E, w.p, m0, k);
}

/// The x4-independent 6-d wave cos((E x0/c - p.x - m0 c x5)/hbar). Its exact
/// d'Alembertian is -(E^2 - p^2 c^2 - m0^2 c^4)/(hbar c)^2 times the wave, so
/// it is annihilated by box6 exactly when (E, p, m0) sit on the mass shell.
inline ScalarField6 plane_wave_6d(double E, Vec3 p, double m0,
                                  const PhysicalConstants& k = {}) {
    return [E, p, m0, k](const Point6& q) {
        const double phase =
            (E * q[0] / k.c - (p.x * q[1] + p.y * q[2] + p.z * q[3]) - m0 * k.c * q[5]) / k.hbar;
        return std::cos(phase);
    };
}

}  // namespace mpt
