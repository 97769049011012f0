#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "mpt/constants.hpp"
#include "mpt/vec.hpp"

namespace mpt {

struct SpacetimePoint {
    double t = 0.0;
    Vec3 x{};
};

/// Location on the three world lines of one particle: tau is the ordinary
/// proper time, sigma the second proper time, phi the loop phase. phi is
/// wrapped into [0, 2pi) at construction (cylinder condition).
struct ProperTimePoint {
    double tau = 0.0;
    double sigma = 0.0;
    double phi = 0.0;

    ProperTimePoint() = default;
    ProperTimePoint(double tau_, double sigma_, double phi_ = 0.0)
        : tau(tau_), sigma(sigma_), phi(wrap_two_pi(phi_)) {}
};

/// Free particle: rest mass, 3-velocity, constants context.
/// Massive states need |u| < c; massless states need m0 == 0 and |u| == c.
struct ParticleState {
    double m0 = 1.0;
    Vec3 u{};
    PhysicalConstants constants{};

    ParticleState() = default;
    ParticleState(double m0_, Vec3 u_, PhysicalConstants k = {})
        : m0(m0_), u(u_), constants(k) {
        if (!(m0 >= 0.0)) throw std::invalid_argument("rest mass must be nonnegative");
        const double beta = norm(u) / constants.c;
        if (m0 == 0.0) {
            if (std::abs(beta - 1.0) > 1e-12)
                throw std::invalid_argument("massless state requires |u| == c");
        } else if (beta >= 1.0) {
            throw std::invalid_argument("massive state requires |u| < c");
        }
    }

    bool massless() const { return m0 == 0.0; }
    double speed() const { return norm(u); }

    friend bool operator==(const ParticleState& a, const ParticleState& b) {
        return a.m0 == b.m0 && a.u == b.u && a.constants == b.constants;
    }
};

/// Lorentz factor 1/sqrt(1 - u^2/c^2).
inline double gamma_u(const ParticleState& s) {
    const double b2 = dot(s.u, s.u) / (s.constants.c * s.constants.c);
    if (b2 >= 1.0) throw std::domain_error("timelike gamma undefined");
    return 1.0 / std::sqrt(1.0 - b2);
}

struct MomentumEnergy {
    Vec3 p;
    double E;
};

/// p = m u, E = m c^2 with m = gamma_u * m0. On the mass shell by construction.
inline MomentumEnergy momentum_energy(const ParticleState& s) {
    const double m = gamma_u(s) * s.m0;
    return {m * s.u, m * s.constants.c * s.constants.c};
}

/// Speed along a sigma world line, scalar form v = c^2/|u|. Superluminal for
/// massive particles, exactly c on the light cone.
inline double sigma_speed(const ParticleState& s) {
    const double u = norm(s.u);
    if (u == 0.0) throw std::domain_error("sigma speed singular at rest");
    return s.constants.c * s.constants.c / u;
}

/// Componentwise form v_i = c^2/u_i; every component must be nonzero.
inline Vec3 sigma_speed_components(const ParticleState& s) {
    if (s.u.x == 0.0 || s.u.y == 0.0 || s.u.z == 0.0)
        throw std::domain_error("sigma speed singular at rest");
    const double c2 = s.constants.c * s.constants.c;
    return {c2 / s.u.x, c2 / s.u.y, c2 / s.u.z};
}

/// 1/sqrt(v^2/c^2 - 1) for v = c^2/|u|: the real, positive coefficient left
/// once the i-regularized sigma terms are read off. Defined for 0 < |u| < c.
inline double gamma_sigma(const ParticleState& s) {
    const double vc = sigma_speed(s) / s.constants.c;
    const double r = vc * vc - 1.0;
    if (r <= 0.0) throw std::domain_error("timelike gamma undefined");
    return 1.0 / std::sqrt(r);
}

/// Position reached from `origin` after moving tau along the tau line and
/// sigma along the sigma line:
///
///   t = gamma_u * tau + gamma_sigma * sigma + t0
///   x = gamma_u * u * tau + gamma_sigma * v * uhat * sigma + x0
///
/// The sigma displacement runs along +uhat at the phase speed v = c^2/|u|
/// (note gamma_sigma * v == gamma_u * c), which keeps m0 c^2 tau = E t - p.x
/// exact at every (tau, sigma) and makes one full phi loop close at exactly
/// one de Broglie wavelength.
inline SpacetimePoint worldline_position(const ParticleState& s, const ProperTimePoint& pt,
                                         const SpacetimePoint& origin = {}) {
    const double gu = gamma_u(s);
    const double gs = gamma_sigma(s);  // rejects |u| = 0 and |u| >= c
    const double v = sigma_speed(s);
    const Vec3 uhat = unit(s.u);
    SpacetimePoint out;
    out.t = gu * pt.tau + gs * pt.sigma + origin.t;
    out.x = (gu * pt.tau) * s.u + (gs * v * pt.sigma) * uhat + origin.x;
    return out;
}

struct DeBroglie {
    Vec3 lambda;    // h/p_i per axis; infinite where p_i == 0
    double period;  // h/E
};

inline bool unbounded(double lambda_axis) { return std::isinf(lambda_axis); }

/// lambda_i = h/p_i and T = h/E. A vanishing momentum component reports that
/// axis as infinite rather than failing.
inline DeBroglie de_broglie(const ParticleState& s) {
    const auto [p, E] = momentum_energy(s);
    const double h = s.constants.h();
    auto axis = [h](double pi) {
        return pi == 0.0 ? std::numeric_limits<double>::infinity() : h / pi;
    };
    return {{axis(p.x), axis(p.y), axis(p.z)}, h / E};
}

/// Scalar wavelength h/|p|; infinite at rest.
inline double de_broglie_wavelength(const ParticleState& s) {
    const auto [p, E] = momentum_energy(s);
    (void)E;
    const double pn = norm(p);
    return pn == 0.0 ? std::numeric_limits<double>::infinity() : s.constants.h() / pn;
}

}  // namespace mpt
