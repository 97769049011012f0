#pragma once

#include <stdexcept>
#include <string>

#include "mpt/kinematics.hpp"

namespace mpt {

enum class OrderVerdict { Before, After, Concurrent, Indeterminate };

inline const char* to_string(OrderVerdict v) {
    switch (v) {
        case OrderVerdict::Before: return "Before";
        case OrderVerdict::After: return "After";
        case OrderVerdict::Concurrent: return "Concurrent";
        default: return "Indeterminate";
    }
}

/// t(tau, sigma) = gamma_u tau + gamma_sigma sigma; strictly increasing in
/// both arguments since both coefficients are positive.
inline double universal_time(const ParticleState& s, double tau, double sigma) {
    return gamma_u(s) * tau + gamma_sigma(s) * sigma;
}

/// An event pinned to (tau, sigma) on one particle's world lines. t is
/// derived through universal_time, never a free field.
struct MptEvent {
    std::string label;
    double tau = 0.0;
    double sigma = 0.0;
    ParticleState state;
    double t = 0.0;
};

inline MptEvent make_event(std::string label, const ParticleState& s, double tau,
                           double sigma) {
    return {std::move(label), tau, sigma, s, universal_time(s, tau, sigma)};
}

/// Happens-before by componentwise (tau, sigma) dominance. Mixed orderings
/// are Indeterminate; forcing them into an order would break the partial
/// order laws. Before/After additionally verify the strict universal-time
/// ordering they imply.
inline OrderVerdict precedes(const MptEvent& a, const MptEvent& b) {
    if (!(a.state == b.state))
        throw std::invalid_argument("events belong to different particle states");
    const bool le = a.tau <= b.tau && a.sigma <= b.sigma;
    const bool ge = a.tau >= b.tau && a.sigma >= b.sigma;
    if (le && ge) return OrderVerdict::Concurrent;
    if (le) {
        if (!(a.t < b.t)) throw std::logic_error("universal time order violated");
        return OrderVerdict::Before;
    }
    if (ge) {
        if (!(a.t > b.t)) throw std::logic_error("universal time order violated");
        return OrderVerdict::After;
    }
    return OrderVerdict::Indeterminate;
}

/// Interaction with momentum transfer dp: the particle leaves its world line
/// and continues on a new one. The velocity is rebuilt through the
/// relativistic inversion u = p c^2 / E, which keeps massive particles below
/// c for every dp. The input state is left untouched.
inline ParticleState collapse_worldline(const ParticleState& s, const Vec3& dp) {
    if (s.massless())
        throw std::invalid_argument("collapse requires a massive state");
    if (dp == Vec3{}) return s;
    const Vec3 p = momentum_energy(s).p + dp;
    const double c = s.constants.c;
    const double c2 = c * c;
    const double E = std::sqrt(dot(p, p) * c2 + s.m0 * s.m0 * c2 * c2);
    const Vec3 u = (c2 / E) * p;
    return ParticleState(s.m0, u, s.constants);
}

}  // namespace mpt
