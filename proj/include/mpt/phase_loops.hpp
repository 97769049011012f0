#pragma once

#include <complex>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "mpt/grid.hpp"
#include "mpt/kinematics.hpp"

namespace mpt {

/// Loop phase phi = m0 c^2 tau / hbar, wrapped into [0, 2pi).
inline double phi_of_tau(double m0, double tau, const PhysicalConstants& k = {}) {
    return wrap_two_pi(m0 * k.c * k.c * tau / k.hbar);
}

/// A point on one of the unit loops x4, x5. Built from an angle, so the
/// modulus is 1 by construction.
struct LoopCoordinate {
    std::complex<double> value;

    static LoopCoordinate from_angle(double a) { return {{std::cos(a), std::sin(a)}}; }
    double arg() const { return std::arg(value); }
};

struct PlaneWave {
    double E = 0.0;
    Vec3 p{};
    double phase0 = 0.0;
    double hbar = 1.0;

    /// Loop argument (E t - p.x)/hbar + phase0.
    double phase_at(const SpacetimePoint& pt) const {
        return (E * pt.t - dot(p, pt.x)) / hbar + phase0;
    }
};

/// On-shell wave of a particle state; E and p come from momentum_energy, so
/// E^2 - |p|^2 c^2 = m0^2 c^4 holds at construction (and is verified).
inline PlaneWave plane_wave(const ParticleState& s, double phase0 = 0.0) {
    const auto [p, E] = momentum_energy(s);
    const double c2 = s.constants.c * s.constants.c;
    const double shell = s.m0 * s.m0 * c2 * c2;
    const double resid = std::abs(E * E - dot(p, p) * c2 - shell);
    if (resid > 1e-12 * std::max(E * E, 1.0))
        throw std::logic_error("plane wave off the mass shell");
    return {E, p, phase0, s.constants.hbar};
}

inline LoopCoordinate x4_of(const PlaneWave& w, const SpacetimePoint& pt) {
    return LoopCoordinate::from_angle(w.phase_at(pt));
}

/// The x5 loop: same argument as x4 with the overall sign flipped, so
/// x5_of == conj(x4_of) for every shared phase0.
inline LoopCoordinate x5_of(const PlaneWave& w, const SpacetimePoint& pt) {
    return LoopCoordinate::from_angle(-w.phase_at(pt));
}

struct WaveComponent {
    std::complex<double> amplitude;
    PlaneWave wave;
};

// Grid-based packet operations sample along the x axis at fixed time.
inline SpacetimePoint axis_point(const Grid1d& g, std::size_t i, double t = 0.0) {
    return {t, {g.point(i), 0.0, 0.0}};
}

/// Amplitude-weighted superposition of plane waves. The x4 sum is Psi, the
/// x5 sum is conj(Psi) identically.
class WavePacket {
public:
    explicit WavePacket(std::vector<WaveComponent> comps) : comps_(std::move(comps)) {
        if (comps_.empty())
            throw std::invalid_argument("wave packet needs at least one component");
    }

    const std::vector<WaveComponent>& components() const { return comps_; }
    bool normalized() const { return normalized_; }

    /// Psi(pt), the x4 superposition.
    std::complex<double> value(const SpacetimePoint& pt) const {
        std::complex<double> s{};
        for (const auto& c : comps_) s += c.amplitude * x4_of(c.wave, pt).value;
        return s;
    }

    /// The x5 superposition, sum of conjugated components.
    std::complex<double> x5_value(const SpacetimePoint& pt) const {
        std::complex<double> s{};
        for (const auto& c : comps_) s += std::conj(c.amplitude) * x5_of(c.wave, pt).value;
        return s;
    }

    /// |Psi(pt)|^2 with no normalization contract attached.
    double density(const SpacetimePoint& pt) const { return std::norm(value(pt)); }

    /// Trapezoid integral of the density along the x axis over g at time t.
    double mass_on(const Grid1d& g, double t = 0.0) const {
        std::vector<double> rho(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) rho[i] = density(axis_point(g, i, t));
        return trapezoid(rho, g.step());
    }

    /// Copy rescaled so mass_on(g, t) == 1.
    WavePacket normalized_over(const Grid1d& g, double t = 0.0) const {
        const double mass = mass_on(g, t);
        if (!(mass > 0.0) || !std::isfinite(mass))
            throw std::invalid_argument("packet has no probability mass on the grid");
        WavePacket out = *this;
        const double scale = 1.0 / std::sqrt(mass);
        for (auto& c : out.comps_) c.amplitude *= scale;
        out.normalized_ = true;
        return out;
    }

private:
    std::vector<WaveComponent> comps_;
    bool normalized_ = false;
};

inline WavePacket superpose(std::vector<WaveComponent> comps) {
    return WavePacket(std::move(comps));
}

/// P(pt) = Psi * conj(Psi). The packet must have been normalized over the
/// detection domain first.
inline double detection_probability(const WavePacket& packet, const SpacetimePoint& pt) {
    if (!packet.normalized())
        throw std::invalid_argument("packet not normalized over the detection domain");
    return packet.density(pt);
}

struct Expectation {
    double value = 0.0;
    double tail_mass = 0.0;        // probability mass in the two outermost grid cells
    bool coverage_warning = false; // tail_mass > 1e-6: grid misses packet support
};

inline constexpr double coverage_tail_threshold = 1e-6;

/// <F> = integral of F(x) |Psi|^2 over the grid (trapezoid rule).
template <class F>
Expectation expectation(const WavePacket& packet, F&& observable, const Grid1d& g,
                        double t = 0.0) {
    if (!packet.normalized())
        throw std::invalid_argument("packet not normalized over the detection domain");
    const std::size_t n = g.size();
    std::vector<double> rho(n), frho(n);
    for (std::size_t i = 0; i < n; ++i) {
        rho[i] = packet.density(axis_point(g, i, t));
        frho[i] = observable(g.point(i)) * rho[i];
    }
    Expectation out;
    out.value = trapezoid(frho, g.step());
    out.tail_mass = 0.5 * g.step() * (rho[0] + rho[1] + rho[n - 2] + rho[n - 1]);
    out.coverage_warning = out.tail_mass > coverage_tail_threshold;
    return out;
}

struct Uncertainty {
    double dx = 0.0;
    double dp = 0.0;
    double product = 0.0;
    bool dx_unbounded = false;  // single-momentum packet: dp == 0, no finite width
    bool coverage_warning = false;
};

/// dx from the position variance of |Psi|^2 on the grid, dp from the
/// amplitude-weighted variance of the component momenta (x components).
inline Uncertainty uncertainty_product(const WavePacket& packet, const Grid1d& g,
                                       double t = 0.0) {
    Uncertainty out;

    double wsum = 0.0, pmean = 0.0;
    for (const auto& c : packet.components()) {
        const double w = std::norm(c.amplitude);
        wsum += w;
        pmean += w * c.wave.p.x;
    }
    pmean /= wsum;
    double pvar = 0.0;
    for (const auto& c : packet.components()) {
        const double d = c.wave.p.x - pmean;
        pvar += std::norm(c.amplitude) * d * d;
    }
    out.dp = std::sqrt(pvar / wsum);

    if (out.dp == 0.0) {
        out.dx = std::numeric_limits<double>::infinity();
        out.dx_unbounded = true;
        out.product = std::numeric_limits<double>::quiet_NaN();
        return out;
    }

    const auto xm = expectation(packet, [](double x) { return x; }, g, t);
    const auto x2 = expectation(packet, [](double x) { return x * x; }, g, t);
    out.coverage_warning = xm.coverage_warning;
    out.dx = std::sqrt(std::max(0.0, x2.value - xm.value * xm.value));
    out.product = out.dx * out.dp;
    return out;
}

/// Gaussian comb of on-shell plane waves at phase0 = 0: momenta sample
/// p_center +- span_sigmas * sigma_p, amplitudes exp(-(p-p0)^2/(4 sigma_p^2)).
/// With sigma_x = hbar/(2 sigma_p) this synthesizes the minimum-uncertainty
/// packet.
inline WavePacket gaussian_packet(double m0, double p_center, double sigma_p,
                                  std::size_t n_components = 129, double span_sigmas = 6.0,
                                  const PhysicalConstants& k = {}) {
    if (n_components < 3) throw std::invalid_argument("gaussian packet needs >= 3 components");
    if (!(sigma_p > 0.0)) throw std::invalid_argument("gaussian packet needs sigma_p > 0");
    const double c2 = k.c * k.c;
    std::vector<WaveComponent> comps;
    comps.reserve(n_components);
    const double lo = p_center - span_sigmas * sigma_p;
    const double dp = 2.0 * span_sigmas * sigma_p / static_cast<double>(n_components - 1);
    for (std::size_t i = 0; i < n_components; ++i) {
        const double p = lo + dp * static_cast<double>(i);
        const double d = (p - p_center) / sigma_p;
        const double a = std::exp(-0.25 * d * d);
        const double E = std::sqrt(p * p * c2 + m0 * m0 * c2 * c2);
        comps.push_back({{a, 0.0}, PlaneWave{E, {p, 0.0, 0.0}, 0.0, k.hbar}});
    }
    return WavePacket(std::move(comps));
}

/// |S| = |E x B| for the real parts of transverse plane-wave fields sharing
/// the phase k.x - omega t. Reported as an unnormalized density.
inline double photon_probability(Vec3 E0, Vec3 B0, double omega, Vec3 kvec,
                                 const SpacetimePoint& pt) {
    const double tol = 1e-9;
    const double eb = norm(E0) * norm(B0);
    const double ek = norm(E0) * norm(kvec);
    const double bk = norm(B0) * norm(kvec);
    if (std::abs(dot(E0, B0)) > tol * std::max(eb, 1e-300) ||
        std::abs(dot(E0, kvec)) > tol * std::max(ek, 1e-300) ||
        std::abs(dot(B0, kvec)) > tol * std::max(bk, 1e-300))
        throw std::invalid_argument("non-transverse photon fields");
    const double osc = std::cos(dot(kvec, pt.x) - omega * pt.t);
    return norm(cross(E0, B0)) * osc * osc;
}

}  // namespace mpt
