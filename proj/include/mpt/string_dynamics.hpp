#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpt/constants.hpp"
#include "mpt/vec.hpp"

namespace mpt {

/// L = -(m/2) sqrt((xd.xp)^2 - (xd.xd)(xp.xp)) with Minkowski dots.
/// Degree-1 homogeneous in each argument.
inline double lagrangian_density(const Vec4& xdot, const Vec4& xprime, double m) {
    const double a = minkowski_dot(xdot, xprime);
    const double b = minkowski_dot(xdot, xdot);
    const double c = minkowski_dot(xprime, xprime);
    const double radicand = a * a - b * c;
    if (radicand < 0.0)
        throw std::domain_error("non-timesheet configuration (radicand = " +
                                std::to_string(radicand) + ")");
    return -0.5 * m * std::sqrt(radicand);
}

/// x_alpha(tau, phi) sampled on a uniform sheet grid. phi is periodic with
/// period 2pi (node j sits at j * h_phi, h_phi = 2pi/n_phi); tau levels are
/// spaced by h_tau. The explicit evolver needs h_tau <= h_phi, enforced here.
class SheetField {
public:
    SheetField(std::size_t n_phi, double h_tau, double tau0 = 0.0)
        : n_phi_(n_phi), h_tau_(h_tau), tau0_(tau0) {
        if (n_phi_ < 3) throw std::invalid_argument("sheet needs n_phi >= 3");
        if (!(h_tau_ > 0.0)) throw std::invalid_argument("sheet needs h_tau > 0");
        if (h_tau_ > h_phi() * (1.0 + 1e-12))
            throw std::domain_error("unstable sheet grid: h_tau > h_phi");
    }

    static SheetField from_levels(std::size_t n_phi, double h_tau,
                                  const std::function<Vec4(double)>& level0,
                                  const std::function<Vec4(double)>& level1,
                                  double tau0 = 0.0) {
        SheetField f(n_phi, h_tau, tau0);
        std::vector<Vec4> row(n_phi);
        for (std::size_t j = 0; j < n_phi; ++j) row[j] = level0(f.phi_at(j));
        f.push_level(row);
        for (std::size_t j = 0; j < n_phi; ++j) row[j] = level1(f.phi_at(j));
        f.push_level(row);
        return f;
    }

    /// Position/velocity initialization: the second level is the Taylor step
    /// x + h g + (h^2/2) x'' with the discrete second phi-difference, which
    /// keeps the evolver second order from the first step.
    static SheetField from_initial(std::size_t n_phi, double h_tau,
                                   const std::function<Vec4(double)>& position,
                                   const std::function<Vec4(double)>& velocity,
                                   double tau0 = 0.0) {
        SheetField f(n_phi, h_tau, tau0);
        std::vector<Vec4> p(n_phi), row(n_phi);
        for (std::size_t j = 0; j < n_phi; ++j) p[j] = position(f.phi_at(j));
        f.push_level(p);
        const double hp2 = f.h_phi() * f.h_phi();
        for (std::size_t j = 0; j < n_phi; ++j) {
            const std::size_t jm = (j + n_phi - 1) % n_phi;
            const std::size_t jp = (j + 1) % n_phi;
            const Vec4 g = velocity(f.phi_at(j));
            for (int a = 0; a < 4; ++a) {
                const double lap = (p[jp][a] - 2.0 * p[j][a] + p[jm][a]) / hp2;
                row[j][a] = p[j][a] + h_tau * g[a] + 0.5 * h_tau * h_tau * lap;
            }
        }
        f.push_level(row);
        return f;
    }

    /// Sample an analytic field on n_levels tau levels (analysis grids).
    static SheetField sample(std::size_t n_levels, std::size_t n_phi, double h_tau,
                             const std::function<Vec4(double, double)>& field,
                             double tau0 = 0.0) {
        SheetField f(n_phi, h_tau, tau0);
        std::vector<Vec4> row(n_phi);
        for (std::size_t l = 0; l < n_levels; ++l) {
            for (std::size_t j = 0; j < n_phi; ++j) row[j] = field(f.tau_at(l), f.phi_at(j));
            f.push_level(row);
        }
        return f;
    }

    std::size_t n_phi() const { return n_phi_; }
    std::size_t levels() const { return nodes_.size() / n_phi_; }
    double h_tau() const { return h_tau_; }
    double h_phi() const { return two_pi / static_cast<double>(n_phi_); }
    double tau_at(std::size_t level) const { return tau0_ + h_tau_ * static_cast<double>(level); }
    double phi_at(std::size_t j) const { return h_phi() * static_cast<double>(j); }

    const Vec4& at(std::size_t level, std::size_t j) const { return nodes_[level * n_phi_ + j]; }

    void push_level(const std::vector<Vec4>& row) {
        if (row.size() != n_phi_) throw std::invalid_argument("level size mismatch");
        nodes_.insert(nodes_.end(), row.begin(), row.end());
    }

private:
    std::size_t n_phi_;
    double h_tau_;
    double tau0_;
    std::vector<Vec4> nodes_;
};

/// Leapfrog step for xdd = x'': x^{n+1} = 2 x^n - x^{n-1} + r^2 D2_phi x^n,
/// r = h_tau/h_phi. Exact transport at r = 1; second order otherwise.
inline SheetField evolve_wave(SheetField field, std::size_t steps) {
    if (field.levels() < 2)
        throw std::invalid_argument("evolver needs two initial levels");
    const double r = field.h_tau() / field.h_phi();
    const double r2 = r * r;
    const std::size_t n = field.n_phi();
    std::vector<Vec4> next(n);
    for (std::size_t s = 0; s < steps; ++s) {
        const std::size_t cur = field.levels() - 1;
        bool finite = true;
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t jm = (j + n - 1) % n;
            const std::size_t jp = (j + 1) % n;
            for (int a = 0; a < 4; ++a) {
                const double lap =
                    field.at(cur, jp)[a] - 2.0 * field.at(cur, j)[a] + field.at(cur, jm)[a];
                next[j][a] = 2.0 * field.at(cur, j)[a] - field.at(cur - 1, j)[a] + r2 * lap;
                finite = finite && std::isfinite(next[j][a]);
            }
        }
        if (!finite)
            throw std::runtime_error("evolver produced non-finite values at step " +
                                     std::to_string(s));
        field.push_level(next);
    }
    return field;
}

/// Constraint residuals on interior tau levels (central differences, phi
/// periodic): r1 = xd.xp and r2 = xd.xd + xp.xp. The literal flag instead
/// evaluates the printed second form xd.x + xp.xp.
struct ConstraintResidual {
    std::size_t n_levels = 0;  // interior levels, starting at sheet level 1
    std::size_t n_phi = 0;
    std::vector<double> r1;
    std::vector<double> r2;

    double max_abs_r1() const {
        double m = 0.0;
        for (double v : r1) m = std::max(m, std::abs(v));
        return m;
    }
    double max_abs_r2() const {
        double m = 0.0;
        for (double v : r2) m = std::max(m, std::abs(v));
        return m;
    }
};

inline ConstraintResidual constraint_residuals(const SheetField& f,
                                               bool literal_second_form = false) {
    if (f.levels() < 3) throw std::invalid_argument("constraint residuals need 3 tau levels");
    const std::size_t n = f.n_phi();
    const std::size_t interior = f.levels() - 2;
    ConstraintResidual out;
    out.n_levels = interior;
    out.n_phi = n;
    out.r1.resize(interior * n);
    out.r2.resize(interior * n);
    const double inv2t = 1.0 / (2.0 * f.h_tau());
    const double inv2p = 1.0 / (2.0 * f.h_phi());
    for (std::size_t l = 1; l + 1 < f.levels(); ++l) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t jm = (j + n - 1) % n;
            const std::size_t jp = (j + 1) % n;
            Vec4 xd{}, xp{};
            for (int a = 0; a < 4; ++a) {
                xd[a] = (f.at(l + 1, j)[a] - f.at(l - 1, j)[a]) * inv2t;
                xp[a] = (f.at(l, jp)[a] - f.at(l, jm)[a]) * inv2p;
            }
            const std::size_t idx = (l - 1) * n + j;
            out.r1[idx] = minkowski_dot(xd, xp);
            out.r2[idx] = literal_second_form
                              ? minkowski_dot(xd, f.at(l, j)) + minkowski_dot(xp, xp)
                              : minkowski_dot(xd, xd) + minkowski_dot(xp, xp);
        }
    }
    return out;
}

/// The paper-style free mode, real representative: every component is
/// cos((m0/hbar)(tau - phi)). Solves xdd = x'' for any argument; equals 1
/// exactly on the reality surface phi = tau.
inline Vec4 analytic_mode(double m0, double tau, double phi, double hbar = 1.0) {
    const double v = std::cos((m0 / hbar) * (tau - phi));
    return {v, v, v, v};
}

/// The rotating closed-string mode (tau, cos tau cos phi, sin tau cos phi, 0):
/// solves xdd = x'' and satisfies both constraints identically, so its
/// discrete residuals are pure discretization error.
inline Vec4 constrained_mode(double tau, double phi) {
    return {tau, std::cos(tau) * std::cos(phi), std::sin(tau) * std::cos(phi), 0.0};
}

inline constexpr double eom_constraint_threshold = 1e-6;

/// Discrete xdd - x'' on interior levels, reduced to a per-node max over the
/// four components. Constraint satisfaction is reported, not asserted: the
/// reduction of the full equation of motion to the wave equation only holds
/// on constraint-satisfying sheets.
struct EomResidual {
    std::size_t n_levels = 0;
    std::size_t n_phi = 0;
    std::vector<double> grid;
    double max_constraint_residual = 0.0;
    bool constraints_ok = false;

    double max_abs() const {
        double m = 0.0;
        for (double v : grid) m = std::max(m, std::abs(v));
        return m;
    }
};

inline EomResidual eom_residual(const SheetField& f) {
    if (f.levels() < 3) throw std::invalid_argument("eom residual needs 3 tau levels");
    const std::size_t n = f.n_phi();
    const std::size_t interior = f.levels() - 2;
    EomResidual out;
    out.n_levels = interior;
    out.n_phi = n;
    out.grid.resize(interior * n);
    const double it2 = 1.0 / (f.h_tau() * f.h_tau());
    const double ip2 = 1.0 / (f.h_phi() * f.h_phi());
    for (std::size_t l = 1; l + 1 < f.levels(); ++l) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t jm = (j + n - 1) % n;
            const std::size_t jp = (j + 1) % n;
            double worst = 0.0;
            for (int a = 0; a < 4; ++a) {
                const double xdd =
                    (f.at(l + 1, j)[a] - 2.0 * f.at(l, j)[a] + f.at(l - 1, j)[a]) * it2;
                const double xpp =
                    (f.at(l, jp)[a] - 2.0 * f.at(l, j)[a] + f.at(l, jm)[a]) * ip2;
                worst = std::max(worst, std::abs(xdd - xpp));
            }
            out.grid[(l - 1) * n + j] = worst;
        }
    }
    const ConstraintResidual cr = constraint_residuals(f);
    out.max_constraint_residual = std::max(cr.max_abs_r1(), cr.max_abs_r2());
    out.constraints_ok = out.max_constraint_residual < eom_constraint_threshold;
    return out;
}

/// E_d(level) = sum_j sum_alpha (xd^2 + xp^2) h_phi with centered xd;
/// defined on interior levels.
inline double discrete_energy(const SheetField& f, std::size_t level) {
    if (level == 0 || level + 1 >= f.levels())
        throw std::invalid_argument("discrete energy needs an interior level");
    const std::size_t n = f.n_phi();
    const double inv2t = 1.0 / (2.0 * f.h_tau());
    const double inv2p = 1.0 / (2.0 * f.h_phi());
    double e = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t jm = (j + n - 1) % n;
        const std::size_t jp = (j + 1) % n;
        for (int a = 0; a < 4; ++a) {
            const double xd = (f.at(level + 1, j)[a] - f.at(level - 1, j)[a]) * inv2t;
            const double xp = (f.at(level, jp)[a] - f.at(level, jm)[a]) * inv2p;
            e += xd * xd + xp * xp;
        }
    }
    return e * f.h_phi();
}

/// Max relative drift of the discrete energy across interior levels.
inline double energy_drift(const SheetField& f) {
    if (f.levels() < 3) throw std::invalid_argument("energy drift needs 3 tau levels");
    const double e0 = discrete_energy(f, 1);
    double drift = 0.0;
    for (std::size_t l = 2; l + 1 < f.levels(); ++l)
        drift = std::max(drift, std::abs(discrete_energy(f, l) - e0));
    return drift / std::abs(e0);
}

}  // namespace mpt
