#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "mpt/causality.hpp"
#include "mpt/interference.hpp"
#include "mpt/io.hpp"
#include "mpt/kinematics.hpp"
#include "mpt/metric6d.hpp"
#include "mpt/phase_loops.hpp"
#include "mpt/rng.hpp"
#include "mpt/string_dynamics.hpp"

namespace mpt {

using json = nlohmann::ordered_json;

/// Raised for malformed or invalid scenario documents. Parse failures carry
/// the 1-based line/column of the offending byte.
class ScenarioError : public std::runtime_error {
public:
    explicit ScenarioError(const std::string& what) : std::runtime_error(what) {}
};

struct Scenario {
    std::string kind;
    PhysicalConstants constants{};
    std::uint64_t seed = 42;
    std::string output_path;    // optional default output root from the document
    std::string output_format = "csv";
    json params;                // defaults filled, validated
};

namespace detail {

inline void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                                const std::string& where) {
    for (const auto& item : obj.items())
        if (!allowed.count(item.key()))
            throw ScenarioError("unknown key '" + item.key() + "' in " + where);
}

inline double require_number(const json& obj, const std::string& key, double fallback,
                             const std::string& where) {
    if (!obj.contains(key)) return fallback;
    if (!obj.at(key).is_number())
        throw ScenarioError("scenario field '" + where + "." + key + "': expected a number");
    return obj.at(key).get<double>();
}

inline std::int64_t require_int(const json& obj, const std::string& key, std::int64_t fallback,
                                const std::string& where) {
    if (!obj.contains(key)) return fallback;
    if (!obj.at(key).is_number_integer())
        throw ScenarioError("scenario field '" + where + "." + key + "': expected an integer");
    return obj.at(key).get<std::int64_t>();
}

inline Vec3 require_velocity(const json& obj, const std::string& key, Vec3 fallback,
                             const std::string& where) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (v.is_number()) return {v.get<double>(), 0.0, 0.0};
    if (v.is_array() && v.size() == 3 && v[0].is_number() && v[1].is_number() && v[2].is_number())
        return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
    throw ScenarioError("scenario field '" + where + "." + key +
                        "': expected a number or a 3-vector");
}

inline void check(bool ok, const std::string& field, const std::string& constraint) {
    if (!ok) throw ScenarioError("scenario field '" + field + "': " + constraint);
}

// Massive-particle velocity preconditions are checked at load, not mid-run.
inline void check_subluminal(const Vec3& u, double c, const std::string& field) {
    check(norm(u) < c, field, "speed exceeds c");
    check(norm(u) > 0.0, field, "speed must be nonzero for sigma-line operations");
}

inline std::pair<std::size_t, std::size_t> line_column(const std::string& text,
                                                       std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace detail

inline const std::set<std::string>& known_kinds() {
    static const std::set<std::string> kinds{"worldline", "wave", "slit",
                                             "pde", "metric", "causality"};
    return kinds;
}

/// Parse and validate a scenario document, filling defaults. Every module
/// precondition expressible from the config is enforced here.
inline Scenario load_scenario(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, col] = detail::line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ScenarioError("scenario parse error at line " + std::to_string(line) +
                            ", column " + std::to_string(col) + ": " + e.what());
    }
    if (!doc.is_object()) throw ScenarioError("scenario document must be a JSON object");
    detail::reject_unknown_keys(doc, {"kind", "constants", "parameters", "output", "seed"},
                                "scenario");

    Scenario scn;
    if (!doc.contains("kind") || !doc.at("kind").is_string())
        throw ScenarioError("scenario field 'kind': required string");
    scn.kind = doc.at("kind").get<std::string>();
    if (!known_kinds().count(scn.kind))
        throw ScenarioError("scenario field 'kind': unknown kind '" + scn.kind + "'");

    if (doc.contains("constants")) {
        const json& k = doc.at("constants");
        detail::reject_unknown_keys(k, {"hbar", "c"}, "constants");
        const double hbar = detail::require_number(k, "hbar", 1.0, "constants");
        const double c = detail::require_number(k, "c", 1.0, "constants");
        detail::check(hbar > 0.0, "constants.hbar", "must be positive");
        detail::check(c > 0.0, "constants.c", "must be positive");
        scn.constants = PhysicalConstants(hbar, c);
    }

    if (doc.contains("seed")) {
        if (!doc.at("seed").is_number_unsigned() && !doc.at("seed").is_number_integer())
            throw ScenarioError("scenario field 'seed': expected an unsigned integer");
        scn.seed = doc.at("seed").get<std::uint64_t>();
    }

    if (doc.contains("output")) {
        const json& o = doc.at("output");
        detail::reject_unknown_keys(o, {"path", "format"}, "output");
        if (o.contains("path")) scn.output_path = o.at("path").get<std::string>();
        if (o.contains("format")) {
            scn.output_format = o.at("format").get<std::string>();
            detail::check(scn.output_format == "csv", "output.format",
                          "only 'csv' gridded output is supported");
        }
    }

    const json p = doc.contains("parameters") ? doc.at("parameters") : json::object();
    if (!p.is_object()) throw ScenarioError("scenario field 'parameters': must be an object");
    const double c = scn.constants.c;
    json filled;

    if (scn.kind == "worldline") {
        detail::reject_unknown_keys(
            p, {"m0", "u", "tau_span", "sigma_span", "samples"}, "parameters");
        const double m0 = detail::require_number(p, "m0", 1.0, "parameters");
        detail::check(m0 > 0.0, "parameters.m0", "must be positive");
        const Vec3 u = detail::require_velocity(p, "u", {0.6 * c, 0.0, 0.0}, "parameters");
        detail::check_subluminal(u, c, "parameters.u");
        const double tau_span = detail::require_number(p, "tau_span", two_pi, "parameters");
        const double sigma_span = detail::require_number(p, "sigma_span", two_pi, "parameters");
        const std::int64_t samples = detail::require_int(p, "samples", 9, "parameters");
        detail::check(samples >= 2, "parameters.samples", "must be at least 2");
        filled = {{"m0", m0},
                  {"u", {u.x, u.y, u.z}},
                  {"tau_span", tau_span},
                  {"sigma_span", sigma_span},
                  {"samples", samples}};
    } else if (scn.kind == "wave") {
        detail::reject_unknown_keys(p,
                                    {"m0", "p_center", "sigma_p", "components",
                                     "comb_span_sigmas", "grid_points", "grid_span_sigmas"},
                                    "parameters");
        const double m0 = detail::require_number(p, "m0", 1.0, "parameters");
        detail::check(m0 > 0.0, "parameters.m0", "must be positive");
        const double sigma_p = detail::require_number(p, "sigma_p", 1.0, "parameters");
        detail::check(sigma_p > 0.0, "parameters.sigma_p", "must be positive");
        const std::int64_t comps = detail::require_int(p, "components", 129, "parameters");
        detail::check(comps >= 3, "parameters.components", "must be at least 3");
        const double comb_span = detail::require_number(p, "comb_span_sigmas", 6.0, "parameters");
        detail::check(comb_span > 0.0, "parameters.comb_span_sigmas", "must be positive");
        const std::int64_t gp = detail::require_int(p, "grid_points", 2001, "parameters");
        detail::check(gp >= 16, "parameters.grid_points", "must be at least 16");
        const double gs = detail::require_number(p, "grid_span_sigmas", 12.0, "parameters");
        detail::check(gs >= 8.0, "parameters.grid_span_sigmas",
                      "grid must span at least 8 standard deviations");
        filled = {{"m0", m0},
                  {"p_center", detail::require_number(p, "p_center", 0.0, "parameters")},
                  {"sigma_p", sigma_p},
                  {"components", comps},
                  {"comb_span_sigmas", comb_span},
                  {"grid_points", gp},
                  {"grid_span_sigmas", gs}};
    } else if (scn.kind == "slit") {
        detail::reject_unknown_keys(
            p, {"slit_x", "slit_sep", "screen_x", "delta", "lambda", "y_max", "n_min", "n_max"},
            "parameters");
        const double d = detail::require_number(p, "slit_x", 1.0, "parameters");
        const double y = detail::require_number(p, "slit_sep", 0.5, "parameters");
        const double S = detail::require_number(p, "screen_x", 10.0, "parameters");
        const double delta = detail::require_number(p, "delta", 0.0, "parameters");
        const double lambda = detail::require_number(p, "lambda", 0.05, "parameters");
        detail::check(d >= 0.0, "parameters.slit_x", "must be nonnegative");
        detail::check(y > 0.0, "parameters.slit_sep", "must be positive");
        detail::check(S > d, "parameters.screen_x", "screen must lie beyond the slits");
        detail::check(lambda > 0.0, "parameters.lambda", "must be positive");
        const double y_max = detail::require_number(p, "y_max", 4.5, "parameters");
        detail::check(y_max > 0.0, "parameters.y_max", "must be positive");
        const std::int64_t n_min = detail::require_int(p, "n_min", -6, "parameters");
        const std::int64_t n_max = detail::require_int(p, "n_max", 6, "parameters");
        detail::check(n_min <= n_max, "parameters.n_min", "must not exceed n_max");
        filled = {{"slit_x", d},     {"slit_sep", y}, {"screen_x", S},
                  {"delta", delta},  {"lambda", lambda}, {"y_max", y_max},
                  {"n_min", n_min},  {"n_max", n_max}};
    } else if (scn.kind == "pde") {
        detail::reject_unknown_keys(p, {"initial", "n_phi", "cfl", "periods"}, "parameters");
        std::string initial = "standing";
        if (p.contains("initial")) {
            if (!p.at("initial").is_string())
                throw ScenarioError("scenario field 'parameters.initial': expected a string");
            initial = p.at("initial").get<std::string>();
        }
        detail::check(initial == "standing" || initial == "traveling", "parameters.initial",
                      "must be 'standing' or 'traveling'");
        const std::int64_t n_phi = detail::require_int(p, "n_phi", 256, "parameters");
        detail::check(n_phi >= 8, "parameters.n_phi", "must be at least 8");
        const double cfl =
            detail::require_number(p, "cfl", initial == "traveling" ? 1.0 : 0.5, "parameters");
        detail::check(cfl > 0.0 && cfl <= 1.0, "parameters.cfl",
                      "must lie in (0, 1]: h_tau may not exceed h_phi");
        const double periods = detail::require_number(p, "periods", 1.0, "parameters");
        detail::check(periods > 0.0, "parameters.periods", "must be positive");
        filled = {{"initial", initial}, {"n_phi", n_phi}, {"cfl", cfl}, {"periods", periods}};
    } else if (scn.kind == "metric") {
        detail::reject_unknown_keys(p, {"m0", "u", "offshell_E_factor", "h"}, "parameters");
        const double m0 = detail::require_number(p, "m0", 1.0, "parameters");
        detail::check(m0 > 0.0, "parameters.m0", "must be positive");
        const Vec3 u = detail::require_velocity(p, "u", {0.6 * c, 0.0, 0.0}, "parameters");
        detail::check_subluminal(u, c, "parameters.u");
        const double factor = detail::require_number(p, "offshell_E_factor", 2.0, "parameters");
        detail::check(factor > 0.0 && factor != 1.0, "parameters.offshell_E_factor",
                      "must be positive and different from 1");
        const double h = detail::require_number(p, "h", 1e-3, "parameters");
        detail::check(h > 0.0, "parameters.h", "must be positive");
        filled = {{"m0", m0}, {"u", {u.x, u.y, u.z}}, {"offshell_E_factor", factor}, {"h", h}};
    } else {  // causality
        detail::reject_unknown_keys(p, {"u", "n_events", "n_pairs", "range"}, "parameters");
        const Vec3 u = detail::require_velocity(p, "u", {0.6 * c, 0.0, 0.0}, "parameters");
        detail::check_subluminal(u, c, "parameters.u");
        const std::int64_t n_events = detail::require_int(p, "n_events", 32, "parameters");
        detail::check(n_events >= 2 && n_events <= 4096, "parameters.n_events",
                      "must lie in [2, 4096]");
        const std::int64_t n_pairs = detail::require_int(p, "n_pairs", 10000, "parameters");
        detail::check(n_pairs >= 1, "parameters.n_pairs", "must be positive");
        const double range = detail::require_number(p, "range", 10.0, "parameters");
        detail::check(range > 0.0, "parameters.range", "must be positive");
        filled = {{"u", {u.x, u.y, u.z}},
                  {"n_events", n_events},
                  {"n_pairs", n_pairs},
                  {"range", range}};
    }

    scn.params = std::move(filled);
    return scn;
}

inline Scenario load_scenario_file(const std::filesystem::path& path) {
    return load_scenario(read_text_file(path));
}

struct RunOptions {
    std::filesystem::path out_dir = "out";
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> resolution;
};

struct RunReport {
    json scenario_echo;
    json metrics;
    std::vector<std::pair<std::string, bool>> assertions;
    double wall_seconds = 0.0;  // console only, never serialized

    bool pass() const {
        for (const auto& a : assertions)
            if (!a.second) return false;
        return true;
    }

    json to_json() const {
        json a = json::object();
        for (const auto& [name, ok] : assertions) a[name] = ok ? "pass" : "fail";
        return json{{"scenario", scenario_echo},
                    {"metrics", metrics},
                    {"assertions", a},
                    {"pass", pass()}};
    }
};

namespace detail {

inline json echo_scenario(const Scenario& scn, std::uint64_t seed) {
    return json{{"kind", scn.kind},
                {"constants", {{"hbar", scn.constants.hbar}, {"c", scn.constants.c}}},
                {"seed", seed},
                {"parameters", scn.params}};
}

inline Vec3 vec_param(const json& p, const char* key) {
    return {p.at(key)[0].get<double>(), p.at(key)[1].get<double>(), p.at(key)[2].get<double>()};
}

inline void run_worldline(const Scenario& scn, const RunOptions& opt,
                          const std::filesystem::path& dir, RunReport& rep) {
    const json& p = scn.params;
    const ParticleState state(p.at("m0").get<double>(), vec_param(p, "u"), scn.constants);
    std::int64_t samples = p.at("samples").get<std::int64_t>();
    if (opt.resolution) samples = std::max<std::int64_t>(2, *opt.resolution);
    const double tau_span = p.at("tau_span").get<double>();
    const double sigma_span = p.at("sigma_span").get<double>();

    CsvWriter csv(dir / "worldline.csv", {"tau", "sigma", "t", "x", "y", "z"});
    for (std::int64_t i = 0; i < samples; ++i) {
        for (std::int64_t j = 0; j < samples; ++j) {
            const double tau = tau_span * double(i) / double(samples - 1);
            const double sigma = sigma_span * double(j) / double(samples - 1);
            const SpacetimePoint q = worldline_position(state, {tau, sigma});
            csv.row({tau, sigma, q.t, q.x.x, q.x.y, q.x.z});
        }
    }

    const auto [pvec, E] = momentum_energy(state);
    const auto db = de_broglie(state);
    const double h = scn.constants.h();
    const double c2 = scn.constants.c * scn.constants.c;
    const double shell = state.m0 * state.m0 * c2 * c2;
    const double mass_shell_rel = std::abs(E * E - dot(pvec, pvec) * c2 - shell) / shell;

    const double lambda = de_broglie_wavelength(state);
    double product_rel = std::abs(lambda * norm(pvec) - h) / h;
    product_rel = std::max(product_rel, std::abs(db.period * E - h) / h);

    // One full phi loop, sigma chosen to return to t = 0.
    const double tau_loop = two_pi * scn.constants.hbar / (state.m0 * c2);
    const double sigma_loop = -gamma_u(state) * tau_loop / gamma_sigma(state);
    const SpacetimePoint end = worldline_position(state, {tau_loop, sigma_loop});
    const double closure_rel = std::abs(norm(end.x) - lambda) / lambda;

    rep.metrics = json{{"gamma_u", gamma_u(state)},
                       {"gamma_sigma", gamma_sigma(state)},
                       {"sigma_speed", sigma_speed(state)},
                       {"p", {pvec.x, pvec.y, pvec.z}},
                       {"E", E},
                       {"lambda", lambda},
                       {"period", db.period},
                       {"mass_shell_rel", mass_shell_rel},
                       {"de_broglie_product_rel", product_rel},
                       {"phi_loop_closure_rel", closure_rel},
                       {"closure_residual_t", end.t}};
    rep.assertions.emplace_back("mass_shell", mass_shell_rel <= 1e-12);
    rep.assertions.emplace_back("de_broglie_products", product_rel <= 1e-12);
    rep.assertions.emplace_back("phi_loop_closure", closure_rel <= 1e-10);
}

inline void run_wave(const Scenario& scn, const RunOptions& opt,
                     const std::filesystem::path& dir, RunReport& rep) {
    const json& p = scn.params;
    const double m0 = p.at("m0").get<double>();
    const double sigma_p = p.at("sigma_p").get<double>();
    std::int64_t grid_points = p.at("grid_points").get<std::int64_t>();
    if (opt.resolution) grid_points = std::max<std::int64_t>(16, *opt.resolution);

    const WavePacket raw = gaussian_packet(
        m0, p.at("p_center").get<double>(), sigma_p,
        static_cast<std::size_t>(p.at("components").get<std::int64_t>()),
        p.at("comb_span_sigmas").get<double>(), scn.constants);
    const double sigma_x = scn.constants.hbar / (2.0 * sigma_p);
    const double half_span = 0.5 * p.at("grid_span_sigmas").get<double>() * sigma_x;
    const Grid1d grid(-half_span, half_span, static_cast<std::size_t>(grid_points));
    const WavePacket packet = raw.normalized_over(grid);

    CsvWriter csv(dir / "wave_density.csv", {"x", "density"});
    for (std::size_t i = 0; i < grid.size(); ++i)
        csv.row({grid.point(i), detection_probability(packet, axis_point(grid, i))});

    const Uncertainty unc = uncertainty_product(packet, grid);
    const double floor = 0.5 * scn.constants.hbar * (1.0 - 1e-3);
    const double mass = packet.mass_on(grid);

    rep.metrics = json{{"dx", unc.dx},
                       {"dp", unc.dp},
                       {"product", unc.product},
                       {"hbar_over_2", 0.5 * scn.constants.hbar},
                       {"normalized_mass", mass},
                       {"coverage_warning", unc.coverage_warning}};
    rep.assertions.emplace_back("normalization", std::abs(mass - 1.0) <= 1e-8);
    rep.assertions.emplace_back("uncertainty_floor", unc.product >= floor);
    rep.assertions.emplace_back("grid_coverage", !unc.coverage_warning);
}

inline void run_slit(const Scenario& scn, const RunOptions& opt,
                     const std::filesystem::path& dir, RunReport& rep) {
    const json& p = scn.params;
    const SlitScenario slit(p.at("slit_x").get<double>(), p.at("slit_sep").get<double>(),
                            p.at("screen_x").get<double>(), p.at("delta").get<double>(),
                            p.at("lambda").get<double>());
    const double y_max = p.at("y_max").get<double>();
    const int n_min = static_cast<int>(p.at("n_min").get<std::int64_t>());
    const int n_max = static_cast<int>(p.at("n_max").get<std::int64_t>());

    double step = slit.lambda / 50.0;
    if (opt.resolution && *opt.resolution > 1)
        step = std::min(step, 2.0 * y_max / double(*opt.resolution - 1));
    const ConsistencyReport rep_slit = verify_consistency(slit, n_min, n_max, y_max, step);

    const std::size_t n_points = static_cast<std::size_t>(std::ceil(2.0 * y_max / step)) + 2;
    const Grid1d screen(-y_max, y_max, n_points);
    const FringePattern pattern = intensity_pattern(slit, screen);
    const AllowedPoints allowed = allowed_points(slit, n_min, n_max, y_max);

    CsvWriter fr(dir / "fringes.csv", {"screen_y", "intensity"});
    double imin = 4.0, imax = 0.0;
    for (std::size_t i = 0; i < pattern.screen_ys.size(); ++i) {
        fr.row({pattern.screen_ys[i], pattern.intensity[i]});
        imin = std::min(imin, pattern.intensity[i]);
        imax = std::max(imax, pattern.intensity[i]);
    }
    CsvWriter ap(dir / "allowed_points.csv", {"n", "screen_y"});
    for (const auto& a : allowed.points) ap.row({double(a.n), a.screen_y});

    rep.metrics = json{{"grid_step", rep_slit.grid_step},
                       {"max_deviation", rep_slit.max_deviation},
                       {"allowed_points", allowed.points.size()},
                       {"omitted_n", rep_slit.omitted},
                       {"maxima", pattern.maxima.size()},
                       {"central_intensity", slit_intensity(slit, 0.0)},
                       {"intensity_min", imin},
                       {"intensity_max", imax}};
    rep.assertions.emplace_back("oracle_consistency", rep_slit.pass);
    rep.assertions.emplace_back("intensity_bounds", imin >= 0.0 && imax <= 4.0 + 1e-12);
}

inline double standing_error(std::size_t n_phi, double cfl, double periods) {
    const double h_phi = two_pi / double(n_phi);
    const std::size_t steps =
        static_cast<std::size_t>(std::ceil(periods * two_pi / (cfl * h_phi)));
    const double h_tau = periods * two_pi / double(steps);
    auto pos = [](double phi) { return Vec4{0.0, std::cos(phi), 0.0, 0.0}; };
    auto vel = [](double) { return Vec4{}; };
    SheetField f = evolve_wave(SheetField::from_initial(n_phi, h_tau, pos, vel), steps);
    const std::size_t last = f.levels() - 1;
    const double tau = f.tau_at(last);
    double err = 0.0;
    for (std::size_t j = 0; j < n_phi; ++j)
        err = std::max(err, std::abs(f.at(last, j)[1] - std::cos(tau) * std::cos(f.phi_at(j))));
    return err;
}

inline void run_pde(const Scenario& scn, const RunOptions& opt,
                    const std::filesystem::path& dir, RunReport& rep) {
    const json& p = scn.params;
    std::int64_t n_phi = p.at("n_phi").get<std::int64_t>();
    if (opt.resolution) n_phi = std::max<std::int64_t>(8, *opt.resolution);
    const double cfl = p.at("cfl").get<double>();
    const double periods = p.at("periods").get<double>();
    const std::string initial = p.at("initial").get<std::string>();

    CsvWriter conv(dir / "pde_convergence.csv", {"n_phi", "h_tau", "h_phi", "error"});

    if (initial == "standing") {
        const auto n_coarse = static_cast<std::size_t>(n_phi);
        const std::size_t n_fine = 2 * n_coarse;
        const double e_coarse = standing_error(n_coarse, cfl, periods);
        const double e_fine = standing_error(n_fine, cfl, periods);
        conv.row({double(n_coarse), cfl * two_pi / double(n_coarse), two_pi / double(n_coarse),
                  e_coarse});
        conv.row({double(n_fine), cfl * two_pi / double(n_fine), two_pi / double(n_fine),
                  e_fine});
        const double ratio = e_coarse / e_fine;

        // Energy drift and the final snapshot come from the fine run.
        const double h_phi = two_pi / double(n_fine);
        const std::size_t steps =
            static_cast<std::size_t>(std::ceil(periods * two_pi / (cfl * h_phi)));
        const double h_tau = periods * two_pi / double(steps);
        auto pos = [](double phi) { return Vec4{0.0, std::cos(phi), 0.0, 0.0}; };
        auto vel = [](double) { return Vec4{}; };
        SheetField f = evolve_wave(SheetField::from_initial(n_fine, h_tau, pos, vel), steps);
        const double drift = energy_drift(f);

        CsvWriter snap(dir / "sheet_final.csv", {"tau", "phi", "x0", "x1", "x2", "x3"});
        const std::size_t last = f.levels() - 1;
        for (std::size_t j = 0; j < f.n_phi(); ++j) {
            const Vec4& v = f.at(last, j);
            snap.row({f.tau_at(last), f.phi_at(j), v[0], v[1], v[2], v[3]});
        }

        rep.metrics = json{{"error_coarse", e_coarse}, {"error_fine", e_fine},
                           {"ratio", ratio},           {"order", std::log2(ratio)},
                           {"energy_drift", drift},    {"steps_fine", steps}};
        rep.assertions.emplace_back("convergence_ratio", ratio >= 3.6 && ratio <= 4.4);
        rep.assertions.emplace_back("energy_drift", drift <= 1e-3);
    } else {
        // Unit-CFL transport is exact; run at cfl == 1 regardless of config.
        const auto n = static_cast<std::size_t>(n_phi);
        const double h = two_pi / double(n);
        auto profile = [](double phi) { return std::cos(phi) + 0.5 * std::sin(2.0 * phi); };
        auto l0 = [&](double phi) { return Vec4{0.0, profile(phi), 0.0, 0.0}; };
        auto l1 = [&](double phi) { return Vec4{0.0, profile(phi - h), 0.0, 0.0}; };
        const auto steps = static_cast<std::size_t>(std::llround(periods * double(n)));
        SheetField f = evolve_wave(SheetField::from_levels(n, h, l0, l1), steps);
        const std::size_t last = f.levels() - 1;
        const double tau = f.tau_at(last);
        double err = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            err = std::max(err, std::abs(f.at(last, j)[1] - profile(f.phi_at(j) - tau)));
        conv.row({double(n), h, h, err});

        CsvWriter snap(dir / "sheet_final.csv", {"tau", "phi", "x0", "x1", "x2", "x3"});
        for (std::size_t j = 0; j < n; ++j) {
            const Vec4& v = f.at(last, j);
            snap.row({tau, f.phi_at(j), v[0], v[1], v[2], v[3]});
        }

        rep.metrics = json{{"transport_error", err}, {"steps", steps}};
        rep.assertions.emplace_back("exact_transport", err <= 1e-12);
    }
}

inline void run_metric(const Scenario& scn, const RunOptions& opt,
                       const std::filesystem::path& dir, RunReport& rep) {
    const json& p = scn.params;
    const ParticleState state(p.at("m0").get<double>(), vec_param(p, "u"), scn.constants);
    const auto [pvec, E] = momentum_energy(state);
    double h = p.at("h").get<double>();
    if (opt.resolution && *opt.resolution > 0) h = 1.0 / double(*opt.resolution);
    const double factor = p.at("offshell_E_factor").get<double>();
    const PhysicalConstants& k = scn.constants;

    // Evaluation point with the phase pinned to pi/4 so psi is O(1) there.
    Point6 pt{0.0, 0.2, 0.3, -0.1, 0.15, 0.25};
    pt[0] = k.c *
            (0.25 * std::numbers::pi * k.hbar + pvec.x * pt[1] + pvec.y * pt[2] +
             pvec.z * pt[3] + state.m0 * k.c * pt[5]) /
            E;

    const ScalarField6 psi_on = plane_wave_6d(E, pvec, state.m0, k);
    const ScalarField6 psi_off = plane_wave_6d(factor * E, pvec, state.m0, k);

    const double box_on_h = box6_residual(psi_on, pt, h);
    const double box_on_h2 = box6_residual(psi_on, pt, 0.5 * h);
    const double ratio = std::abs(box_on_h) / std::abs(box_on_h2);

    const double box_off = box6_residual(psi_off, pt, h);
    const double kg_off = klein_gordon_residual(factor * E, pvec, state.m0, k);
    const double defect = -kg_off / (k.c * k.c) * psi_off(pt);
    const double off_rel = std::abs(box_off - defect) / std::abs(defect);
    const double kg_on = klein_gordon_residual(E, pvec, state.m0, k);
    const double kg_scale = E * E / (k.hbar * k.hbar * k.c * k.c);

    CsvWriter csv(dir / "metric_residuals.csv", {"h", "box_onshell", "box_offshell"});
    csv.row({h, box_on_h, box_off});
    csv.row({0.5 * h, box_on_h2, box6_residual(psi_off, pt, 0.5 * h)});

    rep.metrics = json{{"E", E},
                       {"p", {pvec.x, pvec.y, pvec.z}},
                       {"box_onshell_h", box_on_h},
                       {"box_onshell_h_half", box_on_h2},
                       {"convergence_ratio", ratio},
                       {"box_offshell", box_off},
                       {"offshell_defect_analytic", defect},
                       {"offshell_rel_err", off_rel},
                       {"kg_onshell", kg_on},
                       {"kg_offshell", kg_off}};
    rep.assertions.emplace_back("box_convergence", ratio >= 3.6 && ratio <= 4.4);
    rep.assertions.emplace_back("offshell_defect_match", off_rel <= 1e-6);
    rep.assertions.emplace_back("kg_onshell_zero", std::abs(kg_on) <= 1e-12 * kg_scale);
    rep.assertions.emplace_back("dispersion_threshold",
                                std::abs(box6_residual(psi_on, pt, 1e-3)) < 1e-4 &&
                                    std::abs(box6_residual(psi_off, pt, 1e-3)) > 1e-4);
}

inline void run_causality(const Scenario& scn, const RunOptions& opt,
                          const std::filesystem::path& dir, RunReport& rep,
                          std::uint64_t seed) {
    const json& p = scn.params;
    const ParticleState base(1.0, vec_param(p, "u"), scn.constants);
    std::int64_t n_events = p.at("n_events").get<std::int64_t>();
    if (opt.resolution) n_events = std::clamp<std::int64_t>(*opt.resolution, 2, 4096);
    const std::int64_t n_pairs = p.at("n_pairs").get<std::int64_t>();
    const double range = p.at("range").get<double>();
    Rng rng(seed);

    // Event log with the full verdict edge set (i -> j for i < j).
    std::vector<MptEvent> events;
    events.reserve(static_cast<std::size_t>(n_events));
    for (std::int64_t i = 0; i < n_events; ++i) {
        char label[16];
        std::snprintf(label, sizeof label, "e%03lld", static_cast<long long>(i));
        events.push_back(make_event(label, base, rng.uniform(-range, range),
                                    rng.uniform(-range, range)));
    }
    std::string lines;
    for (std::size_t i = 0; i < events.size(); ++i) {
        json edges = json::array();
        for (std::size_t j = i + 1; j < events.size(); ++j)
            edges.push_back(json{{"to", events[j].label},
                                 {"verdict", to_string(precedes(events[i], events[j]))}});
        json line{{"label", events[i].label},
                  {"tau", events[i].tau},
                  {"sigma", events[i].sigma},
                  {"t", events[i].t},
                  {"edges", edges}};
        lines += line.dump();
        lines += '\n';
    }
    write_text_file(dir / "events.jsonl", lines);

    // Law sweep over random states and (tau, sigma) pairs/triples.
    const double c = scn.constants.c;
    auto random_state = [&] {
        const double speed = c * rng.uniform(0.05, 0.95);
        const double cth = rng.uniform(-1.0, 1.0);
        const double sth = std::sqrt(std::max(0.0, 1.0 - cth * cth));
        const double az = rng.uniform(0.0, two_pi);
        return ParticleState(rng.uniform(0.5, 2.0),
                             {speed * sth * std::cos(az), speed * sth * std::sin(az), speed * cth},
                             scn.constants);
    };
    std::int64_t soundness_bad = 0, law_bad = 0, mixed_bad = 0;
    std::int64_t before_seen = 0, chain_seen = 0;
    for (std::int64_t it = 0; it < n_pairs; ++it) {
        const ParticleState s = random_state();
        const MptEvent a = make_event("a", s, rng.uniform(-range, range), rng.uniform(-range, range));
        const MptEvent b = make_event("b", s, rng.uniform(-range, range), rng.uniform(-range, range));
        const MptEvent e3 = make_event("c", s, rng.uniform(-range, range), rng.uniform(-range, range));

        const OrderVerdict ab = precedes(a, b);
        if (ab == OrderVerdict::Before) {
            ++before_seen;
            if (!(a.t < b.t)) ++soundness_bad;
            if (precedes(b, a) != OrderVerdict::After) ++law_bad;  // antisymmetry
        }
        if (precedes(a, a) != OrderVerdict::Concurrent) ++law_bad;  // irreflexivity
        if (ab == OrderVerdict::Before && precedes(b, e3) == OrderVerdict::Before) {
            ++chain_seen;
            if (precedes(a, e3) != OrderVerdict::Before) ++law_bad;  // transitivity
        }

        // The mixed case: tau1 < tau2 with sigma1 > sigma2.
        const double t1 = rng.uniform(-range, range);
        const double s2 = rng.uniform(-range, range);
        const MptEvent m1 = make_event("m1", s, t1, s2 + rng.uniform(0.5, range));
        const MptEvent m2 = make_event("m2", s, t1 + rng.uniform(0.5, range), s2);
        if (precedes(m1, m2) != OrderVerdict::Indeterminate) ++mixed_bad;
    }

    rep.metrics = json{{"events", events.size()},
                       {"pairs", n_pairs},
                       {"before_seen", before_seen},
                       {"transitive_chains_seen", chain_seen},
                       {"soundness_violations", soundness_bad},
                       {"law_violations", law_bad},
                       {"mixed_case_violations", mixed_bad}};
    rep.assertions.emplace_back("order_soundness", soundness_bad == 0);
    rep.assertions.emplace_back("partial_order_laws", law_bad == 0 && chain_seen > 0);
    rep.assertions.emplace_back("mixed_case_indeterminate", mixed_bad == 0);
}

}  // namespace detail

/// Dispatch a validated scenario, write its artifacts under
/// out_dir/<kind>/, and return the report (also written as report.json).
inline RunReport run(const Scenario& scn, const RunOptions& opt = {}) {
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t seed = opt.seed.value_or(scn.seed);
    const std::filesystem::path dir = opt.out_dir / scn.kind;
    std::filesystem::create_directories(dir);

    RunReport rep;
    rep.scenario_echo = detail::echo_scenario(scn, seed);
    if (scn.kind == "worldline")
        detail::run_worldline(scn, opt, dir, rep);
    else if (scn.kind == "wave")
        detail::run_wave(scn, opt, dir, rep);
    else if (scn.kind == "slit")
        detail::run_slit(scn, opt, dir, rep);
    else if (scn.kind == "pde")
        detail::run_pde(scn, opt, dir, rep);
    else if (scn.kind == "metric")
        detail::run_metric(scn, opt, dir, rep);
    else
        detail::run_causality(scn, opt, dir, rep, seed);

    write_text_file(dir / "report.json", rep.to_json().dump(2) + "\n");
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace mpt
