// mpt: scenario runner and acceptance driver for the multi-proper-time
// particle model library.
//
// Exit codes: 0 pass, 1 assertion/runtime failure, 2 usage or config error.

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mpt/acceptance.hpp"
#include "mpt/io.hpp"
#include "mpt/scenario.hpp"

namespace {

struct CommonOpts {
    std::string scenario_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> resolution;
};

std::string default_out_dir() {
    if (const char* env = std::getenv("MPT_OUT_DIR"); env && *env) return env;
    return "out";
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_scenario = true) {
    if (with_scenario)
        cmd->add_option("--scenario", opts.scenario_path, "Scenario document (JSON)");
    cmd->add_option("--out", opts.out_dir, "Output directory (default $MPT_OUT_DIR or ./out)");
    cmd->add_option("--seed", opts.seed, "Seed override");
    if (with_scenario)
        cmd->add_option("--resolution", opts.resolution, "Primary grid-size override");
}

int run_kind(const std::string& kind, const CommonOpts& opts) {
    mpt::Scenario scn;
    try {
        if (!opts.scenario_path.empty())
            scn = mpt::load_scenario_file(opts.scenario_path);
        else
            scn = mpt::load_scenario("{\"kind\": \"" + kind + "\"}");
        if (scn.kind != kind) {
            std::fprintf(stderr, "error: scenario kind '%s' does not match subcommand '%s'\n",
                         scn.kind.c_str(), kind.c_str());
            return 2;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }

    try {
        mpt::RunOptions run_opts;
        run_opts.out_dir = !opts.out_dir.empty()     ? opts.out_dir
                           : !scn.output_path.empty() ? scn.output_path
                                                      : default_out_dir();
        run_opts.seed = opts.seed;
        run_opts.resolution = opts.resolution;
        const mpt::RunReport rep = mpt::run(scn, run_opts);

        for (const auto& [name, ok] : rep.assertions)
            std::printf("[%s] %s: %s\n", ok ? "PASS" : "FAIL", kind.c_str(), name.c_str());
        std::printf("report: %s (%.3f s)\n",
                    (run_opts.out_dir / scn.kind / "report.json").string().c_str(),
                    rep.wall_seconds);
        return rep.pass() ? 0 : 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

int run_verify_all(const CommonOpts& opts) {
    const std::uint64_t seed = opts.seed.value_or(42);
    const std::filesystem::path out =
        !opts.out_dir.empty() ? opts.out_dir : default_out_dir();
    try {
        std::filesystem::create_directories(out);
        const auto results = mpt::acceptance::run_criteria(seed, out.string());
        bool all = true;
        for (const auto& r : results) {
            std::printf("[%s] criterion %d %s: %s\n", r.pass ? "PASS" : "FAIL", r.id,
                        r.name.c_str(), r.detail.c_str());
            all = all && r.pass;
        }
        mpt::write_text_file(out / "acceptance_report.json",
                             mpt::acceptance::results_to_json(results, seed).dump(2) + "\n");
        return all ? 0 : 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-proper-time particle model scenarios"};
    app.require_subcommand(1);

    const char* kinds[] = {"worldline", "wave", "slit", "pde", "metric", "causality"};
    const char* blurbs[] = {"World-line kinematics and de Broglie closure",
                            "Gaussian wave packet and uncertainty product",
                            "Double-slit allowed points vs intensity maxima",
                            "Worldsheet wave-equation evolution and convergence",
                            "6-d wave-equation and Klein-Gordon residuals",
                            "Event ordering and world-line collapse"};
    CommonOpts opts[7];
    for (int i = 0; i < 6; ++i) add_common(app.add_subcommand(kinds[i], blurbs[i]), opts[i]);
    add_common(app.add_subcommand("verify-all", "Run the full acceptance suite"), opts[6],
               false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    for (int i = 0; i < 6; ++i)
        if (app.get_subcommand(kinds[i])->parsed()) return run_kind(kinds[i], opts[i]);
    return run_verify_all(opts[6]);
}
