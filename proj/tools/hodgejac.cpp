#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hodgejac/cli.hpp"

namespace {

using hodgejac::cli::JobConfig;

void add_shared(CLI::App* sub, JobConfig& config, std::string& out) {
    // -h would collide with the --h polynomial flag
    sub->set_help_flag("--help", "print this help message and exit");
    sub->add_option("--f", config.f, "hypersurface polynomial");
    sub->add_option("--nvars", config.nvars, "number of variables (overrides inference from --f)");
    sub->add_option("--field", config.field, "rational | mod:<p>")->capture_default_str();
    sub->add_option("--out", out, "output path (default stdout)");
    sub->add_flag("--raw", config.raw, "omit the combinatorial factors");
}

}  // namespace

int main(int argc, char** argv) {
    JobConfig config;
    std::string out;

    CLI::App app{"Hodge theory of projective hypersurfaces through the Jacobian ring"};
    app.require_subcommand(1);

    auto* hodge = app.add_subcommand("hodge", "primitive Hodge numbers");
    auto* smooth = app.add_subcommand("smooth", "smoothness certificate");
    auto* ivhs = app.add_subcommand("ivhs", "infinitesimal variation of Hodge structure along --g");
    auto* sff = app.add_subcommand("sff", "second fundamental form along --g/--u and --h/--v");
    auto* jet = app.add_subcommand("jet", "second derivative of a residue class along a two-parameter jet");
    auto* duality = app.add_subcommand("duality", "Gorenstein pairing R^k x R^(sigma-k) -> R^sigma");
    auto* verify = app.add_subcommand("verify", "built-in golden and property suites");

    for (auto* sub : {hodge, smooth, ivhs, sff, jet, duality, verify}) add_shared(sub, config, out);

    ivhs->add_option("--g", config.g, "tangent direction of degree d")->required();
    sff->add_option("--g,--u", config.g, "first tangent direction")->required();
    sff->add_option("--h,--v", config.h, "second tangent direction")->required();
    jet->add_option("--g", config.g, "coefficient of s")->required();
    jet->add_option("--h", config.h, "coefficient of t")->required();
    jet->add_option("--k", config.k, "coefficient of s*t")->required();
    jet->add_option("--P", config.P, "numerator of degree t(q)")->required();
    jet->add_option("--q", config.q, "Hodge index (default 0)");
    duality->add_option("--degree", config.degree, "degree k of the left factor")->required();
    verify->add_option("--seed", config.seed, "random seed")->capture_default_str();
    verify->add_option("--trials", config.trials, "random trials per property")->capture_default_str();
    verify->add_option("--suite", config.suite, "golden | properties | all")->capture_default_str();
    for (auto* sub : {hodge, smooth, ivhs, sff, duality}) sub->add_option("--seed", config.seed, "unused by this command");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return hodgejac::cli::kInputError;
    }
    config.command = app.get_subcommands().front()->get_name();

    const auto result = hodgejac::cli::run(config);
    const std::string text = hodgejac::cli::render(result.report);
    if (out.empty() || out == "-") {
        std::cout << text;
    } else {
        std::ofstream file(out, std::ios::binary);
        file << text;
        if (!file) {
            std::cerr << "cannot write " << out << "\n";
            return hodgejac::cli::kInputError;
        }
    }
    if (result.report.contains("error")) std::cerr << result.report["error"]["message"].get<std::string>() << "\n";
    return result.exit_code;
}
