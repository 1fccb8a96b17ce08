#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "signbal/error.hpp"

int main(int argc, char** argv) {
    using namespace signbal::cli;

    CLI::App app{"Balance classification, spectral measures and dynamics for signed networks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "signbal 0.1.0");

    CommonOptions opt;
    auto add_common = [&](CLI::App* sub, bool input, bool config) {
        if (input) sub->add_option("--input,-i", opt.input, "edge list file")->required();
        if (config) sub->add_option("--config,-c", opt.config, "JSON config file");
        sub->add_option("--output,-o", opt.output, "output file (default: standard output)");
        sub->add_option("--seed", opt.seed, "override the seed in the config");
        sub->add_option("--format", opt.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    };

    auto* classify = app.add_subcommand("classify", "balance verdict, certificates and d_b / d_a as JSON");
    add_common(classify, true, false);

    auto* measure = app.add_subcommand("measure", "spectral measures, frustration and spectral checks as JSON");
    add_common(measure, true, true);

    std::string kind;
    auto* generate = app.add_subcommand("generate", "write a synthetic signed network as an edge list");
    generate->add_option("kind", kind, "ssbm, lattice or tree")->required()->check(CLI::IsMember({"ssbm", "lattice", "tree"}));
    add_common(generate, false, true);

    std::string model;
    std::string summary;
    auto* simulate = app.add_subcommand("simulate", "run linear, rw or elt dynamics and write the trajectory");
    simulate->add_option("model", model, "linear, rw or elt")->required()->check(CLI::IsMember({"linear", "rw", "elt"}));
    simulate->add_option("--summary", summary, "where to write the stationary prediction / activation sets");
    add_common(simulate, true, true);

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
    verify_cmd->add_option("suite", verify.suite, "classification, spectra, walks, elt or all")
        ->check(CLI::IsMember({"classification", "spectra", "walks", "elt", "all"}));
    verify_cmd->add_option("--criterion", verify.criterion, "run a single criterion (1-10)")->check(CLI::Range(1, 10));
    verify_cmd->add_flag("--inject-sign-error", verify.inject_sign_error, "flip one edge of every planted fixture");
    verify_cmd->add_option("--tribes", verify.tribes, "Gahuku-Gama edge list");
    add_common(verify_cmd, false, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*classify) return cmd_classify(opt, std::cout);
        if (*measure) return cmd_measure(opt, std::cout);
        if (*generate) return cmd_generate(kind, opt, std::cout);
        if (*simulate) {
            if (opt.format == "json" && !simulate->count("--format")) opt.format = "csv";
            return cmd_simulate(model, opt, summary, std::cout);
        }
        if (*verify_cmd) return cmd_verify(verify, opt, std::cout);
    } catch (const signbal::Error& e) {
        std::cerr << "signbal: " << e.what() << '\n';
        return kDataError;
    } catch (const std::exception& e) {
        std::cerr << "signbal: " << e.what() << '\n';
        return kDataError;
    }
    return kUsage;
}
