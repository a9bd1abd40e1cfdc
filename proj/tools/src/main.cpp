#include <iostream>

#include <CLI11.hpp>

#include "advshare_cli/commands.hpp"

int main(int argc, char** argv) {
    using namespace advshare::cli;
    CLI::App app{"Advance sharing of quantum shares: stabilizer analysis and protocol demos"};
    app.require_subcommand(1);

    Options opts;
    bool json_only = false;
    std::size_t max_size = 0;
    std::uint64_t budget = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", opts.path, "code file (p=<prime> n=<count> header, rows 'x... | z...')")->required();
        sub->add_flag("--json-only", json_only, "suppress the human-readable summary on stderr");
        sub->add_option("--budget", budget, "cap on exhaustively enumerated codewords");
    };
    auto* validate = app.add_subcommand("validate", "check a stabilizer and print [[n,k,d]]_p");
    add_common(validate);
    auto* analyze = app.add_subcommand("analyze", "list advance-shareable sets");
    add_common(analyze);
    analyze->add_option("--max-size", max_size, "largest |J| to enumerate");
    auto* demo = app.add_subcommand("demo", "run the advance-sharing protocol end to end");
    add_common(demo);
    demo->add_option("--J", opts.shares, "advance-shared set, 1-based, comma separated (default: empty)");
    demo->add_option("--seed", opts.seed, "measurement and secret seed");
    demo->add_option("--trials", opts.trials, "random secrets to run (0 = access table only)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalidInput;
    }
    if (analyze->count("--max-size")) opts.max_size = max_size;
    for (auto* sub : {validate, analyze, demo}) {
        if (sub->count("--budget")) opts.budget = budget;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    const CommandResult res = run_command(name, opts);
    std::cout << res.report.dump(2) << '\n';
    if (!json_only) std::cerr << res.summary;
    return res.exit_code;
}
