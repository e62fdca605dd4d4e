#include <iostream>

#include <CLI11.hpp>

#include "janet/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic kernel for involutive division, monomial completion,\n"
                 "complementary decompositions and linear PDE canonicalization"};
    app.require_subcommand(1);

    janet::RunConfig config;

    auto add_common = [&](CLI::App* cmd, bool with_input, bool with_bound) {
        if (with_input) cmd->add_option("input", config.input_path, "input file")->required();
        if (with_bound) cmd->add_option("--bound", config.bound, "degree bound");
        cmd->add_option("--format", config.format, "output format: text | records")
            ->check(CLI::IsMember({"text", "records"}));
        cmd->add_option("--seed", config.seed, "random seed");
    };

    add_common(app.add_subcommand("complete", "complete a monomial set"), true, false);
    add_common(app.add_subcommand("mult-table", "multiplicative-variable table"), true, false);
    add_common(app.add_subcommand("complement", "complementary monomials"), true, false);
    add_common(app.add_subcommand("hilbert", "complement counts per degree"), true, true);

    CLI::App* partition =
        app.add_subcommand("partition-check", "cone/complement partition property");
    partition->add_option("input", config.input_path, "optional monomial-set file");
    partition->add_option("--count", config.count, "number of random sets");
    add_common(partition, false, false);

    CLI::App* pde = app.add_subcommand("pde", "linear PDE system operations");
    pde->require_subcommand(1);
    CLI::App* check = pde->add_subcommand("check", "completeness and integrability report");
    CLI::App* canon = pde->add_subcommand("canonicalize", "reduce to canonical form");
    CLI::App* solve = pde->add_subcommand("solve-monomial", "truncated series solution");
    for (CLI::App* cmd : {check, canon, solve}) {
        add_common(cmd, true, cmd == solve);
        cmd->add_option("--order", config.order_override,
                        "order override: deglex, a file, or an inline spec");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (app.got_subcommand("complete")) config.subcommand = "complete";
    else if (app.got_subcommand("mult-table")) config.subcommand = "mult-table";
    else if (app.got_subcommand("complement")) config.subcommand = "complement";
    else if (app.got_subcommand("hilbert")) config.subcommand = "hilbert";
    else if (app.got_subcommand("partition-check")) config.subcommand = "partition-check";
    else if (pde->got_subcommand("check")) config.subcommand = "pde-check";
    else if (pde->got_subcommand("canonicalize")) config.subcommand = "pde-canonicalize";
    else config.subcommand = "pde-solve-monomial";

    return janet::run(config, std::cout, std::cerr);
}
