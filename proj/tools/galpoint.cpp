#include <iostream>

#include "CLI11.hpp"
#include "galpoint/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Galois points and birational plane embeddings of curves over finite fields"};
    app.require_subcommand(1);

    galpoint::Command cmd;
    std::uint64_t seed = 0;
    std::uint32_t working_ext = 1;
    std::size_t cap = 0;
    std::string cert;

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"check", "decide the criteria of a scenario"},
        {"construct", "build the plane model and certify its Galois points"},
        {"extend", "decide whether sigma extends to a linear map of the model"},
        {"equiv", "compare constructions from two seeds"},
        {"oracle", "compare the Artin test against generic fibers and enumerate automorphisms"},
        {"verify", "re-check the identities recorded in a certificate"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        if (name == "verify") {
            sub->add_option("--cert", cert, "certificate file")->required();
        } else {
            sub->add_option("scenario", cmd.scenario, "scenario file or bundled fixture name")->required();
            sub->add_option("--cert", cert, "write the certificate to this file");
            sub->add_option("--seed", seed, "random seed (default 0)");
            sub->add_option("--working-ext", working_ext, "degree of the working extension")->check(CLI::PositiveNumber);
            sub->add_option("--cap", cap, "group size cap")->check(CLI::PositiveNumber);
        }
        sub->add_flag("--json", cmd.json, "print the certificate instead of the summary");
        sub->callback([&cmd, name = name] { cmd.name = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : galpoint::kExitInvalid;
    }

    for (CLI::App* sub : app.get_subcommands()) {
        auto given = [sub](const std::string& name) {
            const CLI::Option* o = sub->get_option_no_throw(name);
            return o != nullptr && o->count() > 0;
        };
        if (given("--seed")) cmd.seed = seed;
        if (given("--working-ext")) cmd.working_ext = working_ext;
        if (given("--cap")) cmd.cap = cap;
        if (given("--cert")) cmd.cert = cert;
    }
    return galpoint::run_command(cmd, std::cout, std::cerr);
}
