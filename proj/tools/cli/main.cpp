#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <thread>

#ifndef UNIFLIP_DEFAULT_DATA_DIR
#define UNIFLIP_DEFAULT_DATA_DIR "data"
#endif

int main(int argc, char** argv) {
    using namespace uniflip::cli;
    RunConfig cfg;
    cfg.data_dir = UNIFLIP_DEFAULT_DATA_DIR;
    cfg.jobs = std::max(1u, std::thread::hardware_concurrency());

    CLI::App app{"Graded-trace polynomials attached to unipotent families of Weyl groups"};
    app.require_subcommand(1);
    std::string format = "table";
    app.add_option("--type", cfg.type, "Cartan type, e.g. B2 or F4");
    app.add_option("--orbit", cfg.orbit, "Orbit id, name, or 'full'");
    app.add_option("--family", cfg.family, "Family id, 'trivial', 'sign' or a member label");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--data-dir", cfg.data_dir, "Curated data directory");
    app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--guard", cfg.guard_extra, "Extra series coefficients checked in exact divisions");

    auto* types = app.add_subcommand("types", "List types with curated data");
    auto* subs = app.add_subcommand("subsystems", "Orbits of subsystems with their Z sets");
    auto* zcl = app.add_subcommand("zclasses", "Classes of N(Sigma)/W(Sigma) per orbit");
    auto* pp = app.add_subcommand("ppoly", "Tables of P_{m,z}(u)");
    auto* ver = app.add_subcommand("verify", "Verification sweeps");
    ver->add_option("which", cfg.which, "theorem112, independence, degrees or selftest")
        ->required()
        ->check(CLI::IsMember({"theorem112", "independence", "degrees", "selftest"}));
    for (auto* s : {types, subs, zcl, pp, ver}) s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    const std::map<CLI::App*, Command> commands = {{types, Command::Types},   {subs, Command::Subsystems},
                                                   {zcl, Command::ZClasses}, {pp, Command::PPoly},
                                                   {ver, Command::Verify}};
    cfg.command = commands.at(app.get_subcommands().front());
    cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Table;
    return run(cfg, std::cout, std::cerr);
}
