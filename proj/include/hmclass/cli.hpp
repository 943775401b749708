#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hmclass/report.hpp"

namespace hmclass {

// Command-line front end, separated from main() so that tests can drive it
// in-process. `args` excludes the program name. Exit codes: 0 success (and
// exact cross-algorithm match in check mode), 2 mismatch in check mode,
// 1 usage, parse or computation errors.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hirzebruch-Milnor classes of hyperplane arrangements in P^2 and P^3"};
    app.name("hmclass");
    app.require_subcommand(1);

    std::string file;
    std::string algorithm = "both";
    std::string format = "text";

    CLI::App* compute = app.add_subcommand(
        "compute", "compute the class with the selected engine(s) and print a report");
    compute->add_option("file", file, "arrangement file")->required();
    compute->add_option("--algorithm", algorithm, "ktheory | spectrum | both")
        ->check(CLI::IsMember({"ktheory", "spectrum", "both"}));
    compute->add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* check =
        app.add_subcommand("check", "run both engines and compare their pushforwards");
    check->add_option("file", file, "arrangement file")->required();
    check->add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* lattice_cmd =
        app.add_subcommand("lattice", "print the intersection lattice of the cone");
    lattice_cmd->add_option("file", file, "arrangement file")->required();
    lattice_cmd->add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    std::size_t max_flats = kDefaultMaxFlats;
    if (const char* cap = std::getenv("HMCLASS_MAX_FLATS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(cap, &end, 10);
        if (end == cap || *end != '\0' || v == 0) {
            err << "error: HMCLASS_MAX_FLATS must be a positive integer\n";
            return 1;
        }
        max_flats = static_cast<std::size_t>(v);
    }

    std::ifstream in(file);
    if (!in) {
        err << "error: cannot open '" << file << "'\n";
        return 1;
    }
    std::ostringstream buf;
    buf << in.rdbuf();

    try {
        const Arrangement arr = parse_arrangement(buf.str());
        Algorithm alg = Algorithm::none;
        if (compute->parsed()) {
            alg = algorithm == "ktheory"    ? Algorithm::ktheory
                  : algorithm == "spectrum" ? Algorithm::spectrum
                                            : Algorithm::both;
        } else if (check->parsed()) {
            alg = Algorithm::both;
        }
        const Report report = make_report(file, arr, alg, max_flats);
        if (format == "json")
            out << render_json(report).dump(2) << "\n";
        else
            out << render_text(report, lattice_cmd->parsed());
        if (check->parsed() && report.crosscheck != CrosscheckStatus::match) return 2;
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace hmclass
