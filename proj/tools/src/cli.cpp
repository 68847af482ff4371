#include "qlgraph_cli/cli.hpp"

#include <iostream>
#include <memory>

#include "commands.hpp"
#include "qlgraph/errors.hpp"

namespace qlgraph::cli {

std::string tool_version() {
    return QLGRAPH_VERSION;
}

namespace {

nlohmann::json option_values(const CLI::App& sub) {
    auto params = nlohmann::json::object();
    for (const auto* opt : sub.get_options()) {
        if (opt->get_lnames().empty()) {
            continue;
        }
        const auto key = opt->get_lnames().front();
        if (key == "help") {
            continue;
        }
        const auto& results = opt->results();
        if (opt->count() == 0) {
            params[key] = opt->get_default_str();
        } else if (opt->get_expected_max() > 1 || results.size() > 1) {
            params[key] = results;
        } else if (results.empty()) {
            params[key] = true;
        } else {
            params[key] = results.front();
        }
    }
    return params;
}

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::validation:
            return kExitValidation;
        case ErrorKind::numerical:
            return kExitNumerical;
        case ErrorKind::io:
            return kExitIo;
    }
    return kExitValidation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum-like bit graphs: construction, spectra, products and experiments", "qlgraph"};
    app.set_version_flag("--version", tool_version());
    app.require_subcommand(1);
    auto commands = register_commands(app);

    std::vector<std::string> storage{"qlgraph"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : storage) {
        argv.push_back(s.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << tool_version() << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    for (auto& cmd : commands) {
        if (!cmd.app->parsed()) {
            continue;
        }
        Context ctx{out, err, {}, {}};
        try {
            cmd.run(ctx);
            if (cmd.writes_manifest) {
                nlohmann::json manifest{{"tool", "qlgraph"},
                                        {"version", tool_version()},
                                        {"command", cmd.app->get_name()},
                                        {"argv", args},
                                        {"parameters", option_values(*cmd.app)},
                                        {"seeds", ctx.seeds}};
                ctx.outputs.commit(manifest);
            }
        } catch (const Error& e) {
            err << "error: " << e.what() << "\n";
            return exit_code(e.kind());
        } catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
            return kExitValidation;
        }
        return kExitOk;
    }
    err << "error: no command given\n";
    return kExitValidation;
}

}  // namespace qlgraph::cli
