#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qlgraph_cli/manifest.hpp"

namespace qlgraph::cli {

struct Context {
    std::ostream& out;
    std::ostream& err;
    OutputSet outputs;
    std::vector<std::uint64_t> seeds;
};

/// A registered subcommand: `run` executes it after a successful parse.
struct Command {
    CLI::App* app = nullptr;
    std::function<void(Context&)> run;
    /// Commands that only report (replay) write no manifest.
    bool writes_manifest = true;
};

std::vector<Command> register_commands(CLI::App& app);

}  // namespace qlgraph::cli
