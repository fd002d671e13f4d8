// Command-line dispatch: every library operation is reachable from exactly
// one subcommand, results are emitted either as human text or as canonical
// JSON ("schema": "cycalc/1", rationals rendered "p/q", keys sorted), and
// identical invocations produce byte-identical output.
#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace cycalc {

struct CommandResult {
    int exit_code = 0;             // 0 ok, 1 module error / failed checks, 2 usage
    nlohmann::json payload;        // always carries "schema"
    std::string human_text;
};

CommandResult dispatch(const std::vector<std::string>& args);

struct Route {
    std::string op;
    std::string subcommand;
};

// Canonical owner subcommand for every library operation.
const std::vector<Route>& routing_table();

}  // namespace cycalc
