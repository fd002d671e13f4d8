#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <map>
#include <set>

#include "cycalc/cli.hpp"
#include "cycalc/tables.hpp"

using namespace cycalc;

TEST_CASE("theorem sixteen ends with k = 16") {
    CommandResult res = dispatch({"theorem", "sixteen"});
    CHECK(res.exit_code == 0);
    CHECK(res.payload["k"] == 16);
    CHECK(res.payload["schema"] == "cycalc/1");
    auto trace = res.payload["trace"];
    REQUIRE(!trace.empty());
    CHECK(trace.back() == "k = 16");
}

TEST_CASE("tables validate exits zero on the shipped data") {
    CommandResult res = dispatch({"tables", "validate"});
    CHECK(res.exit_code == 0);
    CHECK(res.payload["pass"] == true);
    CHECK(res.payload["rows"] == 50);
}

TEST_CASE("invariants compute reproduces the weighted quotient entry") {
    CommandResult res = dispatch({"invariants", "compute", "--s", "10", "--n", "1", "--d", "1/2"});
    CHECK(res.exit_code == 0);
    CHECK(res.payload["h3"] == "1");
    CHECK(res.payload["hc2"] == "34");
    CHECK_FALSE(res.payload.contains("e"));

    CommandResult with_euler = dispatch(
        {"invariants", "compute", "--s", "10", "--n", "1", "--d", "1/2", "--euler-y", "4"});
    CHECK(with_euler.payload["e"] == "-288");
    CHECK(with_euler.payload["euler_s"] == "295");

    // --fano-index route
    CommandResult via_index = dispatch(
        {"invariants", "compute", "--fano-index", "5/2", "--n", "1", "--d", "1/2"});
    CHECK(via_index.payload["hc2"] == "34");
}

TEST_CASE("fermat count subcommand") {
    CommandResult res = dispatch({"fermat", "count", "--ambient", "5", "--eqs",
                                  "2:1,1,1,1,1,1;4:1,1,1,1,1,1", "--signs", "-,-,-,+,+,+"});
    CHECK(res.exit_code == 0);
    CHECK(res.payload["count"] == 16);
    CHECK(res.payload["strata"].size() == 2);
    CHECK(res.payload["strata"][0]["count"] == 8);
    CHECK(res.payload["certificates"]["all_jacobians_full_rank"] == true);
}

TEST_CASE("fixlocus wps subcommand") {
    CommandResult res = dispatch({"fixlocus", "wps", "--weights", "1,1,1,2,5", "--degree", "10",
                                  "--poly", "x^10+y^10+z^10+w^5-t^2", "--signs", "+,+,+,+,-",
                                  "--verify-quotient"});
    CHECK(res.exit_code == 0);
    CHECK(res.payload["surface_count"] == 1);
    CHECK(res.payload["isolated_point_count"] == 1);
    CHECK(res.payload["quotient_projection"]["pass"] == true);
}

TEST_CASE("json output is byte-identical across runs") {
    for (auto args : {std::vector<std::string>{"theorem", "sixteen", "--format", "json"},
                      {"tables", "query", "--n", "8", "--format", "json"},
                      {"invariants", "compute", "--s", "2", "--n", "0", "--d", "22",
                       "--format", "json"},
                      {"fermat", "count", "--ambient", "5", "--eqs", "2:1,1,1,1,1,1;4:1,1,1,1,1,1",
                       "--signs", "-,-,-,+,+,+", "--list", "--format", "json"},
                      {"fixlocus", "wps", "--weights", "1,1,1,2,5", "--degree", "10", "--poly",
                       "x^10+y^10+z^10+w^5-t^2", "--signs", "+,+,+,+,-", "--format", "json"}}) {
        CommandResult a = dispatch(args);
        CommandResult b = dispatch(args);
        CHECK(a.exit_code == 0);
        CHECK(a.human_text == b.human_text);
        CHECK(!a.human_text.empty());
    }
}

TEST_CASE("usage errors exit 2, module errors exit 1") {
    CHECK(dispatch({"frobnicate"}).exit_code == 2);
    CHECK(dispatch({}).exit_code == 2);
    CommandResult res = dispatch({"invariants", "compute", "--s", "10", "--n", "1", "--d", "0"});
    CHECK(res.exit_code == 1);
    CHECK(res.payload["error"]["code"] == "bad-quotient");
    // validation failures exit 1 through the dataset override
    auto rows = load_dataset();
    rows[0].hc2 += 1;
    std::string path = "/tmp/cycalc_cli_dataset.tsv";
    {
        std::ofstream out(path, std::ios::binary);
        out << render_dataset_tsv(rows);
    }
    setenv("CYCALC_DATASET", path.c_str(), 1);
    CommandResult bad = dispatch({"tables", "validate"});
    unsetenv("CYCALC_DATASET");
    CHECK(bad.exit_code == 1);
    CHECK(bad.payload["pass"] == false);
}

TEST_CASE("tables query subcommand") {
    CommandResult res = dispatch({"tables", "query", "--n", "8", "--format", "json"});
    CHECK(res.exit_code == 0);
    CHECK(res.payload["count"] == 3);
    CommandResult tsv = dispatch({"tables", "query", "--s", "10", "--format", "tsv"});
    CHECK(tsv.human_text.find("p1112") != std::string::npos);
    CommandResult none = dispatch({"tables", "query", "--h3-min", "45"});
    CHECK(none.payload["count"] == 0);
}

TEST_CASE("routing table covers every operation exactly once") {
    const std::set<std::string> expected_ops = {
        "triple_product", "pullback", "pushforward_cover", "canonical_chain",
        "c2_restriction", "chi_of_resolution", "solve_isolated_count", "minus_K_dot_c2",
        "h3_of_cover", "hc2_of_cover", "surface_euler", "euler_of_cover", "s_from_fano_index",
        "fixed_locus", "singularity_type", "hypersurface_fixed_locus",
        "verify_quotient_projection", "count_fixed_points", "list_fixed_points",
        "load_dataset", "validate_all", "query"};
    const std::set<std::string> subcommands = {"theorem sixteen", "tables validate",
                                               "tables query", "invariants compute",
                                               "fixlocus wps", "fermat count"};
    std::map<std::string, int> seen;
    for (const auto& route : routing_table()) {
        ++seen[route.op];
        CHECK(subcommands.count(route.subcommand) == 1);
    }
    CHECK(seen.size() == expected_ops.size());
    for (const auto& op : expected_ops) {
        INFO(op);
        CHECK(seen[op] == 1);
    }
    // every subcommand owns at least one operation
    std::set<std::string> used;
    for (const auto& route : routing_table()) used.insert(route.subcommand);
    CHECK(used == subcommands);
}
