#include <cstdio>
#include <string>
#include <vector>

#include "cycalc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    cycalc::CommandResult res = cycalc::dispatch(args);
    std::fputs(res.human_text.c_str(), stdout);
    return res.exit_code;
}
