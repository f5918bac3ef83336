#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace acute::cli {

enum ExitCode : int { ok = 0, invalid_input = 1, unsupported_size = 2, internal_error = 3 };

struct RunConfig {
    std::string subcommand;
    std::string input;
    std::string output;
    std::string tour;
    std::string svg;
    int scale_k = 6;
    std::uint64_t seed = 0;
    std::string distribution = "uniform";
    std::size_t n = 0;
    std::vector<std::size_t> sizes;
    std::size_t runs = 1;
};

/// Full command line without the program name, e.g. {"tour", "--input", "p.csv"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv);

}  // namespace acute::cli
