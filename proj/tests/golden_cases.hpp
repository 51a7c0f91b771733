#pragma once

#include "gradal/cli.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace gradal::testing {

struct GoldenCase {
    std::string file;
    std::vector<std::vector<std::string>> invocations;
};

inline const std::vector<GoldenCase> &golden_cases()
{
    static const std::vector<GoldenCase> cases{
        {"demo_a90_n2.jsonl", {{"demo", "a90", "--n", "2"}}},
        {"demo_a140.jsonl", {{"demo", "a140"}}},
        {"classify.jsonl",
         {{"classify", "Q[Z/2]coarse"},
          {"classify", "Z[Z^2]fine"},
          {"classify", "coarsen(Q[Z^2]fine, [[1,1]])"},
          {"classify", "Frac(Z[Z]fine)"},
          {"classify", "Z[Z/4]fine[Z]coarse"}}},
    };
    return cases;
}

/// Concatenated stdout of the case's invocations; empty on a nonzero exit.
inline std::string golden_output(const GoldenCase &c)
{
    std::ostringstream out, err;
    for (const auto &args : c.invocations)
        if (cli::run(args, out, err) != 0)
            return {};
    return out.str();
}

inline std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace gradal::testing
