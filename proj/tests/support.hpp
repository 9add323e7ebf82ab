#pragma once

// Shared test helpers: deterministic random generators for rationals and
// angle data, plus a tiny subprocess harness for driving the CLI.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "cones/rational.hpp"

namespace test_support {

extern std::string cli_path_storage;  // set from --cli-path= in main

inline std::string cli_path() {
    if (!cli_path_storage.empty()) return cli_path_storage;
    if (const char* env = std::getenv("CONES_CLI")) return env;
    return {};
}

// Rational with |numerator| <= max_num and 1 <= denominator <= max_den.
inline cones::Rational random_rational(std::mt19937_64& rng, long max_num, long max_den) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return cones::Rational(num(rng), den(rng));
}

inline cones::Rational random_positive_rational(std::mt19937_64& rng, long max_num,
                                                long max_den) {
    std::uniform_int_distribution<long> num(1, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return cones::Rational(num(rng), den(rng));
}

inline std::vector<cones::Rational> random_vector(std::mt19937_64& rng, std::size_t n,
                                                  long max_num, long max_den) {
    std::vector<cones::Rational> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(random_rational(rng, max_num, max_den));
    return v;
}

// Angle triple (as exact multiples of pi, each in (0,1)) satisfying the
// four strict spherical-triangle inequalities.
inline std::array<cones::Rational, 3> random_triangle_angles_pi(std::mt19937_64& rng) {
    const cones::Rational one(1);
    std::uniform_int_distribution<long> num(1, 99);
    while (true) {
        std::array<cones::Rational, 3> q = {cones::Rational(num(rng), 100),
                                            cones::Rational(num(rng), 100),
                                            cones::Rational(num(rng), 100)};
        if (!(q[0] + q[1] + q[2] > one)) continue;
        if (!(q[0] + q[1] - q[2] < one)) continue;
        if (!(q[1] + q[2] - q[0] < one)) continue;
        if (!(q[2] + q[0] - q[1] < one)) continue;
        return q;
    }
}

struct CommandResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

inline CommandResult run_command(const std::string& command) {
    CommandResult result;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) return result;
    char buffer[4096];
    while (std::size_t bytes = std::fread(buffer, 1, sizeof buffer, pipe))
        result.output.append(buffer, bytes);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

}  // namespace test_support
