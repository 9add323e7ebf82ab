#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include "support.hpp"

std::string test_support::cli_path_storage;

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg.rfind("--cli-path=", 0) == 0)
            test_support::cli_path_storage = arg.substr(11);
    }
    doctest::Context context(argc, argv);
    return context.run();
}
