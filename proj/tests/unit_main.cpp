#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>
#include <string>
#include <vector>

// --seed N (or --seed=N) sets RHT_SEED for the randomized tests; the rest goes to doctest.
int main(int argc, char** argv) {
    std::vector<char*> rest{argv[0]};
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--seed" && i + 1 < argc) {
            setenv("RHT_SEED", argv[++i], 1);
        } else if (arg.rfind("--seed=", 0) == 0) {
            setenv("RHT_SEED", arg.c_str() + 7, 1);
        } else {
            rest.push_back(argv[i]);
        }
    }
    doctest::Context ctx(static_cast<int>(rest.size()), rest.data());
    return ctx.run();
}
