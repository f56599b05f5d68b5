// Acceptance runner: executes the nine verification checks and prints one
// pass/fail line per criterion. Exit code is 0 iff everything passes.
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "arctic/verify.hpp"

int main(int argc, char** argv) {
    int figure_N = 300;
    int n_samples = 100000;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--figure-N") && i + 1 < argc) figure_N = std::atoi(argv[++i]);
        if (!std::strcmp(argv[i], "--samples") && i + 1 < argc) n_samples = std::atoi(argv[++i]);
    }
    auto results = arctic::verify::run_all(figure_N, n_samples);
    bool ok = true;
    for (const auto& r : results) {
        ok = ok && r.pass;
        std::printf("criterion %d [%s] %s: %s (%.1f s)\n", r.id, r.pass ? "PASS" : "FAIL",
                    r.name.c_str(), r.detail.c_str(), r.seconds);
        std::fflush(stdout);
    }
    return ok ? 0 : 1;
}
