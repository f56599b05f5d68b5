#pragma once

#include <string>
#include <vector>

namespace arctic::verify {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

// The nine acceptance checks. figure_N selects the lattice size of check 8
// (300 = paper scale, tolerance one lattice spacing; 128 = fallback, two).
CheckResult check_proposition1();        // 1
CheckResult check_partition_relation();  // 2
CheckResult check_regime_I_ellipse();    // 3
CheckResult check_resolvent_roundtrip(); // 4
CheckResult check_appendix_C_guards();   // 5
CheckResult check_discriminant();        // 6
CheckResult check_shuffling_calibration(int n_samples = 100000);  // 7
CheckResult check_figure_scale(int figure_N);                     // 8
CheckResult check_eta_solver();          // 9

// Named CLI suites: oracle, curve-identities, appendixC, shuffling, figures.
std::vector<CheckResult> run_suite(const std::string& name, int figure_N = 300,
                                   int n_samples = 100000);
std::vector<CheckResult> run_all(int figure_N = 300, int n_samples = 100000);

}  // namespace arctic::verify
