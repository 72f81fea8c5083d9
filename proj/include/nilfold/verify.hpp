#pragma once

#include <string>
#include <vector>

namespace nilfold {
namespace verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Options {
    // test hook: corrupts one entry of the Williamson-to-standard matrix so
    // the battery must report "symplecticity:matrix_P"
    bool corrupt_matrix_P = false;
};

// Exact-algebra battery: matrix P conditions, S(mu1,nu1) conditions at 20
// rational points, phi-map eigenvalue correspondence on a 21x21 grid,
// the sl(2,R) triple, and the complement property for n = 1..4.
std::vector<CheckResult> run_battery(const Options& opts = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace verify
}  // namespace nilfold
