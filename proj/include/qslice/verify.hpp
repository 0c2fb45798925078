#pragma once

#include <string>
#include <vector>

namespace qslice::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    double max_residual = 0;
};

CheckResult entire_identity();        // cos_sqrt^2 + sinc_sqrt^2 q = 1
CheckResult inverse_pair();           // acos_squared inverts cos_sqrt both ways
CheckResult closed_forms();           // constant exponentials and point values
CheckResult route_agreement();        // series route vs split route, exp identities
CheckResult log_roundtrip();          // exp_* of star_log(exp_*(F)) returns exp_*(F)
CheckResult uniqueness_family();      // exp_*(F + 2 pi F_v / sqrt(F_v^s)) = exp_*(F)
CheckResult obstruction_fixtures();   // the three sign-obstruction polynomials
CheckResult cossin_solver();          // cos/sin system solutions
CheckResult zero_classifier();        // classification vs brute-force sphere scans

/// suite is one of "all", "identities", "roundtrip", "obstruction".
std::vector<CheckResult> run_suite(const std::string& suite);

}  // namespace qslice::verify
