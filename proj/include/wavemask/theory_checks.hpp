#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "wavemask/experiment.hpp"

namespace wavemask {

// One theorem-verification check: a named pass/fail with the numbers that
// drove the decision. Statistical sub-tests (KS, chi-square) appear inside
// `details` as serialized TestReports.
struct CheckResult {
    std::string name;
    bool passed = false;
    nlohmann::ordered_json details;
};

// Eq. 3 envelope: 1000 random phase profiles at N=64 stay at or below the
// diffraction limit within 1e-12, with exact equality at phi = 0.
CheckResult check_diffraction_bound(std::uint64_t seed);

// Uniform-mask aberration invariance at N=64: per-frequency two-sample KS
// across {flat, sphere 5, astigmatism 5} pupils (Bonferroni over the 31
// testable frequencies) plus ensemble-mean agreement within 3 pooled se.
CheckResult check_uniform_invariance(std::uint64_t seed, int trials);

// Closed-form uniform sampler vs the mask->apply->mtf pipeline at N=16:
// per-frequency KS at alpha=0.01 Bonferroni, plus exact same-stream equality.
CheckResult check_uniform_closed_form(std::uint64_t seed, int trials);

// Binary-mask expectation at N=8: lagged-sign enumeration vs Monte Carlo
// within 3 se at n in {1,2,3} for phi=0 and one random phi; hand value
// E[H_2] = 0.25 at phi=0; lower bound <= every exact value + 1e-12. The
// pair-hypercube route's values and clip counts are recorded alongside.
CheckResult check_binary_expectation(std::uint64_t seed, int trials);

// Second-moment closed form vs Monte Carlo within 3 se for
// p in {0.1, 0.25, 0.5} x N in {8, 16}, plus the p=0 exact identity. Records
// the Monte Carlo resolution of the printed p=0.5 constant (C/M^2 vs C/M).
CheckResult check_second_moment(std::uint64_t seed, int trials, const std::string& formula);

// Bernoulli phase -> Rademacher frequency check (3 sigma) and hypercube
// vertex uniformity (chi-square, 16 vertices) at K draws.
CheckResult check_rademacher_and_hypercube(std::uint64_t seed, int trials);

// Null-free masked MTF at N=64: with sphere aberration strong enough that
// the unmasked MTF dips below 1e-3 at >= 3 frequencies, the uniform-mask
// ensemble q05 exceeds 1e-3 wherever C(N,n) >= 4.
CheckResult check_null_free(std::uint64_t seed, int trials);

// The full suite in a fixed order, driven by TheoryParams.
std::vector<CheckResult> run_theory_suite(const TheoryParams& params, std::uint64_t seed);

} // namespace wavemask
