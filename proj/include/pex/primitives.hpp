#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pex/core.hpp"
#include "pex/stats.hpp"

namespace pex {

// Per-arm estimate produced by uniform sampling.
struct Estimate {
    double mean = 0.0;
    std::uint64_t pulls = 0;
};

using EmpiricalMeans = std::map<int, Estimate>;

// Samples every arm of S exactly hoeffding_pulls(epsilon, delta) times and
// returns the empirical means.  Fresh samples on every call; estimates are
// never reused across procedures.
EmpiricalMeans uniform_sample(const std::vector<int>& S, const Instance& instance,
                              double epsilon, double delta, PullLedger& ledger, RunRng& rng);

// Classic median elimination (Even-Dar et al.): rounds of uniform sampling,
// each keeping the ceil-half of arms with the highest empirical means, until
// one survives.  Schedule: eps_1 = eps/4, delta_1 = delta/2, then
// eps_{l+1} = (3/4) eps_l, delta_{l+1} = delta_l / 2, with
// ceil(8 eps_l^-2 ln(3/delta_l)) pulls per arm per round, so the total
// budget is at most K |S| eps^-2 ln(1/delta) with K < 1.2e4 for delta <= 0.5
// (sum of 128 (8/9)^(l-1) (ln(3/delta) + (l-1) ln 2) over rounds).
// Ties at the median break toward the lower arm index.
int median_elim(const std::vector<int>& S, const Instance& instance, double epsilon,
                double delta, PullLedger& ledger, RunRng& rng);

// Deterministic closed form for the pulls median_elim takes on a set of the
// given size (the schedule does not depend on observed rewards).
std::uint64_t median_elim_budget(std::size_t set_size, double epsilon, double delta);

// Per-round schedule values, exposed for tests and the step-machine twin.
struct MedianElimRound {
    double epsilon;
    double delta;
    std::uint64_t pulls_per_arm;
};
MedianElimRound median_elim_round(double epsilon, double delta, int round);

struct FractionTestParams {
    double c_l;
    double c_r;
    double delta;
    double t;        // threshold on the counted fraction
    double epsilon;  // approximate parameter, at most 0.1
};

// Iteration count ceil(ln(2/delta) (epsilon/3)^-2 / 2).
std::uint64_t fraction_test_iterations(double delta, double epsilon);

// Distinguishes "many arms below c_r" from "most arms above c_l": repeatedly
// estimates a uniformly drawn arm to precision (c_r-c_l)/2 at confidence
// epsilon/3 and counts estimates below the midpoint; returns true iff the
// counted fraction strictly exceeds t.  Total pulls are exactly
// fraction_test_iterations(delta, epsilon) * hoeffding_pulls((c_r-c_l)/2, epsilon/3).
bool fraction_test(const std::vector<int>& S, const Instance& instance,
                   const FractionTestParams& params, PullLedger& ledger, RunRng& rng);

// Round confidence delta / (10 * 2^r) used by elimination.
double elimination_round_confidence(double delta, int round);

// Repeatedly fraction-tests against the lower half of [c_l, c_r] and, while
// the test keeps firing, uniform-samples the survivors and keeps arms whose
// estimate clears (c_m+c_r)/2.  Returns the survivor set once the test stops
// firing.  Assumes delta < 0.1 and the best arm's mean >= c_r; then with
// probability 1-delta the best arm survives and under 10% of survivors sit
// at or below c_l.
std::vector<int> elimination(const std::vector<int>& S, const Instance& instance, double c_l,
                             double c_r, double delta, PullLedger& ledger, RunRng& rng,
                             int max_rounds = 64);

}  // namespace pex
