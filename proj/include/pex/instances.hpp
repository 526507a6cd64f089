#pragma once

#include <set>
#include <utility>
#include <vector>

#include "pex/core.hpp"

namespace pex {

// One arm at best_mean and n-1 arms at best_mean - gap: a single-group
// instance, the canonical clustered family.
Instance clustered_instance(int n, double gap, double best_mean,
                            Family family = Family::gaussian, double sigma = 1.0);

// A clustered instance with an explicit list of (gap, count) groups below
// the best arm.  Gaps must be distinct and in (0, 1]; the number of distinct
// dyadic groups they occupy is what makes the instance clustered.
struct ClusteredSpec {
    std::vector<std::pair<double, int>> group_gaps;  // (gap, arm count)
    double best_mean = 1.0;
    Family family = Family::gaussian;
    double sigma = 1.0;
};
Instance clustered_instance(const ClusteredSpec& spec);

// Spec for the hard-instance family: one arm at xi, 4^(m-k) arms at
// xi - 2^-k for each k in [0, m], filler arms at xi - 2, and for every k in
// S one extra arm at xi - 2^-k traded against a filler arm.
struct LowerBoundFamilySpec {
    int m = 2;                 // even, >= 2
    int n = 32;                // >= sum_{k=0}^m 4^k + m + 2
    double xi = 0.0;
    std::set<int> S;           // subset of {0, ..., m}
};

Instance lower_bound_base(int m, int n, double xi);
Instance lower_bound_variant(const LowerBoundFamilySpec& spec);

// The two arms of a sign-test pair, means xi + gap and xi - gap.
std::pair<Arm, Arm> sign_pair(double xi, double gap, Family family = Family::gaussian,
                              double sigma = 1.0);

}  // namespace pex
