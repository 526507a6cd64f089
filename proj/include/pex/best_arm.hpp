#pragma once

#include <cstdint>
#include <vector>

#include "pex/core.hpp"
#include "pex/primitives.hpp"

namespace pex {

struct RoundTrace {
    int round = 0;
    double epsilon_r = 0.0;
    int set_size = 0;
    bool fraction_test_true = false;
};

struct BestArmResult {
    int chosen = -1;
    int rounds_used = 0;
    int eliminations_performed = 0;  // final h - 1
    std::vector<RoundTrace> per_round_trace;
};

// Round schedule: eps_r = 2^-r, delta_r = delta / (50 r^2); the same decay
// governs the per-elimination confidences delta_h.
double best_arm_round_epsilon(int round);
double best_arm_round_confidence(double delta, int round);

// Distribution-based elimination for Best-1-Arm.  Each round finds an
// eps_r/4-optimal pivot with median elimination (fixed confidence 0.01),
// estimates it, and fraction-tests whether a large share of arms sit well
// below the pivot; only then does it pay for an elimination pass (with a
// fresh, tighter pivot).  Returns the sole survivor; delta must be below
// 0.1.  Correct with probability at least 1-delta.
BestArmResult distr_based_elim(const Instance& instance, double delta, PullLedger& ledger,
                               RunRng& rng, int max_rounds = 60);

struct PacResult {
    int chosen = -1;
    int elimination_rounds = 0;       // rounds executed before the hand-off
    int eliminations_performed = 0;
};

// (epsilon, delta)-PAC variant: runs the elimination loop at confidence
// delta/2 for ceil(log2(1/epsilon)) rounds, then hands the survivors to
// median elimination at (epsilon, delta/2).  Needs epsilon < 0.5 and
// delta < 0.1.
PacResult pac_best_arm(const Instance& instance, double epsilon, double delta,
                       PullLedger& ledger, RunRng& rng, int max_rounds = 60);

struct PermutedResult {
    BestArmResult result;          // ids mapped back to the input order
    std::vector<int> permutation;  // permuted position -> original arm id
};

// Wrapper that shuffles the input arms uniformly before running the
// elimination algorithm, so behaviour depends only on the multiset of
// reward distributions.  The chosen arm, trace and ledger are mapped back
// through the inverse permutation.
PermutedResult permuted_distr_based_elim(const Instance& instance, double delta,
                                         PullLedger& ledger, RunRng& rng, int max_rounds = 60);

}  // namespace pex
