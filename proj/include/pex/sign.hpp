#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>

#include "pex/core.hpp"

namespace pex {

// A reference sequence drives the per-round precision of the sign tester:
// a schedule Lambda_1 > Lambda_2 > ... in (0,1) contracting at least
// geometrically, Lambda_{i+1} <= c * Lambda_i.
class ReferenceSequence {
public:
    ReferenceSequence(std::function<double(int)> generator, double contraction,
                      std::string name);

    // Lambda_i for i >= 1.
    double lambda(int i) const;
    double contraction() const { return contraction_; }
    const std::string& name() const { return name_; }

private:
    std::function<double(int)> generator_;
    double contraction_;
    std::string name_;
};

// Lambda_i = base^-i with contraction 1/base; base must exceed 1.
ReferenceSequence geometric_reference_sequence(double base);

// Builds a sequence satisfying Lambda_{i+1} <= Lambda_i / 2 and
// T(Lambda_i) >= i * Lambda_i^-2 by greedy halving: each Lambda_i starts at
// Lambda_{i-1}/2 and halves until the growth condition holds.  Only sensible
// for T with limsup T(Delta) Delta^2 = +inf as Delta -> 0; for other T the
// search gives up after max_halvings per index with SearchBudgetExceeded.
// Values are found lazily and memoized, so indices past the representable
// range only fail when actually requested.
ReferenceSequence fast_reference_sequence(std::function<double(double)> growth_target,
                                          int max_halvings = 1100);

// Smallest i with Lambda_i <= gap; the round by which the tester resolves
// that gap.
int kappa(const ReferenceSequence& seq, double gap, int max_index = 4096);

enum class SignVerdict { above, below };

std::string verdict_name(SignVerdict v);

struct SignResult {
    SignVerdict verdict;
    int rounds_used = 0;
};

// Round schedule of the sign tester: confidence delta_r = delta / (10 r^2),
// precision eps_r = Lambda_r / 2, and ceil(2 ln(2/delta_r) / eps_r^2) pulls.
double test_sign_round_confidence(double delta, int round);
std::uint64_t test_sign_round_pulls(double delta, const ReferenceSequence& seq, int round);

// Sequential test for whether the arm's mean is above or below xi.  Each
// round takes its scheduled number of fresh pulls, compares the round's own
// empirical mean against xi +- eps_r, and answers as soon as the mean
// escapes the band.  With probability 1-delta the verdict is correct and
// the test stops by round kappa(seq, gap).
SignResult test_sign(const Arm& arm, double xi, double delta, const ReferenceSequence& seq,
                     PullLedger& ledger, RunRng& rng, int max_rounds = 60);

}  // namespace pex
