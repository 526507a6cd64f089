#include "pex/sign.hpp"

#include <cassert>
#include <cmath>
#include <mutex>
#include <vector>

#include "pex/errors.hpp"
#include "pex/stats.hpp"

namespace pex {

ReferenceSequence::ReferenceSequence(std::function<double(int)> generator, double contraction,
                                     std::string name)
    : generator_(std::move(generator)), contraction_(contraction), name_(std::move(name)) {}

double ReferenceSequence::lambda(int i) const {
    if (i < 1) throw DomainError("reference sequence index starts at 1");
    double v = generator_(i);
    assert(v > 0.0 && v < 1.0);
    return v;
}

ReferenceSequence geometric_reference_sequence(double base) {
    if (!(base > 1.0)) throw DomainError("geometric reference sequence needs base > 1");
    return ReferenceSequence([base](int i) { return std::pow(base, -static_cast<double>(i)); },
                             1.0 / base, "geom:" + std::to_string(base));
}

namespace {

// Memoized greedy-halving state shared by all copies of the sequence.
struct FastSeqState {
    std::function<double(double)> target;
    int max_halvings;
    std::mutex mu;
    std::vector<double> known;  // known[i-1] = Lambda_i

    double at(int i) {
        std::lock_guard<std::mutex> lock(mu);
        while (static_cast<int>(known.size()) < i) {
            int next = static_cast<int>(known.size()) + 1;
            double prev = known.empty() ? 0.5 : known.back();
            double cand = prev / 2.0;
            int halvings = 0;
            while (true) {
                if (cand <= 0.0 || halvings >= max_halvings) {
                    throw SearchBudgetExceeded(
                        "fast_reference_sequence: no admissible Lambda_" + std::to_string(next) +
                        " within the halving budget");
                }
                if (target(cand) * cand * cand >= static_cast<double>(next)) break;
                cand /= 2.0;
                ++halvings;
            }
            known.push_back(cand);
        }
        return known[i - 1];
    }
};

}  // namespace

ReferenceSequence fast_reference_sequence(std::function<double(double)> growth_target,
                                          int max_halvings) {
    auto state = std::make_shared<FastSeqState>();
    state->target = std::move(growth_target);
    state->max_halvings = max_halvings;
    return ReferenceSequence([state](int i) { return state->at(i); }, 0.5, "fast");
}

int kappa(const ReferenceSequence& seq, double gap, int max_index) {
    if (!(gap > 0.0 && gap < 1.0)) throw DomainError("kappa: gap must be in (0,1)");
    for (int i = 1; i <= max_index; ++i) {
        if (seq.lambda(i) <= gap) return i;
    }
    throw SearchBudgetExceeded("kappa: index cap reached before Lambda_i <= gap");
}

std::string verdict_name(SignVerdict v) { return v == SignVerdict::above ? "above" : "below"; }

double test_sign_round_confidence(double delta, int round) {
    return delta / (10.0 * round * round);
}

std::uint64_t test_sign_round_pulls(double delta, const ReferenceSequence& seq, int round) {
    double eps = seq.lambda(round) / 2.0;
    double raw = std::ceil(2.0 * std::log(2.0 / test_sign_round_confidence(delta, round)) /
                           (eps * eps));
    if (raw > 0x1p53)
        throw RoundLimitExceeded("test_sign: round pull count exceeds 2^53");
    return static_cast<std::uint64_t>(raw);
}

SignResult test_sign(const Arm& arm, double xi, double delta, const ReferenceSequence& seq,
                     PullLedger& ledger, RunRng& rng, int max_rounds) {
    if (!(delta > 0.0 && delta < 1.0)) throw DomainError("test_sign: delta must be in (0,1)");
    for (int r = 1; r <= max_rounds; ++r) {
        double eps_r = seq.lambda(r) / 2.0;
        std::uint64_t pulls = test_sign_round_pulls(delta, seq, r);
        // The round's verdict uses only this round's samples, never a
        // running mean across rounds.
        double mean = sample_mean(arm, pulls, ledger, rng.arm(arm.id));
        if (mean > xi + eps_r) return SignResult{SignVerdict::above, r};
        if (mean < xi - eps_r) return SignResult{SignVerdict::below, r};
    }
    throw RoundLimitExceeded("test_sign: round cap reached; gap below resolvable scale");
}

}  // namespace pex
