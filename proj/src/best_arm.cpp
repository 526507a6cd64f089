#include "pex/best_arm.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace pex {

double best_arm_round_epsilon(int round) { return std::ldexp(1.0, -round); }

double best_arm_round_confidence(double delta, int round) {
    return delta / (50.0 * round * round);
}

namespace {

struct LoopOutcome {
    std::optional<BestArmResult> finished;
    std::vector<int> survivors;  // set when the round budget ran out
    int eliminations = 0;
    std::vector<RoundTrace> trace;
};

// The shared elimination loop.  Runs at most `rounds_budget` rounds; if the
// set is still plural afterwards, reports the survivors instead of throwing
// so the PAC variant can hand off.
LoopOutcome run_rounds(const Instance& instance, double delta, PullLedger& ledger, RunRng& rng,
                       int rounds_budget) {
    LoopOutcome out;
    int h = 1;
    std::vector<int> S = instance.all_ids();
    for (int r = 1; r <= rounds_budget; ++r) {
        if (S.size() == 1) {
            out.finished = BestArmResult{S.front(), r, h - 1, out.trace};
            return out;
        }
        double eps_r = best_arm_round_epsilon(r);
        double delta_r = best_arm_round_confidence(delta, r);
        int a_r = median_elim(S, instance, eps_r / 4.0, 0.01, ledger, rng);
        double mean_a = uniform_sample({a_r}, instance, eps_r / 4.0, delta_r, ledger, rng)[a_r].mean;
        bool fire = fraction_test(
            S, instance,
            {mean_a - 1.5 * eps_r, mean_a - 1.25 * eps_r, delta_r, 0.4, 0.1}, ledger, rng);
        out.trace.push_back(RoundTrace{r, eps_r, static_cast<int>(S.size()), fire});
        if (fire) {
            double delta_h = best_arm_round_confidence(delta, h);
            int b_r = median_elim(S, instance, eps_r / 4.0, delta_h, ledger, rng);
            double mean_b =
                uniform_sample({b_r}, instance, eps_r / 4.0, delta_h, ledger, rng)[b_r].mean;
            S = elimination(S, instance, mean_b - 0.5 * eps_r, mean_b - 0.25 * eps_r, delta_h,
                            ledger, rng);
            ++h;
        }
    }
    if (S.size() == 1) {
        // Formed during the final budgeted round; the return check at the
        // top of the next round is free, so honor it.
        out.finished = BestArmResult{S.front(), rounds_budget + 1, h - 1, out.trace};
        return out;
    }
    out.survivors = std::move(S);
    out.eliminations = h - 1;
    return out;
}

}  // namespace

BestArmResult distr_based_elim(const Instance& instance, double delta, PullLedger& ledger,
                               RunRng& rng, int max_rounds) {
    if (!(delta > 0.0 && delta < 0.1)) throw DomainError("distr_based_elim: needs delta < 0.1");
    instance.best_index();  // reject sign-only instances with tied maxima
    LoopOutcome out = run_rounds(instance, delta, ledger, rng, max_rounds);
    if (!out.finished)
        throw RoundLimitExceeded("distr_based_elim: round cap reached with plural survivors");
    return *out.finished;
}

PacResult pac_best_arm(const Instance& instance, double epsilon, double delta,
                       PullLedger& ledger, RunRng& rng, int max_rounds) {
    if (!(epsilon > 0.0 && epsilon < 0.5)) throw DomainError("pac_best_arm: needs epsilon < 0.5");
    if (!(delta > 0.0 && delta < 0.1)) throw DomainError("pac_best_arm: needs delta < 0.1");
    instance.best_index();
    int hand_off = static_cast<int>(std::ceil(std::log2(1.0 / epsilon)));
    int budget = std::min(hand_off, max_rounds);
    LoopOutcome out = run_rounds(instance, delta / 2.0, ledger, rng, budget);
    if (out.finished) {
        return PacResult{out.finished->chosen, out.finished->rounds_used,
                         out.finished->eliminations_performed};
    }
    int chosen = median_elim(out.survivors, instance, epsilon, delta / 2.0, ledger, rng);
    return PacResult{chosen, budget, out.eliminations};
}

PermutedResult permuted_distr_based_elim(const Instance& instance, double delta,
                                         PullLedger& ledger, RunRng& rng, int max_rounds) {
    int n = instance.n();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    RngStream& ps = rng.permutation();
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(ps.next_below(i + 1));
        std::swap(perm[i], perm[j]);
    }

    std::vector<double> means(n);
    for (int j = 0; j < n; ++j) means[j] = instance.arm(perm[j]).mean;
    Instance shuffled =
        Instance::make(std::move(means), instance.family(), instance.sigma(), instance.xi());

    PullLedger inner;
    BestArmResult res = distr_based_elim(shuffled, delta, inner, rng, max_rounds);

    for (int j = 0; j < n; ++j) {
        if (std::uint64_t c = inner.count(j)) ledger.add(perm[j], c);
    }
    res.chosen = perm[res.chosen];
    return PermutedResult{std::move(res), std::move(perm)};
}

}  // namespace pex
