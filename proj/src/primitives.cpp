#include "pex/primitives.hpp"

#include <algorithm>
#include <cmath>

namespace pex {

EmpiricalMeans uniform_sample(const std::vector<int>& S, const Instance& instance,
                              double epsilon, double delta, PullLedger& ledger, RunRng& rng) {
    if (S.empty()) throw EmptySet("uniform_sample: empty arm set");
    std::uint64_t pulls = hoeffding_pulls(epsilon, delta);
    EmpiricalMeans out;
    for (int id : S) {
        double mean = sample_mean(instance.arm(id), pulls, ledger, rng.arm(id));
        out[id] = Estimate{mean, pulls};
    }
    return out;
}

MedianElimRound median_elim_round(double epsilon, double delta, int round) {
    double eps_l = epsilon / 4.0;
    double delta_l = delta / 2.0;
    for (int l = 1; l < round; ++l) {
        eps_l *= 0.75;
        delta_l *= 0.5;
    }
    double raw = std::ceil(8.0 / (eps_l * eps_l) * std::log(3.0 / delta_l));
    if (raw > 0x1p53) throw DomainError("median_elim: per-round pull count exceeds 2^53");
    return MedianElimRound{eps_l, delta_l, static_cast<std::uint64_t>(raw)};
}

int median_elim(const std::vector<int>& S, const Instance& instance, double epsilon,
                double delta, PullLedger& ledger, RunRng& rng) {
    if (S.empty()) throw EmptySet("median_elim: empty arm set");
    if (!(epsilon > 0.0)) throw DomainError("median_elim: epsilon must be > 0");
    if (!(delta > 0.0 && delta < 1.0)) throw DomainError("median_elim: delta must be in (0,1)");
    std::vector<int> survivors = S;
    for (int l = 1; survivors.size() > 1; ++l) {
        MedianElimRound sched = median_elim_round(epsilon, delta, l);
        std::vector<std::pair<double, int>> scored;
        scored.reserve(survivors.size());
        for (int id : survivors) {
            double mean = sample_mean(instance.arm(id), sched.pulls_per_arm, ledger, rng.arm(id));
            scored.emplace_back(mean, id);
        }
        std::size_t keep = (scored.size() + 1) / 2;
        std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        });
        survivors.clear();
        for (std::size_t i = 0; i < keep; ++i) survivors.push_back(scored[i].second);
        std::sort(survivors.begin(), survivors.end());
    }
    return survivors.front();
}

std::uint64_t median_elim_budget(std::size_t set_size, double epsilon, double delta) {
    std::uint64_t total = 0;
    std::size_t size = set_size;
    for (int l = 1; size > 1; ++l) {
        total += size * median_elim_round(epsilon, delta, l).pulls_per_arm;
        size = (size + 1) / 2;
    }
    return total;
}

std::uint64_t fraction_test_iterations(double delta, double epsilon) {
    double scaled = epsilon / 3.0;
    return static_cast<std::uint64_t>(
        std::ceil(std::log(2.0 / delta) / (scaled * scaled) / 2.0));
}

namespace {

void validate_fraction_test(const FractionTestParams& p) {
    if (!(p.c_l < p.c_r)) throw InvalidParams("fraction_test: needs c_l < c_r");
    if (!(p.delta > 0.0 && p.delta < 1.0)) throw InvalidParams("fraction_test: delta in (0,1)");
    // The analysis wants epsilon < 0.1 but the best-arm loop invokes the test
    // with epsilon exactly 0.1, so the bound is inclusive here.
    if (!(p.epsilon > 0.0 && p.epsilon <= 0.1))
        throw InvalidParams("fraction_test: epsilon must be in (0, 0.1]");
    if (!(p.t > p.epsilon && p.t < 1.0 - p.epsilon))
        throw InvalidParams("fraction_test: t must be in (epsilon, 1-epsilon)");
}

}  // namespace

bool fraction_test(const std::vector<int>& S, const Instance& instance,
                   const FractionTestParams& params, PullLedger& ledger, RunRng& rng) {
    if (S.empty()) throw EmptySet("fraction_test: empty arm set");
    validate_fraction_test(params);
    std::uint64_t tot = fraction_test_iterations(params.delta, params.epsilon);
    double c_m = (params.c_l + params.c_r) / 2.0;
    double precision = (params.c_r - params.c_l) / 2.0;
    double confidence = params.epsilon / 3.0;
    std::uint64_t cnt = 0;
    for (std::uint64_t i = 0; i < tot; ++i) {
        int id = S[rng.choice().next_below(S.size())];
        EmpiricalMeans em = uniform_sample({id}, instance, precision, confidence, ledger, rng);
        if (em[id].mean < c_m) ++cnt;
    }
    return static_cast<double>(cnt) / static_cast<double>(tot) > params.t;
}

double elimination_round_confidence(double delta, int round) {
    return delta / (10.0 * std::pow(2.0, round));
}

std::vector<int> elimination(const std::vector<int>& S, const Instance& instance, double c_l,
                             double c_r, double delta, PullLedger& ledger, RunRng& rng,
                             int max_rounds) {
    if (S.empty()) throw EmptySet("elimination: empty arm set");
    if (!(c_l < c_r)) throw InvalidParams("elimination: needs c_l < c_r");
    if (!(delta > 0.0 && delta < 0.1)) throw InvalidParams("elimination: needs delta < 0.1");
    double c_m = (c_l + c_r) / 2.0;
    std::vector<int> survivors = S;
    for (int r = 1; r <= max_rounds; ++r) {
        double delta_r = elimination_round_confidence(delta, r);
        if (!fraction_test(survivors, instance, {c_l, c_m, delta_r, 0.075, 0.025}, ledger, rng)) {
            return survivors;
        }
        EmpiricalMeans em =
            uniform_sample(survivors, instance, (c_r - c_m) / 2.0, delta_r, ledger, rng);
        std::vector<int> next;
        for (int id : survivors) {
            if (em[id].mean > (c_m + c_r) / 2.0) next.push_back(id);
        }
        // Possible only when the best arm's mean is below c_r; surfacing it
        // beats feeding an empty set to the next fraction test.
        if (next.empty()) throw EmptySet("elimination: every arm was eliminated");
        survivors = std::move(next);
    }
    throw RoundLimitExceeded("elimination: round cap reached");
}

}  // namespace pex
