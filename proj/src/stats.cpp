#include "pex/stats.hpp"

#include <cmath>

namespace pex {

std::uint64_t hoeffding_pulls(double epsilon, double delta) {
    if (!(epsilon > 0.0)) throw DomainError("hoeffding_pulls: epsilon must be > 0");
    if (!(delta > 0.0 && delta < 1.0)) throw DomainError("hoeffding_pulls: delta must be in (0,1)");
    double raw = std::ceil(2.0 / (epsilon * epsilon) * std::log(2.0 / delta));
    if (raw > 0x1p53) throw DomainError("hoeffding_pulls: count exceeds 2^53");
    return raw < 1.0 ? 1 : static_cast<std::uint64_t>(raw);
}

double kl_gaussian(double mu1, double mu2, double sigma) {
    if (!(sigma > 0.0)) throw DomainError("kl_gaussian: sigma must be > 0");
    double d = mu1 - mu2;
    return d * d / (2.0 * sigma * sigma);
}

double kl_bernoulli(double p, double q) {
    if (p < 0.0 || p > 1.0) throw DomainError("kl_bernoulli: p must be in [0,1]");
    if (!(q > 0.0 && q < 1.0)) throw DomainError("kl_bernoulli: q must be in (0,1)");
    double out = 0.0;
    if (p > 0.0) out += p * std::log(p / q);
    if (p < 1.0) out += (1.0 - p) * std::log((1.0 - p) / (1.0 - q));
    return out;
}

double kl_bernoulli_bound(double p, double q) {
    if (p < 0.0 || p > 1.0) throw DomainError("kl_bernoulli_bound: p must be in [0,1]");
    if (!(q > 0.0 && q < 1.0)) throw DomainError("kl_bernoulli_bound: q must be in (0,1)");
    double d = p - q;
    return d * d / (q * (1.0 - q));
}

double rel_entropy(double x, double y) {
    if (!(x > 0.0 && x < 1.0)) throw DomainError("rel_entropy: x must be in (0,1)");
    if (!(y > 0.0 && y < 1.0)) throw DomainError("rel_entropy: y must be in (0,1)");
    return x * std::log(x / y) + (1.0 - x) * std::log((1.0 - x) / (1.0 - y));
}

double benchmark_F(double gap) {
    constexpr double kInvE = 0.36787944117144232;  // 1/e
    if (!(gap > 0.0 && gap < kInvE))
        throw DomainError("benchmark_F: gap must be in (0, 1/e)");
    return std::log(std::log(1.0 / gap)) / (gap * gap);
}

int gap_group_index(double gap) {
    if (!(gap > 0.0)) throw DomainError("gap_group_index: gap must be > 0");
    if (gap >= 1.0) return 0;
    // Unique i with 2^-i <= gap < 2^-(i-1); start from the log estimate and
    // nudge so the half-open boundaries hold verbatim in floating point.
    int i = static_cast<int>(std::ceil(-std::log2(gap)));
    while (gap < std::ldexp(1.0, -i)) ++i;
    while (gap >= std::ldexp(1.0, -i + 1)) --i;
    return i;
}

GapProfile gap_profile(const Instance& instance) {
    GapProfile prof;
    int best = instance.best_index();
    double best_mean = instance.arm(best).mean;
    for (int u = 0; u < instance.n(); ++u) {
        if (u == best) continue;
        double gap = best_mean - instance.arm(u).mean;
        prof.gaps.push_back(gap);
        int g = gap_group_index(gap);
        prof.groups[g].push_back(u);
        prof.weights[g] += 1.0 / (gap * gap);
        prof.hardness += 1.0 / (gap * gap);
        if (g > prof.max_s) prof.max_s = g;
    }
    if (prof.hardness > 0.0) {
        for (const auto& [g, h] : prof.weights) {
            double p = h / prof.hardness;
            prof.probs[g] = p;
            if (p > 0.0) prof.entropy_bits -= p * std::log2(p);
        }
    }
    return prof;
}

}  // namespace pex
