#include "pex/instances.hpp"

#include <cmath>
#include <string>

namespace pex {

Instance clustered_instance(int n, double gap, double best_mean, Family family, double sigma) {
    if (n < 2) throw DomainError("clustered_instance: needs n >= 2");
    if (!(gap > 0.0 && gap <= 0.5)) throw DomainError("clustered_instance: gap must be in (0, 0.5]");
    std::vector<double> means;
    means.reserve(n);
    means.push_back(best_mean);
    for (int i = 1; i < n; ++i) means.push_back(best_mean - gap);
    return Instance::make(std::move(means), family, sigma);
}

Instance clustered_instance(const ClusteredSpec& spec) {
    if (spec.group_gaps.empty()) throw DomainError("clustered_instance: needs at least one group");
    std::vector<double> means{spec.best_mean};
    for (const auto& [gap, count] : spec.group_gaps) {
        if (!(gap > 0.0 && gap <= 1.0))
            throw DomainError("clustered_instance: group gaps must be in (0, 1]");
        if (count < 1) throw DomainError("clustered_instance: group counts must be positive");
        for (int i = 0; i < count; ++i) means.push_back(spec.best_mean - gap);
    }
    return Instance::make(std::move(means), spec.family, spec.sigma);
}

namespace {

long long geometric_block_total(int m) {
    long long total = 0;
    for (int k = 0; k <= m; ++k) total += 1LL << (2 * (m - k));  // 4^(m-k)
    return total;
}

void validate_lower_bound(int m, int n) {
    if (m < 2 || m % 2 != 0) throw SpecError("lower bound family: m must be even and >= 2");
    if (m > 15) throw SpecError("lower bound family: m too large to materialize");
    long long block = geometric_block_total(m);
    if (n < block + m + 2)
        throw SpecError("lower bound family: needs n >= sum 4^k + m + 2 = " +
                        std::to_string(block + m + 2));
}

}  // namespace

Instance lower_bound_base(int m, int n, double xi) {
    return lower_bound_variant(LowerBoundFamilySpec{m, n, xi, {}});
}

Instance lower_bound_variant(const LowerBoundFamilySpec& spec) {
    validate_lower_bound(spec.m, spec.n);
    for (int k : spec.S) {
        if (k < 0 || k > spec.m) throw SpecError("lower bound family: S must be inside [0, m]");
    }
    long long filler = spec.n - geometric_block_total(spec.m) - 1 -
                       static_cast<long long>(spec.S.size());
    if (filler < 0) throw SpecError("lower bound family: |S| exceeds available filler arms");

    std::vector<double> means;
    means.reserve(spec.n);
    means.push_back(spec.xi);
    for (int k = 0; k <= spec.m; ++k) {
        long long count = (1LL << (2 * (spec.m - k))) + (spec.S.count(k) ? 1 : 0);
        double mean = spec.xi - std::ldexp(1.0, -k);
        for (long long i = 0; i < count; ++i) means.push_back(mean);
    }
    for (long long i = 0; i < filler; ++i) means.push_back(spec.xi - 2.0);
    return Instance::make(std::move(means), Family::gaussian, 1.0);
}

std::pair<Arm, Arm> sign_pair(double xi, double gap, Family family, double sigma) {
    if (!(gap > 0.0)) throw DomainError("sign_pair: gap must be > 0");
    double hi = xi + gap, lo = xi - gap;
    if (family == Family::bernoulli && !(lo > 0.0 && hi < 1.0))
        throw DomainError("sign_pair: bernoulli means must stay inside (0,1)");
    return {Arm{family, hi, sigma, 0}, Arm{family, lo, sigma, 0}};
}

}  // namespace pex
