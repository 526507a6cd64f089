#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pex/core.hpp"

namespace pex {

// Number of pulls needed so the empirical mean of a 1-sub-Gaussian arm lands
// within epsilon of the truth with probability 1-delta (Hoeffding):
// ceil(2 eps^-2 ln(2/delta)), never less than 1.
std::uint64_t hoeffding_pulls(double epsilon, double delta);

// KL(N(mu1, sigma^2), N(mu2, sigma^2)) = (mu1-mu2)^2 / (2 sigma^2).
double kl_gaussian(double mu1, double mu2, double sigma);

// Exact Bernoulli KL divergence, with the 0 ln 0 = 0 convention; p may hit
// the endpoints, q may not.
double kl_bernoulli(double p, double q);

// Quadratic upper bound (p-q)^2 / (q(1-q)); exact <= bound for all valid p, q.
double kl_bernoulli_bound(double p, double q);

// Relative entropy H(x, y) = x ln(x/y) + (1-x) ln((1-x)/(1-y)), x and y
// strictly inside (0,1).  In nats.
double rel_entropy(double x, double y);

// The benchmark curve Delta^-2 ln ln Delta^-1; needs gap < 1/e so the double
// log is positive.
double benchmark_F(double gap);

// Gap structure of a Best-1-Arm instance.  Suboptimal arms are bucketed into
// dyadic groups by gap: group i holds gaps in [2^-i, 2^-i+1).  Gaps of 1 or
// more land in the catch-all group 0 (the dyadic index would be <= 0 there).
// Group weights are H_i = sum of gap^-2 over the group; normalizing the
// weights gives a distribution whose Shannon entropy (base 2) is the gap
// entropy.
struct GapProfile {
    std::vector<double> gaps;               // per suboptimal arm, instance order
    std::map<int, std::vector<int>> groups; // group index -> arm ids
    std::map<int, double> weights;          // group index -> H_i
    std::map<int, double> probs;            // group index -> p_i
    double entropy_bits = 0.0;              // Ent(I)
    double hardness = 0.0;                  // H(I) = sum gap^-2
    int max_s = 0;                          // largest nonempty group index
};

// Dyadic group index for one gap: the unique i with 2^-i <= gap < 2^-i+1,
// clamped to 0 for gaps >= 1.
int gap_group_index(double gap);

GapProfile gap_profile(const Instance& instance);

}  // namespace pex
