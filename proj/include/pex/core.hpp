#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pex/errors.hpp"
#include "pex/rng.hpp"

namespace pex {

enum class Family { gaussian, bernoulli };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

// One stochastic arm: a reward distribution with a hidden mean.  Gaussian
// arms with sigma <= 1 and Bernoulli arms are 1-sub-Gaussian.
struct Arm {
    Family family = Family::gaussian;
    double mean = 0.0;
    double sigma = 1.0;  // Gaussian scale; ignored for Bernoulli.
    int id = 0;          // position in the owning instance
};

// An ordered collection of arms, optionally paired with a sign-test
// threshold xi.  Instances without xi are Best-1-Arm instances and must have
// a unique maximum mean; instances with xi require every mean != xi.
class Instance {
public:
    static Instance make(std::vector<double> means, Family family, double sigma,
                         std::optional<double> xi = std::nullopt);

    int n() const { return static_cast<int>(arms_.size()); }
    const Arm& arm(int i) const { return arms_[i]; }
    const std::vector<Arm>& arms() const { return arms_; }
    std::optional<double> xi() const { return xi_; }
    Family family() const { return arms_.front().family; }
    double sigma() const { return arms_.front().sigma; }

    // Index of the unique best arm; throws TiedBest when the maximum is
    // shared (possible only for instances constructed with xi).
    int best_index() const;
    double best_mean() const { return arms_[best_index()].mean; }

    std::vector<int> all_ids() const;

    // Instance file schema: {"family", "sigma", "means", "xi"?}; arm order in
    // the file is authoritative.
    std::string to_json() const;
    static Instance from_json(const std::string& text);
    static Instance load(const std::string& path);
    void save(const std::string& path) const;

private:
    Instance() = default;
    std::vector<Arm> arms_;
    std::optional<double> xi_;
};

inline Instance make_instance(std::vector<double> means, Family family, double sigma = 1.0,
                              std::optional<double> xi = std::nullopt) {
    return Instance::make(std::move(means), family, sigma, xi);
}

// Exact per-arm and total sample accounting for one run.  total always
// equals the sum of the per-arm counts; counts only ever grow.
class PullLedger {
public:
    void add(int arm_index, std::uint64_t pulls) {
        if (arm_index >= static_cast<int>(per_arm_.size())) per_arm_.resize(arm_index + 1, 0);
        per_arm_[arm_index] += pulls;
        total_ += pulls;
    }

    std::uint64_t count(int arm_index) const {
        return arm_index < static_cast<int>(per_arm_.size()) ? per_arm_[arm_index] : 0;
    }
    std::uint64_t total() const { return total_; }
    const std::vector<std::uint64_t>& per_arm() const { return per_arm_; }

    void merge(const PullLedger& other) {
        for (int i = 0; i < static_cast<int>(other.per_arm_.size()); ++i) {
            if (other.per_arm_[i]) add(i, other.per_arm_[i]);
        }
    }

    bool operator==(const PullLedger&) const = default;

private:
    std::vector<std::uint64_t> per_arm_;
    std::uint64_t total_ = 0;
};

// One i.i.d. reward draw; increments the ledger by exactly 1.
double pull(const Arm& arm, PullLedger& ledger, RngStream& stream);

// Empirical mean of `pulls` i.i.d. rewards, drawn as a single aggregate
// sample (Gaussian: N(mean, sigma^2/k); Bernoulli: Binomial(k, p)/k), which
// is distribution-exact for both families.  The ledger is charged all k
// pulls.  Sampling batches this way is what keeps the simulation harness
// usable: the procedures built on top request pull counts in the billions.
double sample_mean(const Arm& arm, std::uint64_t pulls, PullLedger& ledger, RngStream& stream);

}  // namespace pex
