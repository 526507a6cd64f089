#include "pex/core.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pex {

namespace {
using ordered_json = nlohmann::ordered_json;
}

std::string family_name(Family f) {
    return f == Family::gaussian ? "gaussian" : "bernoulli";
}

Family family_from_name(const std::string& name) {
    if (name == "gaussian") return Family::gaussian;
    if (name == "bernoulli") return Family::bernoulli;
    throw DomainError("unknown arm family: " + name);
}

Instance Instance::make(std::vector<double> means, Family family, double sigma,
                        std::optional<double> xi) {
    if (means.empty()) throw DomainError("instance needs at least one arm");
    if (!(sigma > 0.0)) throw DomainError("sigma must be positive");
    for (double m : means) {
        if (!std::isfinite(m)) throw DomainError("arm means must be finite");
        if (family == Family::bernoulli && (m < 0.0 || m > 1.0))
            throw DomainError("bernoulli means must lie in [0,1]");
    }
    Instance inst;
    inst.xi_ = xi;
    inst.arms_.reserve(means.size());
    for (int i = 0; i < static_cast<int>(means.size()); ++i) {
        inst.arms_.push_back(Arm{family, means[i], sigma, i});
    }
    if (xi) {
        for (const Arm& a : inst.arms_) {
            if (a.mean == *xi) throw DomainError("sign instance has an arm mean equal to xi");
        }
    } else {
        inst.best_index();  // enforce the unique-maximum precondition up front
    }
    return inst;
}

int Instance::best_index() const {
    int best = 0;
    for (int i = 1; i < n(); ++i) {
        if (arms_[i].mean > arms_[best].mean) best = i;
    }
    for (int i = 0; i < n(); ++i) {
        if (i != best && arms_[i].mean == arms_[best].mean)
            throw TiedBest("two arms share the maximum mean");
    }
    return best;
}

std::vector<int> Instance::all_ids() const {
    std::vector<int> ids(n());
    for (int i = 0; i < n(); ++i) ids[i] = i;
    return ids;
}

std::string Instance::to_json() const {
    ordered_json j;
    j["family"] = family_name(family());
    j["sigma"] = sigma();
    j["means"] = ordered_json::array();
    for (const Arm& a : arms_) j["means"].push_back(a.mean);
    if (xi_) j["xi"] = *xi_;
    return j.dump(2) + "\n";
}

Instance Instance::from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw IoError(std::string("invalid instance JSON: ") + e.what());
    }
    if (!j.contains("family") || !j.contains("means"))
        throw IoError("instance JSON needs 'family' and 'means'");
    Family fam = family_from_name(j["family"].get<std::string>());
    double sigma = j.value("sigma", 1.0);
    std::vector<double> means = j["means"].get<std::vector<double>>();
    std::optional<double> xi;
    if (j.contains("xi")) xi = j["xi"].get<double>();
    return Instance::make(std::move(means), fam, sigma, xi);
}

Instance Instance::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open instance file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

void Instance::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write instance file: " + path);
    out << to_json();
    if (!out) throw IoError("write failed: " + path);
}

double pull(const Arm& arm, PullLedger& ledger, RngStream& stream) {
    ledger.add(arm.id, 1);
    if (arm.family == Family::gaussian) return stream.next_gaussian(arm.mean, arm.sigma);
    return stream.next_bernoulli(arm.mean);
}

double sample_mean(const Arm& arm, std::uint64_t pulls, PullLedger& ledger, RngStream& stream) {
    if (pulls == 0) throw DomainError("sample_mean needs at least one pull");
    ledger.add(arm.id, pulls);
    if (arm.family == Family::gaussian) {
        double k = static_cast<double>(pulls);
        return stream.next_gaussian(arm.mean, arm.sigma / std::sqrt(k));
    }
    std::uint64_t successes = stream.next_binomial(pulls, arm.mean);
    return static_cast<double>(successes) / static_cast<double>(pulls);
}

}  // namespace pex
