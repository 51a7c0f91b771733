#pragma once

#include "gradal/closure.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

namespace gradal {

/// splitmix64 step: advances `state` and returns the next output.
std::uint64_t splitmix64(std::uint64_t &state);

/// mt19937_64 with a platform-independent uniform integer helper.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next();
    /// Uniform in [lo, hi], by rejection sampling.
    long uniform(long lo, long hi);
    bool coin() { return uniform(0, 1) == 1; }
    template <typename T> const T &pick(const std::vector<T> &v)
    {
        return v[static_cast<std::size_t>(uniform(0, static_cast<long>(v.size()) - 1))];
    }

  private:
    std::mt19937_64 engine_;
};

enum class Profile { EntireTorsionfreeKernel, TorsionKernel, SimpleFullSupport, FreeSummand };

std::string to_string(Profile p);

struct Instance {
    RingPtr ring;
    std::optional<GroupHom> psi;
    std::vector<Element> samples;
    /// FreeSummand only: generators of F and of a complement H.
    std::vector<GroupElem> F, H;
};

/// Deterministic instance meeting the hypotheses of the profile. Groups have
/// rank <= 3 and torsion orders <= 6; samples have at most 8 terms.
Instance generate_instance(std::uint64_t seed, Profile profile);

/// Random element of R, homogeneous for `grading` (a hom out of E composed
/// with delta, or delta itself). Coefficients have denominators <= max_den.
Element random_homogeneous(Rng &rng, const RingPtr &R, const GroupHom &grading, int max_terms,
                           int max_den = 1);

FgGroup random_group(Rng &rng, int max_rank, int max_torsion_factors);
GroupElem random_elem(Rng &rng, const FgGroup &G, long bound);

struct CheckConfig {
    std::string check_id;
    unsigned trials = 100;
    std::uint64_t seed = 42;
    SearchBounds bounds{2, 1};
};

enum class TrialOutcome { Pass, Fail, Inconclusive };

struct CheckReport {
    std::string check_id;
    std::uint64_t seed = 0;
    unsigned trials = 0;
    unsigned passes = 0, fails = 0, inconclusive = 0;
    SearchBounds bounds;
    /// First failing trial: its index, its replay seed and a description.
    std::optional<nlohmann::ordered_json> counterexample;
    double wall_seconds = 0;

    bool ok() const { return fails == 0; }
    nlohmann::ordered_json to_json() const;
};

const std::vector<std::string> &check_ids();

/// Outcome of one trial, seeded with `trial_seed`; `detail` describes failures.
TrialOutcome run_trial(const CheckConfig &cfg, std::uint64_t trial_seed, std::string &detail);

/// Throws UnknownCheckId; trials must be at least 1.
CheckReport run_check(const CheckConfig &cfg);

} // namespace gradal
