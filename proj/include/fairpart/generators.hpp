#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fairpart/core.hpp"

namespace fairpart {

enum class GenKind : std::uint8_t {
    Adversarial,
    MultiSigmaAdversarial,
    Clustered,
    MostlyClustered,
    UniformRandom,
};

const char* gen_kind_name(GenKind kind);

/// Generation record: the instance plus everything needed to reproduce and
/// interpret it. Optional fields are present only where they apply.
struct GenResult {
    GenResult(GenKind k, Instance x) : kind(k), instance(std::move(x)) {}

    GenKind kind;
    Instance instance;
    int n = 0;
    std::optional<int> sigma;
    std::vector<int> sigmas;
    std::optional<Rational> epsilon;
    std::optional<Rational> beta;
    std::optional<std::uint64_t> seed;
    std::optional<int> min_run;
    std::optional<int> max_run;
    std::optional<Rational> requested_gamma;
    std::optional<Rational> realized_gamma;
    std::optional<Rational> p_red;
    std::optional<Rational> infeasibility_bound; // smallest n beyond which no fair partition exists
    std::optional<bool> exceeds_bound;
    std::optional<bool> truncated_last_run;
    std::optional<bool> degenerate_beta_boundary; // beta == (1-epsilon)/2
};

/// Alternating runs of ceil(beta*sigma) points starting red; the final run
/// is truncated to land on n exactly. Requires beta < 1 - epsilon and room
/// for at least two full runs.
GenResult gen_adversarial(int sigma, const Rational& epsilon, const Rational& beta, int n);

/// Concatenates one adversarial block of floor(n/M) points per sigma;
/// remainder points extend the last block's final run. Requires
/// n/(M*sigma_m) > ceil(1/(1-epsilon-beta)) for every m.
GenResult gen_multi_sigma_adversarial(const std::vector<int>& sigmas, const Rational& epsilon,
                                      const Rational& beta, int n);

/// Alternating runs with lengths drawn uniformly from [min_run, max_run];
/// the last run is truncated to fit and flagged when it falls below min_run.
GenResult gen_clustered(int n, int min_run, int max_run, std::uint64_t seed);

/// Long runs (length >= min_run) interleaved with bursts of runs shorter
/// than 2*sigma, keeping the short-run mass at or below gamma*n. Requires
/// min_run >= 2*sigma.
GenResult gen_mostly_clustered(int n, int sigma, const Rational& gamma, int min_run,
                               std::uint64_t seed);

/// Independent colors, red with probability p_red (decided exactly against
/// the 64-bit generator output).
GenResult gen_uniform_random(int n, const Rational& p_red, std::uint64_t seed);

} // namespace fairpart
