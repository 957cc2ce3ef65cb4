#include "fairpart/generators.hpp"

#include <random>
#include <stdexcept>

namespace fairpart {

namespace {

// All generators draw from mt19937_64 with plain modulo reduction; the
// contract is determinism from the seed, not any statistical property.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    return lo + rng() % (hi - lo + 1);
}

Rational realized_short_mass(const Instance& x, int sigma) {
    long long short_points = 0;
    for (const auto& run : x.runs())
        if (run.length < 2 * sigma) short_points += run.length;
    return Rational(short_points, x.size());
}

} // namespace

const char* gen_kind_name(GenKind kind) {
    switch (kind) {
        case GenKind::Adversarial: return "adversarial";
        case GenKind::MultiSigmaAdversarial: return "multi-sigma-adversarial";
        case GenKind::Clustered: return "clustered";
        case GenKind::MostlyClustered: return "mostly-clustered";
        case GenKind::UniformRandom: return "uniform-random";
    }
    return "unknown";
}

GenResult gen_adversarial(int sigma, const Rational& epsilon, const Rational& beta, int n) {
    if (sigma < 1) throw std::invalid_argument("sigma must be positive");
    if (!(beta < Rational(1) - epsilon))
        throw std::invalid_argument("adversarial construction requires beta < 1 - epsilon");
    const int run = static_cast<int>((beta * Rational(sigma)).ceil());
    if (n < 2 * run) throw std::invalid_argument("n too small to contain two runs");

    std::vector<Run> runs;
    int left = n;
    Color next = Color::Red;
    while (left > 0) {
        const int len = std::min(run, left);
        runs.push_back(Run{next, len});
        next = opposite(next);
        left -= len;
    }

    GenResult out{GenKind::Adversarial, Instance::from_runs(runs)};
    out.n = n;
    out.sigma = sigma;
    out.epsilon = epsilon;
    out.beta = beta;
    // Rounding beta*sigma up to an integer run length shifts the analysis to
    // beta' = ceil(beta*sigma)/sigma; the infeasibility bound uses beta' and
    // is undefined (infinite) when the rounding lands exactly on 1 - epsilon.
    const Rational beta_prime(run, sigma);
    if (beta_prime < Rational(1) - epsilon) {
        const Rational bound = (Rational(3) - Rational(3) * epsilon - Rational(2) * beta_prime) *
                               beta_prime * Rational(sigma) /
                               (Rational(2) * (Rational(1) - epsilon - beta_prime));
        out.infeasibility_bound = bound;
        out.exceeds_bound = Rational(n) > bound;
    }
    out.truncated_last_run = runs.back().length < run;
    out.degenerate_beta_boundary = beta == (Rational(1) - epsilon) / Rational(2);
    return out;
}

GenResult gen_multi_sigma_adversarial(const std::vector<int>& sigmas, const Rational& epsilon,
                                      const Rational& beta, int n) {
    if (sigmas.empty()) throw std::invalid_argument("need at least one sigma");
    const int blocks = static_cast<int>(sigmas.size());
    const int block_len = n / blocks;
    const Rational need = Rational(1) / (Rational(1) - epsilon - beta);
    for (int sigma : sigmas) {
        if (!(Rational(n, static_cast<long long>(blocks) * sigma) > Rational(need.ceil())))
            throw std::invalid_argument("n/(M*sigma) must exceed ceil(1/(1-epsilon-beta)) for every sigma");
    }

    std::vector<Run> runs;
    for (int m = 0; m < blocks; ++m) {
        int len = block_len;
        if (m + 1 == blocks) len += n - blocks * block_len;
        const GenResult block = gen_adversarial(sigmas[static_cast<std::size_t>(m)], epsilon, beta, len);
        for (const auto& r : block.instance.runs()) runs.push_back(r);
    }

    GenResult out{GenKind::MultiSigmaAdversarial, Instance::from_runs(runs)};
    out.n = n;
    out.sigmas = sigmas;
    out.epsilon = epsilon;
    out.beta = beta;
    out.degenerate_beta_boundary = beta == (Rational(1) - epsilon) / Rational(2);
    return out;
}

GenResult gen_clustered(int n, int min_run, int max_run, std::uint64_t seed) {
    if (min_run < 1 || max_run < min_run) throw std::invalid_argument("need 1 <= min_run <= max_run");
    if (n < min_run) throw std::invalid_argument("n smaller than the minimum run length");

    std::mt19937_64 rng(seed);
    Color next = (rng() & 1) ? Color::Blue : Color::Red;
    std::vector<Run> runs;
    int left = n;
    while (left > 0) {
        const int len = std::min<int>(static_cast<int>(draw(rng, static_cast<std::uint64_t>(min_run),
                                                             static_cast<std::uint64_t>(max_run))),
                                      left);
        runs.push_back(Run{next, len});
        next = opposite(next);
        left -= len;
    }

    GenResult out{GenKind::Clustered, Instance::from_runs(runs)};
    out.n = n;
    out.seed = seed;
    out.min_run = min_run;
    out.max_run = max_run;
    out.truncated_last_run = runs.back().length < min_run;
    return out;
}

GenResult gen_mostly_clustered(int n, int sigma, const Rational& gamma, int min_run,
                               std::uint64_t seed) {
    if (sigma < 1) throw std::invalid_argument("sigma must be positive");
    if (gamma < Rational(0) || !(gamma < Rational(1)))
        throw std::invalid_argument("gamma must lie in [0, 1)");
    if (min_run < 2 * sigma) throw std::invalid_argument("min_run must be at least 2*sigma");
    if (n < min_run) throw std::invalid_argument("infeasible mass split: no room for a long run");

    std::mt19937_64 rng(seed);
    Color next = (rng() & 1) ? Color::Blue : Color::Red;
    long long budget = (gamma * Rational(n)).floor(); // short-run points still allowed
    const int short_cap = 2 * sigma - 1;

    std::vector<Run> runs;
    int left = n;
    while (left > 0) {
        // Long run sized so the remainder is zero or can still hold one.
        int len;
        if (left <= 2 * min_run) {
            len = left;
        } else {
            len = static_cast<int>(draw(rng, static_cast<std::uint64_t>(min_run),
                                        static_cast<std::uint64_t>(std::min(2 * min_run, left - min_run))));
        }
        runs.push_back(Run{next, len});
        next = opposite(next);
        left -= len;

        // A burst of short runs, kept inside both the mass budget and the
        // room needed for the next long run.
        while (left > min_run && budget > 0 && (rng() & 1)) {
            const int cap = static_cast<int>(std::min<long long>({budget, short_cap, left - min_run}));
            if (cap < 1) break;
            const int s = static_cast<int>(draw(rng, 1, static_cast<std::uint64_t>(cap)));
            runs.push_back(Run{next, s});
            next = opposite(next);
            left -= s;
            budget -= s;
        }
    }

    GenResult out{GenKind::MostlyClustered, Instance::from_runs(runs)};
    out.n = n;
    out.sigma = sigma;
    out.seed = seed;
    out.min_run = min_run;
    out.requested_gamma = gamma;
    out.realized_gamma = realized_short_mass(out.instance, sigma);
    return out;
}

GenResult gen_uniform_random(int n, const Rational& p_red, std::uint64_t seed) {
    if (p_red < Rational(0) || p_red > Rational(1))
        throw std::invalid_argument("p_red must lie in [0, 1]");
    if (n < 1) throw std::invalid_argument("n must be positive");

    std::mt19937_64 rng(seed);
    std::vector<Color> colors;
    colors.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        // red iff u < p_red * 2^64, decided exactly in 128-bit
        const std::uint64_t u = rng();
        const __int128 lhs = static_cast<__int128>(u) * p_red.den();
        const __int128 rhs = (static_cast<__int128>(1) << 64) * p_red.num();
        colors.push_back(lhs < rhs ? Color::Red : Color::Blue);
    }

    GenResult out{GenKind::UniformRandom, Instance::from_colors(std::move(colors))};
    out.n = n;
    out.seed = seed;
    out.p_red = p_red;
    return out;
}

} // namespace fairpart
