#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>

#include "fairpart/audit.hpp"
#include "fairpart/exact.hpp"
#include "testutil.hpp"

using namespace fairpart;
using testutil::random_instance;

namespace {

void check_equivalent(const Instance& x, const FairnessParams& p, const SolveOptions& opts = {}) {
    const SolveResult dp = dp_solve(x, p, opts);
    const SolveResult oracle = brute_force_solve(x, p, Topology::Line, {100, false});
    REQUIRE(dp.feasible == oracle.feasible);
    if (dp.feasible) {
        // both returned partitions must audit fair and balanced
        for (const auto* r : {&dp, &oracle}) {
            REQUIRE(r->partition.has_value());
            const AuditReport rep = audit(x, *r->partition, p, Topology::Line, true);
            CHECK(rep.is_fair);
            CHECK(rep.alpha == Rational(0));
        }
    }
}

} // namespace

TEST_CASE("standalone fairness examples") {
    const FairnessParams p(8, Rational(1, 4), Rational(5, 8));
    const Instance a = Instance::parse("5R 3B");
    CHECK(standalone_fair(a, Interval{0, 8}, p)); // 3 unhappy blues < beta*sigma

    const Instance mono = Instance::parse("8R");
    CHECK(standalone_fair(mono, Interval{0, 8}, p));

    const FairnessParams half(8, Rational(1, 4), Rational(1, 2), BetaMode::Inclusive);
    const Instance b = Instance::parse("3B 5R");
    CHECK(standalone_fair(b, Interval{0, 8}, half)); // 3 blues in any D never reach 4

    CHECK_THROWS_AS(standalone_fair(a, Interval{0, 3}, p), std::invalid_argument);
}

TEST_CASE("standalone fairness catches an internal majority") {
    // a blue block inside a red-majority window deviates on its own
    const FairnessParams p(8, Rational(1, 4), Rational(1, 2), BetaMode::Inclusive);
    const Instance x = Instance::parse("3R 4B 3R");
    CHECK_FALSE(standalone_fair(x, Interval{0, 10}, p)); // D=(2,8] holds 4 unhappy blues
}

TEST_CASE("fair4 windows") {
    const FairnessParams p(8, Rational(1, 4), Rational(5, 8), BetaMode::Inclusive);

    const Instance happy = Instance::parse("6R 6B 6R 6B");
    CHECK(fair4(happy, 0, 6, 12, 18, 24, p));

    const Instance fig = Instance::parse("5R 5B 5R 5B 5R 5B");
    CHECK_FALSE(fair4(fig, 6, 12, 18, 24, 30, p)); // D=(9,15] deviates

    const FairnessParams strict(8, Rational(1, 4), Rational(5, 8), BetaMode::Strict);
    CHECK(fair4(fig, 6, 12, 18, 24, 30, strict)); // max unhappy run is exactly beta*sigma

    // degenerate prefixes collapse
    CHECK(fair4(Instance::parse("RRBB"), 0, 0, 0, 2,
                4, FairnessParams(2, Rational(0), Rational(1, 2))));

    CHECK_THROWS_AS(fair4(fig, 0, 3, 12, 18, 24, p), std::invalid_argument); // size-3 piece
}

TEST_CASE("dp examples") {
    SUBCASE("RRBB splits at 2") {
        const SolveResult r =
            dp_solve(Instance::parse("RRBB"), FairnessParams(2, Rational(0), Rational(1, 2)));
        REQUIRE(r.feasible);
        CHECK(r.partition->boundaries() == std::vector<int>{0, 2, 4});
    }
    SUBCASE("RBRB is feasible despite unhappy points") {
        const SolveResult r = dp_solve(Instance::parse("RBRB"),
                                       FairnessParams(2, Rational(0), Rational(1, 2), BetaMode::Inclusive));
        CHECK(r.feasible);
    }
    SUBCASE("the adversarial instance at n=30 is infeasible on the line") {
        const SolveResult r =
            dp_solve(Instance::parse("5R 5B 5R 5B 5R 5B"),
                     FairnessParams(8, Rational(1, 4), Rational(5, 8), BetaMode::Inclusive));
        CHECK_FALSE(r.feasible);
        CHECK_FALSE(r.partition.has_value());
    }
    SUBCASE("n below the smallest allowable size") {
        const SolveResult r =
            dp_solve(Instance::parse("RRB"), FairnessParams(8, Rational(0), Rational(1, 2)));
        CHECK_FALSE(r.feasible);
    }
    SUBCASE("n with no composition into allowable parts") {
        const SolveResult r =
            dp_solve(Instance::parse("25R"), FairnessParams(10, Rational(0), Rational(1, 2)));
        CHECK_FALSE(r.feasible);
        CHECK_FALSE(brute_force_solve(Instance::parse("25R"),
                                      FairnessParams(10, Rational(0), Rational(1, 2)),
                                      Topology::Line)
                        .feasible);
    }
}

TEST_CASE("oracle examples") {
    const SolveResult line =
        brute_force_solve(Instance::parse("RRBB"), FairnessParams(2, Rational(0), Rational(1, 2)),
                          Topology::Line);
    REQUIRE(line.feasible);
    CHECK(line.partition->boundaries() == std::vector<int>{0, 2, 4});

    const SolveResult circle = brute_force_solve(
        Instance::parse("5R 5B 5R 5B 5R 5B"),
        FairnessParams(8, Rational(1, 4), Rational(5, 8), BetaMode::Inclusive), Topology::Circle);
    CHECK_FALSE(circle.feasible);

    std::mt19937_64 rng(1);
    CHECK_THROWS_AS(brute_force_solve(random_instance(rng, 61),
                                      FairnessParams(2, Rational(0), Rational(1, 2)),
                                      Topology::Line, {60, false}),
                    OracleCapExceeded);
}

TEST_CASE("a circle-feasible case keeps its partition") {
    const SolveResult r = brute_force_solve(Instance::parse("RRBB"),
                                            FairnessParams(2, Rational(0), Rational(1, 2)),
                                            Topology::Circle);
    REQUIRE(r.feasible);
    CHECK(r.partition->boundaries() == std::vector<int>{0, 2, 4});
}

TEST_CASE("exhaustive equivalence on all colorings, n=8, sigma=2, epsilon=0") {
    for (std::uint32_t mask = 0; mask < (1u << 8); ++mask) {
        std::vector<Color> colors;
        for (int i = 0; i < 8; ++i)
            colors.push_back((mask >> i) & 1 ? Color::Blue : Color::Red);
        const Instance x = Instance::from_colors(std::move(colors));
        for (BetaMode mode : {BetaMode::Strict, BetaMode::Inclusive}) {
            check_equivalent(x, FairnessParams(2, Rational(0), Rational(1, 2), mode));
            check_equivalent(x, FairnessParams(2, Rational(0), Rational(1), mode));
        }
    }
}

TEST_CASE("exhaustive equivalence on all colorings, n=9, sigma=3, epsilon=1/3") {
    for (std::uint32_t mask = 0; mask < (1u << 9); ++mask) {
        std::vector<Color> colors;
        for (int i = 0; i < 9; ++i)
            colors.push_back((mask >> i) & 1 ? Color::Blue : Color::Red);
        const Instance x = Instance::from_colors(std::move(colors));
        for (BetaMode mode : {BetaMode::Strict, BetaMode::Inclusive}) {
            check_equivalent(x, FairnessParams(3, Rational(1, 3), Rational(1, 2), mode));
            check_equivalent(x, FairnessParams(3, Rational(1, 3), Rational(2, 3), mode));
        }
    }
}

namespace {

// Unpruned reference oracle: enumerate every composition outright and audit
// it with the library's group scan.
bool naive_oracle_feasible(const Instance& x, const FairnessParams& p, Topology topo) {
    const int n = x.size();
    std::vector<int> sizes;
    bool feasible = false;
    const std::function<void(int)> rec = [&](int left) {
        if (feasible) return;
        if (left == 0) {
            if (find_deviating_groups(x, Partition::from_sizes(sizes), p, topo, true).empty())
                feasible = true;
            return;
        }
        for (int k = p.min_size(); k <= p.max_size() && k <= left; ++k) {
            sizes.push_back(k);
            rec(left - k);
            sizes.pop_back();
        }
    };
    rec(n);
    return feasible;
}

} // namespace

TEST_CASE("pruned oracle agrees with unpruned enumeration on both topologies") {
    for (std::uint32_t mask = 0; mask < (1u << 9); ++mask) {
        std::vector<Color> colors;
        for (int i = 0; i < 9; ++i)
            colors.push_back((mask >> i) & 1 ? Color::Blue : Color::Red);
        const Instance x = Instance::from_colors(std::move(colors));
        for (const Rational& beta : {Rational(1, 2), Rational(2, 3)}) {
            for (BetaMode mode : {BetaMode::Strict, BetaMode::Inclusive}) {
                const FairnessParams p(3, Rational(1, 3), beta, mode);
                for (Topology topo : {Topology::Line, Topology::Circle}) {
                    const bool naive = naive_oracle_feasible(x, p, topo);
                    const SolveResult fast = brute_force_solve(x, p, topo);
                    REQUIRE(fast.feasible == naive);
                }
            }
        }
    }
}

TEST_CASE("equivalence holds on clustered inputs too") {
    std::mt19937_64 rng(11005);
    for (int it = 0; it < 120; ++it) {
        const int sigma = 4 + static_cast<int>(rng() % 3);
        const int n = 24 + static_cast<int>(rng() % 20);
        const Instance x = testutil::random_run_instance(rng, n, sigma, 3 * sigma);
        const FairnessParams p(sigma, (rng() & 1) ? Rational(1, 4) : Rational(1, 2),
                               (rng() & 1) ? Rational(1, 2) : Rational(3, 4),
                               (rng() & 1) ? BetaMode::Strict : BetaMode::Inclusive);
        check_equivalent(x, p);
    }
}

TEST_CASE("randomized equivalence across the parameter grid") {
    std::mt19937_64 rng(11001);
    const Rational eps_grid[] = {Rational(0), Rational(1, 4), Rational(1, 3), Rational(1, 2)};
    const Rational beta_grid[] = {Rational(1, 2), Rational(5, 8), Rational(2, 3), Rational(1)};
    const int sigma_grid[] = {4, 5, 8};
    for (int it = 0; it < 250; ++it) {
        const int n = 20 + static_cast<int>(rng() % 21);
        const Instance x = random_instance(rng, n);
        const FairnessParams p(sigma_grid[rng() % 3], eps_grid[rng() % 4], beta_grid[rng() % 4],
                               (rng() & 1) ? BetaMode::Strict : BetaMode::Inclusive);
        check_equivalent(x, p);
    }
}

TEST_CASE("fair4 cache changes nothing") {
    std::mt19937_64 rng(11002);
    SolveOptions cache_on;
    cache_on.fair4_cache = Fair4Mode::On;
    SolveOptions cache_off;
    cache_off.fair4_cache = Fair4Mode::Off;
    for (int it = 0; it < 120; ++it) {
        const int n = 16 + static_cast<int>(rng() % 20);
        const Instance x = random_instance(rng, n);
        const FairnessParams p(5, (it % 2) ? Rational(1, 3) : Rational(2, 5), Rational(1, 2),
                               (rng() & 1) ? BetaMode::Strict : BetaMode::Inclusive);
        const SolveResult a = dp_solve(x, p, cache_on);
        const SolveResult b = dp_solve(x, p, cache_off);
        CHECK(a.feasible == b.feasible);
        if (a.feasible) CHECK(a.partition->boundaries() == b.partition->boundaries());
    }
}

TEST_CASE("feasibility is monotone in beta") {
    std::mt19937_64 rng(11003);
    const Rational betas[] = {Rational(1, 2), Rational(5, 8), Rational(2, 3), Rational(1)};
    for (int it = 0; it < 150; ++it) {
        const int n = 18 + static_cast<int>(rng() % 18);
        const Instance x = random_instance(rng, n);
        const int sigma = 4 + static_cast<int>(rng() % 3);
        const Rational eps = (rng() & 1) ? Rational(1, 4) : Rational(1, 3);
        for (BetaMode mode : {BetaMode::Strict, BetaMode::Inclusive}) {
            bool prev = false;
            for (const Rational& beta : betas) {
                const bool now = dp_solve(x, FairnessParams(sigma, eps, beta, mode)).feasible;
                if (prev) CHECK(now); // hardening the threshold cannot break feasibility
                prev = now;
            }
        }
    }
}

TEST_CASE("deterministic reconstruction") {
    std::mt19937_64 rng(11004);
    for (int it = 0; it < 50; ++it) {
        const int n = 20 + static_cast<int>(rng() % 15);
        const Instance x = random_instance(rng, n);
        const FairnessParams p(5, Rational(2, 5), Rational(2, 3));
        const SolveResult a = dp_solve(x, p);
        const SolveResult b = dp_solve(x, p);
        CHECK(a.feasible == b.feasible);
        if (a.feasible) CHECK(a.partition->boundaries() == b.partition->boundaries());
    }
}

TEST_CASE("figure-one style fixture: one partition deviates, a fair one exists") {
    // n = 15, sigma = 4, epsilon = 1/2, beta = 2/3: a five-interval plan
    // leaves three stranded blues within one candidate window, while some
    // other balanced partition is locally fair.
    const FairnessParams p(4, Rational(1, 2), Rational(2, 3), BetaMode::Inclusive);
    const Instance x = Instance::parse("3B 2R 2B 2R 1B 5R");

    const Partition five(15, {0, 3, 6, 9, 12, 15});
    const auto groups = find_deviating_groups(x, five, p, Topology::Line);
    bool blue_witness = false;
    for (const auto& g : groups)
        if (g.color == Color::Blue) blue_witness = true;
    CHECK(blue_witness);

    const SolveResult r = dp_solve(x, p);
    CHECK(r.feasible);
}
