#include <doctest.h>

#include <bit>

#include "lcmfilt/filtration.hpp"
#include "lcmfilt/fixtures.hpp"
#include "support/oracles.hpp"

using namespace lcmfilt;

namespace {

Monomial sf(int nvars, std::initializer_list<int> vars) {
    std::vector<int> support;
    for (int v : vars) support.push_back(v - 1);
    return Monomial::from_support(nvars, support);
}

}  // namespace

TEST_CASE("binomial") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(15, 7) == 6435);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(60, 30) == 118264581564861424LL);
    CHECK_THROWS(binomial(200, 100));
}

TEST_CASE("usual filtration of the demo ideal") {
    auto f = lcm_filtration(fixtures::filtration_demo_ideal());
    REQUIRE(f.nsteps() == 4);
    CHECK(f.kind == FiltrationKind::Usual);
    CHECK(f.step(1) == fixtures::filtration_demo_ideal());
    CHECK(f.step(2) == MonomialIdeal(5, {sf(5, {1, 2, 3, 5}), sf(5, {2, 3, 4}),
                                         sf(5, {2, 4, 5}), sf(5, {3, 4, 5})}));
    CHECK(f.step(3) == MonomialIdeal(5, {sf(5, {1, 2, 3, 4}),
                                         sf(5, {2, 3, 4, 5})}));
    CHECK(f.step(4) == MonomialIdeal(5, {sf(5, {1, 2, 3, 4, 5})}));
}

TEST_CASE("stepwise filtration of the demo ideal") {
    auto f = stepwise_filtration(fixtures::filtration_demo_ideal());
    REQUIRE(f.nsteps() == 3);
    CHECK(f.kind == FiltrationKind::Stepwise);
    CHECK(f.step(1) == fixtures::filtration_demo_ideal());
    CHECK(f.step(2) == lcm_filtration(fixtures::filtration_demo_ideal()).step(2));
    CHECK(f.step(3) == MonomialIdeal(5, {sf(5, {2, 3, 4, 5})}));
    CHECK(f.steps.back().is_principal());
}

TEST_CASE("k-fold ideal matches direct subset enumeration") {
    oracles::Rng rng(717);
    for (int t = 0; t < 40; ++t) {
        auto ideal = oracles::random_squarefree_ideal(rng, 6, 7);
        const auto& gens = ideal.generators();
        const int r = ideal.ngens();
        for (int k = 1; k <= r; ++k) {
            std::vector<Monomial> lcms;
            for (std::uint64_t s = 0; s < (std::uint64_t{1} << r); ++s) {
                if (std::popcount(s) != k) continue;
                Monomial m = Monomial::one(ideal.nvars());
                for (int i = 0; i < r; ++i)
                    if (s >> i & 1) m = lcm(m, gens[i]);
                lcms.push_back(m);
            }
            CHECK(kfold_lcm_ideal(ideal, k) ==
                  MonomialIdeal(ideal.nvars(), std::move(lcms)));
        }
    }
}

TEST_CASE("k-fold subset guard") {
    auto ideal = fixtures::filtration_demo_ideal();
    CHECK_THROWS_AS(kfold_lcm_ideal(ideal, 2, 5), GuardExceeded);
    CHECK_NOTHROW(kfold_lcm_ideal(ideal, 2, 6));
}

TEST_CASE("usual filtration descends and stepwise is dominated") {
    oracles::Rng rng(818);
    for (int t = 0; t < 60; ++t) {
        auto ideal = t % 3 == 2 ? oracles::random_ideal(rng, 5, 7, 3)
                                : oracles::random_squarefree_ideal(rng, 6, 7);
        auto usual = lcm_filtration(ideal);
        auto step = stepwise_filtration(ideal);
        REQUIRE(usual.nsteps() == ideal.ngens());
        // descending chains
        for (int k = 2; k <= usual.nsteps(); ++k)
            for (const auto& g : usual.step(k).generators())
                CHECK(usual.step(k - 1).contains(g));
        for (int k = 2; k <= step.nsteps(); ++k)
            for (const auto& g : step.step(k).generators())
                CHECK(step.step(k - 1).contains(g));
        // step k of the stepwise chain sits inside usual step k
        for (int k = 1; k <= std::min(step.nsteps(), usual.nsteps()); ++k)
            for (const auto& g : step.step(k).generators())
                CHECK(usual.step(k).contains(g));
        // the usual chain ends at the top lcm; the stepwise one ends at a
        // principal ideal whose generator is a subset lcm
        CHECK(usual.steps.back() ==
              MonomialIdeal(ideal.nvars(), {ideal.top_lcm()}));
        CHECK(step.steps.back().is_principal());
        CHECK(divides(step.steps.back().generators()[0], ideal.top_lcm()));
    }
}

TEST_CASE("filtration guard") {
    MonomialIdeal wide(23, [] {
        std::vector<Monomial> gens;
        for (int i = 0; i < 23; ++i) gens.push_back(Monomial::from_mask(23, 1ULL << i));
        return gens;
    }());
    CHECK_THROWS_AS(lcm_filtration(wide), GuardExceeded);
    auto demo = fixtures::filtration_demo_ideal();
    CHECK_THROWS_AS(lcm_filtration(demo, 3), GuardExceeded);
    CHECK_NOTHROW(lcm_filtration(demo, 4));
    CHECK_THROWS_AS(lcm_filtration(MonomialIdeal(3)), std::invalid_argument);
}

TEST_CASE("comparison report for the redundancy demo ideal") {
    auto ideal = sr_ideal(fixtures::redundancy_demo_complex());
    REQUIRE(ideal.ngens() == 15);
    auto cmp = compare_filtrations(ideal);
    CHECK(cmp.usual_gen_counts.size() == 15);
    CHECK(cmp.stepwise_gen_counts.size() == 6);
    CHECK(cmp.equal_steps ==
          std::vector<std::pair<int, int>>{{1, 1},
                                           {2, 2},
                                           {4, 6},
                                           {5, 9},
                                           {5, 10},
                                           {6, 12},
                                           {6, 13},
                                           {6, 14},
                                           {6, 15}});
    CHECK(cmp.unmatched_usual_steps == std::vector<int>{3, 4, 5, 7, 8, 11});
    // cost model: 2^15 - 1 subset lcms for the usual chain
    CHECK(cmp.usual_lcm_evals == (1 << 15) - 1);
    std::int64_t expected_stepwise = 0;
    auto step = stepwise_filtration(ideal);
    for (int k = 2; k <= step.nsteps(); ++k)
        expected_stepwise += binomial(step.step(k - 1).ngens(), 2);
    CHECK(cmp.stepwise_lcm_evals == expected_stepwise);
    CHECK(cmp.stepwise_lcm_evals < cmp.usual_lcm_evals);
}
