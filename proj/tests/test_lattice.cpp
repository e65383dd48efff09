#include <doctest.h>

#include <set>

#include "lcmfilt/fixtures.hpp"
#include "lcmfilt/lattice.hpp"
#include "support/oracles.hpp"

using namespace lcmfilt;

TEST_CASE("lattice of the demo ideal") {
    auto ideal = fixtures::filtration_demo_ideal();
    auto lattice = build_lcm_lattice(ideal);
    auto oracle = oracles::subset_lcm_set(ideal);
    CHECK(lattice.atom_count() == 4);
    CHECK(lattice.size() == static_cast<std::int64_t>(oracle.size()));
    CHECK(lattice.elements().front().is_one());
    std::set<std::vector<std::int32_t>> got;
    for (const auto& m : lattice.elements()) got.insert(m.exponents());
    CHECK(got == oracle);
}

TEST_CASE("incremental closure equals subset enumeration") {
    oracles::Rng rng(515);
    for (int t = 0; t < 80; ++t) {
        auto ideal = t % 2 == 0 ? oracles::random_squarefree_ideal(rng, 6, 8)
                                : oracles::random_ideal(rng, 5, 8, 3);
        auto lattice = build_lcm_lattice(ideal);
        auto oracle = oracles::subset_lcm_set(ideal);
        REQUIRE(lattice.size() == static_cast<std::int64_t>(oracle.size()));
        std::set<std::vector<std::int32_t>> got;
        for (const auto& m : lattice.elements()) got.insert(m.exponents());
        CHECK(got == oracle);
        // canonical order, no duplicates
        for (std::size_t i = 1; i < lattice.elements().size(); ++i)
            CHECK(graded_lex_less(lattice.elements()[i - 1], lattice.elements()[i]));
    }
}

TEST_CASE("poset density is exact and bounded") {
    oracles::Rng rng(616);
    for (int t = 0; t < 40; ++t) {
        auto ideal = oracles::random_squarefree_ideal(rng, 6, 8);
        auto lattice = build_lcm_lattice(ideal);
        Rational d = poset_density(ideal);
        CHECK(d == Rational(lattice.size(), std::int64_t{1} << ideal.ngens()));
        CHECK(d > Rational(0));
        CHECK(d <= Rational(1));
        CHECK(is_taylor(ideal) == (d == Rational(1)));
    }
}

TEST_CASE("variable ideal has the full boolean lattice") {
    // pairwise coprime generators: every subset has a distinct lcm
    MonomialIdeal vars(5, {Monomial({1, 0, 0, 0, 0}), Monomial({0, 1, 0, 0, 0}),
                           Monomial({0, 0, 1, 0, 0}), Monomial({0, 0, 0, 1, 0}),
                           Monomial({0, 0, 0, 0, 1})});
    CHECK(build_lcm_lattice(vars).size() == 32);
    CHECK(is_taylor(vars));
    CHECK(poset_density(vars) == Rational(1));
}

TEST_CASE("atom guard") {
    MonomialIdeal vars(3, {Monomial({1, 0, 0}), Monomial({0, 1, 0}),
                           Monomial({0, 0, 1})});
    CHECK_THROWS_AS(build_lcm_lattice(vars, 2), GuardExceeded);
    CHECK_NOTHROW(build_lcm_lattice(vars, 3));
    CHECK_THROWS_AS(build_lcm_lattice(MonomialIdeal(3)), std::invalid_argument);
}
