#include <doctest.h>

#include "lcmfilt/reliability.hpp"
#include "support/oracles.hpp"

using namespace lcmfilt;

TEST_CASE("failure ideal shapes") {
    CHECK(failure_ideal({SystemKind::KOfN, 4, 2}).ngens() == 6);
    CHECK(failure_ideal({SystemKind::KOfN, 5, 1}).ngens() == 5);
    CHECK(failure_ideal({SystemKind::ConsecutiveLinear, 5, 2}).ngens() == 4);
    CHECK(failure_ideal({SystemKind::ConsecutiveCircular, 5, 2}).ngens() == 5);
    CHECK(failure_ideal({SystemKind::ConsecutiveCircular, 5, 5}).ngens() == 1);
    CHECK(failure_ideal({SystemKind::ConsecutiveLinear, 5, 5}).ngens() == 1);
    CHECK_THROWS(failure_ideal({SystemKind::KOfN, 4, 5}));
    CHECK_THROWS(failure_ideal({SystemKind::KOfN, 4, 0}));

    CHECK(failure_ideal({SystemKind::ConsecutiveLinear, 5, 2}) ==
          MonomialIdeal(5, {Monomial({1, 1, 0, 0, 0}), Monomial({0, 1, 1, 0, 0}),
                            Monomial({0, 0, 1, 1, 0}), Monomial({0, 0, 0, 1, 1})}));
}

TEST_CASE("k-of-n signature is the unit vector at k") {
    for (int n = 2; n <= 7; ++n)
        for (int k = 1; k <= n; ++k) {
            auto s = signature(failure_ideal({SystemKind::KOfN, n, k}), n);
            REQUIRE(static_cast<int>(s.values.size()) == n);
            for (int i = 1; i <= n; ++i)
                CHECK(s.values[i - 1] == (i == k ? Rational(1) : Rational(0)));
        }
}

TEST_CASE("signatures match the permutation oracle") {
    for (auto kind : {SystemKind::KOfN, SystemKind::ConsecutiveLinear,
                      SystemKind::ConsecutiveCircular})
        for (int n = 2; n <= 6; ++n)
            for (int k = 1; k <= n; ++k) {
                auto ideal = failure_ideal({kind, n, k});
                auto s = signature(ideal, n);
                CHECK(s.values == oracles::permutation_signature(ideal, n, 1));
                CHECK(s.sum() == Rational(1));
            }
}

TEST_CASE("signatures of random squarefree ideals match the oracle") {
    oracles::Rng rng(1323);
    for (int t = 0; t < 30; ++t) {
        auto ideal = oracles::random_squarefree_ideal(rng, 6, 6);
        auto s = signature(ideal, 6);
        CHECK(s.values == oracles::permutation_signature(ideal, 6, 1));
    }
}

TEST_CASE("k-fold signatures match the oracle") {
    for (auto kind : {SystemKind::KOfN, SystemKind::ConsecutiveLinear,
                      SystemKind::ConsecutiveCircular})
        for (int n = 3; n <= 6; ++n)
            for (int k = 1; k <= n; ++k) {
                auto ideal = failure_ideal({kind, n, k});
                for (int fold = 1; fold <= 3; ++fold) {
                    auto s = kfold_signature(ideal, n, fold);
                    if (fold > ideal.ngens()) {
                        CHECK(s.values ==
                              std::vector<Rational>(n, Rational(0)));
                        continue;
                    }
                    CHECK(s.values ==
                          oracles::permutation_signature(ideal, n, fold));
                }
            }
}

TEST_CASE("lattice ratio curve") {
    const int n = 8;
    auto pts = lattice_ratio_curve(
        n, {SystemKind::KOfN, SystemKind::ConsecutiveLinear,
            SystemKind::ConsecutiveCircular});
    REQUIRE(static_cast<int>(pts.size()) == 3 * (n - 2));
    for (const auto& p : pts) {
        CHECK(p.generators == failure_ideal({p.kind, n, p.k}).ngens());
        if (p.generators <= kDefaultAtomGuard) {
            REQUIRE(p.lattice_size.has_value());
            REQUIRE(p.ratio.has_value());
            CHECK(*p.ratio ==
                  poset_density(failure_ideal({p.kind, n, p.k})));
        } else {
            CHECK_FALSE(p.lattice_size.has_value());
            CHECK_FALSE(p.ratio.has_value());
        }
        if (p.kind == SystemKind::ConsecutiveCircular) CHECK(p.generators == n);
    }
    // k-of-8 with k = 4: C(8,4) = 70 generators, over the default guard
    bool saw_null = false;
    for (const auto& p : pts)
        if (p.kind == SystemKind::KOfN && p.k == 4) {
            CHECK(p.generators == 70);
            CHECK_FALSE(p.ratio.has_value());
            saw_null = true;
        }
    CHECK(saw_null);
}
