#include <doctest.h>

#include <cmath>

#include "lcmfilt/fixtures.hpp"
#include "lcmfilt/persistence.hpp"
#include "support/oracles.hpp"

using namespace lcmfilt;

namespace {

constexpr double kTol = 1e-12;

PersistenceDiagram random_diagram(oracles::Rng& rng) {
    PersistenceDiagram d;
    for (int dim = 0; dim <= 1; ++dim) {
        const int npairs = rng.below(4);
        for (int t = 0; t < npairs; ++t) {
            int birth = 1 + rng.below(5);
            if (rng.below(4) == 0)
                d.dims[dim].push_back({birth, std::nullopt});
            else
                d.dims[dim].push_back({birth, birth + 1 + rng.below(4)});
        }
    }
    return d;
}

}  // namespace

TEST_CASE("complexes of the stepwise demo chain are nested SR complexes") {
    auto chain = stepwise_filtration(fixtures::filtration_demo_ideal());
    auto cf = complexes_of(chain);
    REQUIRE(cf.nsteps() == chain.nsteps());
    for (int k = 1; k <= cf.nsteps(); ++k)
        CHECK(cf.steps[k - 1] == sr_complex(chain.step(k)));
    for (int k = 1; k < cf.nsteps(); ++k)
        for (auto f : cf.steps[k - 1].facets())
            CHECK(cf.steps[k].contains_face(f));
}

TEST_CASE("complexes of a non-squarefree chain share one polarization") {
    MonomialIdeal ideal(2, {Monomial({2, 0}), Monomial({1, 1}), Monomial({0, 2})});
    auto cf = complexes_of(lcm_filtration(ideal));
    REQUIRE(cf.nsteps() == 3);
    for (int k = 1; k < cf.nsteps(); ++k) {
        for (auto f : cf.steps[k - 1].facets())
            CHECK(cf.steps[k].contains_face(f));
        CHECK(cf.steps[k - 1].nvertices() == cf.steps[k].nvertices());
    }
}

TEST_CASE("two points merging into an edge") {
    SimplicialComplex points(2, {0b01, 0b10});
    SimplicialComplex edge(2, {0b11});
    auto d = persistence_diagram(ComplexFiltration{{points, edge}}, 1);
    REQUIRE(d.dims.count(0) == 1);
    CHECK(d.dims.at(0) ==
          std::vector<PersistencePair>{{1, 2}, {1, std::nullopt}});
}

TEST_CASE("a circle closing and getting filled") {
    // path -> circle -> disc: one 1-class born at 2 and killed at 3
    SimplicialComplex path(3, {0b011, 0b110});
    SimplicialComplex circle(3, {0b011, 0b110, 0b101});
    SimplicialComplex disc(3, {0b111});
    auto d = persistence_diagram(ComplexFiltration{{path, circle, disc}}, 1);
    CHECK(d.dims.at(0) == std::vector<PersistencePair>{{1, std::nullopt}});
    CHECK(d.dims.at(1) == std::vector<PersistencePair>{{2, 3}});
}

TEST_CASE("reduction agrees with the rank oracle on random filtrations") {
    oracles::Rng rng(1424);
    for (int t = 0; t < 50; ++t) {
        auto ideal = oracles::random_squarefree_ideal(rng, 6, 6);
        auto cf = complexes_of(stepwise_filtration(ideal));
        auto fast = persistence_diagram(cf, 2);
        auto slow = oracles::rank_persistence_oracle(cf, 2);
        CHECK(oracles::diagram_multiset(fast) == oracles::diagram_multiset(slow));
    }
}

TEST_CASE("hand-checked distances") {
    PersistenceDiagram a, b;
    a.dims[0] = {{1, 3}};
    CHECK(bottleneck(a, b) == doctest::Approx(1.0));   // match to the diagonal
    CHECK(wasserstein(a, b) == doctest::Approx(1.0));  // (3-1)/2

    b.dims[0] = {{2, 3}};
    CHECK(bottleneck(a, b) == doctest::Approx(1.0));
    CHECK(wasserstein(a, b) == doctest::Approx(1.0));

    PersistenceDiagram c, d;
    c.dims[0] = {{1, 5}};
    d.dims[0] = {{2, 5}};
    CHECK(bottleneck(c, d) == doctest::Approx(1.0));
    CHECK(wasserstein(c, d) == doctest::Approx(1.0));
    CHECK(wasserstein(c, d, 2) == doctest::Approx(1.0));

    PersistenceDiagram e, f;
    e.dims[0] = {{1, std::nullopt}};
    f.dims[0] = {{3, std::nullopt}};
    CHECK(bottleneck(e, f) == doctest::Approx(2.0));
    CHECK(wasserstein(e, f) == doctest::Approx(2.0));

    f.dims[0].push_back({4, std::nullopt});
    CHECK(std::isinf(bottleneck(e, f)));
    CHECK(std::isinf(wasserstein(e, f)));
}

TEST_CASE("distances are pseudometrics on random diagrams") {
    oracles::Rng rng(1525);
    for (int t = 0; t < 40; ++t) {
        auto a = random_diagram(rng);
        auto b = random_diagram(rng);
        auto c = random_diagram(rng);
        for (auto metric : {DistanceMetric::Bottleneck, DistanceMetric::Wasserstein}) {
            auto dist = [&](const PersistenceDiagram& x, const PersistenceDiagram& y) {
                return metric == DistanceMetric::Bottleneck ? bottleneck(x, y)
                                                            : wasserstein(x, y);
            };
            CHECK(dist(a, a) == doctest::Approx(0.0));
            const double ab = dist(a, b), bc = dist(b, c), ac = dist(a, c);
            const double ba = dist(b, a);
            if (std::isinf(ab))
                CHECK(std::isinf(ba));
            else
                CHECK(ab == doctest::Approx(ba));
            CHECK(ab >= 0.0);
            if (!std::isinf(ab) && !std::isinf(bc))
                CHECK(ac <= ab + bc + kTol);
        }
    }
}

TEST_CASE("wasserstein dominates bottleneck per dimension") {
    oracles::Rng rng(1626);
    for (int t = 0; t < 30; ++t) {
        PersistenceDiagram a = random_diagram(rng), b = random_diagram(rng);
        const double bn = bottleneck(a, b, DimAggregate::Max);
        const double w1 = wasserstein(a, b, 1, DimAggregate::Sum);
        if (!std::isinf(bn)) CHECK(w1 >= bn - kTol);
    }
}

TEST_CASE("distance matrix is symmetric with zero diagonal") {
    auto complexes = fixtures::matched_invariant_complexes();
    for (auto metric : {DistanceMetric::Bottleneck, DistanceMetric::Wasserstein})
        for (auto mode : {FiltrationKind::Usual, FiltrationKind::Stepwise}) {
            DistanceOptions opts;
            opts.metric = metric;
            opts.mode = mode;
            auto m = distance_matrix(complexes, opts);
            REQUIRE(m.size() == 4);
            for (std::size_t i = 0; i < 4; ++i) {
                CHECK(m[i][i] == doctest::Approx(0.0));
                for (std::size_t j = 0; j < 4; ++j)
                    CHECK(m[i][j] == doctest::Approx(m[j][i]));
            }
        }
}
