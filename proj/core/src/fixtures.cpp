#include "lcmfilt/fixtures.hpp"

namespace lcmfilt::fixtures {

namespace {

std::uint64_t mask(std::initializer_list<int> verts) {
    std::uint64_t m = 0;
    for (int v : verts) m |= std::uint64_t{1} << (v - 1);
    return m;
}

}  // namespace

MonomialIdeal filtration_demo_ideal() {
    return MonomialIdeal(5, {Monomial({1, 1, 1, 0, 0}), Monomial({0, 1, 0, 1, 0}),
                            Monomial({0, 0, 1, 1, 0}), Monomial({0, 0, 0, 0, 1})});
}

SimplicialComplex filtration_demo_complex() {
    return SimplicialComplex(
        5, {mask({1, 2}), mask({1, 3}), mask({1, 4}), mask({2, 3})});
}

SimplicialComplex redundancy_demo_complex() {
    return SimplicialComplex(7, {mask({1, 2, 3}), mask({1, 4}), mask({1, 5}),
                                 mask({3, 4}), mask({4, 5}), mask({6, 7})});
}

std::vector<SimplicialComplex> matched_invariant_complexes() {
    SimplicialComplex c1(7, {mask({1, 2}), mask({1, 3}), mask({2, 3}),
                             mask({3, 4}), mask({5, 6}), mask({5, 7}),
                             mask({6, 7})});
    SimplicialComplex c2(7, {mask({1, 2}), mask({1, 3}), mask({2, 3}),
                             mask({3, 4}), mask({2, 4}), mask({5, 6}),
                             mask({6, 7})});
    SimplicialComplex c3(7, {mask({1, 2}), mask({1, 3}), mask({3, 4}),
                             mask({2, 4}), mask({3, 5}), mask({4, 5}),
                             mask({6, 7})});
    SimplicialComplex c4(7, {mask({1, 2}), mask({2, 3}), mask({3, 4}),
                             mask({2, 4}), mask({3, 6}), mask({4, 6}),
                             mask({5, 6}), mask({7})});
    return {c1, c2, c3, c4};
}

}  // namespace lcmfilt::fixtures
