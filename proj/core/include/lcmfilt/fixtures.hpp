#ifndef LCMFILT_FIXTURES_HPP
#define LCMFILT_FIXTURES_HPP

#include <vector>

#include "lcmfilt/ideal.hpp"
#include "lcmfilt/simplicial.hpp"

namespace lcmfilt::fixtures {

/// <x1x2x3, x2x4, x3x4, x5> in five variables; small enough to follow both
/// filtrations by hand.
MonomialIdeal filtration_demo_ideal();

/// Its Stanley-Reisner complex: facets {12, 13, 14, 23}.
SimplicialComplex filtration_demo_complex();

/// Complex on 7 vertices with facets {123, 14, 15, 34, 45, 67}; its
/// Stanley-Reisner ideal has 15 generators and shows how far the two
/// filtrations can drift apart.
SimplicialComplex redundancy_demo_complex();

/// Four graphs-as-complexes on 7 vertices sharing the f-vector (1,7,7) and
/// Betti numbers beta_0 = beta_1 = 2, yet separated by filtration-based
/// persistence distances.
std::vector<SimplicialComplex> matched_invariant_complexes();

}  // namespace lcmfilt::fixtures

#endif
