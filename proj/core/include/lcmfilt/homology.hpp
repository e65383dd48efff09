#ifndef LCMFILT_HOMOLOGY_HPP
#define LCMFILT_HOMOLOGY_HPP

#include <cstdint>
#include <vector>

#include "lcmfilt/lattice.hpp"

namespace lcmfilt {

/// Rank by exact rational Gaussian elimination. Rows may have unequal
/// semantics to the caller; only the rank matters here.
std::int64_t matrix_rank(std::vector<std::vector<Rational>> m);

/// Rank over GF(p) for a prime p.
std::int64_t matrix_rank_mod_p(std::vector<std::vector<std::int64_t>> m,
                               std::int64_t p);

}  // namespace lcmfilt

#endif
