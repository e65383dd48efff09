#ifndef LCMFILT_FILTRATION_HPP
#define LCMFILT_FILTRATION_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "lcmfilt/ideal.hpp"

namespace lcmfilt {

enum class FiltrationKind { Usual, Stepwise };

/// Default cap on generator counts for the usual filtration; step k
/// enumerates C(r, k) subsets, so the whole filtration costs 2^r lcms.
inline constexpr int kDefaultFiltrationGuard = 22;

/// A descending chain of ideals, 1-indexed: steps[0] is step 1 = the input
/// ideal. Usual chains have exactly r steps; stepwise chains end at the
/// first principal step.
struct IdealFiltration {
    FiltrationKind kind;
    std::vector<MonomialIdeal> steps;

    int nsteps() const { return static_cast<int>(steps.size()); }
    const MonomialIdeal& step(int k) const { return steps.at(k - 1); }
};

/// The single k-fold lcm-ideal: minimalized lcms of all k-subsets of the
/// minimal generators. Guard is on the C(r, k) subset count.
MonomialIdeal kfold_lcm_ideal(const MonomialIdeal& ideal, int k,
                              std::int64_t subset_guard = std::int64_t{1} << 24);

/// Usual lcm-filtration I_1 .. I_r. Throws GuardExceeded when r exceeds the
/// guard and std::invalid_argument on the zero ideal.
IdealFiltration lcm_filtration(const MonomialIdeal& ideal,
                               int gen_guard = kDefaultFiltrationGuard);

/// Stepwise lcm-filtration: each step takes pairwise lcms of the previous
/// step's minimal generators, stopping at the first principal step.
IdealFiltration stepwise_filtration(const MonomialIdeal& ideal);

/// Step-by-step comparison of the two filtrations of one ideal, including
/// the deterministic lcm-evaluation cost model: step k costs C(r, k) for
/// the usual filtration and C(|G(step k-1)|, 2) for the stepwise one.
struct FiltrationComparison {
    std::vector<int> usual_gen_counts;     // per usual step
    std::vector<int> stepwise_gen_counts;  // per stepwise step
    /// 1-based (stepwise j, usual k) with stepwise step j == usual step k.
    std::vector<std::pair<int, int>> equal_steps;
    /// 1-based usual step indices equal to no stepwise step.
    std::vector<int> unmatched_usual_steps;
    std::int64_t usual_lcm_evals = 0;
    std::int64_t stepwise_lcm_evals = 0;
};

FiltrationComparison compare_filtrations(const MonomialIdeal& ideal,
                                         int gen_guard = kDefaultFiltrationGuard);

/// Exact binomial coefficient; throws on int64 overflow.
std::int64_t binomial(int n, int k);

}  // namespace lcmfilt

#endif
