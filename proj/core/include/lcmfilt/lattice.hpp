#ifndef LCMFILT_LATTICE_HPP
#define LCMFILT_LATTICE_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <vector>

#include "lcmfilt/ideal.hpp"

namespace lcmfilt {

using Rational = boost::rational<std::int64_t>;

/// Default cap on the number of lattice atoms (minimal generators); the
/// worst case lattice has 2^r elements. Overridable per call and, in the
/// CLI, via LCMFILT_GUARD_ATOMS.
inline constexpr int kDefaultAtomGuard = 25;

/// The lcm-lattice of an ideal: all distinct lcms of subsets of the minimal
/// generators, with lcm(empty set) = 1 as the bottom element.
class LcmLattice {
public:
    LcmLattice(int atom_count, std::vector<Monomial> elements)
        : atoms_(atom_count), elements_(std::move(elements)) {}

    int atom_count() const { return atoms_; }
    std::int64_t size() const { return static_cast<std::int64_t>(elements_.size()); }
    /// Elements in canonical graded-lex order; elements_[0] is the bottom 1.
    const std::vector<Monomial>& elements() const& { return elements_; }
    const std::vector<Monomial>& elements() const&& = delete;

private:
    int atoms_;
    std::vector<Monomial> elements_;
};

/// Builds the lattice by incremental lcm-closure: atoms are joined against
/// the running element set one at a time, so the cost is proportional to
/// output size times r rather than 2^r. Throws GuardExceeded when the ideal
/// has more than atom_guard generators, and std::invalid_argument on the
/// zero ideal.
LcmLattice build_lcm_lattice(const MonomialIdeal& ideal,
                             int atom_guard = kDefaultAtomGuard);

/// |lattice| / 2^r as an exact rational in (0, 1].
Rational poset_density(const MonomialIdeal& ideal,
                       int atom_guard = kDefaultAtomGuard);

/// True iff all 2^r subset-lcms are distinct (poset density 1).
bool is_taylor(const MonomialIdeal& ideal, int atom_guard = kDefaultAtomGuard);

}  // namespace lcmfilt

#endif
