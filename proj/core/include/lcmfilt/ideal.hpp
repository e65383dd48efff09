#ifndef LCMFILT_IDEAL_HPP
#define LCMFILT_IDEAL_HPP

#include <stdexcept>
#include <vector>

#include "lcmfilt/monomial.hpp"

namespace lcmfilt {

/// Thrown when a size guard (generator count, lattice atoms, ...) would be
/// exceeded. Callers distinguish this from plain invalid input.
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Returns the unique divisibility antichain generating the same ideal,
/// sorted in the canonical graded-lex order. Duplicates are dropped.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// A monomial ideal, held by its minimal generating set in canonical order.
/// The empty generator set encodes the zero ideal.
class MonomialIdeal {
public:
    explicit MonomialIdeal(int nvars) : nvars_(nvars) {
        if (nvars < 1) throw std::invalid_argument("nvars must be positive");
    }
    /// Minimalizes and canonicalizes the given generators. The constant
    /// monomial is rejected: a proper monomial ideal never contains 1.
    MonomialIdeal(int nvars, std::vector<Monomial> gens);

    int nvars() const { return nvars_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    int ngens() const { return static_cast<int>(gens_.size()); }
    bool is_zero() const { return gens_.empty(); }
    bool is_squarefree() const;
    bool is_principal() const { return gens_.size() == 1; }

    /// Membership: x^m lies in the ideal iff some generator divides m.
    bool contains(const Monomial& m) const;

    /// lcm of all generators; throws on the zero ideal.
    Monomial top_lcm() const;

    bool operator==(const MonomialIdeal& rhs) const {
        return nvars_ == rhs.nvars_ && gens_ == rhs.gens_;
    }
    bool operator!=(const MonomialIdeal& rhs) const { return !(*this == rhs); }

private:
    int nvars_;
    std::vector<Monomial> gens_;  // minimal antichain, graded-lex sorted
};

/// Result of polarization: a squarefree ideal in a larger ring together with
/// the map from new variables back to the originals.
struct Polarization {
    MonomialIdeal ideal;
    std::vector<int> var_origin;  // new variable index -> original variable
    int original_nvars = 0;
};

/// Split each x_i^e into e distinct squarefree variables. Unused original
/// variables keep one copy so the fiber-collapse recovers the ambient ring.
/// Throws on the zero ideal.
Polarization polarize(const MonomialIdeal& ideal);

/// Collapse the fibers of a polarization back to the original ring.
MonomialIdeal depolarize(const Polarization& pol);

/// Number of squarefree monomials of degree d divisible by some generator.
/// Requires a squarefree ideal and 0 <= d <= nvars.
std::int64_t count_squarefree_multiples(const MonomialIdeal& ideal, int d);

}  // namespace lcmfilt

#endif
