#ifndef LCMFILT_SIMPLICIAL_HPP
#define LCMFILT_SIMPLICIAL_HPP

#include <cstdint>
#include <vector>

#include "lcmfilt/ideal.hpp"
#include "lcmfilt/lattice.hpp"

namespace lcmfilt {

/// Faces are bit masks over a ground set of at most 63 vertices (vertex i is
/// bit i). Two degenerate complexes are kept distinct: the void complex has
/// no faces at all, while the irrelevant complex {emptyset} has the empty
/// face as its only facet.
class SimplicialComplex {
public:
    /// Facets are maximalized; passing no facets yields the void complex.
    SimplicialComplex(int nvertices, std::vector<std::uint64_t> facets);

    static SimplicialComplex void_complex(int nvertices) {
        return SimplicialComplex(nvertices, {});
    }
    static SimplicialComplex irrelevant(int nvertices) {
        return SimplicialComplex(nvertices, {0});
    }
    static SimplicialComplex full_simplex(int nvertices);

    int nvertices() const { return nvertices_; }
    /// Inclusion-maximal faces in ascending mask order.
    const std::vector<std::uint64_t>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    bool is_irrelevant() const {
        return facets_.size() == 1 && facets_[0] == 0;
    }

    bool contains_face(std::uint64_t face) const;
    /// Every face (the downward closure of the facets) in ascending mask
    /// order; empty for the void complex.
    std::vector<std::uint64_t> all_faces() const;
    /// -1 for the irrelevant complex; undefined (throws) for the void one.
    int dimension() const;

    bool operator==(const SimplicialComplex& rhs) const {
        return nvertices_ == rhs.nvertices_ && facets_ == rhs.facets_;
    }
    bool operator!=(const SimplicialComplex& rhs) const { return !(*this == rhs); }

private:
    int nvertices_;
    std::vector<std::uint64_t> facets_;
};

/// Keep only inclusion-maximal masks, ascending order.
std::vector<std::uint64_t> maximalize(std::vector<std::uint64_t> masks);

/// Stanley-Reisner ideal: squarefree ideal generated by the inclusion-minimal
/// non-faces. The full simplex maps to the zero ideal. Throws on the void
/// complex.
MonomialIdeal sr_ideal(const SimplicialComplex& complex);

/// Stanley-Reisner complex of a squarefree ideal: all subsets whose
/// indicator monomial avoids the ideal. Inverse of sr_ideal.
SimplicialComplex sr_complex(const MonomialIdeal& ideal);

/// One step of the simplicial counterpart of the stepwise filtration: add
/// every subset of the ground set with at most one missing codimension-one
/// subset, then re-maximalize.
SimplicialComplex stepwise_complex_step(const SimplicialComplex& complex);

/// (f_{-1}, f_0, f_1, ...) counting faces by dimension, f_{-1} = 1. Throws
/// on the void complex.
std::vector<std::int64_t> f_vector(const SimplicialComplex& complex);

/// Coefficient field for homology ranks: prime 0 selects exact rationals.
struct FieldSpec {
    int prime = 0;
};

/// Non-reduced Betti numbers beta_0, beta_1, ... up to the dimension of the
/// complex. Throws on the void complex; the irrelevant complex yields an
/// empty sequence.
std::vector<std::int64_t> betti_numbers(const SimplicialComplex& complex,
                                        FieldSpec field = {});

/// Reduced Betti numbers; index i holds the rank in dimension i-1, so the
/// irrelevant complex reports (1). The void complex yields all zeros (empty
/// sequence).
std::vector<std::int64_t> reduced_betti_numbers(const SimplicialComplex& complex,
                                                FieldSpec field = {});

std::int64_t reduced_betti(const SimplicialComplex& complex, int dim,
                           FieldSpec field = {});

/// Upper Koszul complex at mu: subsets tau of supp(mu) with x^(mu-tau) in
/// the ideal. Void when x^mu itself is outside the ideal.
SimplicialComplex upper_koszul(const MonomialIdeal& ideal, const Monomial& mu);

/// Lower Koszul complex at mu: subsets tau of supp(mu) with x^(mu'+tau)
/// outside the ideal, where mu' drops each positive exponent by one.
SimplicialComplex lower_koszul(const MonomialIdeal& ideal, const Monomial& mu);

/// Multigraded Betti number via the upper Koszul complex: the reduced
/// homology rank of K^mu(I) in dimension i-1.
std::int64_t betti_at(const MonomialIdeal& ideal, const Monomial& mu, int i,
                      FieldSpec field = {});

struct BettiEntry {
    int index;    // homological index i
    Monomial mu;  // multidegree
    std::int64_t value;
};

/// All nonzero multigraded Betti numbers with multidegrees in the
/// lcm-lattice. Non-squarefree input is polarized first; the flag records
/// that and entries then live in the polarized ring.
struct BettiTable {
    std::vector<BettiEntry> entries;
    bool polarized = false;
    std::vector<int> var_origin;  // polarized variable -> original; empty otherwise
};

BettiTable sensitive_corners(const MonomialIdeal& ideal, FieldSpec field = {},
                             int atom_guard = kDefaultAtomGuard);

}  // namespace lcmfilt

#endif
