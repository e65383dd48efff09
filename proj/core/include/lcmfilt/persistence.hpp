#ifndef LCMFILT_PERSISTENCE_HPP
#define LCMFILT_PERSISTENCE_HPP

#include <map>
#include <optional>
#include <vector>

#include "lcmfilt/filtration.hpp"
#include "lcmfilt/simplicial.hpp"

namespace lcmfilt {

/// Nested ascending sequence of complexes, 1-indexed like IdealFiltration.
struct ComplexFiltration {
    std::vector<SimplicialComplex> steps;

    int nsteps() const { return static_cast<int>(steps.size()); }
};

/// Stanley-Reisner complexes of a descending ideal filtration, in order.
/// Non-squarefree steps are polarized with a single shared variable table so
/// the complexes stay nested; nestedness is verified and a violation throws
/// (it would indicate an internal bug).
ComplexFiltration complexes_of(const IdealFiltration& filtration);

/// A persistence class: born entering step `birth`; `death` is empty for
/// classes still alive at the final step.
struct PersistencePair {
    int birth;
    std::optional<int> death;

    bool essential() const { return !death.has_value(); }
    bool operator==(const PersistencePair& rhs) const {
        return birth == rhs.birth && death == rhs.death;
    }
};

struct PersistenceDiagram {
    /// homology dimension -> pairs sorted by (birth, death)
    std::map<int, std::vector<PersistencePair>> dims;
};

/// Standard boundary-matrix reduction over GF(2); filtration value of a face
/// is the step at which it first appears. Zero-length pairs are discarded.
PersistenceDiagram persistence_diagram(const ComplexFiltration& filtration,
                                       int maxdim);

enum class DimAggregate { Max, Sum };

/// Bottleneck distance: per-dimension optimal matching against the diagonal
/// with L-infinity ground cost, aggregated over dimensions (max by
/// default). Essential classes match essential classes by birth; mismatched
/// essential counts give infinity.
double bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b,
                  DimAggregate aggregate = DimAggregate::Max);

/// q-Wasserstein distance via exact optimal assignment with diagonal
/// projections, summed over dimensions by default.
double wasserstein(const PersistenceDiagram& a, const PersistenceDiagram& b,
                   int q = 1, DimAggregate aggregate = DimAggregate::Sum);

enum class DistanceMetric { Bottleneck, Wasserstein };

struct DistanceOptions {
    FiltrationKind mode = FiltrationKind::Usual;
    DistanceMetric metric = DistanceMetric::Bottleneck;
    int wasserstein_q = 1;
    /// top homology dimension; negative means every dimension of the chain
    int maxdim = -1;
    /// per-dimension distances are summed by default, matching the published
    /// reference tables; Max gives the classical bottleneck convention
    DimAggregate aggregate = DimAggregate::Sum;
    int gen_guard = kDefaultFiltrationGuard;
};

/// Diagram of one complex: its Stanley-Reisner ideal is filtered (usual or
/// stepwise) and the induced complex sequence reduced.
PersistenceDiagram diagram_of_complex(const SimplicialComplex& complex,
                                      const DistanceOptions& opts);

/// Symmetric zero-diagonal matrix of pairwise diagram distances.
std::vector<std::vector<double>> distance_matrix(
    const std::vector<SimplicialComplex>& complexes, const DistanceOptions& opts);

}  // namespace lcmfilt

#endif
