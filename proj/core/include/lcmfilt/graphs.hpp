#ifndef LCMFILT_GRAPHS_HPP
#define LCMFILT_GRAPHS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lcmfilt/lattice.hpp"
#include "lcmfilt/simplicial.hpp"

namespace lcmfilt {

/// Simple undirected graph; vertices 0-based internally. Edge variables are
/// indexed lexicographically by (min, max) endpoint, a bijection onto
/// 0..|E|-1, so cut monomials are reproducible.
class Graph {
public:
    Graph(int nvertices, std::vector<std::pair<int, int>> edges);
    static Graph complete(int nvertices);

    int nvertices() const { return nvertices_; }
    int nedges() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_index(int u, int v) const;  // -1 if absent
    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

    /// Is the subgraph induced by the vertex mask connected? Empty sets are
    /// not connected; singletons are.
    bool connected_induced(std::uint64_t vertex_mask) const;

private:
    int nvertices_;
    std::vector<std::pair<int, int>> edges_;
};

/// A partition of {0..n-1} into disjoint nonempty blocks; blocks are sorted
/// internally and ordered by smallest element.
struct Partition {
    std::vector<std::vector<int>> blocks;

    Partition() = default;
    explicit Partition(std::vector<std::vector<int>> raw_blocks);

    int nblocks() const { return static_cast<int>(blocks.size()); }
    int ground_size() const;
    bool operator==(const Partition& rhs) const { return blocks == rhs.blocks; }
};

/// All j-partitions of the vertex set whose blocks induce connected
/// subgraphs, in a deterministic (restricted-growth-string) order.
std::vector<Partition> enumerate_cuts(const Graph& g, int j);

/// Product of edge variables crossing between distinct blocks; the constant
/// monomial when nothing crosses.
Monomial cut_monomial(const Graph& g, const Partition& c);

/// Ideal generated by the crossing monomials of all 2-partitions with a
/// nonempty crossing set, minimalized. Throws when no 2-partition crosses
/// (edgeless graph).
MonomialIdeal cut_ideal(const Graph& g);

/// Ideal generated by the crossing monomials of the connected j-cuts
/// (empty-crossing cuts excluded). Throws when no generator remains.
MonomialIdeal partition_ideal(const Graph& g, int j);

/// Facets E(K_i) \ T over all spanning trees T of the complete graph,
/// as a complex on the |E(K_i)| edge variables.
SimplicialComplex spanning_tree_complement_facets(int i);

bool partitions_compatible(const Partition& a, const Partition& b);
bool partition_refines(const Partition& fine, const Partition& coarse);
/// Common coarsening of two compatible partitions (transitive closure of
/// overlapping matched blocks). Throws on incompatible inputs.
Partition partition_union(const Partition& a, const Partition& b);

/// Stirling number of the second kind via the standard recurrence.
std::int64_t stirling2(int n, int k);

/// Checks that the 2^(k-1) .. 2^k-1 fold lcm-ideals of the cut ideal of K_i
/// all equal the (k+1)-partition ideal, for every k <= kmax with
/// 2^k - 1 <= r.
bool verify_fold_collapse(int i, int kmax);

/// Deterministic Erdos-Renyi graph: each edge present independently with
/// probability p, decided by a counter-based hash of (seed, edge index).
Graph er_graph(int n, double p, std::uint64_t seed);

struct DeletionRow {
    int run;
    int step;
    int edges_remaining;
    double density;
    int generators;                 // 0 when the cut ideal is undefined
    std::optional<Rational> pden;   // null when undefined or over guard
};

/// Delete the edges of K_n one at a time in a seeded random order, recording
/// graph density and the poset density of the cut ideal at each step.
/// Per-run orders derive from hash(seed, run), so runs are schedule
/// independent.
std::vector<DeletionRow> deletion_experiment(int n, int runs,
                                             std::uint64_t seed,
                                             int atom_guard = kDefaultAtomGuard);

/// SplitMix64 bijective mixer; the basis of every seeded computation here.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace lcmfilt

#endif
