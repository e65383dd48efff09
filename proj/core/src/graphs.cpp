#include "lcmfilt/graphs.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

#include "lcmfilt/filtration.hpp"

namespace lcmfilt {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Graph::Graph(int nvertices, std::vector<std::pair<int, int>> edges)
    : nvertices_(nvertices) {
    if (nvertices < 1 || nvertices > 63)
        throw std::invalid_argument("Graph: nvertices must be in 1..63");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("Graph: loop edge");
        if (u < 0 || v < 0 || u >= nvertices || v >= nvertices)
            throw std::invalid_argument("Graph: endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("Graph: duplicate edge");
    edges_ = std::move(edges);
}

Graph Graph::complete(int nvertices) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < nvertices; ++u)
        for (int v = u + 1; v < nvertices; ++v) edges.emplace_back(u, v);
    return Graph(nvertices, std::move(edges));
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v});
    if (it == edges_.end() || *it != std::pair{u, v}) return -1;
    return static_cast<int>(it - edges_.begin());
}

bool Graph::connected_induced(std::uint64_t vertex_mask) const {
    if (vertex_mask == 0) return false;
    std::uint64_t start = vertex_mask & (~vertex_mask + 1);
    std::uint64_t reached = start;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& [u, v] : edges_) {
            std::uint64_t bu = std::uint64_t{1} << u, bv = std::uint64_t{1} << v;
            if (!(vertex_mask & bu) || !(vertex_mask & bv)) continue;
            if ((reached & bu) && !(reached & bv)) reached |= bv, grew = true;
            if ((reached & bv) && !(reached & bu)) reached |= bu, grew = true;
        }
    }
    return reached == vertex_mask;
}

Partition::Partition(std::vector<std::vector<int>> raw_blocks) {
    for (auto& b : raw_blocks) {
        if (b.empty()) throw std::invalid_argument("Partition: empty block");
        std::sort(b.begin(), b.end());
    }
    std::sort(raw_blocks.begin(), raw_blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::vector<bool> seen;
    for (const auto& b : raw_blocks)
        for (int v : b) {
            if (v < 0) throw std::invalid_argument("Partition: negative element");
            if (static_cast<int>(seen.size()) <= v) seen.resize(v + 1, false);
            if (seen[v]) throw std::invalid_argument("Partition: blocks overlap");
            seen[v] = true;
        }
    blocks = std::move(raw_blocks);
}

int Partition::ground_size() const {
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.size());
    return n;
}

std::vector<Partition> enumerate_cuts(const Graph& g, int j) {
    const int n = g.nvertices();
    if (j < 1 || j > n)
        throw std::invalid_argument("enumerate_cuts: j out of range");

    std::vector<Partition> cuts;
    // restricted growth strings: a[i] <= 1 + max(a[0..i-1])
    std::vector<int> a(n, 0);
    while (true) {
        int nblocks = *std::max_element(a.begin(), a.end()) + 1;
        if (nblocks == j) {
            std::vector<std::uint64_t> masks(j, 0);
            for (int v = 0; v < n; ++v) masks[a[v]] |= std::uint64_t{1} << v;
            bool ok = true;
            for (auto m : masks)
                if (!g.connected_induced(m)) {
                    ok = false;
                    break;
                }
            if (ok) {
                std::vector<std::vector<int>> blocks(j);
                for (int v = 0; v < n; ++v) blocks[a[v]].push_back(v);
                cuts.emplace_back(std::move(blocks));
            }
        }
        // next RGS
        int i = n - 1;
        while (i > 0) {
            int mx = 0;
            for (int t = 0; t < i; ++t) mx = std::max(mx, a[t]);
            if (a[i] <= mx) break;
            --i;
        }
        if (i == 0) break;
        ++a[i];
        std::fill(a.begin() + i + 1, a.end(), 0);
    }
    return cuts;
}

Monomial cut_monomial(const Graph& g, const Partition& c) {
    if (c.ground_size() != g.nvertices())
        throw std::invalid_argument("cut_monomial: partition does not cover V");
    std::vector<int> block_of(g.nvertices());
    for (int b = 0; b < c.nblocks(); ++b)
        for (int v : c.blocks[b]) block_of[v] = b;
    std::vector<std::int32_t> e(g.nedges(), 0);
    for (int idx = 0; idx < g.nedges(); ++idx) {
        auto [u, v] = g.edges()[idx];
        if (block_of[u] != block_of[v]) e[idx] = 1;
    }
    return Monomial(std::move(e));
}

MonomialIdeal cut_ideal(const Graph& g) {
    if (g.nedges() == 0)
        throw std::invalid_argument("cut_ideal: edgeless graph");
    const int n = g.nvertices();
    std::vector<int> block_of(n);
    std::vector<Monomial> gens;
    // all 2-partitions: subsets containing vertex 0, proper
    const std::uint64_t half = std::uint64_t{1} << (n - 1);
    for (std::uint64_t s = 0; s + 1 < half; ++s) {
        std::uint64_t side = (s << 1) | 1;  // vertex 0 always on side A
        std::vector<std::int32_t> e(g.nedges(), 0);
        bool crosses = false;
        for (int idx = 0; idx < g.nedges(); ++idx) {
            auto [u, v] = g.edges()[idx];
            if (((side >> u) & 1) != ((side >> v) & 1)) {
                e[idx] = 1;
                crosses = true;
            }
        }
        if (crosses) gens.emplace_back(std::move(e));
    }
    if (gens.empty())
        throw std::invalid_argument("cut_ideal: no 2-partition crosses");
    return MonomialIdeal(g.nedges(), std::move(gens));
}

MonomialIdeal partition_ideal(const Graph& g, int j) {
    std::vector<Monomial> gens;
    for (const auto& c : enumerate_cuts(g, j)) {
        Monomial m = cut_monomial(g, c);
        if (!m.is_one()) gens.push_back(std::move(m));
    }
    if (gens.empty())
        throw std::invalid_argument("partition_ideal: no crossing cut");
    return MonomialIdeal(g.nedges(), std::move(gens));
}

SimplicialComplex spanning_tree_complement_facets(int i) {
    if (i < 2) throw std::invalid_argument("spanning_tree_complement_facets: i < 2");
    Graph k = Graph::complete(i);
    const int m = k.nedges();
    const std::uint64_t all_edges = (std::uint64_t{1} << m) - 1;
    const std::uint64_t all_verts = (std::uint64_t{1} << i) - 1;

    std::vector<std::uint64_t> facets;
    // spanning trees of K_i: (i-1)-edge subsets spanning a connected graph
    std::vector<int> idx(i - 1);
    for (int t = 0; t < i - 1; ++t) idx[t] = t;
    while (true) {
        // connectivity over the chosen edges
        std::uint64_t reached = 1;
        bool grew = true;
        while (grew) {
            grew = false;
            for (int t : idx) {
                auto [u, v] = k.edges()[t];
                std::uint64_t bu = std::uint64_t{1} << u,
                              bv = std::uint64_t{1} << v;
                if ((reached & bu) && !(reached & bv)) reached |= bv, grew = true;
                if ((reached & bv) && !(reached & bu)) reached |= bu, grew = true;
            }
        }
        if (reached == all_verts) {
            std::uint64_t tree = 0;
            for (int t : idx) tree |= std::uint64_t{1} << t;
            facets.push_back(all_edges & ~tree);
        }
        int t = i - 2;
        while (t >= 0 && idx[t] == m - (i - 1) + t) --t;
        if (t < 0) break;
        ++idx[t];
        for (int s = t + 1; s < i - 1; ++s) idx[s] = idx[s - 1] + 1;
    }
    return SimplicialComplex(m, std::move(facets));
}

bool partitions_compatible(const Partition& a, const Partition& b) {
    if (a.nblocks() != b.nblocks()) return false;
    for (const auto& ab : a.blocks) {
        bool matched = false;
        for (const auto& bb : b.blocks) {
            if (std::includes(bb.begin(), bb.end(), ab.begin(), ab.end()) ||
                std::includes(ab.begin(), ab.end(), bb.begin(), bb.end())) {
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

bool partition_refines(const Partition& fine, const Partition& coarse) {
    if (coarse.nblocks() >= fine.nblocks()) return false;
    for (const auto& fb : fine.blocks) {
        bool inside = false;
        for (const auto& cb : coarse.blocks)
            if (std::includes(cb.begin(), cb.end(), fb.begin(), fb.end())) {
                inside = true;
                break;
            }
        if (!inside) return false;
    }
    return true;
}

Partition partition_union(const Partition& a, const Partition& b) {
    if (!partitions_compatible(a, b))
        throw std::invalid_argument("partition_union: incompatible partitions");
    // union-find over elements; merge within each block of both partitions
    const int n = a.ground_size();
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    auto unite = [&](int u, int v) { parent[find(u)] = find(v); };
    for (const auto* part : {&a, &b})
        for (const auto& blk : part->blocks)
            for (std::size_t t = 1; t < blk.size(); ++t) unite(blk[0], blk[t]);

    std::vector<std::vector<int>> groups(n);
    for (int v = 0; v < n; ++v) groups[find(v)].push_back(v);
    std::vector<std::vector<int>> blocks;
    for (auto& grp : groups)
        if (!grp.empty()) blocks.push_back(std::move(grp));
    return Partition(std::move(blocks));
}

std::int64_t stirling2(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("stirling2: k out of range");
    if (n == 0) return k == 0 ? 1 : 0;
    std::vector<std::int64_t> row(n + 1, 0);
    row[0] = 1;  // S(0,0)
    for (int i = 1; i <= n; ++i) {
        std::vector<std::int64_t> next(n + 1, 0);
        for (int j = 1; j <= i; ++j) next[j] = j * row[j] + row[j - 1];
        row = std::move(next);
    }
    return row[k];
}

bool verify_fold_collapse(int i, int kmax) {
    Graph ki = Graph::complete(i);
    MonomialIdeal ideal = cut_ideal(ki);
    const int r = ideal.ngens();
    for (int k = 1; k <= kmax; ++k) {
        if ((std::int64_t{1} << k) - 1 > r) break;
        MonomialIdeal expected = partition_ideal(ki, k + 1);
        for (std::int64_t fold = std::int64_t{1} << (k - 1);
             fold <= (std::int64_t{1} << k) - 1; ++fold) {
            if (kfold_lcm_ideal(ideal, static_cast<int>(fold)) != expected)
                return false;
        }
    }
    return true;
}

Graph er_graph(int n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("er_graph: bad p");
    Graph full = Graph::complete(n);
    std::vector<std::pair<int, int>> edges;
    for (int idx = 0; idx < full.nedges(); ++idx) {
        std::uint64_t h =
            splitmix64(splitmix64(seed) ^ (0x9e3779b97f4a7c15ULL + idx));
        double u = static_cast<double>(h >> 11) * 0x1.0p-53;
        if (u < p) edges.push_back(full.edges()[idx]);
    }
    return Graph(n, std::move(edges));
}

std::vector<DeletionRow> deletion_experiment(int n, int runs,
                                             std::uint64_t seed,
                                             int atom_guard) {
    Graph full = Graph::complete(n);
    const int m = full.nedges();
    std::vector<DeletionRow> rows;
    for (int run = 0; run < runs; ++run) {
        std::uint64_t state = splitmix64(seed ^ splitmix64(0xabcd0000ULL + run));
        auto next = [&state]() { return state = splitmix64(state); };
        std::vector<int> order(m);
        for (int t = 0; t < m; ++t) order[t] = t;
        for (int t = m - 1; t > 0; --t) {
            int s = static_cast<int>(next() % static_cast<std::uint64_t>(t + 1));
            std::swap(order[t], order[s]);
        }

        std::vector<bool> deleted(m, false);
        for (int step = 0; step <= m; ++step) {
            if (step > 0) deleted[order[step - 1]] = true;
            std::vector<std::pair<int, int>> edges;
            for (int idx = 0; idx < m; ++idx)
                if (!deleted[idx]) edges.push_back(full.edges()[idx]);
            const int remaining = static_cast<int>(edges.size());
            DeletionRow row{run, step, remaining,
                            static_cast<double>(remaining) / m, 0, std::nullopt};
            if (remaining > 0) {
                Graph g(n, std::move(edges));
                MonomialIdeal ideal = cut_ideal(g);
                row.generators = ideal.ngens();
                if (ideal.ngens() <= atom_guard)
                    row.pden = poset_density(ideal, atom_guard);
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace lcmfilt
