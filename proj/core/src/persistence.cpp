#include "lcmfilt/persistence.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace lcmfilt {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

ComplexFiltration complexes_of(const IdealFiltration& filtration) {
    if (filtration.steps.empty())
        throw std::invalid_argument("complexes_of: empty filtration");

    std::vector<MonomialIdeal> steps = filtration.steps;
    bool squarefree = true;
    for (const auto& s : steps)
        if (!s.is_squarefree()) squarefree = false;

    if (!squarefree) {
        // one shared variable table across all steps keeps divisibility, and
        // hence nestedness, intact
        const int n = steps.front().nvars();
        std::vector<std::int32_t> levels(n, 1);
        for (const auto& s : steps)
            for (const auto& g : s.generators())
                for (int i = 0; i < n; ++i)
                    levels[i] = std::max(levels[i], g.exponent(i));
        std::vector<int> first(n);
        int nn = 0;
        for (int i = 0; i < n; ++i) {
            first[i] = nn;
            nn += levels[i];
        }
        for (auto& s : steps) {
            std::vector<Monomial> gens;
            for (const auto& g : s.generators()) {
                std::vector<std::int32_t> e(nn, 0);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < g.exponent(i); ++j) e[first[i] + j] = 1;
                gens.emplace_back(std::move(e));
            }
            s = MonomialIdeal(nn, std::move(gens));
        }
    }

    ComplexFiltration cf;
    for (const auto& s : steps) cf.steps.push_back(sr_complex(s));
    for (int t = 0; t + 1 < cf.nsteps(); ++t)
        for (auto facet : cf.steps[t].facets())
            if (!cf.steps[t + 1].contains_face(facet))
                throw std::logic_error("complexes_of: complexes not nested");
    return cf;
}

PersistenceDiagram persistence_diagram(const ComplexFiltration& filtration,
                                       int maxdim) {
    const int T = filtration.nsteps();
    if (T == 0) throw std::invalid_argument("persistence_diagram: empty filtration");

    // filtration value = first step a face appears in
    std::unordered_map<std::uint64_t, int> filt;
    for (int t = 1; t <= T; ++t)
        for (auto face : filtration.steps[t - 1].all_faces())
            if (face != 0) filt.emplace(face, t);

    struct Simplex {
        std::uint64_t mask;
        int filt;
        int card;
    };
    std::vector<Simplex> order;
    order.reserve(filt.size());
    for (auto [mask, t] : filt) order.push_back({mask, t, std::popcount(mask)});
    std::sort(order.begin(), order.end(), [](const Simplex& a, const Simplex& b) {
        if (a.filt != b.filt) return a.filt < b.filt;
        if (a.card != b.card) return a.card < b.card;
        return a.mask < b.mask;
    });
    std::unordered_map<std::uint64_t, int> position;
    for (std::size_t i = 0; i < order.size(); ++i) position[order[i].mask] = i;

    // GF(2) reduction, columns as sorted row-index lists
    const int m = static_cast<int>(order.size());
    std::vector<std::vector<int>> cols(m);
    for (int j = 0; j < m; ++j) {
        std::uint64_t rest = order[j].mask;
        if (order[j].card == 1) continue;  // vertices have empty boundary
        while (rest) {
            std::uint64_t low = rest & (~rest + 1);
            cols[j].push_back(position.at(order[j].mask & ~low));
            rest &= rest - 1;
        }
        std::sort(cols[j].begin(), cols[j].end());
    }

    std::vector<int> pivot_owner(m, -1);
    std::vector<bool> paired(m, false);
    PersistenceDiagram diagram;
    for (int j = 0; j < m; ++j) {
        auto& col = cols[j];
        while (!col.empty()) {
            int low = col.back();
            int owner = pivot_owner[low];
            if (owner < 0) break;
            // symmetric difference with the owning column
            std::vector<int> merged;
            std::set_symmetric_difference(col.begin(), col.end(),
                                          cols[owner].begin(), cols[owner].end(),
                                          std::back_inserter(merged));
            col = std::move(merged);
        }
        if (!col.empty()) {
            int low = col.back();
            pivot_owner[low] = j;
            paired[low] = true;
            paired[j] = true;
            const int dim = order[low].card - 1;
            const int birth = order[low].filt, death = order[j].filt;
            if (dim <= maxdim && death > birth)
                diagram.dims[dim].push_back({birth, death});
        }
    }
    for (int i = 0; i < m; ++i) {
        if (paired[i]) continue;
        const int dim = order[i].card - 1;
        if (dim <= maxdim)
            diagram.dims[dim].push_back({order[i].filt, std::nullopt});
    }
    for (auto& [dim, pairs] : diagram.dims)
        std::sort(pairs.begin(), pairs.end(),
                  [](const PersistencePair& a, const PersistencePair& b) {
                      if (a.birth != b.birth) return a.birth < b.birth;
                      return a.death.value_or(INT_MAX) < b.death.value_or(INT_MAX);
                  });
    return diagram;
}

namespace {

struct Point {
    double birth, death;
    double persistence() const { return death - birth; }
};

void split_dim(const PersistenceDiagram& d, int dim, std::vector<Point>& finite,
               std::vector<double>& essential_births) {
    auto it = d.dims.find(dim);
    if (it == d.dims.end()) return;
    for (const auto& p : it->second) {
        if (p.essential())
            essential_births.push_back(p.birth);
        else
            finite.push_back({static_cast<double>(p.birth),
                              static_cast<double>(*p.death)});
    }
}

double linf(const Point& a, const Point& b) {
    return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

// Kuhn's maximum bipartite matching
struct Kuhn {
    std::vector<std::vector<int>> adj;
    std::vector<int> match_right;
    std::vector<bool> used;

    bool try_augment(int v) {
        for (int to : adj[v]) {
            if (used[to]) continue;
            used[to] = true;
            if (match_right[to] < 0 || try_augment(match_right[to])) {
                match_right[to] = v;
                return true;
            }
        }
        return false;
    }

    int run(int nleft, int nright) {
        match_right.assign(nright, -1);
        int matched = 0;
        for (int v = 0; v < nleft; ++v) {
            used.assign(nright, false);
            if (try_augment(v)) ++matched;
        }
        return matched;
    }
};

// can all off-diagonal work be done within threshold t?
bool bottleneck_feasible(const std::vector<Point>& A, const std::vector<Point>& B,
                         double t) {
    const int na = static_cast<int>(A.size()), nb = static_cast<int>(B.size());
    const int n = na + nb;  // left: A then diagonal slots; right: B then slots
    Kuhn k;
    k.adj.assign(n, {});
    const double eps = 1e-12;
    for (int i = 0; i < na; ++i) {
        for (int j = 0; j < nb; ++j)
            if (linf(A[i], B[j]) <= t + eps) k.adj[i].push_back(j);
        if (A[i].persistence() / 2 <= t + eps) k.adj[i].push_back(nb + i);
    }
    for (int j = 0; j < nb; ++j) {
        if (B[j].persistence() / 2 <= t + eps) k.adj[na + j].push_back(j);
        for (int i = 0; i < na; ++i) k.adj[na + j].push_back(nb + i);
    }
    return k.run(n, n) == n;
}

double bottleneck_dim(const std::vector<Point>& A, const std::vector<Point>& B) {
    std::vector<double> candidates = {0.0};
    for (const auto& a : A) candidates.push_back(a.persistence() / 2);
    for (const auto& b : B) candidates.push_back(b.persistence() / 2);
    for (const auto& a : A)
        for (const auto& b : B) candidates.push_back(linf(a, b));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    int lo = 0, hi = static_cast<int>(candidates.size()) - 1;
    while (lo < hi) {
        int mid = (lo + hi) / 2;
        if (bottleneck_feasible(A, B, candidates[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return candidates[lo];
}

// O(n^3) Hungarian assignment on a square cost matrix
double hungarian(const std::vector<std::vector<double>>& a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 0.0;
    std::vector<double> u(n + 1, 0), v(n + 1, 0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(n + 1, kInf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            int i0 = p[j0], j1 = -1;
            double delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                double cur = a[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    double cost = 0;
    for (int j = 1; j <= n; ++j) cost += a[p[j] - 1][j - 1];
    return cost;
}

double wasserstein_dim(const std::vector<Point>& A, const std::vector<Point>& B,
                       int q) {
    const int na = static_cast<int>(A.size()), nb = static_cast<int>(B.size());
    const int n = na + nb;
    if (n == 0) return 0.0;
    std::vector<std::vector<double>> cost(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < na; ++i) {
        for (int j = 0; j < nb; ++j)
            cost[i][j] = std::pow(linf(A[i], B[j]), q);
        for (int j = nb; j < n; ++j)
            cost[i][j] = std::pow(A[i].persistence() / 2, q);
    }
    for (int i = na; i < n; ++i)
        for (int j = 0; j < nb; ++j)
            cost[i][j] = std::pow(B[j].persistence() / 2, q);
    return hungarian(cost);
}

double essential_cost(std::vector<double> ea, std::vector<double> eb, int q,
                      bool as_max) {
    if (ea.size() != eb.size()) return kInf;
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    double acc = 0;
    for (std::size_t i = 0; i < ea.size(); ++i) {
        double d = std::abs(ea[i] - eb[i]);
        if (as_max)
            acc = std::max(acc, d);
        else
            acc += std::pow(d, q);
    }
    return acc;
}

std::vector<int> dims_union(const PersistenceDiagram& a,
                            const PersistenceDiagram& b) {
    std::vector<int> dims;
    for (const auto& [d, _] : a.dims) dims.push_back(d);
    for (const auto& [d, _] : b.dims) dims.push_back(d);
    std::sort(dims.begin(), dims.end());
    dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
    return dims;
}

}  // namespace

double bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b,
                  DimAggregate aggregate) {
    double acc = 0;
    for (int dim : dims_union(a, b)) {
        std::vector<Point> fa, fb;
        std::vector<double> ea, eb;
        split_dim(a, dim, fa, ea);
        split_dim(b, dim, fb, eb);
        double d = std::max(bottleneck_dim(fa, fb),
                            essential_cost(ea, eb, 1, /*as_max=*/true));
        if (aggregate == DimAggregate::Max)
            acc = std::max(acc, d);
        else
            acc += d;
    }
    return acc;
}

double wasserstein(const PersistenceDiagram& a, const PersistenceDiagram& b,
                   int q, DimAggregate aggregate) {
    if (q < 1) throw std::invalid_argument("wasserstein: q must be >= 1");
    double acc = 0;
    bool inf = false;
    for (int dim : dims_union(a, b)) {
        std::vector<Point> fa, fb;
        std::vector<double> ea, eb;
        split_dim(a, dim, fa, ea);
        split_dim(b, dim, fb, eb);
        double d = wasserstein_dim(fa, fb, q) +
                   essential_cost(ea, eb, q, /*as_max=*/false);
        if (std::isinf(d)) inf = true;
        if (aggregate == DimAggregate::Sum)
            acc += d;
        else
            acc = std::max(acc, d);
    }
    if (inf) return kInf;
    return std::pow(acc, 1.0 / q);
}

PersistenceDiagram diagram_of_complex(const SimplicialComplex& complex,
                                      const DistanceOptions& opts) {
    MonomialIdeal ideal = sr_ideal(complex);
    ComplexFiltration cf;
    if (ideal.is_zero()) {
        cf.steps.push_back(complex);  // full simplex: constant filtration
    } else {
        IdealFiltration f = opts.mode == FiltrationKind::Usual
                                ? lcm_filtration(ideal, opts.gen_guard)
                                : stepwise_filtration(ideal);
        cf = complexes_of(f);
    }
    const int maxdim = opts.maxdim < 0 ? complex.nvertices() : opts.maxdim;
    return persistence_diagram(cf, maxdim);
}

std::vector<std::vector<double>> distance_matrix(
    const std::vector<SimplicialComplex>& complexes,
    const DistanceOptions& opts) {
    std::vector<PersistenceDiagram> diagrams;
    diagrams.reserve(complexes.size());
    for (const auto& c : complexes) diagrams.push_back(diagram_of_complex(c, opts));

    const int n = static_cast<int>(complexes.size());
    std::vector<std::vector<double>> mat(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double d = opts.metric == DistanceMetric::Bottleneck
                           ? bottleneck(diagrams[i], diagrams[j], opts.aggregate)
                           : wasserstein(diagrams[i], diagrams[j],
                                         opts.wasserstein_q, opts.aggregate);
            mat[i][j] = mat[j][i] = d;
        }
    return mat;
}

}  // namespace lcmfilt
