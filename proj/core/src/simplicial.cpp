#include "lcmfilt/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "lcmfilt/homology.hpp"

namespace lcmfilt {

std::vector<std::uint64_t> maximalize(std::vector<std::uint64_t> masks) {
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < masks.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < masks.size(); ++j) {
            if (i != j && (masks[i] & masks[j]) == masks[i] &&
                masks[i] != masks[j]) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(masks[i]);
    }
    return out;
}

SimplicialComplex::SimplicialComplex(int nvertices,
                                     std::vector<std::uint64_t> facets)
    : nvertices_(nvertices) {
    if (nvertices < 1 || nvertices > 63)
        throw std::invalid_argument("nvertices must be in 1..63");
    const std::uint64_t ground = (std::uint64_t{1} << nvertices) - 1;
    for (auto f : facets)
        if (f & ~ground)
            throw std::invalid_argument("facet outside the ground set");
    facets_ = maximalize(std::move(facets));
}

SimplicialComplex SimplicialComplex::full_simplex(int nvertices) {
    return SimplicialComplex(nvertices,
                             {(std::uint64_t{1} << nvertices) - 1});
}

bool SimplicialComplex::contains_face(std::uint64_t face) const {
    for (auto f : facets_)
        if ((face & f) == face) return true;
    return false;
}

std::vector<std::uint64_t> SimplicialComplex::all_faces() const {
    std::unordered_set<std::uint64_t> seen;
    for (auto f : facets_) {
        std::uint64_t sub = f;
        while (true) {
            seen.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
    }
    std::vector<std::uint64_t> faces(seen.begin(), seen.end());
    std::sort(faces.begin(), faces.end());
    return faces;
}

int SimplicialComplex::dimension() const {
    if (is_void()) throw std::invalid_argument("dimension of the void complex");
    int d = -1;
    for (auto f : facets_) d = std::max(d, std::popcount(f) - 1);
    return d;
}

MonomialIdeal sr_ideal(const SimplicialComplex& complex) {
    if (complex.is_void())
        throw std::invalid_argument("sr_ideal: void complex");
    const int n = complex.nvertices();
    std::vector<Monomial> gens;

    // Grow faces by cardinality; a minimal non-face has all its proper
    // maximal subsets facial, so every candidate is face+vertex.
    std::unordered_set<std::uint64_t> faces_d = {0};
    for (int d = 0; d < n && !faces_d.empty(); ++d) {
        std::unordered_set<std::uint64_t> candidates;
        for (auto f : faces_d)
            for (int v = 0; v < n; ++v)
                if (!(f >> v & 1)) candidates.insert(f | std::uint64_t{1} << v);
        std::unordered_set<std::uint64_t> faces_next;
        for (auto c : candidates) {
            bool all_subsets_facial = true;
            std::uint64_t rest = c;
            while (rest && all_subsets_facial) {
                std::uint64_t low = rest & (~rest + 1);
                if (!faces_d.count(c & ~low)) all_subsets_facial = false;
                rest &= rest - 1;
            }
            if (!all_subsets_facial) continue;
            if (complex.contains_face(c))
                faces_next.insert(c);
            else
                gens.push_back(Monomial::from_mask(n, c));
        }
        faces_d = std::move(faces_next);
    }
    return MonomialIdeal(n, std::move(gens));
}

SimplicialComplex sr_complex(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree())
        throw std::invalid_argument("sr_complex: ideal not squarefree");
    const int n = ideal.nvars();
    if (n > 63) throw std::invalid_argument("sr_complex: nvars > 63");

    std::vector<std::uint64_t> facets = {(std::uint64_t{1} << n) - 1};
    for (const auto& g : ideal.generators()) {
        const std::uint64_t s = g.support_mask();
        std::vector<std::uint64_t> next;
        for (auto f : facets) {
            if ((s & f) != s) {
                next.push_back(f);
                continue;
            }
            std::uint64_t rest = s;
            while (rest) {
                std::uint64_t low = rest & (~rest + 1);
                next.push_back(f & ~low);
                rest &= rest - 1;
            }
        }
        facets = maximalize(std::move(next));
    }
    return SimplicialComplex(n, std::move(facets));
}

SimplicialComplex stepwise_complex_step(const SimplicialComplex& complex) {
    if (complex.is_void()) return complex;
    const int n = complex.nvertices();
    // A subset stays a non-face exactly when it contains two distinct minimal
    // non-faces of the current complex.
    const MonomialIdeal ideal = sr_ideal(complex);
    const auto& gens = ideal.generators();
    std::vector<Monomial> next;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            next.push_back(lcm(gens[i], gens[j]));
    return sr_complex(MonomialIdeal(n, std::move(next)));
}

std::vector<std::int64_t> f_vector(const SimplicialComplex& complex) {
    if (complex.is_void())
        throw std::invalid_argument("f_vector: void complex");
    std::vector<std::int64_t> f(complex.dimension() + 2, 0);
    for (auto face : complex.all_faces()) ++f[std::popcount(face)];
    return f;
}

namespace {

// faces grouped by cardinality: index c holds faces with c vertices
std::vector<std::vector<std::uint64_t>> faces_by_card(
    const SimplicialComplex& complex) {
    std::vector<std::vector<std::uint64_t>> by_card;
    for (auto face : complex.all_faces()) {
        const int c = std::popcount(face);
        if (static_cast<int>(by_card.size()) <= c) by_card.resize(c + 1);
        by_card[c].push_back(face);
    }
    return by_card;
}

// rank of the boundary map from c-vertex faces to (c-1)-vertex faces
std::int64_t boundary_rank(const std::vector<std::uint64_t>& rows,
                           const std::vector<std::uint64_t>& cols,
                           FieldSpec field) {
    if (rows.empty() || cols.empty()) return 0;
    std::unordered_map<std::uint64_t, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;

    if (field.prime == 0) {
        std::vector<std::vector<Rational>> m(
            rows.size(), std::vector<Rational>(cols.size(), Rational(0)));
        for (std::size_t j = 0; j < cols.size(); ++j) {
            std::uint64_t rest = cols[j];
            int pos = 0;
            while (rest) {
                std::uint64_t low = rest & (~rest + 1);
                m[row_index.at(cols[j] & ~low)][j] = Rational(pos % 2 ? -1 : 1);
                rest &= rest - 1;
                ++pos;
            }
        }
        return matrix_rank(std::move(m));
    }
    std::vector<std::vector<std::int64_t>> m(
        rows.size(), std::vector<std::int64_t>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        std::uint64_t rest = cols[j];
        int pos = 0;
        while (rest) {
            std::uint64_t low = rest & (~rest + 1);
            m[row_index.at(cols[j] & ~low)][j] = pos % 2 ? -1 : 1;
            rest &= rest - 1;
            ++pos;
        }
    }
    return matrix_rank_mod_p(std::move(m), field.prime);
}

}  // namespace

std::vector<std::int64_t> reduced_betti_numbers(const SimplicialComplex& complex,
                                                FieldSpec field) {
    if (complex.is_void()) return {};
    auto by_card = faces_by_card(complex);
    const int top = static_cast<int>(by_card.size()) - 1;  // max cardinality
    // ranks[c] = rank of boundary from c-vertex faces to (c-1)-vertex faces
    std::vector<std::int64_t> ranks(top + 2, 0);
    for (int c = 1; c <= top; ++c)
        ranks[c] = boundary_rank(by_card[c - 1], by_card[c], field);

    std::vector<std::int64_t> betti(top + 1, 0);  // index c <-> dimension c-1
    for (int c = 0; c <= top; ++c) {
        std::int64_t faces_c = static_cast<std::int64_t>(by_card[c].size());
        betti[c] = faces_c - ranks[c] - (c + 1 <= top ? ranks[c + 1] : 0);
    }
    return betti;
}

std::int64_t reduced_betti(const SimplicialComplex& complex, int dim,
                           FieldSpec field) {
    auto betti = reduced_betti_numbers(complex, field);
    const int idx = dim + 1;
    if (idx < 0 || idx >= static_cast<int>(betti.size())) return 0;
    return betti[idx];
}

std::vector<std::int64_t> betti_numbers(const SimplicialComplex& complex,
                                        FieldSpec field) {
    if (complex.is_void())
        throw std::invalid_argument("betti_numbers: void complex");
    auto reduced = reduced_betti_numbers(complex, field);
    if (reduced.size() <= 1) return {};  // irrelevant complex: no points
    std::vector<std::int64_t> betti(reduced.begin() + 1, reduced.end());
    betti[0] += 1;  // undo the augmentation in dimension 0
    return betti;
}

SimplicialComplex upper_koszul(const MonomialIdeal& ideal, const Monomial& mu) {
    const int n = ideal.nvars();
    if (mu.nvars() != n)
        throw std::invalid_argument("upper_koszul: dimension mismatch");
    const std::vector<int> supp = mu.support();
    std::vector<std::uint64_t> faces;
    const std::uint64_t limit = std::uint64_t{1} << supp.size();
    for (std::uint64_t pick = 0; pick < limit; ++pick) {
        std::vector<std::int32_t> e(mu.exponents());
        std::uint64_t tau = 0;
        for (std::size_t i = 0; i < supp.size(); ++i) {
            if (pick >> i & 1) {
                e[supp[i]] -= 1;
                tau |= std::uint64_t{1} << supp[i];
            }
        }
        if (ideal.contains(Monomial(std::move(e)))) faces.push_back(tau);
    }
    if (faces.empty()) return SimplicialComplex::void_complex(n);
    return SimplicialComplex(n, maximalize(std::move(faces)));
}

SimplicialComplex lower_koszul(const MonomialIdeal& ideal, const Monomial& mu) {
    const int n = ideal.nvars();
    if (mu.nvars() != n)
        throw std::invalid_argument("lower_koszul: dimension mismatch");
    const std::vector<int> supp = mu.support();
    std::vector<std::int32_t> mu_prime(mu.exponents());
    for (int v : supp) mu_prime[v] -= 1;

    std::vector<std::uint64_t> faces;
    const std::uint64_t limit = std::uint64_t{1} << supp.size();
    for (std::uint64_t pick = 0; pick < limit; ++pick) {
        std::vector<std::int32_t> e(mu_prime);
        std::uint64_t tau = 0;
        for (std::size_t i = 0; i < supp.size(); ++i) {
            if (pick >> i & 1) {
                e[supp[i]] += 1;
                tau |= std::uint64_t{1} << supp[i];
            }
        }
        if (!ideal.contains(Monomial(std::move(e)))) faces.push_back(tau);
    }
    if (faces.empty()) return SimplicialComplex::void_complex(n);
    return SimplicialComplex(n, maximalize(std::move(faces)));
}

std::int64_t betti_at(const MonomialIdeal& ideal, const Monomial& mu, int i,
                      FieldSpec field) {
    return reduced_betti(upper_koszul(ideal, mu), i - 1, field);
}

BettiTable sensitive_corners(const MonomialIdeal& ideal, FieldSpec field,
                             int atom_guard) {
    BettiTable table;
    MonomialIdeal work = ideal;
    if (!ideal.is_squarefree()) {
        Polarization pol = polarize(ideal);
        work = pol.ideal;
        table.polarized = true;
        table.var_origin = pol.var_origin;
    }
    LcmLattice lattice = build_lcm_lattice(work, atom_guard);
    for (const auto& mu : lattice.elements()) {
        if (mu.is_one()) continue;
        const int s = mu.support_size();
        for (int i = 0; i <= s; ++i) {
            std::int64_t b = betti_at(work, mu, i, field);
            if (b > 0) table.entries.push_back({i, mu, b});
        }
    }
    return table;
}

}  // namespace lcmfilt
