#include "lcmfilt/ideal.hpp"

#include <algorithm>
#include <unordered_set>

namespace lcmfilt {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), graded_lex_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // After the graded-lex sort a divisor always precedes its multiples.
    std::vector<Monomial> out;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& kept : out) {
            if (divides(kept, g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) out.push_back(g);
    }
    return out;
}

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> gens)
    : nvars_(nvars) {
    if (nvars < 1) throw std::invalid_argument("nvars must be positive");
    for (const auto& g : gens) {
        if (g.nvars() != nvars)
            throw std::invalid_argument("generator has wrong ambient dimension");
        if (g.is_one())
            throw std::invalid_argument(
                "the constant monomial cannot generate a proper ideal");
    }
    gens_ = minimalize(std::move(gens));
}

bool MonomialIdeal::is_squarefree() const {
    for (const auto& g : gens_)
        if (!g.is_squarefree()) return false;
    return true;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const auto& g : gens_)
        if (divides(g, m)) return true;
    return false;
}

Monomial MonomialIdeal::top_lcm() const {
    if (is_zero()) throw std::invalid_argument("top_lcm of the zero ideal");
    Monomial t = gens_.front();
    for (std::size_t i = 1; i < gens_.size(); ++i) t = lcm(t, gens_[i]);
    return t;
}

Polarization polarize(const MonomialIdeal& ideal) {
    if (ideal.is_zero())
        throw std::invalid_argument("polarize: zero ideal");
    const int n = ideal.nvars();
    std::vector<std::int32_t> levels(n, 1);
    for (const auto& g : ideal.generators())
        for (int i = 0; i < n; ++i)
            levels[i] = std::max(levels[i], g.exponent(i));
    // first_new[i] is the block of new variables carrying x_i's levels
    std::vector<int> first_new(n);
    int nn = 0;
    for (int i = 0; i < n; ++i) {
        first_new[i] = nn;
        nn += levels[i];
    }
    std::vector<int> origin(nn);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < levels[i]; ++j) origin[first_new[i] + j] = i;

    std::vector<Monomial> gens;
    gens.reserve(ideal.ngens());
    for (const auto& g : ideal.generators()) {
        std::vector<std::int32_t> e(nn, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < g.exponent(i); ++j) e[first_new[i] + j] = 1;
        gens.emplace_back(std::move(e));
    }
    return Polarization{MonomialIdeal(nn, std::move(gens)), std::move(origin), n};
}

MonomialIdeal depolarize(const Polarization& pol) {
    std::vector<Monomial> gens;
    for (const auto& g : pol.ideal.generators()) {
        std::vector<std::int32_t> e(pol.original_nvars, 0);
        for (int i = 0; i < g.nvars(); ++i) e[pol.var_origin[i]] += g.exponent(i);
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(pol.original_nvars, std::move(gens));
}

std::int64_t count_squarefree_multiples(const MonomialIdeal& ideal, int d) {
    if (!ideal.is_squarefree())
        throw std::invalid_argument("count_squarefree_multiples: ideal not squarefree");
    const int n = ideal.nvars();
    if (d < 0 || d > n)
        throw std::invalid_argument("count_squarefree_multiples: degree out of range");
    if (n > 63)
        throw std::invalid_argument("count_squarefree_multiples: nvars > 63");
    if (ideal.is_zero()) return 0;

    std::vector<std::uint64_t> gens;
    for (const auto& g : ideal.generators()) gens.push_back(g.support_mask());

    // Walk all d-subsets of the variables in lexicographic mask order.
    std::int64_t count = 0;
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    while (true) {
        std::uint64_t mask = 0;
        for (int i : idx) mask |= std::uint64_t{1} << i;
        for (std::uint64_t g : gens) {
            if ((g & mask) == g) {
                ++count;
                break;
            }
        }
        int i = d - 1;
        while (i >= 0 && idx[i] == n - d + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    return count;
}

}  // namespace lcmfilt
