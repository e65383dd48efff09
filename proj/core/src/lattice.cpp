#include "lcmfilt/lattice.hpp"

#include <algorithm>
#include <unordered_set>

namespace lcmfilt {

LcmLattice build_lcm_lattice(const MonomialIdeal& ideal, int atom_guard) {
    if (ideal.is_zero())
        throw std::invalid_argument("build_lcm_lattice: zero ideal");
    const int r = ideal.ngens();
    if (r > atom_guard)
        throw GuardExceeded("build_lcm_lattice: " + std::to_string(r) +
                            " atoms exceeds guard " + std::to_string(atom_guard));

    std::unordered_set<Monomial, MonomialHash> closed;
    closed.insert(Monomial::one(ideal.nvars()));
    for (const auto& atom : ideal.generators()) {
        std::vector<Monomial> fresh;
        for (const auto& e : closed) {
            Monomial j = lcm(atom, e);
            if (!closed.count(j)) fresh.push_back(std::move(j));
        }
        closed.insert(fresh.begin(), fresh.end());
    }

    std::vector<Monomial> elements(closed.begin(), closed.end());
    std::sort(elements.begin(), elements.end(), graded_lex_less);
    return LcmLattice(r, std::move(elements));
}

Rational poset_density(const MonomialIdeal& ideal, int atom_guard) {
    LcmLattice lat = build_lcm_lattice(ideal, atom_guard);
    return Rational(lat.size(), std::int64_t{1} << lat.atom_count());
}

bool is_taylor(const MonomialIdeal& ideal, int atom_guard) {
    return poset_density(ideal, atom_guard) == Rational(1);
}

}  // namespace lcmfilt
