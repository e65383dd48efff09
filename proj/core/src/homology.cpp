#include "lcmfilt/homology.hpp"

#include <cstdlib>

namespace lcmfilt {

std::int64_t matrix_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::int64_t rank = 0;
    std::size_t pr = 0;
    for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
        std::size_t piv = pr;
        while (piv < rows && m[piv][pc] == Rational(0)) ++piv;
        if (piv == rows) continue;
        std::swap(m[pr], m[piv]);
        for (std::size_t i = pr + 1; i < rows; ++i) {
            if (m[i][pc] == Rational(0)) continue;
            Rational f = m[i][pc] / m[pr][pc];
            for (std::size_t j = pc; j < cols; ++j) m[i][j] -= f * m[pr][j];
        }
        ++pr;
        ++rank;
    }
    return rank;
}

std::int64_t matrix_rank_mod_p(std::vector<std::vector<std::int64_t>> m,
                               std::int64_t p) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    for (auto& row : m)
        for (auto& x : row) x = ((x % p) + p) % p;

    auto inv = [p](std::int64_t a) {
        // extended Euclid
        std::int64_t t = 0, nt = 1, r = p, nr = a % p;
        while (nr != 0) {
            std::int64_t q = r / nr;
            t -= q * nt;
            std::swap(t, nt);
            r -= q * nr;
            std::swap(r, nr);
        }
        return ((t % p) + p) % p;
    };

    std::int64_t rank = 0;
    std::size_t pr = 0;
    for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
        std::size_t piv = pr;
        while (piv < rows && m[piv][pc] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[pr], m[piv]);
        std::int64_t pinv = inv(m[pr][pc]);
        for (std::size_t i = pr + 1; i < rows; ++i) {
            if (m[i][pc] == 0) continue;
            std::int64_t f = m[i][pc] * pinv % p;
            for (std::size_t j = pc; j < cols; ++j)
                m[i][j] = ((m[i][j] - f * m[pr][j]) % p + p) % p;
        }
        ++pr;
        ++rank;
    }
    return rank;
}

}  // namespace lcmfilt
