#include "lcmfilt/monomial.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lcmfilt {

Monomial Monomial::from_support(int nvars, const std::vector<int>& support) {
    std::vector<std::int32_t> e(nvars, 0);
    for (int v : support) {
        if (v < 0 || v >= nvars)
            throw std::invalid_argument("support index out of range");
        e[v] = 1;
    }
    return Monomial(std::move(e));
}

Monomial Monomial::from_mask(int nvars, std::uint64_t mask) {
    std::vector<std::int32_t> e(nvars, 0);
    for (int v = 0; v < nvars; ++v)
        if (mask >> v & 1) e[v] = 1;
    return Monomial(std::move(e));
}

std::int64_t Monomial::degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), std::int64_t{0});
}

bool Monomial::is_one() const {
    for (auto e : exps_)
        if (e != 0) return false;
    return true;
}

bool Monomial::is_squarefree() const {
    for (auto e : exps_)
        if (e > 1) return false;
    return true;
}

std::vector<int> Monomial::support() const {
    std::vector<int> s;
    for (int i = 0; i < nvars(); ++i)
        if (exps_[i] > 0) s.push_back(i);
    return s;
}

int Monomial::support_size() const {
    int c = 0;
    for (auto e : exps_)
        if (e > 0) ++c;
    return c;
}

std::uint64_t Monomial::support_mask() const {
    if (nvars() > 64)
        throw std::invalid_argument("support_mask requires nvars <= 64");
    std::uint64_t m = 0;
    for (int i = 0; i < nvars(); ++i)
        if (exps_[i] > 0) m |= std::uint64_t{1} << i;
    return m;
}

std::string Monomial::str(const std::vector<std::string>* names) const {
    if (is_one()) return "1";
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < nvars(); ++i) {
        if (exps_[i] == 0) continue;
        if (!first) out << "*";
        first = false;
        if (names && i < static_cast<int>(names->size()))
            out << (*names)[i];
        else
            out << "x" << (i + 1);
        if (exps_[i] > 1) out << "^" << exps_[i];
    }
    return out.str();
}

bool graded_lex_less(const Monomial& a, const Monomial& b) {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exponents() < b.exponents();
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("lcm: ambient dimension mismatch");
    std::vector<std::int32_t> e(a.nvars());
    for (int i = 0; i < a.nvars(); ++i)
        e[i] = std::max(a.exponent(i), b.exponent(i));
    return Monomial(std::move(e));
}

bool divides(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("divides: ambient dimension mismatch");
    for (int i = 0; i < a.nvars(); ++i)
        if (a.exponent(i) > b.exponent(i)) return false;
    return true;
}

}  // namespace lcmfilt
