#ifndef LCMFILT_MONOMIAL_HPP
#define LCMFILT_MONOMIAL_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace lcmfilt {

/// A monomial in an ambient ring of n variables, stored as its exponent
/// vector. Exponents are 32-bit, so arbitrary (non-squarefree) ideals and
/// polarization levels fit comfortably.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::int32_t> exponents)
        : exps_(std::move(exponents)) {}

    /// The constant monomial 1 in an n-variable ring.
    static Monomial one(int nvars) {
        return Monomial(std::vector<std::int32_t>(nvars, 0));
    }
    /// Squarefree monomial with the given 0-based support.
    static Monomial from_support(int nvars, const std::vector<int>& support);
    /// Squarefree monomial from a bit mask over variables 0..nvars-1.
    static Monomial from_mask(int nvars, std::uint64_t mask);

    int nvars() const { return static_cast<int>(exps_.size()); }
    std::int32_t exponent(int i) const { return exps_[i]; }
    const std::vector<std::int32_t>& exponents() const { return exps_; }

    std::int64_t degree() const;
    bool is_one() const;
    bool is_squarefree() const;
    /// 0-based indices of variables with positive exponent.
    std::vector<int> support() const;
    int support_size() const;
    /// Support as a bit mask; requires nvars <= 64.
    std::uint64_t support_mask() const;

    bool operator==(const Monomial& rhs) const { return exps_ == rhs.exps_; }
    bool operator!=(const Monomial& rhs) const { return exps_ != rhs.exps_; }

    /// Render like "x1^2*x3" using 1-based variable names, or custom names.
    std::string str(const std::vector<std::string>* names = nullptr) const;

private:
    std::vector<std::int32_t> exps_;
};

/// Graded lexicographic order: degree first, then lexicographic on the
/// exponent vector. This is the canonical order used everywhere for
/// deterministic output.
bool graded_lex_less(const Monomial& a, const Monomial& b);

/// Entrywise maximum of exponents. Throws std::invalid_argument on ambient
/// dimension mismatch.
Monomial lcm(const Monomial& a, const Monomial& b);

/// True iff every exponent of a is <= the corresponding exponent of b.
bool divides(const Monomial& a, const Monomial& b);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (auto e : m.exponents())
            h = (h ^ static_cast<std::size_t>(e)) * 0x100000001b3ULL;
        return h;
    }
};

}  // namespace lcmfilt

#endif
