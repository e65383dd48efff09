#ifndef LCMFILT_RELIABILITY_HPP
#define LCMFILT_RELIABILITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "lcmfilt/filtration.hpp"
#include "lcmfilt/lattice.hpp"

namespace lcmfilt {

enum class SystemKind { KOfN, ConsecutiveLinear, ConsecutiveCircular };

std::string to_string(SystemKind kind);

/// A coherent system on n i.i.d. components that fails at the k-th failure
/// (kofn) or when k adjacent components fail (linear or circular layout).
struct SystemSpec {
    SystemKind kind;
    int n;
    int k;
};

/// Minimal failure events as a squarefree ideal: all degree-k monomials for
/// kofn, the n-k+1 windows for consecutive-linear, the n cyclic windows
/// (minimalized) for consecutive-circular.
MonomialIdeal failure_ideal(const SystemSpec& spec);

/// Signature entries s_1..s_n as exact rationals.
struct SignatureVector {
    std::vector<Rational> values;

    Rational sum() const;
    bool operator==(const SignatureVector& rhs) const {
        return values == rhs.values;
    }
};

/// s_i = f_i/C(n,i) - f_{i-1}/C(n,i-1) where f_d counts squarefree degree-d
/// multiples: the probability that the system fails exactly at the i-th
/// component failure under a uniformly random failure order.
SignatureVector signature(const MonomialIdeal& ideal, int n);

/// Signature of the k-fold lcm-ideal: the distribution of the step at which
/// the k-th distinct minimal failure event completes. k larger than the
/// generator count yields the all-zero vector.
SignatureVector kfold_signature(const MonomialIdeal& ideal, int n, int k);

struct CurvePoint {
    SystemKind kind;
    int k;
    int generators;
    std::optional<std::int64_t> lattice_size;  // null when over the atom guard
    std::optional<Rational> ratio;             // lattice_size / 2^r
};

/// Lattice size vs k for k = 2..n-1 over the requested system kinds; points
/// whose generator count exceeds the guard keep r but carry null size/ratio.
std::vector<CurvePoint> lattice_ratio_curve(int n,
                                            const std::vector<SystemKind>& kinds,
                                            int atom_guard = kDefaultAtomGuard);

}  // namespace lcmfilt

#endif
