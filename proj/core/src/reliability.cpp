#include "lcmfilt/reliability.hpp"

#include <numeric>
#include <stdexcept>

#include "lcmfilt/lattice.hpp"

namespace lcmfilt {

std::string to_string(SystemKind kind) {
    switch (kind) {
        case SystemKind::KOfN: return "kofn";
        case SystemKind::ConsecutiveLinear: return "clin";
        case SystemKind::ConsecutiveCircular: return "ccirc";
    }
    return "?";
}

MonomialIdeal failure_ideal(const SystemSpec& spec) {
    const int n = spec.n, k = spec.k;
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument("failure_ideal: need 1 <= k <= n");

    std::vector<Monomial> gens;
    switch (spec.kind) {
        case SystemKind::KOfN: {
            std::vector<int> idx(k);
            std::iota(idx.begin(), idx.end(), 0);
            while (true) {
                gens.push_back(Monomial::from_support(n, idx));
                int i = k - 1;
                while (i >= 0 && idx[i] == n - k + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            }
            break;
        }
        case SystemKind::ConsecutiveLinear: {
            for (int s = 0; s + k <= n; ++s) {
                std::vector<int> window(k);
                std::iota(window.begin(), window.end(), s);
                gens.push_back(Monomial::from_support(n, window));
            }
            break;
        }
        case SystemKind::ConsecutiveCircular: {
            for (int s = 0; s < n; ++s) {
                std::vector<int> window(k);
                for (int t = 0; t < k; ++t) window[t] = (s + t) % n;
                gens.push_back(Monomial::from_support(n, window));
            }
            break;
        }
    }
    return MonomialIdeal(n, std::move(gens));
}

Rational SignatureVector::sum() const {
    Rational s(0);
    for (const auto& v : values) s += v;
    return s;
}

SignatureVector signature(const MonomialIdeal& ideal, int n) {
    if (ideal.nvars() != n)
        throw std::invalid_argument("signature: ambient dimension mismatch");
    if (!ideal.is_squarefree())
        throw std::invalid_argument("signature: ideal not squarefree");
    SignatureVector s;
    Rational prev(0);
    for (int i = 1; i <= n; ++i) {
        Rational cur(count_squarefree_multiples(ideal, i), binomial(n, i));
        s.values.push_back(cur - prev);
        prev = cur;
    }
    return s;
}

SignatureVector kfold_signature(const MonomialIdeal& ideal, int n, int k) {
    if (k < 1) throw std::invalid_argument("kfold_signature: k < 1");
    if (k > ideal.ngens())
        return SignatureVector{std::vector<Rational>(n, Rational(0))};
    if (k == 1) return signature(ideal, n);
    return signature(kfold_lcm_ideal(ideal, k), n);
}

std::vector<CurvePoint> lattice_ratio_curve(int n,
                                            const std::vector<SystemKind>& kinds,
                                            int atom_guard) {
    std::vector<CurvePoint> out;
    for (SystemKind kind : kinds) {
        for (int k = 2; k <= n - 1; ++k) {
            MonomialIdeal ideal = failure_ideal({kind, n, k});
            CurvePoint pt{kind, k, ideal.ngens(), std::nullopt, std::nullopt};
            if (ideal.ngens() <= atom_guard) {
                LcmLattice lat = build_lcm_lattice(ideal, atom_guard);
                pt.lattice_size = lat.size();
                pt.ratio = Rational(lat.size(),
                                    std::int64_t{1} << lat.atom_count());
            }
            out.push_back(std::move(pt));
        }
    }
    return out;
}

}  // namespace lcmfilt
