#include "lcmfilt/filtration.hpp"

#include <limits>
#include <stdexcept>

namespace lcmfilt {

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t acc = 1;
    for (int i = 1; i <= k; ++i) {
        if (acc > std::numeric_limits<std::int64_t>::max() / (n - k + i))
            throw std::overflow_error("binomial overflow");
        acc = acc * (n - k + i) / i;
    }
    return acc;
}

MonomialIdeal kfold_lcm_ideal(const MonomialIdeal& ideal, int k,
                              std::int64_t subset_guard) {
    if (ideal.is_zero())
        throw std::invalid_argument("kfold_lcm_ideal: zero ideal");
    const int r = ideal.ngens();
    if (k < 1 || k > r)
        throw std::invalid_argument("kfold_lcm_ideal: k out of range");
    if (binomial(r, k) > subset_guard)
        throw GuardExceeded("kfold_lcm_ideal: C(r,k) exceeds guard");

    const auto& gens = ideal.generators();
    std::vector<Monomial> out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Monomial m = gens[idx[0]];
        for (int i = 1; i < k; ++i) m = lcm(m, gens[idx[i]]);
        out.push_back(std::move(m));
        int i = k - 1;
        while (i >= 0 && idx[i] == r - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return MonomialIdeal(ideal.nvars(), std::move(out));
}

IdealFiltration lcm_filtration(const MonomialIdeal& ideal, int gen_guard) {
    if (ideal.is_zero())
        throw std::invalid_argument("lcm_filtration: zero ideal");
    const int r = ideal.ngens();
    if (r > gen_guard)
        throw GuardExceeded("lcm_filtration: " + std::to_string(r) +
                            " generators exceeds guard " + std::to_string(gen_guard));
    IdealFiltration f{FiltrationKind::Usual, {}};
    f.steps.reserve(r);
    for (int k = 1; k <= r; ++k)
        f.steps.push_back(kfold_lcm_ideal(ideal, k));
    return f;
}

IdealFiltration stepwise_filtration(const MonomialIdeal& ideal) {
    if (ideal.is_zero())
        throw std::invalid_argument("stepwise_filtration: zero ideal");
    IdealFiltration f{FiltrationKind::Stepwise, {ideal}};
    while (f.steps.back().ngens() > 1) {
        const auto& gens = f.steps.back().generators();
        std::vector<Monomial> next;
        next.reserve(gens.size() * (gens.size() - 1) / 2);
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = i + 1; j < gens.size(); ++j)
                next.push_back(lcm(gens[i], gens[j]));
        f.steps.emplace_back(ideal.nvars(), std::move(next));
    }
    return f;
}

FiltrationComparison compare_filtrations(const MonomialIdeal& ideal,
                                         int gen_guard) {
    IdealFiltration usual = lcm_filtration(ideal, gen_guard);
    IdealFiltration stepwise = stepwise_filtration(ideal);

    FiltrationComparison cmp;
    const int r = ideal.ngens();
    for (int k = 1; k <= usual.nsteps(); ++k) {
        cmp.usual_gen_counts.push_back(usual.step(k).ngens());
        cmp.usual_lcm_evals += binomial(r, k);
    }
    for (int j = 1; j <= stepwise.nsteps(); ++j) {
        cmp.stepwise_gen_counts.push_back(stepwise.step(j).ngens());
        if (j > 1) {
            int g = stepwise.step(j - 1).ngens();
            cmp.stepwise_lcm_evals += binomial(g, 2);
        }
    }

    std::vector<bool> usual_matched(usual.nsteps() + 1, false);
    for (int j = 1; j <= stepwise.nsteps(); ++j)
        for (int k = 1; k <= usual.nsteps(); ++k)
            if (stepwise.step(j) == usual.step(k)) {
                cmp.equal_steps.emplace_back(j, k);
                usual_matched[k] = true;
            }
    for (int k = 1; k <= usual.nsteps(); ++k)
        if (!usual_matched[k]) cmp.unmatched_usual_steps.push_back(k);
    return cmp;
}

}  // namespace lcmfilt
