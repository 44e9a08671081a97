#ifndef BQAP_TESTS_SUPPORT_HPP
#define BQAP_TESTS_SUPPORT_HPP

// Test-only helpers: small fixtures and independent brute-force oracles.
// Everything here deliberately avoids the library's evaluation and
// enumeration paths so the two routes stay independent.

#include <cstdint>
#include <functional>
#include <vector>

#include "bqap/model.hpp"

namespace bqap::testing {

// BQAP1, m = n = 2, all costs zero except q(1,1,1,1) = 1.
inline Instance make_t1() {
    std::vector<std::int64_t> q(16, 0), c(4, 0), d(4, 0);
    q[0] = 1;
    return Instance::validate(Variant::BQAP1, 2, 2, std::move(q), std::move(c), std::move(d));
}

// Literal double-loop evaluation over the expanded 0-1 matrices.
inline std::int64_t matrix_eval(const Instance& inst, const Solution& sol) {
    const int m = inst.m(), n = inst.n();
    const int S = inst.sigma_range(), T = inst.tau_range();
    std::vector<std::vector<int>> x(m + 1, std::vector<int>(S + 1, 0));
    std::vector<std::vector<int>> y(T + 1, std::vector<int>(n + 1, 0));
    for (int i = 1; i <= m; ++i) x[i][sol.sigma[i - 1]] = 1;
    for (int j = 1; j <= n; ++j) y[sol.tau[j - 1]][j] = 1;
    std::int64_t value = 0;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= S; ++j)
            for (int k = 1; k <= T; ++k)
                for (int l = 1; l <= n; ++l)
                    value += inst.q(i, j, k, l) * x[i][j] * y[k][l];
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= S; ++j) value += inst.c(i, j) * x[i][j];
    for (int k = 1; k <= T; ++k)
        for (int l = 1; l <= n; ++l) value += inst.d(k, l) * y[k][l];
    return value;
}

// All assignment vectors of the given length over [1, range], lexicographic.
inline std::vector<std::vector<int>> all_vectors(int length, int range) {
    std::vector<std::vector<int>> result;
    std::vector<int> v(length, 1);
    for (;;) {
        result.push_back(v);
        int pos = length - 1;
        while (pos >= 0 && v[pos] == range) v[pos--] = 1;
        if (pos < 0) break;
        ++v[pos];
    }
    return result;
}

// Independent full enumeration via matrix_eval, lexicographic (sigma, tau).
inline void brute_for_each(const Instance& inst,
                           const std::function<void(const Solution&, std::int64_t)>& fn) {
    for (const auto& sigma : all_vectors(inst.m(), inst.sigma_range()))
        for (const auto& tau : all_vectors(inst.n(), inst.tau_range())) {
            Solution sol{sigma, tau};
            fn(sol, matrix_eval(inst, sol));
        }
}

// Exact minimum over all tau for a fixed sigma (brute force).
inline std::int64_t brute_best_value_given_sigma(const Instance& inst,
                                                 const std::vector<int>& sigma) {
    bool first = true;
    std::int64_t best = 0;
    for (const auto& tau : all_vectors(inst.n(), inst.tau_range())) {
        const std::int64_t v = matrix_eval(inst, Solution{sigma, tau});
        if (first || v < best) best = v;
        first = false;
    }
    return best;
}

inline std::int64_t brute_best_value_given_tau(const Instance& inst,
                                               const std::vector<int>& tau) {
    bool first = true;
    std::int64_t best = 0;
    for (const auto& sigma : all_vectors(inst.m(), inst.sigma_range())) {
        const std::int64_t v = matrix_eval(inst, Solution{sigma, tau});
        if (first || v < best) best = v;
        first = false;
    }
    return best;
}

// Subset-sum decision by direct enumeration (for the PARTITION gadget).
inline bool subset_sum_exists(const std::vector<std::int64_t>& a, std::int64_t target) {
    const std::size_t count = a.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << count); ++mask) {
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < count; ++i)
            if (mask & (std::uint64_t(1) << i)) sum += a[i];
        if (sum == target) return true;
    }
    return false;
}

}  // namespace bqap::testing

#endif  // BQAP_TESTS_SUPPORT_HPP
