#include "bqap/analytics.hpp"

#include <algorithm>

namespace bqap {

Rational average_value(const Instance& inst) {
    BigInt q_sum = 0, c_sum = 0, d_sum = 0;
    for (std::int64_t v : inst.q_data()) q_sum += v;
    for (std::int64_t v : inst.c_data()) c_sum += v;
    for (std::int64_t v : inst.d_data()) d_sum += v;
    return Rational(q_sum, BigInt(inst.m()) * inst.n()) +
           Rational(c_sum, inst.sigma_range()) +
           Rational(d_sum, inst.tau_range());
}

Solution canonical_solution(const Instance& inst, int a, int b) {
    if (a < 1 || a > inst.sigma_range())
        throw ValidationError("canonical index a out of range");
    if (b < 1 || b > inst.tau_range())
        throw ValidationError("canonical index b out of range");
    Solution sol;
    sol.sigma.assign(inst.m(), a);
    sol.tau.assign(inst.n(), b);
    return sol;
}

namespace {

std::int64_t canonical_value(const Instance& inst, int a, int b) {
    const int m = inst.m(), n = inst.n();
    std::int64_t value = 0;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) value += inst.q(i, a, b, j);
    for (int i = 1; i <= m; ++i) value += inst.c(i, a);
    for (int j = 1; j <= n; ++j) value += inst.d(b, j);
    return value;
}

}  // namespace

CanonicalSweep canonical_sweep(const Instance& inst) {
    const int S = inst.sigma_range(), T = inst.tau_range();
    std::int64_t best = 0, worst = 0;
    int best_a = 1, best_b = 1, worst_a = 1, worst_b = 1;
    bool first = true;
    for (int a = 1; a <= S; ++a)
        for (int b = 1; b <= T; ++b) {
            const std::int64_t v = canonical_value(inst, a, b);
            if (first || v < best) { best = v; best_a = a; best_b = b; }
            if (first || v > worst) { worst = v; worst_a = a; worst_b = b; }
            first = false;
        }
    return CanonicalSweep{canonical_solution(inst, best_a, best_b),
                          canonical_solution(inst, worst_a, worst_b),
                          best, worst, best_a, best_b, worst_a, worst_b};
}

Solution shift_solution(const Instance& inst, const Solution& sol, int a, int b) {
    check_solution(inst, sol);
    const int S = inst.sigma_range(), T = inst.tau_range();
    if (a < 0 || a >= S) throw ValidationError("shift a out of range [0," + std::to_string(S - 1) + "]");
    if (b < 0 || b >= T) throw ValidationError("shift b out of range [0," + std::to_string(T - 1) + "]");
    Solution shifted = sol;
    for (int& v : shifted.sigma) v = (v - 1 + a) % S + 1;
    for (int& v : shifted.tau) v = (v - 1 + b) % T + 1;
    return shifted;
}

EquivalenceClass equivalence_class(const Instance& inst, const Solution& sol) {
    const int S = inst.sigma_range(), T = inst.tau_range();
    EquivalenceClass cls;
    cls.base = sol;
    cls.members.reserve(std::size_t(S) * T);
    for (int a = 0; a < S; ++a)
        for (int b = 0; b < T; ++b)
            cls.members.push_back(shift_solution(inst, sol, a, b));
    // Shifts act freely, so the orbit always has exactly S*T = m*n members.
    std::vector<Solution> sorted = cls.members;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ValidationError("equivalence class has duplicate members");
    return cls;
}

DominationFigures domination_ratio(const BigInt& dominated_count, const BigInt& space_size) {
    if (dominated_count < 1 || dominated_count > space_size)
        throw ValidationError("dominated count " + dominated_count.str() +
                              " outside [1, " + space_size.str() + "]");
    return DominationFigures{dominated_count, space_size,
                             Rational(dominated_count, space_size)};
}

}  // namespace bqap
