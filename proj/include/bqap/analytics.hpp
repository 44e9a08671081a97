#ifndef BQAP_ANALYTICS_HPP
#define BQAP_ANALYTICS_HPP

#include "bqap/model.hpp"

namespace bqap {

/// Closed-form average, canonical (constant-assignment) solutions, the cyclic
/// shift equivalence relation, and domination-ratio arithmetic. All results
/// are exact; nothing here touches floating point.

/// Exact mean objective over the whole feasible set:
/// sum(q)/(mn) + sum(c)/S + sum(d)/T.
Rational average_value(const Instance& inst);

/// Constant solution sigma = a, tau = b. Its value is
/// sum_{i,j} q(i,a,b,j) + sum_i c(i,a) + sum_j d(b,j).
Solution canonical_solution(const Instance& inst, int a, int b);

struct CanonicalSweep {
    Solution best;
    Solution worst;
    std::int64_t best_value;
    std::int64_t worst_value;
    int best_a, best_b;
    int worst_a, worst_b;
};

/// Best and worst over all S*T canonical pairs, in O(m^2 n^2) cost accesses.
/// The canonical values always bracket the average; ties break to the
/// lexicographically smallest (a, b).
CanonicalSweep canonical_sweep(const Instance& inst);

/// Cyclic shift: sigma entries advance by a (mod S), tau entries by b (mod T).
/// Shifts with a in {0..S-1}, b in {0..T-1}.
Solution shift_solution(const Instance& inst, const Solution& sol, int a, int b);

/// One orbit of the shift relation: exactly m*n distinct solutions whose
/// values sum to m*n times the average.
struct EquivalenceClass {
    std::vector<Solution> members;  // ordered by (a, b)
    Solution base;                  // the shift-(0,0) member
};

EquivalenceClass equivalence_class(const Instance& inst, const Solution& sol);

struct DominationFigures {
    BigInt dominated_count;
    BigInt space_size;
    Rational ratio;  // dominated_count / space_size, lowest terms
};

/// Requires 1 <= dominated_count <= space_size.
DominationFigures domination_ratio(const BigInt& dominated_count, const BigInt& space_size);

}  // namespace bqap

#endif  // BQAP_ANALYTICS_HPP
