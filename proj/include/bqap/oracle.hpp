#ifndef BQAP_ORACLE_HPP
#define BQAP_ORACLE_HPP

#include <functional>
#include <set>

#include "bqap/model.hpp"

namespace bqap {

/// Exhaustive enumeration of the feasible set. This is the exactness oracle
/// the rest of the project is checked against; it never samples or prunes.
/// Everything refuses to run when the space exceeds the limit (default 10^7
/// solutions) and throws LimitError with the required size.

inline constexpr std::int64_t kDefaultEnumerationLimit = 10'000'000;

struct EnumerationReport {
    BigInt count;
    std::int64_t min_value;
    std::int64_t max_value;
    BigInt sum;
    Rational mean;                // sum / count
    std::int64_t lower_median;    // ceil(count/2)-th smallest
    std::int64_t upper_median;    // (floor(count/2)+1)-th smallest
    Solution optimum_solution;    // first minimum in lexicographic (sigma, tau) order
};

/// Exact statistics over every feasible solution. Enumeration order is
/// lexicographic in (sigma, tau); ties for the optimum break to the first
/// encountered. With threads > 1 the space is partitioned on the first sigma
/// coordinate; the merge is deterministic.
EnumerationReport enumerate_report(const Instance& inst,
                                   BigInt limit = kDefaultEnumerationLimit,
                                   int threads = 1);

/// Number of feasible solutions with value >= evaluate(inst, sol).
BigInt domination_count(const Instance& inst, const Solution& sol,
                        BigInt limit = kDefaultEnumerationLimit);

/// Number of feasible solutions with value >= the closed-form average.
/// Always at least S^(m-1) T^(n-1) (the shift-class bound).
BigInt count_at_least_average(const Instance& inst,
                              BigInt limit = kDefaultEnumerationLimit);

enum class NeighborhoodKind { Swap, ConcurrentSwap, OptimizedSwap };

/// The exact distinct-solution set of the named neighborhood of sol,
/// including the identity move.
///
///   Swap: one single-row swap of sigma or one single-column swap of tau;
///         cardinality 1 + m(S-1) + n(T-1).
///   ConcurrentSwap: any simultaneous reassignment of one full side;
///         cardinality S^m + T^n - 1.
///   OptimizedSwap: the union Sx and Sy, where Sx pairs every one-swap (or
///         unchanged) sigma with every tau, and Sy symmetrically;
///         |Sx| = (m(S-1)+1) T^n, |Sy| = (n(T-1)+1) S^m.
///
/// OptimizedSwap throws LimitError when |Sx| + |Sy| exceeds the limit.
std::set<Solution> neighborhood_enumerate(const Instance& inst, const Solution& sol,
                                          NeighborhoodKind kind,
                                          BigInt limit = kDefaultEnumerationLimit);

/// Invokes fn for every feasible solution in lexicographic (sigma, tau) order.
void for_each_solution(const Instance& inst,
                       const std::function<void(const Solution&)>& fn);

/// JSON rendering of a report (big integers as decimal strings, mean as "p/q").
std::string report_to_json(const EnumerationReport& report, const Instance& inst);

}  // namespace bqap

#endif  // BQAP_ORACLE_HPP
