#ifndef BQAP_GADGETS_HPP
#define BQAP_GADGETS_HPP

#include <map>
#include <optional>

#include "bqap/model.hpp"

namespace bqap {

/// Explicit instance constructions used as test fixtures: the domination-bound
/// tightness instance, the arbitrarily-bad local optimum, the PARTITION median
/// gadget, and the padding/embedding transform.

struct GadgetBundle {
    Instance instance;
    std::optional<Solution> distinguished_solution;
    std::map<std::string, BigInt> metadata;
};

/// All-zero costs except q(i',j',k',l') = 1. Exactly one member of every
/// shift class is at or above the average, so the domination bound
/// S^(m-1) T^(n-1) is met with equality. metadata: target_count.
GadgetBundle tightness_instance(Variant variant, int m, int n,
                                int qi, int qj, int qk, int ql);

/// All-zero costs except c(1,2) = d(2,1) = -eps and q(1,1,1,1) = -L.
/// The distinguished solution (sigma = 2, tau = 2 everywhere) has value
/// -2*eps, is a local optimum of the swap and concurrent-swap neighborhoods,
/// yet the optimum is -L. Requires m, n >= 2 and L > 2*eps > 0.
/// metadata: L, eps, bad_value, optimal_value.
GadgetBundle adversarial_instance(Variant variant, int m, int n,
                                  std::int64_t big_l, std::int64_t eps);

/// Square instance (m = n = |a|, |a| even) with zero Q and d, and
/// c(i,j) = a[i] for j <= n/2. Objective values are exactly the subset sums
/// of a (each with equal multiplicity), and the value multiset is symmetric
/// about sum(a)/2, so the medians encode the PARTITION decision.
/// metadata: target = sum(a)/2 when sum(a) is even.
GadgetBundle partition_gadget(const std::vector<std::int64_t>& a);

/// 1 + sum of absolute values of all costs: the smallest padding cost that
/// safely dominates any original objective value.
std::int64_t default_embedding_cost(const Instance& inst);

/// Pads inst to dimensions (a*b*m, a*b*n): q copied on the original block and
/// zero elsewhere; c and d copied on the original block, zero when both
/// indices fall outside it, and big_l when exactly one does. Optimal values
/// coincide and optimal solutions restrict to original optima.
/// Requires a > b >= 1 and big_l >= default_embedding_cost(inst).
/// metadata: a, b, L, orig_m, orig_n.
GadgetBundle embed_instance(const Instance& inst, int a, int b, std::int64_t big_l);

/// Restriction of an embedded solution to the original index ranges. The
/// embedded solution must avoid every big_l entry (original rows assigned
/// within the original column range, padding rows outside, and symmetrically
/// for tau); value is preserved exactly.
Solution extract_embedded_solution(const GadgetBundle& bundle, const Instance& original,
                                   const Solution& embedded_sol);

/// Sidecar metadata object (bundle metadata plus the distinguished solution).
std::string bundle_metadata_to_json(const GadgetBundle& bundle);

}  // namespace bqap

#endif  // BQAP_GADGETS_HPP
