#ifndef BQAP_HEURISTICS_HPP
#define BQAP_HEURISTICS_HPP

#include <optional>

#include "bqap/model.hpp"
#include "bqap/oracle.hpp"

namespace bqap {

/// Polynomial-time procedures: conditional optimization of one side,
/// relaxation rounding, alternating descent, the three local searches and the
/// guaranteed-domination procedure.
///
/// Tie-breaking is deterministic everywhere: smallest index wins, the x side
/// before the y side. Only strictly improving moves are ever accepted.

/// Optimal tau for fixed sigma: tau[j] = argmin_k d(k,j) + sum_i q(i, sigma_i, k, j).
std::vector<int> optimize_y_given_x(const Instance& inst, const std::vector<int>& sigma);

/// Optimal sigma for fixed tau: sigma[i] = argmin_j c(i,j) + sum_l q(i, j, tau_l, l).
std::vector<int> optimize_x_given_y(const Instance& inst, const std::vector<int>& tau);

/// Rounds x against the fractional y (per row, argmin of the expected cost),
/// then sets the exact optimal tau. The result never exceeds the fractional
/// objective value.
Solution round_x_optimize_y(const Instance& inst, const FractionalSolution& fsol);

/// Symmetric: rounds y against the fractional x, then optimal sigma.
Solution round_y_optimize_x(const Instance& inst, const FractionalSolution& fsol);

/// Rounds the uniform relaxation point both ways and returns the better
/// result. Value is guaranteed <= the closed-form average. O(m^2 n^2).
Solution below_average_rounding(const Instance& inst);

enum class Side { X, Y };
enum class MoveKind { Single, Concurrent, Optimized };

/// One accepted move. assignments lists (1-based position, new value) pairs on
/// `side`; for an Optimized move the listed swap is applied and the other side
/// is then re-optimized (apply_move reproduces this deterministically).
struct Move {
    Side side;
    MoveKind kind;
    std::vector<std::pair<int, int>> assignments;
    std::int64_t delta;  // value change; negative = improvement
};

Solution apply_move(const Instance& inst, const Solution& sol, const Move& move);

struct SearchTrace {
    std::int64_t start_value = 0;
    std::int64_t end_value = 0;
    std::int64_t iterations = 0;
    std::vector<Move> moves;
    bool truncated = false;  // max_iters reached with improving moves left
};

/// Alternating descent: optimize tau for sigma, then sigma for tau, until a
/// mutual fixed point. Each recorded move strictly improves.
std::pair<Solution, SearchTrace> alternating(const Instance& inst, const Solution& start);

/// Most negative single swap, or nullopt when no swap strictly improves.
std::optional<Move> best_swap(const Instance& inst, const Solution& sol);

/// Better of the best concurrent x-move (per-row independent argmin) and the
/// best concurrent y-move. Equals the minimum over the full concurrent-swap
/// neighborhood by row/column independence.
std::optional<Move> best_concurrent_swap(const Instance& inst, const Solution& sol);

/// Best strictly-improving oswap: one swap on one side, then exact
/// re-optimization of the other. One full scan costs O(m^3 n^2 + m^2 n^3).
std::optional<Move> best_optimized_swap(const Instance& inst, const Solution& sol);

inline constexpr std::int64_t kDefaultMaxIters = 1'000'000;

/// Repeats the best move of the given kind until none improves (or max_iters).
std::pair<Solution, SearchTrace> local_search(const Instance& inst, const Solution& start,
                                              NeighborhoodKind kind,
                                              std::int64_t max_iters = kDefaultMaxIters);

struct DominationCertificate {
    Solution start;                 // below-average starting point s*
    std::int64_t start_value = 0;
    Rational average;
    std::string start_source;       // "canonical" or "rounding"
    std::optional<Move> move;       // accepted optimized swap, if any
    std::int64_t final_value = 0;
};

/// The guaranteed-domination procedure: take the better of the canonical sweep
/// and below-average rounding (value <= average), then one full optimized-swap
/// scan. The result is no worse than every member of the shift-class
/// representatives and of the optimized-swap sets Sx, Sy.
std::pair<Solution, DominationCertificate> dominate(const Instance& inst);

/// JSON renderings for the CLI --trace output.
std::string trace_to_json(const SearchTrace& trace);
std::string certificate_to_json(const DominationCertificate& cert, const Instance& inst);

}  // namespace bqap

#endif  // BQAP_HEURISTICS_HPP
