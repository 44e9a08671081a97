#include "bqap/heuristics.hpp"

#include <algorithm>

#include <json.hpp>

#include "bqap/analytics.hpp"

namespace bqap {

namespace {

std::int64_t conditional_y_cost(const Instance& inst, const std::vector<int>& sigma,
                                int k, int j) {
    std::int64_t cost = inst.d(k, j);
    for (int i = 1; i <= inst.m(); ++i) cost += inst.q(i, sigma[i - 1], k, j);
    return cost;
}

std::int64_t conditional_x_cost(const Instance& inst, const std::vector<int>& tau,
                                int i, int j) {
    std::int64_t cost = inst.c(i, j);
    for (int l = 1; l <= inst.n(); ++l) cost += inst.q(i, j, tau[l - 1], l);
    return cost;
}

std::vector<std::pair<int, int>> changed_entries(const std::vector<int>& before,
                                                 const std::vector<int>& after) {
    std::vector<std::pair<int, int>> changes;
    for (std::size_t pos = 0; pos < before.size(); ++pos)
        if (before[pos] != after[pos]) changes.emplace_back(int(pos) + 1, after[pos]);
    return changes;
}

}  // namespace

std::vector<int> optimize_y_given_x(const Instance& inst, const std::vector<int>& sigma) {
    const int n = inst.n(), T = inst.tau_range();
    std::vector<int> tau(n);
    for (int j = 1; j <= n; ++j) {
        int best_k = 1;
        std::int64_t best = conditional_y_cost(inst, sigma, 1, j);
        for (int k = 2; k <= T; ++k) {
            const std::int64_t cost = conditional_y_cost(inst, sigma, k, j);
            if (cost < best) { best = cost; best_k = k; }
        }
        tau[j - 1] = best_k;
    }
    return tau;
}

std::vector<int> optimize_x_given_y(const Instance& inst, const std::vector<int>& tau) {
    const int m = inst.m(), S = inst.sigma_range();
    std::vector<int> sigma(m);
    for (int i = 1; i <= m; ++i) {
        int best_j = 1;
        std::int64_t best = conditional_x_cost(inst, tau, i, 1);
        for (int j = 2; j <= S; ++j) {
            const std::int64_t cost = conditional_x_cost(inst, tau, i, j);
            if (cost < best) { best = cost; best_j = j; }
        }
        sigma[i - 1] = best_j;
    }
    return sigma;
}

Solution round_x_optimize_y(const Instance& inst, const FractionalSolution& fsol) {
    check_fractional(inst, fsol);
    const int m = inst.m(), n = inst.n();
    const int S = inst.sigma_range(), T = inst.tau_range();
    std::vector<int> sigma(m);
    for (int i = 1; i <= m; ++i) {
        int best_j = 1;
        Rational best;
        for (int j = 1; j <= S; ++j) {
            Rational cost = inst.c(i, j);
            for (int k = 1; k <= T; ++k)
                for (int l = 1; l <= n; ++l)
                    if (fsol.y[k - 1][l - 1] != 0)
                        cost += Rational(inst.q(i, j, k, l)) * fsol.y[k - 1][l - 1];
            if (j == 1 || cost < best) { best = cost; best_j = j; }
        }
        sigma[i - 1] = best_j;
    }
    return Solution{sigma, optimize_y_given_x(inst, sigma)};
}

Solution round_y_optimize_x(const Instance& inst, const FractionalSolution& fsol) {
    check_fractional(inst, fsol);
    const int m = inst.m(), n = inst.n();
    const int S = inst.sigma_range(), T = inst.tau_range();
    std::vector<int> tau(n);
    for (int j = 1; j <= n; ++j) {
        int best_k = 1;
        Rational best;
        for (int k = 1; k <= T; ++k) {
            Rational cost = inst.d(k, j);
            for (int i = 1; i <= m; ++i)
                for (int j2 = 1; j2 <= S; ++j2)
                    if (fsol.x[i - 1][j2 - 1] != 0)
                        cost += Rational(inst.q(i, j2, k, j)) * fsol.x[i - 1][j2 - 1];
            if (k == 1 || cost < best) { best = cost; best_k = k; }
        }
        tau[j - 1] = best_k;
    }
    return Solution{optimize_x_given_y(inst, tau), tau};
}

Solution below_average_rounding(const Instance& inst) {
    const FractionalSolution uniform = uniform_fractional(inst);
    Solution a = round_x_optimize_y(inst, uniform);
    Solution b = round_y_optimize_x(inst, uniform);
    return evaluate(inst, b) < evaluate(inst, a) ? b : a;
}

Solution apply_move(const Instance& inst, const Solution& sol, const Move& move) {
    Solution next = sol;
    std::vector<int>& target = move.side == Side::X ? next.sigma : next.tau;
    const int range = move.side == Side::X ? inst.sigma_range() : inst.tau_range();
    for (auto [pos, val] : move.assignments) {
        if (pos < 1 || pos > int(target.size()) || val < 1 || val > range)
            throw ValidationError("move assignment out of range");
        target[pos - 1] = val;
    }
    if (move.kind == MoveKind::Optimized) {
        if (move.side == Side::X)
            next.tau = optimize_y_given_x(inst, next.sigma);
        else
            next.sigma = optimize_x_given_y(inst, next.tau);
    }
    return next;
}

std::pair<Solution, SearchTrace> alternating(const Instance& inst, const Solution& start) {
    check_solution(inst, start);
    Solution cur = start;
    SearchTrace trace;
    trace.start_value = trace.end_value = evaluate(inst, start);
    for (;;) {
        bool improved = false;
        {
            std::vector<int> tau = optimize_y_given_x(inst, cur.sigma);
            const Solution cand{cur.sigma, tau};
            const std::int64_t value = evaluate(inst, cand);
            if (value < trace.end_value) {
                trace.moves.push_back(Move{Side::Y, MoveKind::Concurrent,
                                           changed_entries(cur.tau, tau),
                                           value - trace.end_value});
                cur = cand;
                trace.end_value = value;
                improved = true;
            }
        }
        {
            std::vector<int> sigma = optimize_x_given_y(inst, cur.tau);
            const Solution cand{sigma, cur.tau};
            const std::int64_t value = evaluate(inst, cand);
            if (value < trace.end_value) {
                trace.moves.push_back(Move{Side::X, MoveKind::Concurrent,
                                           changed_entries(cur.sigma, sigma),
                                           value - trace.end_value});
                cur = cand;
                trace.end_value = value;
                improved = true;
            }
        }
        if (!improved) break;
        ++trace.iterations;
    }
    return {cur, trace};
}

std::optional<Move> best_swap(const Instance& inst, const Solution& sol) {
    check_solution(inst, sol);
    const int m = inst.m(), n = inst.n();
    const int S = inst.sigma_range(), T = inst.tau_range();
    std::optional<Move> best;
    // x side first, then y side, lowest indices first; strict < keeps the
    // earliest of tied candidates.
    for (int i = 1; i <= m; ++i) {
        const int j0 = sol.sigma[i - 1];
        for (int j = 1; j <= S; ++j) {
            if (j == j0) continue;
            std::int64_t delta = inst.c(i, j) - inst.c(i, j0);
            for (int l = 1; l <= n; ++l)
                delta += inst.q(i, j, sol.tau[l - 1], l) - inst.q(i, j0, sol.tau[l - 1], l);
            if (delta < 0 && (!best || delta < best->delta))
                best = Move{Side::X, MoveKind::Single, {{i, j}}, delta};
        }
    }
    for (int j = 1; j <= n; ++j) {
        const int k0 = sol.tau[j - 1];
        for (int k = 1; k <= T; ++k) {
            if (k == k0) continue;
            std::int64_t delta = inst.d(k, j) - inst.d(k0, j);
            for (int i = 1; i <= m; ++i)
                delta += inst.q(i, sol.sigma[i - 1], k, j) - inst.q(i, sol.sigma[i - 1], k0, j);
            if (delta < 0 && (!best || delta < best->delta))
                best = Move{Side::Y, MoveKind::Single, {{j, k}}, delta};
        }
    }
    return best;
}

std::optional<Move> best_concurrent_swap(const Instance& inst, const Solution& sol) {
    check_solution(inst, sol);
    const std::int64_t current = evaluate(inst, sol);
    const std::vector<int> sigma = optimize_x_given_y(inst, sol.tau);
    const std::int64_t delta_x = evaluate(inst, Solution{sigma, sol.tau}) - current;
    const std::vector<int> tau = optimize_y_given_x(inst, sol.sigma);
    const std::int64_t delta_y = evaluate(inst, Solution{sol.sigma, tau}) - current;
    if (delta_x <= delta_y && delta_x < 0)
        return Move{Side::X, MoveKind::Concurrent, changed_entries(sol.sigma, sigma), delta_x};
    if (delta_y < 0)
        return Move{Side::Y, MoveKind::Concurrent, changed_entries(sol.tau, tau), delta_y};
    return std::nullopt;
}

std::optional<Move> best_optimized_swap(const Instance& inst, const Solution& sol) {
    check_solution(inst, sol);
    const int m = inst.m(), n = inst.n();
    const int S = inst.sigma_range(), T = inst.tau_range();
    const std::int64_t current = evaluate(inst, sol);
    std::optional<Move> best;
    std::int64_t best_value = current;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= S; ++j) {
            std::vector<int> sigma = sol.sigma;
            sigma[i - 1] = j;
            const std::int64_t value =
                evaluate(inst, Solution{sigma, optimize_y_given_x(inst, sigma)});
            if (value < best_value) {
                best_value = value;
                best = Move{Side::X, MoveKind::Optimized, {{i, j}}, value - current};
            }
        }
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= T; ++k) {
            std::vector<int> tau = sol.tau;
            tau[j - 1] = k;
            const std::int64_t value =
                evaluate(inst, Solution{optimize_x_given_y(inst, tau), tau});
            if (value < best_value) {
                best_value = value;
                best = Move{Side::Y, MoveKind::Optimized, {{j, k}}, value - current};
            }
        }
    return best;
}

std::pair<Solution, SearchTrace> local_search(const Instance& inst, const Solution& start,
                                              NeighborhoodKind kind,
                                              std::int64_t max_iters) {
    check_solution(inst, start);
    if (max_iters < 0) throw ValidationError("max_iters must be >= 0");
    const auto scan = [&](const Solution& sol) {
        switch (kind) {
            case NeighborhoodKind::Swap: return best_swap(inst, sol);
            case NeighborhoodKind::ConcurrentSwap: return best_concurrent_swap(inst, sol);
            case NeighborhoodKind::OptimizedSwap: return best_optimized_swap(inst, sol);
        }
        return std::optional<Move>{};
    };
    Solution cur = start;
    SearchTrace trace;
    trace.start_value = trace.end_value = evaluate(inst, cur);
    for (;;) {
        std::optional<Move> move = scan(cur);
        if (!move) break;
        if (trace.iterations >= max_iters) {
            trace.truncated = true;
            break;
        }
        cur = apply_move(inst, cur, *move);
        trace.end_value += move->delta;
        trace.moves.push_back(std::move(*move));
        ++trace.iterations;
    }
    return {cur, trace};
}

std::pair<Solution, DominationCertificate> dominate(const Instance& inst) {
    DominationCertificate cert;
    cert.average = average_value(inst);
    const CanonicalSweep sweep = canonical_sweep(inst);
    const Solution rounded = below_average_rounding(inst);
    const std::int64_t rounded_value = evaluate(inst, rounded);
    if (rounded_value < sweep.best_value) {
        cert.start = rounded;
        cert.start_value = rounded_value;
        cert.start_source = "rounding";
    } else {
        cert.start = sweep.best;
        cert.start_value = sweep.best_value;
        cert.start_source = "canonical";
    }
    Solution result = cert.start;
    cert.final_value = cert.start_value;
    if (std::optional<Move> move = best_optimized_swap(inst, cert.start)) {
        result = apply_move(inst, cert.start, *move);
        cert.final_value = cert.start_value + move->delta;
        cert.move = std::move(move);
    }
    return {result, cert};
}

namespace {

nlohmann::json move_to_json(const Move& move) {
    nlohmann::json j;
    j["side"] = move.side == Side::X ? "x" : "y";
    switch (move.kind) {
        case MoveKind::Single: j["kind"] = "single"; break;
        case MoveKind::Concurrent: j["kind"] = "concurrent"; break;
        case MoveKind::Optimized: j["kind"] = "optimized"; break;
    }
    nlohmann::json assignments = nlohmann::json::array();
    for (auto [pos, val] : move.assignments)
        assignments.push_back({{"position", pos - 1}, {"value", val - 1}});
    j["assignments"] = assignments;
    j["delta"] = move.delta;
    return j;
}

}  // namespace

std::string trace_to_json(const SearchTrace& trace) {
    nlohmann::json j;
    j["start_value"] = trace.start_value;
    j["end_value"] = trace.end_value;
    j["iterations"] = trace.iterations;
    j["truncated"] = trace.truncated;
    nlohmann::json moves = nlohmann::json::array();
    for (const Move& move : trace.moves) moves.push_back(move_to_json(move));
    j["moves"] = moves;
    return j.dump(2) + "\n";
}

std::string certificate_to_json(const DominationCertificate& cert, const Instance& inst) {
    nlohmann::json j;
    nlohmann::json sigma = nlohmann::json::array(), tau = nlohmann::json::array();
    for (int v : cert.start.sigma) sigma.push_back(v - 1);
    for (int v : cert.start.tau) tau.push_back(v - 1);
    j["start"]["variant"] = int(inst.variant());
    j["start"]["sigma"] = sigma;
    j["start"]["tau"] = tau;
    j["start_value"] = cert.start_value;
    j["start_source"] = cert.start_source;
    j["average"] = to_string(cert.average);
    j["move"] = cert.move ? move_to_json(*cert.move) : nlohmann::json(nullptr);
    j["final_value"] = cert.final_value;
    return j.dump(2) + "\n";
}

}  // namespace bqap
