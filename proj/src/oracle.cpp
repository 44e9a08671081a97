#include "bqap/oracle.hpp"

#include <algorithm>
#include <thread>

#include <json.hpp>

#include "bqap/analytics.hpp"

namespace bqap {

namespace {

void ensure_enumerable(const Instance& inst, const BigInt& limit) {
    const BigInt size = solution_space_size(inst);
    if (size > limit) throw LimitError(size, limit);
}

// Odometer over assignment vectors of the given length with entries in
// [1, range], lexicographic order. Returns false once exhausted.
bool advance(std::vector<int>& v, int range) {
    for (int pos = int(v.size()) - 1; pos >= 0; --pos) {
        if (v[pos] < range) {
            ++v[pos];
            std::fill(v.begin() + pos + 1, v.end(), 1);
            return true;
        }
    }
    return false;
}

std::int64_t raw_evaluate(const Instance& inst, const std::vector<int>& sigma,
                          const std::vector<int>& tau) {
    const int m = inst.m(), n = inst.n();
    std::int64_t value = 0;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) value += inst.q(i, sigma[i - 1], tau[j - 1], j);
    for (int i = 1; i <= m; ++i) value += inst.c(i, sigma[i - 1]);
    for (int j = 1; j <= n; ++j) value += inst.d(tau[j - 1], j);
    return value;
}

// Streams objective values in lexicographic (sigma, tau) order, restricted to
// sigma[0] in [first_lo, first_hi]. For each fixed sigma the column costs
// g[k][j] = d(k,j) + sum_i q(i, sigma_i, k, j) are precomputed once.
template <typename Fn>
void stream_values(const Instance& inst, int first_lo, int first_hi, Fn&& fn) {
    const int m = inst.m(), n = inst.n();
    const int S = inst.sigma_range(), T = inst.tau_range();
    if (first_lo > first_hi) return;
    std::vector<int> sigma(m, 1);
    sigma[0] = first_lo;
    std::vector<std::int64_t> g(std::size_t(T) * n);
    std::vector<int> tau(n, 1);
    do {
        std::int64_t base = 0;
        for (int i = 1; i <= m; ++i) base += inst.c(i, sigma[i - 1]);
        for (int k = 1; k <= T; ++k)
            for (int j = 1; j <= n; ++j) {
                std::int64_t v = inst.d(k, j);
                for (int i = 1; i <= m; ++i) v += inst.q(i, sigma[i - 1], k, j);
                g[std::size_t(k - 1) * n + (j - 1)] = v;
            }
        std::fill(tau.begin(), tau.end(), 1);
        do {
            std::int64_t value = base;
            for (int j = 0; j < n; ++j) value += g[std::size_t(tau[j] - 1) * n + j];
            fn(sigma, tau, value);
        } while (advance(tau, T));
    } while (advance(sigma, S) && sigma[0] <= first_hi);
}

struct BlockStats {
    std::vector<std::int64_t> values;  // enumeration order within the block
    BigInt sum = 0;
    std::int64_t min_value = 0;
    std::int64_t max_value = 0;
    Solution optimum;
    bool any = false;
};

BlockStats enumerate_block(const Instance& inst, int first_lo, int first_hi,
                           std::size_t reserve) {
    BlockStats stats;
    stats.values.reserve(reserve);
    stream_values(inst, first_lo, first_hi,
                  [&](const std::vector<int>& sigma, const std::vector<int>& tau,
                      std::int64_t value) {
                      stats.values.push_back(value);
                      stats.sum += value;
                      if (!stats.any || value < stats.min_value) {
                          stats.min_value = value;
                          stats.optimum = Solution{sigma, tau};
                      }
                      if (!stats.any || value > stats.max_value) stats.max_value = value;
                      stats.any = true;
                  });
    return stats;
}

}  // namespace

void for_each_solution(const Instance& inst,
                       const std::function<void(const Solution&)>& fn) {
    stream_values(inst, 1, inst.sigma_range(),
                  [&](const std::vector<int>& sigma, const std::vector<int>& tau,
                      std::int64_t) { fn(Solution{sigma, tau}); });
}

EnumerationReport enumerate_report(const Instance& inst, BigInt limit, int threads) {
    ensure_enumerable(inst, limit);
    const int S = inst.sigma_range();
    const BigInt total = solution_space_size(inst);
    const std::size_t total_sz = total.convert_to<std::size_t>();

    threads = std::clamp(threads, 1, S);
    std::vector<BlockStats> blocks(threads);
    if (threads == 1) {
        blocks[0] = enumerate_block(inst, 1, S, total_sz);
    } else {
        std::vector<std::thread> workers;
        for (int t = 0; t < threads; ++t) {
            const int lo = 1 + t * S / threads;
            const int hi = (t + 1) * S / threads;
            workers.emplace_back([&, t, lo, hi] {
                blocks[t] = enumerate_block(inst, lo, hi, total_sz / threads + 1);
            });
        }
        for (auto& w : workers) w.join();
    }

    EnumerationReport report;
    report.count = total;
    report.sum = 0;
    std::vector<std::int64_t> values;
    values.reserve(total_sz);
    bool any = false;
    // Blocks are merged in first-coordinate order, so the first minimum seen
    // is the lexicographically first optimum overall.
    for (const BlockStats& b : blocks) {
        if (!b.any) continue;
        report.sum += b.sum;
        if (!any || b.min_value < report.min_value) {
            report.min_value = b.min_value;
            report.optimum_solution = b.optimum;
        }
        if (!any || b.max_value > report.max_value) report.max_value = b.max_value;
        any = true;
        values.insert(values.end(), b.values.begin(), b.values.end());
    }
    report.mean = Rational(report.sum, total);
    std::sort(values.begin(), values.end());
    const std::size_t cnt = values.size();
    report.lower_median = values[(cnt + 1) / 2 - 1];
    report.upper_median = values[cnt / 2];
    return report;
}

BigInt domination_count(const Instance& inst, const Solution& sol, BigInt limit) {
    ensure_enumerable(inst, limit);
    check_solution(inst, sol);
    const std::int64_t threshold = raw_evaluate(inst, sol.sigma, sol.tau);
    BigInt count = 0;
    stream_values(inst, 1, inst.sigma_range(),
                  [&](const std::vector<int>&, const std::vector<int>&, std::int64_t v) {
                      if (v >= threshold) ++count;
                  });
    return count;
}

BigInt count_at_least_average(const Instance& inst, BigInt limit) {
    ensure_enumerable(inst, limit);
    const Rational avg = average_value(inst);
    // value >= avg  <=>  value * den >= num, all in exact integers.
    const BigInt num = numerator(avg), den = denominator(avg);
    BigInt count = 0;
    stream_values(inst, 1, inst.sigma_range(),
                  [&](const std::vector<int>&, const std::vector<int>&, std::int64_t v) {
                      if (BigInt(v) * den >= num) ++count;
                  });
    return count;
}

std::set<Solution> neighborhood_enumerate(const Instance& inst, const Solution& sol,
                                          NeighborhoodKind kind, BigInt limit) {
    check_solution(inst, sol);
    const int m = inst.m(), n = inst.n();
    const int S = inst.sigma_range(), T = inst.tau_range();
    std::set<Solution> out;

    // All one-swap variants of a vector, the unchanged vector included.
    const auto one_swaps = [](const std::vector<int>& v, int range) {
        std::vector<std::vector<int>> result;
        result.push_back(v);
        for (std::size_t pos = 0; pos < v.size(); ++pos)
            for (int val = 1; val <= range; ++val)
                if (val != v[pos]) {
                    std::vector<int> w = v;
                    w[pos] = val;
                    result.push_back(std::move(w));
                }
        return result;
    };

    switch (kind) {
        case NeighborhoodKind::Swap: {
            for (auto& sigma : one_swaps(sol.sigma, S)) out.insert(Solution{sigma, sol.tau});
            for (auto& tau : one_swaps(sol.tau, T)) out.insert(Solution{sol.sigma, tau});
            break;
        }
        case NeighborhoodKind::ConcurrentSwap: {
            const BigInt size = boost::multiprecision::pow(BigInt(S), m) +
                                boost::multiprecision::pow(BigInt(T), n) - 1;
            if (size > limit) throw LimitError(size, limit);
            std::vector<int> sigma(m, 1);
            do out.insert(Solution{sigma, sol.tau});
            while (advance(sigma, S));
            std::vector<int> tau(n, 1);
            do out.insert(Solution{sol.sigma, tau});
            while (advance(tau, T));
            break;
        }
        case NeighborhoodKind::OptimizedSwap: {
            const BigInt size =
                BigInt(std::int64_t(m) * (S - 1) + 1) * boost::multiprecision::pow(BigInt(T), n) +
                BigInt(std::int64_t(n) * (T - 1) + 1) * boost::multiprecision::pow(BigInt(S), m);
            if (size > limit) throw LimitError(size, limit);
            for (auto& sigma : one_swaps(sol.sigma, S)) {
                std::vector<int> tau(n, 1);
                do out.insert(Solution{sigma, tau});
                while (advance(tau, T));
            }
            for (auto& tau : one_swaps(sol.tau, T)) {
                std::vector<int> sigma(m, 1);
                do out.insert(Solution{sigma, tau});
                while (advance(sigma, S));
            }
            break;
        }
    }
    return out;
}

std::string report_to_json(const EnumerationReport& report, const Instance& inst) {
    nlohmann::json j;
    j["count"] = report.count.str();
    j["min_value"] = report.min_value;
    j["max_value"] = report.max_value;
    j["sum"] = report.sum.str();
    j["mean"] = to_string(report.mean);
    j["lower_median"] = report.lower_median;
    j["upper_median"] = report.upper_median;
    nlohmann::json sigma = nlohmann::json::array(), tau = nlohmann::json::array();
    for (int v : report.optimum_solution.sigma) sigma.push_back(v - 1);
    for (int v : report.optimum_solution.tau) tau.push_back(v - 1);
    j["optimum_solution"]["variant"] = int(inst.variant());
    j["optimum_solution"]["sigma"] = sigma;
    j["optimum_solution"]["tau"] = tau;
    return j.dump(2) + "\n";
}

}  // namespace bqap
