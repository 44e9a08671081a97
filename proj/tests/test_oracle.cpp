#include <doctest.h>

#include <algorithm>

#include "bqap/analytics.hpp"
#include "bqap/oracle.hpp"
#include "support.hpp"

using namespace bqap;
using namespace bqap::testing;

TEST_CASE("enumerate_report on T1: hand-enumerated statistics") {
    const Instance t1 = make_t1();
    const EnumerationReport report = enumerate_report(t1);
    CHECK(report.count == 16);
    CHECK(report.min_value == 0);
    CHECK(report.max_value == 1);
    CHECK(report.sum == 4);  // twelve 0s, four 1s
    CHECK(report.mean == Rational(1, 4));
    CHECK(report.lower_median == 0);
    CHECK(report.upper_median == 0);
    CHECK(evaluate(t1, report.optimum_solution) == 0);
    // First value-0 solution in lexicographic order: sigma=(1,1), tau=(2,1).
    CHECK(report.optimum_solution == Solution{{1, 1}, {2, 1}});
}

TEST_CASE("enumerate_report on the all-zero instance") {
    const Instance zero = random_instance(Variant::BQAP1, 2, 2, 0, 0, 0);
    const EnumerationReport report = enumerate_report(zero);
    CHECK(report.min_value == 0);
    CHECK(report.max_value == 0);
    CHECK(report.lower_median == 0);
    CHECK(report.upper_median == 0);
}

TEST_CASE("enumerate_report matches independent brute force") {
    for (const Variant variant : {Variant::BQAP1, Variant::BQAP2})
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            const int m = 1 + int(seed % 3), n = 1 + int((seed / 3) % 3);
            const Instance inst = random_instance(variant, m, n, -9, 9, 500 + seed);
            std::vector<std::int64_t> values;
            brute_for_each(inst, [&](const Solution&, std::int64_t v) { values.push_back(v); });
            std::sort(values.begin(), values.end());
            const EnumerationReport report = enumerate_report(inst);
            CHECK(report.count == BigInt(values.size()));
            CHECK(report.min_value == values.front());
            CHECK(report.max_value == values.back());
            CHECK(report.lower_median == values[(values.size() + 1) / 2 - 1]);
            CHECK(report.upper_median == values[values.size() / 2]);
            CHECK(report.mean == average_value(inst));
            CHECK(evaluate(inst, report.optimum_solution) == values.front());
        }
}

TEST_CASE("enumerate_report is identical across thread counts") {
    const Instance inst = random_instance(Variant::BQAP1, 3, 3, -9, 9, 909);
    const EnumerationReport one = enumerate_report(inst, kDefaultEnumerationLimit, 1);
    for (int threads : {2, 3, 4}) {
        const EnumerationReport many = enumerate_report(inst, kDefaultEnumerationLimit, threads);
        CHECK(many.sum == one.sum);
        CHECK(many.min_value == one.min_value);
        CHECK(many.max_value == one.max_value);
        CHECK(many.lower_median == one.lower_median);
        CHECK(many.upper_median == one.upper_median);
        CHECK(many.optimum_solution == one.optimum_solution);
    }
}

TEST_CASE("enumerate_report refuses oversized spaces") {
    const Instance big = random_instance(Variant::BQAP1, 6, 6, 0, 0, 0);
    CHECK(solution_space_size(big) > BigInt(kDefaultEnumerationLimit));
    CHECK_THROWS_AS(enumerate_report(big), LimitError);
    try {
        enumerate_report(big);
    } catch (const LimitError& e) {
        CHECK(e.required() == solution_space_size(big));
        CHECK(e.limit() == kDefaultEnumerationLimit);
    }
}

TEST_CASE("domination_count on T1") {
    const Instance t1 = make_t1();
    CHECK(domination_count(t1, Solution{{2, 1}, {1, 1}}) == 16);  // value 0
    CHECK(domination_count(t1, Solution{{1, 1}, {1, 1}}) == 4);   // value 1
}

TEST_CASE("the optimum dominates the whole space") {
    const Instance inst = random_instance(Variant::BQAP2, 2, 3, -9, 9, 66);
    const EnumerationReport report = enumerate_report(inst);
    CHECK(domination_count(inst, report.optimum_solution) == solution_space_size(inst));
}

TEST_CASE("domination_count is antitone in the solution value") {
    const Instance inst = random_instance(Variant::BQAP1, 2, 3, -9, 9, 42);
    std::vector<std::pair<std::int64_t, BigInt>> points;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Solution sol = random_solution(inst, seed);
        points.emplace_back(evaluate(inst, sol), domination_count(inst, sol));
    }
    for (const auto& [va, ca] : points)
        for (const auto& [vb, cb] : points)
            if (va < vb) CHECK(ca >= cb);
}

TEST_CASE("count_at_least_average meets the shift-class bound") {
    const Instance t1 = make_t1();
    CHECK(count_at_least_average(t1) == 4);  // tight: n^(m-1) m^(n-1) = 2*2

    const Instance zero = random_instance(Variant::BQAP1, 2, 2, 0, 0, 0);
    CHECK(count_at_least_average(zero) == 16);

    for (const Variant variant : {Variant::BQAP1, Variant::BQAP2})
        for (std::uint64_t seed = 0; seed < 15; ++seed) {
            const int m = 1 + int(seed % 3), n = 1 + int((seed / 3) % 3);
            const Instance inst = random_instance(variant, m, n, -9, 9, 600 + seed);
            const BigInt bound =
                boost::multiprecision::pow(BigInt(inst.sigma_range()), m - 1) *
                boost::multiprecision::pow(BigInt(inst.tau_range()), n - 1);
            CHECK(count_at_least_average(inst) >= bound);
        }
}

TEST_CASE("swap neighborhood cardinalities match the closed forms") {
    for (const Variant variant : {Variant::BQAP1, Variant::BQAP2})
        for (int m = 1; m <= 4; ++m)
            for (int n = 1; n <= 4; ++n) {
                const Instance inst = random_instance(variant, m, n, -5, 5, 13);
                const int S = inst.sigma_range(), T = inst.tau_range();
                const Solution sol = random_solution(inst, std::uint64_t(m * 10 + n));
                const auto swap_set = neighborhood_enumerate(inst, sol, NeighborhoodKind::Swap);
                CHECK(int(swap_set.size()) == 1 + m * (S - 1) + n * (T - 1));
                CHECK(swap_set.count(sol) == 1);  // identity included
            }
    // The same counts, spelled out per variant:
    {
        const Instance inst = random_instance(Variant::BQAP1, 2, 3, -5, 5, 1);
        const auto swap_set =
            neighborhood_enumerate(inst, random_solution(inst, 2), NeighborhoodKind::Swap);
        CHECK(swap_set.size() == 2 * 2 * 3 - 2 - 3 + 1);  // 2mn-m-n+1 = 8
    }
    {
        const Instance inst = random_instance(Variant::BQAP2, 2, 3, -5, 5, 1);
        const auto swap_set =
            neighborhood_enumerate(inst, random_solution(inst, 2), NeighborhoodKind::Swap);
        CHECK(swap_set.size() == 4 + 9 - 2 - 3 + 1);  // m^2+n^2-m-n+1 = 9
    }
}

TEST_CASE("concurrent swap neighborhood cardinalities") {
    {
        const Instance inst = random_instance(Variant::BQAP1, 2, 3, -5, 5, 3);
        const auto cswap = neighborhood_enumerate(inst, random_solution(inst, 4),
                                                  NeighborhoodKind::ConcurrentSwap);
        CHECK(cswap.size() == 9 + 8 - 1);  // n^m + m^n - 1 = 16
    }
    for (const Variant variant : {Variant::BQAP1, Variant::BQAP2})
        for (int m = 1; m <= 4; ++m)
            for (int n = 1; n <= 4; ++n) {
                const Instance inst = random_instance(variant, m, n, -5, 5, 19);
                const int S = inst.sigma_range(), T = inst.tau_range();
                const Solution sol = random_solution(inst, std::uint64_t(m + 7 * n));
                const auto cswap =
                    neighborhood_enumerate(inst, sol, NeighborhoodKind::ConcurrentSwap);
                const BigInt expected = boost::multiprecision::pow(BigInt(S), m) +
                                        boost::multiprecision::pow(BigInt(T), n) - 1;
                CHECK(BigInt(cswap.size()) == expected);
            }
}

TEST_CASE("optimized swap sets Sx and Sy have the stated sizes") {
    for (const Variant variant : {Variant::BQAP1, Variant::BQAP2})
        for (int m = 2; m <= 3; ++m)
            for (int n = 2; n <= 3; ++n) {
                const Instance inst = random_instance(variant, m, n, -5, 5, 29);
                const int S = inst.sigma_range(), T = inst.tau_range();
                const Solution sol = random_solution(inst, std::uint64_t(3 * m + n));
                const auto all =
                    neighborhood_enumerate(inst, sol, NeighborhoodKind::OptimizedSwap);
                // Rebuild Sx and Sy independently from the definition.
                std::set<Solution> sx, sy;
                for (const auto& tau : all_vectors(n, T)) {
                    sx.insert(Solution{sol.sigma, tau});
                    for (int i = 0; i < m; ++i)
                        for (int j = 1; j <= S; ++j) {
                            Solution v{sol.sigma, tau};
                            v.sigma[i] = j;
                            sx.insert(v);
                        }
                }
                for (const auto& sigma : all_vectors(m, S)) {
                    sy.insert(Solution{sigma, sol.tau});
                    for (int j = 0; j < n; ++j)
                        for (int k = 1; k <= T; ++k) {
                            Solution v{sigma, sol.tau};
                            v.tau[j] = k;
                            sy.insert(v);
                        }
                }
                const BigInt sx_size = BigInt(m * (S - 1) + 1) *
                                       boost::multiprecision::pow(BigInt(T), n);
                const BigInt sy_size = BigInt(n * (T - 1) + 1) *
                                       boost::multiprecision::pow(BigInt(S), m);
                CHECK(BigInt(sx.size()) == sx_size);
                CHECK(BigInt(sy.size()) == sy_size);
                std::set<Solution> merged = sx;
                merged.insert(sy.begin(), sy.end());
                CHECK(all == merged);
            }
}

TEST_CASE("optimized swap intersection differs from the textbook count") {
    // A commonly quoted intersection count for Sx and Sy is 2mn-m-n+1;
    // direct enumeration gives (m(S-1)+1)(n(T-1)+1). The library works with
    // the enumerated union, so only the discrepancy is recorded here.
    const Instance inst = random_instance(Variant::BQAP1, 2, 3, -5, 5, 31);
    const int m = inst.m(), n = inst.n();
    const int S = inst.sigma_range(), T = inst.tau_range();
    const Solution sol = random_solution(inst, 8);
    std::set<Solution> sx, sy;
    for (const auto& tau : all_vectors(n, T)) {
        sx.insert(Solution{sol.sigma, tau});
        for (int i = 0; i < m; ++i)
            for (int j = 1; j <= S; ++j) {
                Solution v{sol.sigma, tau};
                v.sigma[i] = j;
                sx.insert(v);
            }
    }
    for (const auto& sigma : all_vectors(m, S)) {
        sy.insert(Solution{sigma, sol.tau});
        for (int j = 0; j < n; ++j)
            for (int k = 1; k <= T; ++k) {
                Solution v{sigma, sol.tau};
                v.tau[j] = k;
                sy.insert(v);
            }
    }
    std::size_t intersection = 0;
    for (const Solution& s : sx) intersection += sy.count(s);
    CHECK(intersection == std::size_t(m * (S - 1) + 1) * (n * (T - 1) + 1));
    CHECK(intersection != std::size_t(2 * m * n - m - n + 1));
}

TEST_CASE("for_each_solution covers the space in lexicographic order") {
    const Instance inst = random_instance(Variant::BQAP2, 2, 2, -3, 3, 12);
    std::vector<Solution> seen;
    for_each_solution(inst, [&](const Solution& sol) { seen.push_back(sol); });
    CHECK(BigInt(seen.size()) == solution_space_size(inst));
    CHECK(std::is_sorted(seen.begin(), seen.end()));
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
}
