#include <doctest.h>

#include <set>

#include "bqap/analytics.hpp"
#include "support.hpp"

using namespace bqap;
using namespace bqap::testing;

TEST_CASE("average_value on T1 and the all-zero instance") {
    CHECK(average_value(make_t1()) == Rational(1, 4));
    CHECK(average_value(random_instance(Variant::BQAP2, 3, 2, 0, 0, 0)) == 0);
}

TEST_CASE("average_value equals the enumeration mean exactly") {
    for (const Variant variant : {Variant::BQAP1, Variant::BQAP2}) {
        for (std::uint64_t seed = 0; seed < 15; ++seed) {
            const int m = 1 + int(seed % 4), n = 1 + int((seed / 2) % 4);
            const Instance inst = random_instance(variant, m, n, -9, 9, 100 + seed);
            BigInt sum = 0, count = 0;
            brute_for_each(inst, [&](const Solution&, std::int64_t v) {
                sum += v;
                ++count;
            });
            CHECK(average_value(inst) == Rational(sum, count));
        }
    }
}

TEST_CASE("canonical_solution values follow the closed form") {
    const Instance t1 = make_t1();
    CHECK(evaluate(t1, canonical_solution(t1, 1, 1)) == 1);
    CHECK(evaluate(t1, canonical_solution(t1, 1, 2)) == 0);

    const Instance inst = random_instance(Variant::BQAP1, 3, 2, -9, 9, 5);
    for (int a = 1; a <= inst.sigma_range(); ++a)
        for (int b = 1; b <= inst.tau_range(); ++b) {
            std::int64_t expected = 0;
            for (int i = 1; i <= inst.m(); ++i)
                for (int j = 1; j <= inst.n(); ++j) expected += inst.q(i, a, b, j);
            for (int i = 1; i <= inst.m(); ++i) expected += inst.c(i, a);
            for (int j = 1; j <= inst.n(); ++j) expected += inst.d(b, j);
            CHECK(evaluate(inst, canonical_solution(inst, a, b)) == expected);
        }
    CHECK_THROWS_AS(canonical_solution(inst, 0, 1), ValidationError);
    CHECK_THROWS_AS(canonical_solution(inst, 1, 4), ValidationError);
}

TEST_CASE("canonical_sweep straddles the average") {
    const Instance t1 = make_t1();
    const CanonicalSweep sweep = canonical_sweep(t1);
    CHECK(sweep.best_value == 0);
    CHECK(sweep.worst_value == 1);

    const Instance zero = random_instance(Variant::BQAP1, 2, 2, 0, 0, 0);
    const CanonicalSweep flat = canonical_sweep(zero);
    CHECK(flat.best_value == 0);
    CHECK(flat.worst_value == 0);

    for (const Variant variant : {Variant::BQAP1, Variant::BQAP2})
        for (std::uint64_t seed = 0; seed < 15; ++seed) {
            const Instance inst = random_instance(variant, 2 + int(seed % 3),
                                                  2 + int(seed % 2), -9, 9, 300 + seed);
            const CanonicalSweep s = canonical_sweep(inst);
            const Rational avg = average_value(inst);
            CHECK(Rational(s.best_value) <= avg);
            CHECK(avg <= Rational(s.worst_value));
            CHECK(evaluate(inst, s.best) == s.best_value);
            CHECK(evaluate(inst, s.worst) == s.worst_value);
        }
}

TEST_CASE("shift_solution modular arithmetic") {
    const Instance t1 = make_t1();
    const Solution sol{{1, 2}, {2, 1}};
    CHECK(shift_solution(t1, sol, 0, 0) == sol);
    CHECK(shift_solution(t1, sol, 1, 1) == Solution{{2, 1}, {1, 2}});
    CHECK_THROWS_AS(shift_solution(t1, sol, 2, 0), ValidationError);
    CHECK_THROWS_AS(shift_solution(t1, sol, 0, -1), ValidationError);
}

TEST_CASE("shift composition is modular addition") {
    const Instance inst = random_instance(Variant::BQAP1, 3, 2, -3, 3, 8);
    const int S = inst.sigma_range(), T = inst.tau_range();
    const Solution sol = random_solution(inst, 4);
    for (int a1 = 0; a1 < S; ++a1)
        for (int b1 = 0; b1 < T; ++b1)
            for (int a2 = 0; a2 < S; ++a2)
                for (int b2 = 0; b2 < T; ++b2) {
                    const Solution two_step =
                        shift_solution(inst, shift_solution(inst, sol, a1, b1), a2, b2);
                    const Solution one_step =
                        shift_solution(inst, sol, (a1 + a2) % S, (b1 + b2) % T);
                    CHECK(two_step == one_step);
                }
}

TEST_CASE("shift is inverted by the complementary shift") {
    const Instance inst = random_instance(Variant::BQAP2, 2, 3, -3, 3, 8);
    const int S = inst.sigma_range(), T = inst.tau_range();
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Solution sol = random_solution(inst, seed);
        for (int a = 0; a < S; ++a)
            for (int b = 0; b < T; ++b) {
                const Solution back = shift_solution(inst, shift_solution(inst, sol, a, b),
                                                     (S - a) % S, (T - b) % T);
                CHECK(back == sol);
            }
    }
}

TEST_CASE("equivalence classes have mn members summing to mn times the average") {
    const Instance t1 = make_t1();
    const EquivalenceClass cls = equivalence_class(t1, Solution{{1, 2}, {2, 1}});
    CHECK(cls.members.size() == 4);
    std::int64_t sum = 0;
    for (const Solution& member : cls.members) sum += evaluate(t1, member);
    CHECK(sum == 1);  // 4 * (1/4)

    for (const Variant variant : {Variant::BQAP1, Variant::BQAP2})
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const Instance inst =
                random_instance(variant, 2 + int(seed % 2), 3, -9, 9, 400 + seed);
            const Solution sol = random_solution(inst, seed);
            const EquivalenceClass cls2 = equivalence_class(inst, sol);
            CHECK(int(cls2.members.size()) == inst.m() * inst.n());
            BigInt total = 0;
            for (const Solution& member : cls2.members) total += evaluate(inst, member);
            CHECK(Rational(total) == Rational(inst.m() * inst.n()) * average_value(inst));
        }
}

TEST_CASE("each class hits every product x_ij y_kl exactly once") {
    const Instance inst = random_instance(Variant::BQAP1, 2, 3, -2, 2, 17);
    const Solution sol = random_solution(inst, 3);
    const EquivalenceClass cls = equivalence_class(inst, sol);
    for (int i = 1; i <= inst.m(); ++i)
        for (int j = 1; j <= inst.sigma_range(); ++j)
            for (int k = 1; k <= inst.tau_range(); ++k)
                for (int l = 1; l <= inst.n(); ++l) {
                    int hits = 0;
                    for (const Solution& member : cls.members)
                        if (member.sigma[i - 1] == j && member.tau[l - 1] == k) ++hits;
                    CHECK(hits == 1);
                }
}

TEST_CASE("classes of two solutions are disjoint or identical") {
    const Instance inst = random_instance(Variant::BQAP2, 3, 2, -5, 5, 23);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Solution a = random_solution(inst, 2 * seed);
        const Solution b = random_solution(inst, 2 * seed + 1);
        std::set<Solution> class_a, class_b;
        for (const Solution& s : equivalence_class(inst, a).members) class_a.insert(s);
        for (const Solution& s : equivalence_class(inst, b).members) class_b.insert(s);
        std::size_t common = 0;
        for (const Solution& s : class_a) common += class_b.count(s);
        CHECK((common == 0 || class_a == class_b));
    }
}

TEST_CASE("every class straddles the average") {
    const Instance inst = random_instance(Variant::BQAP1, 3, 3, -9, 9, 31);
    const Rational avg = average_value(inst);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const EquivalenceClass cls = equivalence_class(inst, random_solution(inst, seed));
        bool above = false, below = false;
        for (const Solution& member : cls.members) {
            const Rational v(evaluate(inst, member));
            above |= v >= avg;
            below |= v <= avg;
        }
        CHECK(above);
        CHECK(below);
    }
}

TEST_CASE("domination_ratio arithmetic") {
    CHECK(domination_ratio(4, 16).ratio == Rational(1, 4));
    CHECK(domination_ratio(16, 16).ratio == 1);
    CHECK_THROWS_AS(domination_ratio(0, 16), ValidationError);
    CHECK_THROWS_AS(domination_ratio(17, 16), ValidationError);
}
