#include "bqap/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace bqap {

LimitError::LimitError(BigInt required, BigInt limit)
    : std::runtime_error("solution space too large: " + required.str() +
                         " exceeds limit " + limit.str()),
      required_(std::move(required)),
      limit_(std::move(limit)) {}

namespace {

std::int64_t max_abs(const std::vector<std::int64_t>& v) {
    std::int64_t best = 0;
    for (std::int64_t x : v) best = std::max(best, x < 0 ? -x : x);
    return best;
}

}  // namespace

Instance Instance::validate(Variant variant, int m, int n,
                            std::vector<std::int64_t> q,
                            std::vector<std::int64_t> c,
                            std::vector<std::int64_t> d) {
    if (variant != Variant::BQAP1 && variant != Variant::BQAP2)
        throw ValidationError("variant must be 1 or 2");
    if (m < 1 || n < 1)
        throw ValidationError("dimensions must satisfy m >= 1 and n >= 1, got m=" +
                              std::to_string(m) + " n=" + std::to_string(n));

    const int S = variant == Variant::BQAP1 ? n : m;
    const int T = variant == Variant::BQAP1 ? m : n;
    const std::size_t q_size = std::size_t(m) * S * T * n;
    const std::size_t c_size = std::size_t(m) * S;
    const std::size_t d_size = std::size_t(T) * n;
    if (q.size() != q_size)
        throw ValidationError("q has " + std::to_string(q.size()) + " entries, expected " +
                              std::to_string(q_size) + " for this variant and dimensions");
    if (c.size() != c_size)
        throw ValidationError("c has " + std::to_string(c.size()) + " entries, expected " +
                              std::to_string(c_size));
    if (d.size() != d_size)
        throw ValidationError("d has " + std::to_string(d.size()) + " entries, expected " +
                              std::to_string(d_size));

    // Headroom rule: the worst-case |objective| must fit int64 with a factor-4
    // margin, so move deltas and partial sums can never overflow.
    using Wide = __int128;
    const Wide bound = Wide(m) * n * max_abs(q) + Wide(m) * max_abs(c) + Wide(n) * max_abs(d);
    const Wide cap = Wide(std::numeric_limits<std::int64_t>::max()) / 4;
    if (bound > cap)
        throw ValidationError("cost magnitudes violate the overflow headroom bound");

    Instance inst;
    inst.variant_ = variant;
    inst.m_ = m;
    inst.n_ = n;
    inst.sigma_range_ = S;
    inst.tau_range_ = T;
    inst.q_ = std::move(q);
    inst.c_ = std::move(c);
    inst.d_ = std::move(d);
    return inst;
}

void check_solution(const Instance& inst, const Solution& sol) {
    if (int(sol.sigma.size()) != inst.m())
        throw ValidationError("sigma has length " + std::to_string(sol.sigma.size()) +
                              ", expected m=" + std::to_string(inst.m()));
    if (int(sol.tau.size()) != inst.n())
        throw ValidationError("tau has length " + std::to_string(sol.tau.size()) +
                              ", expected n=" + std::to_string(inst.n()));
    for (int v : sol.sigma)
        if (v < 1 || v > inst.sigma_range())
            throw ValidationError("sigma entry " + std::to_string(v) + " out of range [1," +
                                  std::to_string(inst.sigma_range()) + "]");
    for (int v : sol.tau)
        if (v < 1 || v > inst.tau_range())
            throw ValidationError("tau entry " + std::to_string(v) + " out of range [1," +
                                  std::to_string(inst.tau_range()) + "]");
}

void check_fractional(const Instance& inst, const FractionalSolution& fsol) {
    const int m = inst.m(), n = inst.n();
    const int S = inst.sigma_range(), T = inst.tau_range();
    if (int(fsol.x.size()) != m)
        throw ValidationError("fractional x must have m rows");
    for (const auto& row : fsol.x) {
        if (int(row.size()) != S) throw ValidationError("fractional x row has wrong length");
        Rational sum = 0;
        for (const Rational& v : row) {
            if (v < 0 || v > 1) throw ValidationError("fractional x entry outside [0,1]");
            sum += v;
        }
        if (sum != 1) throw ValidationError("fractional x row sum is " + to_string(sum) + ", expected 1");
    }
    if (int(fsol.y.size()) != T)
        throw ValidationError("fractional y must have T rows");
    for (const auto& row : fsol.y)
        if (int(row.size()) != n) throw ValidationError("fractional y row has wrong length");
    for (int j = 0; j < n; ++j) {
        Rational sum = 0;
        for (int k = 0; k < T; ++k) {
            const Rational& v = fsol.y[k][j];
            if (v < 0 || v > 1) throw ValidationError("fractional y entry outside [0,1]");
            sum += v;
        }
        if (sum != 1) throw ValidationError("fractional y column sum is " + to_string(sum) + ", expected 1");
    }
}

std::int64_t evaluate(const Instance& inst, const Solution& sol) {
    check_solution(inst, sol);
    const int m = inst.m(), n = inst.n();
    std::int64_t value = 0;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j)
            value += inst.q(i, sol.sigma[i - 1], sol.tau[j - 1], j);
    for (int i = 1; i <= m; ++i) value += inst.c(i, sol.sigma[i - 1]);
    for (int j = 1; j <= n; ++j) value += inst.d(sol.tau[j - 1], j);
    return value;
}

Rational evaluate_fractional(const Instance& inst, const FractionalSolution& fsol) {
    check_fractional(inst, fsol);
    const int m = inst.m(), n = inst.n();
    const int S = inst.sigma_range(), T = inst.tau_range();
    Rational value = 0;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= S; ++j) {
            const Rational& xij = fsol.x[i - 1][j - 1];
            if (xij == 0) continue;
            Rational inner = 0;
            for (int k = 1; k <= T; ++k)
                for (int l = 1; l <= n; ++l) {
                    if (fsol.y[k - 1][l - 1] == 0) continue;
                    inner += Rational(inst.q(i, j, k, l)) * fsol.y[k - 1][l - 1];
                }
            value += xij * inner;
        }
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= S; ++j)
            value += Rational(inst.c(i, j)) * fsol.x[i - 1][j - 1];
    for (int k = 1; k <= T; ++k)
        for (int l = 1; l <= n; ++l)
            value += Rational(inst.d(k, l)) * fsol.y[k - 1][l - 1];
    return value;
}

FractionalSolution to_fractional(const Instance& inst, const Solution& sol) {
    check_solution(inst, sol);
    FractionalSolution fsol;
    fsol.x.assign(inst.m(), std::vector<Rational>(inst.sigma_range(), 0));
    fsol.y.assign(inst.tau_range(), std::vector<Rational>(inst.n(), 0));
    for (int i = 0; i < inst.m(); ++i) fsol.x[i][sol.sigma[i] - 1] = 1;
    for (int j = 0; j < inst.n(); ++j) fsol.y[sol.tau[j] - 1][j] = 1;
    return fsol;
}

BigInt solution_space_size(const Instance& inst) {
    return boost::multiprecision::pow(BigInt(inst.sigma_range()), inst.m()) *
           boost::multiprecision::pow(BigInt(inst.tau_range()), inst.n());
}

std::uint64_t Rng::next() {
    // splitmix64 (Steele, Lea, Flood 2014)
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

int Rng::uniform(int bound) {
    return int(uniform_range(1, bound));
}

std::int64_t Rng::uniform_range(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = std::uint64_t(hi) - std::uint64_t(lo) + 1;
    if (span == 0) return std::int64_t(next());  // full 64-bit range
    const std::uint64_t reject_above = std::numeric_limits<std::uint64_t>::max() -
                                       std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t r;
    do {
        r = next();
    } while (r >= reject_above);
    return lo + std::int64_t(r % span);
}

Rng Rng::split() {
    return Rng(next() ^ 0x6a09e667f3bcc909ULL);
}

Solution random_solution(const Instance& inst, Rng& rng) {
    Solution sol;
    sol.sigma.resize(inst.m());
    sol.tau.resize(inst.n());
    for (int& v : sol.sigma) v = rng.uniform(inst.sigma_range());
    for (int& v : sol.tau) v = rng.uniform(inst.tau_range());
    return sol;
}

Solution random_solution(const Instance& inst, std::uint64_t seed) {
    Rng rng(seed);
    return random_solution(inst, rng);
}

Instance random_instance(Variant variant, int m, int n,
                         std::int64_t lo, std::int64_t hi, std::uint64_t seed) {
    if (lo > hi) throw ValidationError("random_instance requires lo <= hi");
    if (m < 1 || n < 1) throw ValidationError("dimensions must satisfy m >= 1 and n >= 1");
    const int S = variant == Variant::BQAP1 ? n : m;
    const int T = variant == Variant::BQAP1 ? m : n;
    Rng rng(seed);
    std::vector<std::int64_t> q(std::size_t(m) * S * T * n);
    std::vector<std::int64_t> c(std::size_t(m) * S);
    std::vector<std::int64_t> d(std::size_t(T) * n);
    for (auto& v : q) v = rng.uniform_range(lo, hi);
    for (auto& v : c) v = rng.uniform_range(lo, hi);
    for (auto& v : d) v = rng.uniform_range(lo, hi);
    return Instance::validate(variant, m, n, std::move(q), std::move(c), std::move(d));
}

FractionalSolution random_fractional(const Instance& inst, std::uint64_t seed) {
    Rng rng(seed);
    FractionalSolution fsol;
    const int m = inst.m(), n = inst.n();
    const int S = inst.sigma_range(), T = inst.tau_range();
    fsol.x.assign(m, std::vector<Rational>(S));
    fsol.y.assign(T, std::vector<Rational>(n));
    for (int i = 0; i < m; ++i) {
        std::vector<std::int64_t> w(S);
        std::int64_t sum = 0;
        for (auto& v : w) sum += (v = rng.uniform_range(1, 9));
        for (int j = 0; j < S; ++j) fsol.x[i][j] = Rational(w[j], sum);
    }
    for (int j = 0; j < n; ++j) {
        std::vector<std::int64_t> w(T);
        std::int64_t sum = 0;
        for (auto& v : w) sum += (v = rng.uniform_range(1, 9));
        for (int k = 0; k < T; ++k) fsol.y[k][j] = Rational(w[k], sum);
    }
    return fsol;
}

FractionalSolution uniform_fractional(const Instance& inst) {
    FractionalSolution fsol;
    fsol.x.assign(inst.m(), std::vector<Rational>(inst.sigma_range(),
                                                  Rational(1, inst.sigma_range())));
    fsol.y.assign(inst.tau_range(), std::vector<Rational>(inst.n(),
                                                          Rational(1, inst.tau_range())));
    return fsol;
}

std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace bqap
