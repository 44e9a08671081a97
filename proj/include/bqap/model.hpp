#ifndef BQAP_MODEL_HPP
#define BQAP_MODEL_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bqap {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when candidate instance/solution data violates a model invariant.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a serialized instance/solution cannot be parsed.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an exhaustive computation would exceed the enumeration limit.
class LimitError : public std::runtime_error {
public:
    LimitError(BigInt required, BigInt limit);
    const BigInt& required() const { return required_; }
    const BigInt& limit() const { return limit_; }

private:
    BigInt required_;
    BigInt limit_;
};

enum class Variant : int { BQAP1 = 1, BQAP2 = 2 };

/// Assignment pair encoding a feasible 0-1 solution compactly.
///
/// sigma[i] is the column holding the unit entry in row i of the x matrix,
/// tau[j] is the row holding the unit entry in column j of the y matrix.
/// Entries are 1-based.
struct Solution {
    std::vector<int> sigma;
    std::vector<int> tau;

    auto operator<=>(const Solution&) const = default;
};

/// A BQAP1 or BQAP2 instance with integer costs.
///
/// Both variants share one indexing scheme once two derived ranges are fixed:
/// S = the range of sigma entries (n for BQAP1, m for BQAP2) and
/// T = the range of tau entries (m for BQAP1, n for BQAP2).
/// Then q has dimensions m x S x T x n, c is m x S and d is T x n, and the
/// objective is
///   sum_{i,j} q(i, sigma[i], tau[j], j) + sum_i c(i, sigma[i]) + sum_j d(tau[j], j).
///
/// All accessors are 1-based. Instances are immutable after construction and
/// safe to share across threads.
class Instance {
public:
    /// Checks shapes, dimensions and the overflow headroom bound, returning a
    /// valid Instance or throwing ValidationError with a distinct diagnostic.
    /// Arrays are flat in row-major index order (i,j,k,l).
    static Instance validate(Variant variant, int m, int n,
                             std::vector<std::int64_t> q,
                             std::vector<std::int64_t> c,
                             std::vector<std::int64_t> d);

    Variant variant() const { return variant_; }
    int m() const { return m_; }
    int n() const { return n_; }

    /// Range of sigma entries: n for BQAP1, m for BQAP2.
    int sigma_range() const { return sigma_range_; }
    /// Range of tau entries: m for BQAP1, n for BQAP2.
    int tau_range() const { return tau_range_; }

    std::int64_t q(int i, int j, int k, int l) const {
        return q_[((std::size_t(i - 1) * sigma_range_ + (j - 1)) * tau_range_ + (k - 1)) * n_ + (l - 1)];
    }
    std::int64_t c(int i, int j) const { return c_[std::size_t(i - 1) * sigma_range_ + (j - 1)]; }
    std::int64_t d(int i, int j) const { return d_[std::size_t(i - 1) * n_ + (j - 1)]; }

    const std::vector<std::int64_t>& q_data() const { return q_; }
    const std::vector<std::int64_t>& c_data() const { return c_; }
    const std::vector<std::int64_t>& d_data() const { return d_; }

private:
    Instance() = default;

    Variant variant_ = Variant::BQAP1;
    int m_ = 0, n_ = 0;
    int sigma_range_ = 0, tau_range_ = 0;
    std::vector<std::int64_t> q_, c_, d_;
};

/// A feasible point of the bilinear relaxation: row-stochastic x (m x S),
/// column-stochastic y (T x n), exact rational entries.
struct FractionalSolution {
    std::vector<std::vector<Rational>> x;
    std::vector<std::vector<Rational>> y;
};

/// Throws ValidationError unless sol is feasible for inst.
void check_solution(const Instance& inst, const Solution& sol);

/// Throws ValidationError unless fsol satisfies the relaxation invariants
/// (shapes, nonnegativity, row sums of x and column sums of y equal to 1).
void check_fractional(const Instance& inst, const FractionalSolution& fsol);

/// Exact objective value of a feasible solution.
std::int64_t evaluate(const Instance& inst, const Solution& sol);

/// Exact bilinear objective of a relaxation point.
Rational evaluate_fractional(const Instance& inst, const FractionalSolution& fsol);

/// Expands a Solution to the relaxation point with the same 0-1 matrices.
FractionalSolution to_fractional(const Instance& inst, const Solution& sol);

/// |F1| = n^m m^n, |F2| = m^m n^n.
BigInt solution_space_size(const Instance& inst);

/// Deterministic splittable generator (splitmix64 core). Bounded draws use
/// rejection sampling so results do not depend on the standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Uniform in [1, bound], bound >= 1.
    int uniform(int bound);
    /// Uniform in [lo, hi].
    std::int64_t uniform_range(std::int64_t lo, std::int64_t hi);
    /// Independent stream derived from this one.
    Rng split();

private:
    std::uint64_t state_;
};

/// Uniform draw over the feasible set; deterministic per seed.
Solution random_solution(const Instance& inst, std::uint64_t seed);
Solution random_solution(const Instance& inst, Rng& rng);

/// Instance with i.i.d. uniform integer costs in [lo, hi]; deterministic per seed.
Instance random_instance(Variant variant, int m, int n,
                         std::int64_t lo, std::int64_t hi, std::uint64_t seed);

/// Random feasible relaxation point (small random positive weights, normalized
/// per row of x and per column of y); deterministic per seed.
FractionalSolution random_fractional(const Instance& inst, std::uint64_t seed);

/// Uniform relaxation point: x entries 1/S, y entries 1/T.
FractionalSolution uniform_fractional(const Instance& inst);

/// "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& r);

}  // namespace bqap

#endif  // BQAP_MODEL_HPP
