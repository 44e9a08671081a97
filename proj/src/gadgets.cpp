#include "bqap/gadgets.hpp"

#include <json.hpp>

namespace bqap {

namespace {

struct Shape {
    int S, T;
    std::vector<std::int64_t> q, c, d;

    Shape(Variant variant, int m, int n)
        : S(variant == Variant::BQAP1 ? n : m),
          T(variant == Variant::BQAP1 ? m : n),
          q(std::size_t(m) * S * T * n, 0),
          c(std::size_t(m) * S, 0),
          d(std::size_t(T) * n, 0) {}

    std::int64_t& qref(int m_unused, int n, int i, int j, int k, int l) {
        (void)m_unused;
        return q[((std::size_t(i - 1) * S + (j - 1)) * T + (k - 1)) * n + (l - 1)];
    }
    std::int64_t& cref(int i, int j) { return c[std::size_t(i - 1) * S + (j - 1)]; }
    std::int64_t& dref(int n, int i, int j) { return d[std::size_t(i - 1) * n + (j - 1)]; }
};

}  // namespace

GadgetBundle tightness_instance(Variant variant, int m, int n,
                                int qi, int qj, int qk, int ql) {
    if (m < 1 || n < 1) throw ValidationError("dimensions must satisfy m >= 1 and n >= 1");
    Shape shape(variant, m, n);
    if (qi < 1 || qi > m || qj < 1 || qj > shape.S || qk < 1 || qk > shape.T ||
        ql < 1 || ql > n)
        throw ValidationError("q index out of range for this variant");
    shape.qref(m, n, qi, qj, qk, ql) = 1;
    GadgetBundle bundle{Instance::validate(variant, m, n, std::move(shape.q),
                                           std::move(shape.c), std::move(shape.d)),
                        std::nullopt,
                        {}};
    bundle.metadata["target_count"] =
        boost::multiprecision::pow(BigInt(shape.S), m - 1) *
        boost::multiprecision::pow(BigInt(shape.T), n - 1);
    return bundle;
}

GadgetBundle adversarial_instance(Variant variant, int m, int n,
                                  std::int64_t big_l, std::int64_t eps) {
    if (m < 2 || n < 2) throw ValidationError("adversarial instance requires m >= 2 and n >= 2");
    if (eps <= 0) throw ValidationError("eps must be positive");
    if (big_l <= 2 * eps) throw ValidationError("L must exceed 2*eps");
    Shape shape(variant, m, n);
    shape.cref(1, 2) = -eps;
    shape.dref(n, 2, 1) = -eps;
    shape.qref(m, n, 1, 1, 1, 1) = -big_l;
    Solution bad;
    bad.sigma.assign(m, 2);
    bad.tau.assign(n, 2);
    GadgetBundle bundle{Instance::validate(variant, m, n, std::move(shape.q),
                                           std::move(shape.c), std::move(shape.d)),
                        bad,
                        {}};
    bundle.metadata["L"] = big_l;
    bundle.metadata["eps"] = eps;
    bundle.metadata["bad_value"] = -2 * eps;
    bundle.metadata["optimal_value"] = -big_l;
    return bundle;
}

GadgetBundle partition_gadget(const std::vector<std::int64_t>& a) {
    const int n = int(a.size());
    if (n < 2 || n % 2 != 0)
        throw ValidationError("partition gadget requires an even number of elements (>= 2)");
    std::int64_t total = 0;
    for (std::int64_t v : a) {
        if (v <= 0) throw ValidationError("partition elements must be positive");
        total += v;
    }
    // Square, so BQAP1 and BQAP2 coincide; built as BQAP1.
    Shape shape(Variant::BQAP1, n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n / 2; ++j) shape.cref(i, j) = a[i - 1];
    GadgetBundle bundle{Instance::validate(Variant::BQAP1, n, n, std::move(shape.q),
                                           std::move(shape.c), std::move(shape.d)),
                        std::nullopt,
                        {}};
    bundle.metadata["sum"] = total;
    if (total % 2 == 0) bundle.metadata["target"] = total / 2;
    return bundle;
}

std::int64_t default_embedding_cost(const Instance& inst) {
    std::int64_t sum = 1;
    for (std::int64_t v : inst.q_data()) sum += v < 0 ? -v : v;
    for (std::int64_t v : inst.c_data()) sum += v < 0 ? -v : v;
    for (std::int64_t v : inst.d_data()) sum += v < 0 ? -v : v;
    return sum;
}

GadgetBundle embed_instance(const Instance& inst, int a, int b, std::int64_t big_l) {
    if (b < 1 || a <= b) throw ValidationError("embedding requires a > b >= 1");
    if (big_l < default_embedding_cost(inst))
        throw ValidationError("L must be at least 1 + the total absolute cost of the instance");
    const int scale = a * b;
    const int m = inst.m(), n = inst.n();
    const int em = scale * m, en = scale * n;
    const int S = inst.sigma_range(), T = inst.tau_range();
    Shape shape(inst.variant(), em, en);
    const int eS = shape.S, eT = shape.T;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= S; ++j)
            for (int k = 1; k <= T; ++k)
                for (int l = 1; l <= n; ++l)
                    shape.qref(em, en, i, j, k, l) = inst.q(i, j, k, l);
    for (int i = 1; i <= em; ++i)
        for (int j = 1; j <= eS; ++j) {
            const bool row_in = i <= m, col_in = j <= S;
            if (row_in && col_in)
                shape.cref(i, j) = inst.c(i, j);
            else if (row_in != col_in)
                shape.cref(i, j) = big_l;
        }
    for (int i = 1; i <= eT; ++i)
        for (int j = 1; j <= en; ++j) {
            const bool row_in = i <= T, col_in = j <= n;
            if (row_in && col_in)
                shape.dref(en, i, j) = inst.d(i, j);
            else if (row_in != col_in)
                shape.dref(en, i, j) = big_l;
        }
    GadgetBundle bundle{Instance::validate(inst.variant(), em, en, std::move(shape.q),
                                           std::move(shape.c), std::move(shape.d)),
                        std::nullopt,
                        {}};
    bundle.metadata["a"] = a;
    bundle.metadata["b"] = b;
    bundle.metadata["L"] = big_l;
    bundle.metadata["orig_m"] = m;
    bundle.metadata["orig_n"] = n;
    return bundle;
}

Solution extract_embedded_solution(const GadgetBundle& bundle, const Instance& original,
                                   const Solution& embedded_sol) {
    check_solution(bundle.instance, embedded_sol);
    const int m = original.m(), n = original.n();
    const int S = original.sigma_range(), T = original.tau_range();
    const auto om = bundle.metadata.find("orig_m");
    const auto on = bundle.metadata.find("orig_n");
    if (bundle.instance.variant() != original.variant() ||
        om == bundle.metadata.end() || on == bundle.metadata.end() ||
        om->second != m || on->second != n)
        throw ValidationError("bundle does not embed the given instance");
    Solution extracted;
    for (int i = 1; i <= bundle.instance.m(); ++i) {
        const int j = embedded_sol.sigma[i - 1];
        if (i <= m) {
            if (j > S)
                throw ValidationError("embedded solution assigns original row " +
                                      std::to_string(i) + " outside the original range");
            extracted.sigma.push_back(j);
        } else if (j <= S) {
            throw ValidationError("embedded solution assigns padding row " +
                                  std::to_string(i) + " inside the original range");
        }
    }
    for (int j = 1; j <= bundle.instance.n(); ++j) {
        const int k = embedded_sol.tau[j - 1];
        if (j <= n) {
            if (k > T)
                throw ValidationError("embedded solution assigns original column " +
                                      std::to_string(j) + " outside the original range");
            extracted.tau.push_back(k);
        } else if (k <= T) {
            throw ValidationError("embedded solution assigns padding column " +
                                  std::to_string(j) + " inside the original range");
        }
    }
    return extracted;
}

std::string bundle_metadata_to_json(const GadgetBundle& bundle) {
    nlohmann::json j;
    for (const auto& [key, value] : bundle.metadata) j["metadata"][key] = value.str();
    if (bundle.distinguished_solution) {
        nlohmann::json sigma = nlohmann::json::array(), tau = nlohmann::json::array();
        for (int v : bundle.distinguished_solution->sigma) sigma.push_back(v - 1);
        for (int v : bundle.distinguished_solution->tau) tau.push_back(v - 1);
        j["distinguished_solution"]["variant"] = int(bundle.instance.variant());
        j["distinguished_solution"]["sigma"] = sigma;
        j["distinguished_solution"]["tau"] = tau;
    } else {
        j["distinguished_solution"] = nullptr;
    }
    return j.dump(2) + "\n";
}

}  // namespace bqap
