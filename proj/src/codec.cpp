#include "bqap/codec.hpp"

#include <json.hpp>

namespace bqap {

using nlohmann::json;

namespace {

std::int64_t get_int(const json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw ParseError(where + ": expected an integer");
    return j.get<std::int64_t>();
}

// Flattens a nested array of the given dimensions, checking shape exactly.
void flatten(const json& j, const std::vector<int>& dims, std::size_t level,
             const std::string& where, std::vector<std::int64_t>& out) {
    if (level == dims.size()) {
        out.push_back(get_int(j, where));
        return;
    }
    if (!j.is_array() || int(j.size()) != dims[level])
        throw ParseError(where + ": expected an array of length " +
                         std::to_string(dims[level]) + " at nesting level " +
                         std::to_string(level));
    for (const auto& elem : j) flatten(elem, dims, level + 1, where, out);
}

json nest(const std::vector<std::int64_t>& flat, const std::vector<int>& dims,
          std::size_t level, std::size_t& pos) {
    json j = json::array();
    if (level + 1 == dims.size()) {
        for (int t = 0; t < dims[level]; ++t) j.push_back(flat[pos++]);
    } else {
        for (int t = 0; t < dims[level]; ++t) j.push_back(nest(flat, dims, level + 1, pos));
    }
    return j;
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON");
    if (!j.is_object()) throw ParseError("top-level value must be a JSON object");
    return j;
}

const json& field(const json& j, const std::string& name) {
    auto it = j.find(name);
    if (it == j.end()) throw ParseError("missing field \"" + name + "\"");
    return *it;
}

}  // namespace

std::string encode_instance(const Instance& inst) {
    const int m = inst.m(), n = inst.n();
    const int S = inst.sigma_range(), T = inst.tau_range();
    std::size_t pos = 0;
    json j;
    j["variant"] = int(inst.variant());
    j["m"] = m;
    j["n"] = n;
    j["q"] = nest(inst.q_data(), {m, S, T, n}, 0, pos);
    pos = 0;
    j["c"] = nest(inst.c_data(), {m, S}, 0, pos);
    pos = 0;
    j["d"] = nest(inst.d_data(), {T, n}, 0, pos);
    return j.dump(2) + "\n";
}

Instance decode_instance(const std::string& text) {
    json j = parse(text);
    const std::int64_t variant = get_int(field(j, "variant"), "variant");
    if (variant != 1 && variant != 2)
        throw ParseError("variant must be 1 or 2, got " + std::to_string(variant));
    const std::int64_t m = get_int(field(j, "m"), "m");
    const std::int64_t n = get_int(field(j, "n"), "n");
    if (m < 1 || n < 1) throw ParseError("m and n must be positive");
    if (m > 1000 || n > 1000) throw ParseError("m and n must be at most 1000");
    const Variant v = Variant(int(variant));
    const int S = v == Variant::BQAP1 ? int(n) : int(m);
    const int T = v == Variant::BQAP1 ? int(m) : int(n);
    std::vector<std::int64_t> q, c, d;
    flatten(field(j, "q"), {int(m), S, T, int(n)}, 0, "q", q);
    flatten(field(j, "c"), {int(m), S}, 0, "c", c);
    flatten(field(j, "d"), {T, int(n)}, 0, "d", d);
    return Instance::validate(v, int(m), int(n), std::move(q), std::move(c), std::move(d));
}

std::string encode_solution(const Instance& inst, const Solution& sol) {
    check_solution(inst, sol);
    json j;
    j["variant"] = int(inst.variant());
    json sigma = json::array(), tau = json::array();
    for (int v : sol.sigma) sigma.push_back(v - 1);
    for (int v : sol.tau) tau.push_back(v - 1);
    j["sigma"] = sigma;
    j["tau"] = tau;
    return j.dump(2) + "\n";
}

Solution decode_solution(const std::string& text, const Instance& inst) {
    json j = parse(text);
    const std::int64_t variant = get_int(field(j, "variant"), "variant");
    if (variant != std::int64_t(inst.variant()))
        throw ParseError("solution variant " + std::to_string(variant) +
                         " does not match instance variant " +
                         std::to_string(int(inst.variant())));
    const json& sigma = field(j, "sigma");
    const json& tau = field(j, "tau");
    if (!sigma.is_array() || !tau.is_array())
        throw ParseError("sigma and tau must be arrays");
    Solution sol;
    for (const auto& e : sigma) sol.sigma.push_back(int(get_int(e, "sigma")) + 1);
    for (const auto& e : tau) sol.tau.push_back(int(get_int(e, "tau")) + 1);
    check_solution(inst, sol);
    return sol;
}

}  // namespace bqap
