#include "bqap/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bqap/analytics.hpp"
#include "bqap/codec.hpp"
#include "bqap/gadgets.hpp"
#include "bqap/heuristics.hpp"
#include "bqap/model.hpp"
#include "bqap/oracle.hpp"

namespace bqap::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << content;
}

std::string sidecar_path(const std::string& out_path) {
    const std::string suffix = ".json";
    if (out_path.size() > suffix.size() &&
        out_path.compare(out_path.size() - suffix.size(), suffix.size(), suffix) == 0)
        return out_path.substr(0, out_path.size() - suffix.size()) + ".meta.json";
    return out_path + ".meta.json";
}

BigInt enumeration_limit(std::int64_t flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("BQAP_LIMIT")) {
        try {
            return BigInt(std::string(env));
        } catch (const std::exception&) {
            throw ParseError("BQAP_LIMIT is not an integer");
        }
    }
    return kDefaultEnumerationLimit;
}

json solution_json(const Instance& inst, const Solution& sol) {
    json sigma = json::array(), tau = json::array();
    for (int v : sol.sigma) sigma.push_back(v - 1);
    for (int v : sol.tau) tau.push_back(v - 1);
    return json{{"variant", int(inst.variant())}, {"sigma", sigma}, {"tau", tau}};
}

std::string solution_line(const Solution& sol) {
    std::ostringstream line;
    line << "sigma =";
    for (int v : sol.sigma) line << ' ' << v - 1;
    line << "  tau =";
    for (int v : sol.tau) line << ' ' << v - 1;
    return line.str();
}

struct GenOptions {
    std::string kind;
    std::string out;
    std::string instance_path;
    int variant = 1;
    int m = 2, n = 2;
    std::int64_t lo = -9, hi = 9;
    std::uint64_t seed = 0;
    std::int64_t big_l = 0;
    std::int64_t eps = 1;
    int a = 2, b = 1;
    std::vector<std::int64_t> elements;
    std::vector<int> q_index{1, 1, 1, 1};
};

int run_gen(const GenOptions& opt, std::ostream& out) {
    std::optional<GadgetBundle> bundle;
    if (opt.kind == "random") {
        const Instance inst = random_instance(Variant(opt.variant), opt.m, opt.n,
                                              opt.lo, opt.hi, opt.seed);
        write_file(opt.out, encode_instance(inst));
        out << "wrote " << opt.out << "\n";
        return 0;
    }
    if (opt.kind == "tightness") {
        bundle = tightness_instance(Variant(opt.variant), opt.m, opt.n,
                                    opt.q_index[0], opt.q_index[1],
                                    opt.q_index[2], opt.q_index[3]);
    } else if (opt.kind == "adversarial") {
        bundle = adversarial_instance(Variant(opt.variant), opt.m, opt.n,
                                      opt.big_l > 0 ? opt.big_l : 100, opt.eps);
    } else if (opt.kind == "partition") {
        bundle = partition_gadget(opt.elements);
    } else if (opt.kind == "embed") {
        if (opt.instance_path.empty())
            throw ParseError("gen --kind embed requires --instance");
        const Instance inst = decode_instance(read_file(opt.instance_path));
        const std::int64_t big_l =
            opt.big_l > 0 ? opt.big_l : default_embedding_cost(inst);
        bundle = embed_instance(inst, opt.a, opt.b, big_l);
    } else {
        throw ParseError("unknown gen kind: " + opt.kind);
    }
    write_file(opt.out, encode_instance(bundle->instance));
    write_file(sidecar_path(opt.out), bundle_metadata_to_json(*bundle));
    out << "wrote " << opt.out << " and " << sidecar_path(opt.out) << "\n";
    return 0;
}

int run_solve(const Instance& inst, const std::string& method,
              const std::string& start_path, std::uint64_t seed, bool with_trace,
              bool json_output, const std::string& out_path, std::int64_t max_iters,
              std::ostream& out) {
    Solution result;
    std::optional<SearchTrace> trace;
    std::optional<DominationCertificate> certificate;

    const auto start_solution = [&] {
        if (!start_path.empty()) return decode_solution(read_file(start_path), inst);
        return random_solution(inst, seed);
    };
    const auto fractional = [&]() -> FractionalSolution {
        if (seed != 0) return random_fractional(inst, seed);
        return uniform_fractional(inst);
    };

    if (method == "canonical") {
        result = canonical_sweep(inst).best;
    } else if (method == "rxoy") {
        result = round_x_optimize_y(inst, fractional());
    } else if (method == "ryox") {
        result = round_y_optimize_x(inst, fractional());
    } else if (method == "alternate") {
        std::tie(result, trace) = alternating(inst, start_solution());
    } else if (method == "ls-swap") {
        std::tie(result, trace) = local_search(inst, start_solution(), NeighborhoodKind::Swap, max_iters);
    } else if (method == "ls-cswap") {
        std::tie(result, trace) =
            local_search(inst, start_solution(), NeighborhoodKind::ConcurrentSwap, max_iters);
    } else if (method == "ls-oswap") {
        std::tie(result, trace) =
            local_search(inst, start_solution(), NeighborhoodKind::OptimizedSwap, max_iters);
    } else if (method == "dominate") {
        std::tie(result, certificate) = dominate(inst);
    } else {
        throw ParseError("unknown solve method: " + method);
    }

    const std::int64_t value = evaluate(inst, result);
    if (json_output) {
        json j;
        j["method"] = method;
        j["value"] = value;
        j["solution"] = solution_json(inst, result);
        if (with_trace && trace) j["trace"] = json::parse(trace_to_json(*trace));
        if (with_trace && certificate)
            j["certificate"] = json::parse(certificate_to_json(*certificate, inst));
        out << j.dump(2) << "\n";
    } else {
        out << "value = " << value << "\n" << solution_line(result) << "\n";
        if (with_trace && trace) out << trace_to_json(*trace);
        if (with_trace && certificate) out << certificate_to_json(*certificate, inst);
    }
    if (!out_path.empty()) write_file(out_path, encode_solution(inst, result));
    return 0;
}

int run_exact(const Instance& inst, const BigInt& limit, int threads,
              const std::string& dominates_path, bool json_output, std::ostream& out) {
    const EnumerationReport report = enumerate_report(inst, limit, threads);
    std::optional<BigInt> dom;
    if (!dominates_path.empty()) {
        const Solution sol = decode_solution(read_file(dominates_path), inst);
        dom = domination_count(inst, sol, limit);
    }
    if (json_output) {
        json j = json::parse(report_to_json(report, inst));
        if (dom) j["domination_count"] = dom->str();
        out << j.dump(2) << "\n";
    } else {
        out << "count = " << report.count.str() << "\n"
            << "min = " << report.min_value << "\n"
            << "max = " << report.max_value << "\n"
            << "sum = " << report.sum.str() << "\n"
            << "mean = " << to_string(report.mean) << "\n"
            << "lower_median = " << report.lower_median << "\n"
            << "upper_median = " << report.upper_median << "\n"
            << "optimum: " << solution_line(report.optimum_solution) << "\n";
        if (dom) out << "domination_count = " << dom->str() << "\n";
    }
    return 0;
}

int run_verify(const Instance& inst, const BigInt& limit, bool json_output,
               std::ostream& out) {
    struct Property {
        std::string name;
        std::string status;  // pass / fail / skip
        std::string detail;
    };
    std::vector<Property> properties;
    const bool enumerable = solution_space_size(inst) <= limit;
    const Rational avg = average_value(inst);

    if (enumerable) {
        const EnumerationReport report = enumerate_report(inst, limit);
        properties.push_back({"average-vs-enumeration",
                              report.mean == avg ? "pass" : "fail",
                              "closed form " + to_string(avg) + ", enumeration " +
                                  to_string(report.mean)});
        const BigInt count = count_at_least_average(inst, limit);
        const BigInt bound =
            boost::multiprecision::pow(BigInt(inst.sigma_range()), inst.m() - 1) *
            boost::multiprecision::pow(BigInt(inst.tau_range()), inst.n() - 1);
        properties.push_back({"at-least-average-bound",
                              count >= bound ? "pass" : "fail",
                              "count " + count.str() + ", bound " + bound.str()});
    } else {
        properties.push_back({"average-vs-enumeration", "skip", "space exceeds limit"});
        properties.push_back({"at-least-average-bound", "skip", "space exceeds limit"});
    }

    const CanonicalSweep sweep = canonical_sweep(inst);
    const bool straddle = Rational(sweep.best_value) <= avg && avg <= Rational(sweep.worst_value);
    properties.push_back({"canonical-straddle", straddle ? "pass" : "fail",
                          "best " + std::to_string(sweep.best_value) + ", average " +
                              to_string(avg) + ", worst " + std::to_string(sweep.worst_value)});

    const std::int64_t below = evaluate(inst, below_average_rounding(inst));
    properties.push_back({"below-average-rounding",
                          Rational(below) <= avg ? "pass" : "fail",
                          "value " + std::to_string(below) + ", average " + to_string(avg)});

    bool monotone = true;
    std::string monotone_detail;
    for (std::uint64_t seed = 1; seed <= 5 && monotone; ++seed) {
        const FractionalSolution fsol =
            seed == 1 ? uniform_fractional(inst) : random_fractional(inst, seed);
        const Rational fractional_value = evaluate_fractional(inst, fsol);
        for (const Solution& rounded : {round_x_optimize_y(inst, fsol),
                                        round_y_optimize_x(inst, fsol)}) {
            if (Rational(evaluate(inst, rounded)) > fractional_value) {
                monotone = false;
                monotone_detail = "violated at seed " + std::to_string(seed);
            }
        }
    }
    properties.push_back({"rounding-monotonicity", monotone ? "pass" : "fail",
                          monotone ? "uniform + 4 random relaxation points" : monotone_detail});

    bool failed = false;
    if (json_output) {
        json j;
        j["properties"] = json::array();
        for (const Property& p : properties) {
            j["properties"].push_back({{"name", p.name}, {"status", p.status}, {"detail", p.detail}});
            failed |= p.status == "fail";
        }
        out << j.dump(2) << "\n";
    } else {
        for (const Property& p : properties) {
            out << p.status << "  " << p.name << "  (" << p.detail << ")\n";
            failed |= p.status == "fail";
        }
    }
    return failed ? 1 : 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"BQAP laboratory: exact analytics, enumeration oracle and heuristics "
                 "for the two bipartite quadratic assignment variants"};
    app.require_subcommand(1);

    bool json_output = false;
    app.add_flag("--json", json_output, "machine-readable JSON output");

    GenOptions gen_opt;
    CLI::App* gen = app.add_subcommand("gen", "generate an instance or gadget");
    gen->add_option("--kind", gen_opt.kind, "random|tightness|adversarial|partition|embed")
        ->required();
    gen->add_option("--out", gen_opt.out, "output instance file")->required();
    gen->add_option("--variant", gen_opt.variant)->check(CLI::Range(1, 2));
    gen->add_option("--m", gen_opt.m);
    gen->add_option("--n", gen_opt.n);
    gen->add_option("--lo", gen_opt.lo);
    gen->add_option("--hi", gen_opt.hi);
    gen->add_option("--seed", gen_opt.seed);
    gen->add_option("--L", gen_opt.big_l);
    gen->add_option("--eps", gen_opt.eps);
    gen->add_option("--a", gen_opt.a, "embedding numerator");
    gen->add_option("--b", gen_opt.b, "embedding denominator");
    gen->add_option("--elements", gen_opt.elements, "partition elements");
    gen->add_option("--q-index", gen_opt.q_index, "tightness unit entry (four 1-based indices)")
        ->expected(4);
    gen->add_option("--instance", gen_opt.instance_path, "original instance (embed)");

    std::string instance_path, solution_path, start_path, dominates_path, method, out_path;
    std::uint64_t seed = 0;
    std::int64_t limit_flag = 0, max_iters = kDefaultMaxIters;
    int threads = 1;
    bool with_trace = false;

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a solution exactly");
    eval_cmd->add_option("--instance", instance_path)->required();
    eval_cmd->add_option("--solution", solution_path)->required();

    CLI::App* avg_cmd = app.add_subcommand("avg", "closed-form average value");
    avg_cmd->add_option("--instance", instance_path)->required();

    CLI::App* solve_cmd = app.add_subcommand("solve", "run a heuristic");
    solve_cmd->add_option("--instance", instance_path)->required();
    solve_cmd
        ->add_option("--method", method,
                     "canonical|rxoy|ryox|alternate|ls-swap|ls-cswap|ls-oswap|dominate")
        ->required();
    solve_cmd->add_option("--start", start_path, "starting solution file");
    solve_cmd->add_option("--seed", seed, "seed for random start / random relaxation point");
    solve_cmd->add_option("--max-iters", max_iters);
    solve_cmd->add_option("--out", out_path, "write the solution file here");
    solve_cmd->add_flag("--trace", with_trace, "include the search trace");

    CLI::App* exact_cmd = app.add_subcommand("exact", "full enumeration report");
    exact_cmd->add_option("--instance", instance_path)->required();
    exact_cmd->add_option("--limit", limit_flag, "enumeration limit (default 10^7)");
    exact_cmd->add_option("--threads", threads);
    exact_cmd->add_option("--dominates", dominates_path, "report this solution's domination count");

    CLI::App* dominate_cmd = app.add_subcommand("dominate", "guaranteed-domination procedure");
    dominate_cmd->add_option("--instance", instance_path)->required();
    dominate_cmd->add_option("--out", out_path, "write the solution file here");
    dominate_cmd->add_flag("--trace", with_trace, "include the certificate");

    CLI::App* verify_cmd = app.add_subcommand("verify", "instance-level property suite");
    verify_cmd->add_option("--instance", instance_path)->required();
    verify_cmd->add_option("--limit", limit_flag, "enumeration limit (default 10^7)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (gen->parsed()) return run_gen(gen_opt, out);

        const Instance inst = decode_instance(read_file(instance_path));
        if (eval_cmd->parsed()) {
            const Solution sol = decode_solution(read_file(solution_path), inst);
            const std::int64_t value = evaluate(inst, sol);
            if (json_output)
                out << json{{"value", value}}.dump(2) << "\n";
            else
                out << value << "\n";
            return 0;
        }
        if (avg_cmd->parsed()) {
            const Rational avg = average_value(inst);
            if (json_output)
                out << json{{"average", to_string(avg)}}.dump(2) << "\n";
            else
                out << to_string(avg) << "\n";
            return 0;
        }
        if (solve_cmd->parsed())
            return run_solve(inst, method, start_path, seed, with_trace, json_output,
                             out_path, max_iters, out);
        if (dominate_cmd->parsed())
            return run_solve(inst, "dominate", "", 0, with_trace, json_output, out_path,
                             max_iters, out);
        if (exact_cmd->parsed())
            return run_exact(inst, enumeration_limit(limit_flag), threads, dominates_path,
                             json_output, out);
        if (verify_cmd->parsed())
            return run_verify(inst, enumeration_limit(limit_flag), json_output, out);
        err << "no subcommand\n";
        return 2;
    } catch (const LimitError& e) {
        err << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        err << e.what() << "\n";
        return 2;
    }
}

}  // namespace bqap::cli
