// conesparse: sparsify conic sums from the command line.
//
// Subcommands: bss, fw, caratheodory, verify, selftest, graph, packcover,
// bench. Exit codes: 0 success / all checks pass, 1 certificate or check
// failure, 2 input error, 3 engine error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "conesparse/bss.hpp"
#include "conesparse/caratheodory.hpp"
#include "conesparse/fw.hpp"
#include "conesparse/gen.hpp"
#include "conesparse/graph.hpp"
#include "conesparse/json_io.hpp"
#include "conesparse/packcover.hpp"
#include "conesparse/verify.hpp"

namespace {

using namespace conesparse;

constexpr int kExitOk = 0;
constexpr int kExitCertificateFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitEngineError = 3;

struct CommonArgs {
    std::string instance_path;
    std::optional<double> eps;
    std::string out_path;
    std::string trace_path;
};

void emit_json(const std::string& path, const Json& j) {
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        write_json_file(path, j);
    }
}

int run_engine(const CommonArgs& args, const EngineOptions& opts, bool use_bss) {
    const SparsificationInstance inst =
        instance_from_json(parse_json_file(args.instance_path), args.eps);
    const SparsifierResult result = use_bss ? bss_sparsify(inst, opts) : fw_sparsify(inst, opts);
    const SandwichCertificate cert = certify(inst, result);
    emit_json(args.out_path, result_to_json(result, cert));
    if (!args.trace_path.empty()) write_trace_jsonl(args.trace_path, result.trace);
    std::cerr << (use_bss ? "bss" : "fw") << ": support " << result.support.size() << " of "
              << inst.input_size() << ", bound " << result.bound << ", achieved_eps "
              << result.achieved_eps << (cert.pass ? ", certificate PASS" : ", certificate FAIL")
              << "\n";
    return cert.pass ? kExitOk : kExitCertificateFail;
}

int run_caratheodory(const CommonArgs& args) {
    // Exact reduction ignores epsilon; accept a document without one.
    const Json doc = parse_json_file(args.instance_path);
    std::optional<double> eps = args.eps;
    if (!eps && !doc.contains("epsilon")) eps = 0.5;
    const SparsificationInstance inst = instance_from_json(doc, eps);
    const SparsifierResult result = caratheodory_reduce(inst);
    const SandwichCertificate cert = certify(inst, result);
    emit_json(args.out_path, result_to_json(result, cert));
    std::cerr << "caratheodory: support " << result.support.size() << " of " << inst.input_size()
              << ", rank bound " << result.bound << ", achieved_eps " << result.achieved_eps
              << "\n";
    const bool exact = cert.pass && result.achieved_eps <= 1e-7;
    return exact ? kExitOk : kExitCertificateFail;
}

int run_verify(const std::string& instance_path, const std::string& result_path,
               std::optional<double> eps) {
    const SparsificationInstance inst = instance_from_json(parse_json_file(instance_path), eps);
    const SparsifierResult result = result_from_json(parse_json_file(result_path));
    const SandwichCertificate cert = certify(inst, result);
    std::cout << certificate_to_json(cert).dump(2) << "\n";
    return cert.pass ? kExitOk : kExitCertificateFail;
}

int run_selftest(const std::string& cone_spec, int samples, std::uint64_t seed) {
    Json spec;
    try {
        spec = Json::parse(cone_spec);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("--cone: ") + e.what());
    }
    const ConeHandle cone = cone_from_json(spec);
    Json report;
    report["cone"] = cone_to_json(*cone);
    report["barrier_laws"] = law_report_to_json(barrier_law_suite(*cone, samples, seed));
    report["derivative_checks"] = law_report_to_json(derivative_check_suite(*cone, samples, seed));
    bool pass = report["barrier_laws"]["pass"].get<bool>() &&
                report["derivative_checks"]["pass"].get<bool>();
    if (cone->pairwise_self_concordant()) {
        report["pairwise_self_concordance"] =
            law_report_to_json(pairwise_sc_suite(*cone, samples, seed));
        pass = pass && report["pairwise_self_concordance"]["pass"].get<bool>();
    }
    report["pass"] = pass;
    std::cout << report.dump(2) << "\n";
    return pass ? kExitOk : kExitCertificateFail;
}

int run_graph(const std::string& in_path, double eps, const std::string& engine_name,
              const std::string& out_path, const std::string& cert_path,
              const EngineOptions& opts) {
    std::ifstream in(in_path);
    if (!in) throw ParseError("cannot open " + in_path);
    const WeightedGraph g = parse_graph(in);
    const Engine engine = engine_name == "fw" ? Engine::Fw : Engine::Bss;
    const GraphSparsifyOutput out = sparsify_graph(g, eps, engine, opts);

    if (out_path.empty()) {
        write_graph(std::cout, out.graph);
    } else {
        std::ofstream os(out_path);
        if (!os) throw Error("cannot write " + out_path);
        write_graph(os, out.graph);
    }
    if (!cert_path.empty()) {
        Json cj = certificate_to_json(out.certificate);
        cj["edges_in"] = g.edges.size();
        cj["edges_out"] = out.graph.edges.size();
        cj["bound"] = out.result.bound;
        write_json_file(cert_path, cj);
    }
    std::cerr << "graph: " << g.edges.size() << " -> " << out.graph.edges.size() << " edges, bound "
              << out.result.bound
              << (out.certificate.pass ? ", certificate PASS" : ", certificate FAIL") << "\n";
    return out.certificate.pass ? kExitOk : kExitCertificateFail;
}

int run_packcover(const std::string& instance_path, double eps, const std::string& out_path,
                  const EngineOptions& opts) {
    const Json doc = parse_json_file(instance_path);
    const PackCoverInstance inst = packcover_from_json(doc);

    Json report;
    const DualityReport duality = solve_both(inst);
    report["cover"] = duality.cover.value;
    report["pack"] = duality.pack.value;
    report["duality_gap"] = duality.gap;
    report["strong_duality"] = duality.strong_duality;
    bool pass = duality.strong_duality;

    // Cost sandwich: sparsify a decomposition of c (given as "c_parts", else
    // the coordinate decomposition) and re-solve the packing program.
    std::vector<ConeElement> parts;
    if (doc.contains("c_parts")) {
        for (const auto& row : doc["c_parts"]) {
            Vec v(row.size());
            for (std::size_t i = 0; i < row.size(); ++i) v[i] = row[i].get<double>();
            parts.emplace_back(inst.cone->shape(), std::move(v));
        }
    } else {
        for (int j = 0; j < inst.d(); ++j) {
            Vec v = Vec::Zero(inst.d());
            v[j] = inst.c.coords()[j];
            parts.push_back(ConeElement::vector(std::move(v)));
        }
    }
    SparsificationInstance decomposition(inst.cone, parts, eps, inst.c);
    const SparsifierResult sparsified = bss_sparsify(decomposition, opts);
    const ConeElement c_prime = sparsified.combination(decomposition);
    const PackSandwichReport sandwich = pack_cost_sandwich(inst, c_prime, eps);
    report["pack_sandwich"] = Json{{"pack_original", sandwich.pack_original},
                                   {"pack_perturbed", sandwich.pack_perturbed},
                                   {"cost_parts", parts.size()},
                                   {"cost_support", sparsified.support.size()},
                                   {"pass", sandwich.pass}};
    pass = pass && sandwich.pass;

    const SparseCoverReport sparse = sparse_cover_solution(inst, eps, opts);
    report["sparse_cover"] = Json{{"cover", sparse.cover_value},
                                  {"value", sparse.y_prime_value},
                                  {"support", sparse.support},
                                  {"bound", sparse.bound},
                                  {"feasible", sparse.feasible},
                                  {"pass", sparse.pass}};
    pass = pass && sparse.pass;

    report["pass"] = pass;
    emit_json(out_path, report);
    return pass ? kExitOk : kExitCertificateFail;
}

struct BenchArgs {
    std::string suite;
    int d = 4;
    int n = 4;
    int k = 2;
    int m = 100;
    double eps = 0.5;
    std::uint64_t seed = 0;
    int runs = 1;
    std::string out_path;
};

void bench_row(std::ostream& os, const char* engine, const SparsifierResult& r, double millis) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s,%zu,%lld,%.17g,%lld,%.3f\n", engine, r.support.size(),
                  r.bound, r.achieved_eps, r.iterations, millis);
    os << buf;
}

int run_bench(const BenchArgs& args, const EngineOptions& opts) {
    std::ostringstream csv;
    csv << "engine,support,bound,achieved_eps,iters,millis\n";

    for (int run = 0; run < args.runs; ++run) {
        const std::uint64_t seed = args.seed + static_cast<std::uint64_t>(run);
        std::optional<SparsificationInstance> inst;
        if (args.suite == "psd-rank1") {
            inst = gen_psd_rank1(args.d, args.m, args.eps, seed);
        } else if (args.suite == "orthant-random") {
            inst = gen_orthant_random(args.n, args.m, args.eps, seed);
        } else if (args.suite == "soc-random") {
            inst = gen_soc_random(args.n, args.m, args.eps, seed);
        } else if (args.suite == "graph-complete") {
            inst = graph_to_instance(gen_complete_graph(args.n), args.eps).instance;
        } else if (args.suite == "graph-random") {
            inst = graph_to_instance(gen_random_graph(args.n, args.m, seed), args.eps).instance;
        } else {
            throw ParseError("unknown bench suite \"" + args.suite + "\"");
        }

        for (const bool use_bss : {true, false}) {
            const auto start = std::chrono::steady_clock::now();
            const SparsifierResult r = use_bss ? bss_sparsify(*inst, opts) : fw_sparsify(*inst, opts);
            const double millis =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
            const SandwichCertificate cert = certify(*inst, r);
            if (!cert.pass) throw Error("bench run produced a failing certificate");
            bench_row(csv, use_bss ? "bss" : "fw", r, millis);
        }
    }

    if (args.out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream os(args.out_path);
        if (!os) throw Error("cannot write " + args.out_path);
        os << csv.str();
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"conesparse: sparsify conic sums with verifiable certificates"};
    app.require_subcommand(1);

    EngineOptions engine_opts;
    app.add_option("--threads", engine_opts.threads, "concurrent candidate scans (default 1)")
        ->envname("CONESPARSE_THREADS")
        ->check(CLI::PositiveNumber);

    CommonArgs bss_args;
    auto* bss = app.add_subcommand("bss", "barrier-greedy sparsifier, support <= ceil(4 nu/eps^2)");
    bss->add_option("--instance", bss_args.instance_path, "instance JSON")->required();
    bss->add_option("--eps", bss_args.eps, "override the instance epsilon");
    bss->add_option("--out", bss_args.out_path, "result JSON path (default stdout)");
    bss->add_option("--trace", bss_args.trace_path, "per-iteration trace (JSON lines)");

    CommonArgs fw_args;
    auto* fw = app.add_subcommand("fw", "Frank-Wolfe sparsifier, support <= ceil((4 nu/eps)^2)");
    fw->add_option("--instance", fw_args.instance_path, "instance JSON")->required();
    fw->add_option("--eps", fw_args.eps, "override the instance epsilon");
    fw->add_option("--out", fw_args.out_path, "result JSON path (default stdout)");
    fw->add_option("--trace", fw_args.trace_path, "per-iteration trace (JSON lines)");

    CommonArgs cara_args;
    auto* cara = app.add_subcommand("caratheodory", "exact support reduction to the span dimension");
    cara->add_option("--instance", cara_args.instance_path, "instance JSON")->required();
    cara->add_option("--out", cara_args.out_path, "result JSON path (default stdout)");

    std::string verify_instance, verify_result;
    std::optional<double> verify_eps;
    auto* verify = app.add_subcommand("verify", "re-certify a result against its instance");
    verify->add_option("--instance", verify_instance, "instance JSON")->required();
    verify->add_option("--result", verify_result, "result JSON")->required();
    verify->add_option("--eps", verify_eps, "override the instance epsilon");

    std::string selftest_cone = R"({"type":"psd","d":3})";
    int selftest_samples = 200;
    std::uint64_t selftest_seed = 0;
    auto* selftest = app.add_subcommand("selftest", "run the barrier law suites on a cone");
    selftest->add_option("--cone", selftest_cone, "cone spec JSON");
    selftest->add_option("--samples", selftest_samples, "samples per law")->check(CLI::PositiveNumber);
    selftest->add_option("--seed", selftest_seed, "rng seed");

    std::string graph_in, graph_engine = "bss", graph_out, graph_cert;
    double graph_eps = 0.5;
    auto* graph = app.add_subcommand("graph", "spectrally sparsify a weighted graph");
    graph->add_option("--in", graph_in, "edge list `i j w`, 0-based")->required();
    graph->add_option("--eps", graph_eps, "approximation parameter")->required();
    graph->add_option("--engine", graph_engine, "bss | fw")->check(CLI::IsMember({"bss", "fw"}));
    graph->add_option("--out", graph_out, "sparsified edge list (default stdout)");
    graph->add_option("--cert", graph_cert, "certificate JSON path");

    std::string pc_instance, pc_out;
    double pc_eps = 0.3;
    auto* packcover = app.add_subcommand("packcover", "packing/covering sparsification report");
    packcover->add_option("--instance", pc_instance, "pack/cover JSON")->required();
    packcover->add_option("--eps", pc_eps, "approximation parameter")->required();
    packcover->add_option("--out", pc_out, "report JSON path (default stdout)");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "seeded benchmark rows for both engines");
    bench->add_option("--suite", bench_args.suite,
                      "psd-rank1 | orthant-random | soc-random | graph-complete | graph-random")
        ->required();
    bench->add_option("--d", bench_args.d, "matrix dimension (psd-rank1)");
    bench->add_option("--n", bench_args.n, "vector dimension / vertex count");
    bench->add_option("--k", bench_args.k, "spectral epigraph column count");
    bench->add_option("--m", bench_args.m, "element count / extra random edges");
    bench->add_option("--eps", bench_args.eps, "approximation parameter");
    bench->add_option("--seed", bench_args.seed, "base rng seed");
    bench->add_option("--runs", bench_args.runs, "seeds seed..seed+runs-1")->check(CLI::PositiveNumber);
    bench->add_option("--out", bench_args.out_path, "CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (bss->parsed()) return run_engine(bss_args, engine_opts, true);
        if (fw->parsed()) return run_engine(fw_args, engine_opts, false);
        if (cara->parsed()) return run_caratheodory(cara_args);
        if (verify->parsed()) return run_verify(verify_instance, verify_result, verify_eps);
        if (selftest->parsed()) return run_selftest(selftest_cone, selftest_samples, selftest_seed);
        if (graph->parsed())
            return run_graph(graph_in, graph_eps, graph_engine, graph_out, graph_cert, engine_opts);
        if (packcover->parsed()) return run_packcover(pc_instance, pc_eps, pc_out, engine_opts);
        if (bench->parsed()) return run_bench(bench_args, engine_opts);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const InvalidInstance& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Inconsistent& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Disconnected& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const NonInterior& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const BadResult& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Infeasible& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Unbounded& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Error& e) {
        std::cerr << "engine error: " << e.what() << "\n";
        return kExitEngineError;
    }
    return kExitInputError;
}
