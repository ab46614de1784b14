// Command-line front end; talks to the library through the C interface.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperbolicity.h"
#include "json.hpp"

namespace {

struct GraphHandle {
    hyp_graph* g = nullptr;
    ~GraphHandle() { hyp_graph_free(g); }
};

struct ResultHandle {
    hyp_result* r = nullptr;
    ~ResultHandle() { hyp_result_free(r); }
};

struct StringHandle {
    char* s = nullptr;
    ~StringHandle() { hyp_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

[[noreturn]] void die(hyp_status status) {
    std::cerr << "error (" << hyp_status_name(status) << "): " << hyp_last_error() << "\n";
    std::exit(2);
}

void load_graph(const std::string& input, GraphHandle& out) {
    hyp_status st;
    if (input == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        st = hyp_graph_parse(buf.str().c_str(), &out.g);
    } else {
        st = hyp_graph_read_file(input.c_str(), &out.g);
    }
    if (st != HYP_OK) die(st);
}

const std::vector<std::pair<std::string, hyp_algorithm>>& algo_table() {
    static const std::vector<std::pair<std::string, hyp_algorithm>> table{
        {"brute", HYP_ALGO_BRUTE},
        {"paths", HYP_ALGO_PATHS},
        {"feedback-edge", HYP_ALGO_FEEDBACK_EDGE},
        {"degree3", HYP_ALGO_DEGREE3},
        {"vertex-cover", HYP_ALGO_VERTEX_COVER},
        {"cograph", HYP_ALGO_COGRAPH}};
    return table;
}

hyp_algorithm algo_by_name(const std::string& name) {
    for (const auto& [n, a] : algo_table())
        if (n == name) return a;
    std::cerr << "error: unknown algorithm '" << name << "'\n";
    std::exit(2);
}

unsigned default_threads() {
    if (const char* env = std::getenv("HYP_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 0;  // library default: single-threaded
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot write '" << path << "'\n";
        std::exit(2);
    }
    out << content;
}

nlohmann::json compute_json(hyp_graph* g, hyp_algorithm algo, unsigned threads) {
    hyp_options opts;
    hyp_options_init(&opts);
    opts.threads = threads;
    ResultHandle res;
    hyp_status st = hyp_compute(g, algo, &opts, &res.r);
    if (st != HYP_OK) die(st);
    StringHandle json;
    if (hyp_result_report_json(res.r, &json.s) != HYP_OK) die(HYP_ERR_INTERNAL);
    return nlohmann::json::parse(json.str());
}

int cmd_compute(const std::string& input, const std::string& algo_name, bool as_json,
                long long at_most, unsigned threads, const std::string& ilp_dump) {
    GraphHandle g;
    load_graph(input, g);
    if (!ilp_dump.empty()) {
        StringHandle dump;
        if (hyp_path_engine_debug_json(g.g, 512, &dump.s) != HYP_OK) die(HYP_ERR_INTERNAL);
        write_output(ilp_dump, dump.str() + "\n");
    }
    auto report = compute_json(g.g, algo_by_name(algo_name), threads);
    report["input"] = input;
    if (at_most >= 0) {
        report["at_most"] = {{"delta", at_most},
                             {"answer", report["delta"].get<long long>() <= at_most}};
    }
    if (as_json) {
        std::cout << report.dump() << "\n";
        return 0;
    }
    std::cout << "delta = " << report["delta"] << "  [" << algo_name << ", n=" << report["n"]
              << ", m=" << report["m"] << ", " << report["wall_ms"].get<double>() << " ms]\n";
    if (!report["witness"].is_null()) {
        std::cout << "witness:";
        for (auto& v : report["witness"]) std::cout << ' ' << v;
        std::cout << "\n";
    }
    if (at_most >= 0)
        std::cout << "at-most " << at_most << ": "
                  << (report["at_most"]["answer"].get<bool>() ? "yes" : "no") << "\n";
    return 0;
}

int cmd_reduce(const std::string& input, const std::string& rules, const std::string& out_path,
               const std::string& trace_path) {
    GraphHandle g;
    load_graph(input, g);
    GraphHandle reduced;
    StringHandle trace;
    hyp_status st = hyp_reduce(g.g, rules.c_str(), &reduced.g, &trace.s);
    if (st != HYP_OK) die(st);
    StringHandle text;
    if (hyp_graph_write_edge_list(reduced.g, &text.s) != HYP_OK) die(HYP_ERR_INTERNAL);
    write_output(out_path, text.str());
    if (!trace_path.empty())
        write_output(trace_path, trace.str() + "\n");
    else
        std::cerr << "trace: " << trace.str() << "\n";
    return 0;
}

int cmd_generate(const std::string& family, const nlohmann::json& params, std::uint64_t seed,
                 const std::string& out_path, const std::string& sidecar_path) {
    GraphHandle g;
    StringHandle sidecar;
    hyp_status st =
        hyp_generate(family.c_str(), params.dump().c_str(), seed, &g.g, &sidecar.s);
    if (st != HYP_OK) die(st);
    StringHandle text;
    if (hyp_graph_write_edge_list(g.g, &text.s) != HYP_OK) die(HYP_ERR_INTERNAL);
    write_output(out_path, text.str());
    if (!sidecar_path.empty()) write_output(sidecar_path, sidecar.str() + "\n");
    return 0;
}

int cmd_verify(unsigned trials, unsigned max_n, std::uint64_t seed, unsigned threads) {
    std::mt19937_64 rng(seed);
    unsigned failures = 0;
    for (unsigned t = 0; t < trials; ++t) {
        GraphHandle g;
        std::string label;
        std::uint64_t instance_seed = rng();
        switch (t % 4) {
            case 0: {  // sparse-to-medium random graph
                unsigned n = 8 + instance_seed % (max_n > 8 ? max_n - 7 : 1);
                double p = 0.05 + 0.25 * ((t / 4) % 5) / 5.0;
                nlohmann::json params{{"n", n}, {"p", p}};
                label = "gnp n=" + std::to_string(n) + " p=" + std::to_string(p);
                if (hyp_generate("gnp", params.dump().c_str(), instance_seed, &g.g, nullptr) !=
                    HYP_OK)
                    die(HYP_ERR_INTERNAL);
                break;
            }
            case 1: {  // random tree plus a few extra edges
                unsigned n = 8 + instance_seed % (max_n > 8 ? max_n - 7 : 1);
                nlohmann::json params{{"n", n}};
                GraphHandle tree;
                if (hyp_generate("tree", params.dump().c_str(), instance_seed, &tree.g, nullptr) !=
                    HYP_OK)
                    die(HYP_ERR_INTERNAL);
                StringHandle text;
                hyp_graph_write_edge_list(tree.g, &text.s);
                std::ostringstream edges;
                edges << text.str();
                std::mt19937_64 extra_rng(instance_seed ^ 0x9e3779b97f4a7c15ull);
                unsigned extra = 1 + extra_rng() % 5;
                for (unsigned i = 0; i < extra; ++i) {
                    unsigned u = extra_rng() % n, v = extra_rng() % n;
                    if (u != v) edges << u << ' ' << v << '\n';
                }
                // the header would now disagree with the edge count; strip it
                std::string cooked = edges.str();
                cooked = cooked.substr(cooked.find('\n') + 1);
                cooked = "p " + std::to_string(n) + " 0\n" + cooked;
                label = "tree+edges n=" + std::to_string(n);
                if (hyp_graph_parse(cooked.c_str(), &g.g) != HYP_OK) die(HYP_ERR_PARSE);
                break;
            }
            case 2: {  // theta family
                std::mt19937_64 lr(instance_seed);
                std::vector<unsigned> lengths;
                unsigned count = 2 + lr() % 4;
                for (unsigned i = 0; i < count; ++i) lengths.push_back(2 + lr() % 6);
                nlohmann::json params{{"lengths", lengths}};
                label = "theta";
                if (hyp_generate("theta", params.dump().c_str(), instance_seed, &g.g, nullptr) !=
                    HYP_OK)
                    die(HYP_ERR_INTERNAL);
                break;
            }
            default: {  // plain cycle
                unsigned len = 4 + instance_seed % 30;
                nlohmann::json params{{"length", len}};
                label = "cycle " + std::to_string(len);
                if (hyp_generate("cycle", params.dump().c_str(), instance_seed, &g.g, nullptr) !=
                    HYP_OK)
                    die(HYP_ERR_INTERNAL);
                break;
            }
        }

        auto expect = compute_json(g.g, HYP_ALGO_BRUTE, threads)["delta"].get<long long>();
        bool ok = true;
        for (const auto& [name, algo] : algo_table()) {
            if (algo == HYP_ALGO_BRUTE) continue;
            auto got = compute_json(g.g, algo, threads)["delta"].get<long long>();
            if (got != expect) {
                ok = false;
                std::cout << "MISMATCH trial " << t << " (" << label << "): " << name << " said "
                          << got << ", oracle says " << expect << "\n";
            }
        }
        if (!ok) {
            ++failures;
            StringHandle text;
            hyp_graph_write_edge_list(g.g, &text.s);
            std::cout << "offending edge list:\n" << text.str();
        }
    }
    std::cout << (failures ? "FAIL" : "PASS") << ": " << trials - failures << "/" << trials
              << " trials agreed across all algorithms\n";
    return failures ? 1 : 0;
}

int cmd_bench(const std::string& family, const std::vector<unsigned>& sizes,
              unsigned repeats, const std::vector<std::string>& algos, unsigned threads) {
    std::cout << "family,size,algo,wall_ms,parameter\n";
    for (unsigned size : sizes) {
        nlohmann::json params;
        if (family == "gnp")
            params = {{"n", size}, {"p", 3.0 / size}};
        else if (family == "cycle")
            params = {{"length", size}};
        else if (family == "tree")
            params = {{"n", size}};
        else if (family == "theta") {
            // four hub-to-hub chains of roughly equal length
            unsigned chain = std::max(2u, size / 4);
            params = {{"lengths", std::vector<unsigned>{chain, chain + 1, chain + 2, chain + 3}}};
        } else {
            std::cerr << "error: bench family must be gnp|cycle|tree|theta\n";
            return 2;
        }
        GraphHandle g;
        if (hyp_generate(family.c_str(), params.dump().c_str(), 42, &g.g, nullptr) != HYP_OK)
            die(HYP_ERR_INTERNAL);
        for (const auto& name : algos) {
            hyp_algorithm algo = algo_by_name(name);
            double best_ms = 0;
            nlohmann::json report;
            for (unsigned r = 0; r < repeats; ++r) {
                report = compute_json(g.g, algo, threads);
                double ms = report["wall_ms"].get<double>();
                if (r == 0 || ms < best_ms) best_ms = ms;
            }
            std::string param = "";
            const auto& p = report["parameters"];
            for (const char* key : {"cover_size", "feedback_edges", "high_degree_vertices",
                                    "deletion_set_size"})
                if (p.contains(key)) {
                    param = std::to_string(p[key].get<long long>());
                    break;
                }
            std::cout << family << ',' << size << ',' << name << ',' << best_ms << ',' << param
                      << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph hyperbolicity: brute-force oracle and parameterized algorithms"};
    app.require_subcommand(1);
    unsigned threads = default_threads();
    app.add_option("--threads", threads, "worker cap for the oracle (default HYP_THREADS or 1)");

    // compute
    auto* compute = app.add_subcommand("compute", "compute delta of an edge-list file");
    std::string input, algo = "brute", ilp_dump;
    bool as_json = false;
    long long at_most = -1;
    compute->add_option("input", input, "edge-list file, or - for stdin")->required();
    compute->add_option("--algo", algo,
                        "brute|paths|feedback-edge|degree3|vertex-cover|cograph");
    compute->add_flag("--json", as_json, "emit the full run report as JSON");
    compute->add_option("--at-most", at_most, "also answer the decision variant delta <= D");
    compute->add_option("--ilp-dump", ilp_dump,
                        "write the path engine's case ILPs as JSON to this file");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "apply reduction rules and emit the reduced graph");
    std::string rules = "1", out_path, trace_path;
    reduce->add_option("input", input, "edge-list file, or - for stdin")->required();
    reduce->add_option("--rules", rules, "comma-separated rules out of 1,2,3");
    reduce->add_option("-o,--output", out_path, "reduced edge-list destination (default stdout)");
    reduce->add_option("--trace", trace_path, "trace JSON destination (default stderr)");

    // generate
    auto* gen = app.add_subcommand("generate", "write a generated instance as an edge list");
    std::string family = "gnp", sidecar_path;
    std::uint64_t seed = 1;
    unsigned gen_n = 20, gen_ell = 8, gen_length = 9;
    double gen_p = 0.1;
    std::vector<unsigned> gen_lengths{2, 3, 4};
    std::vector<unsigned> gen_parts{2, 2, 2, 2};
    bool force_no = false;
    gen->add_option("--family", family, "ov|4is|cycle|tree|gnp|theta")->required();
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--n", gen_n, "vertex/vector count (gnp, tree, ov)");
    gen->add_option("--p", gen_p, "edge probability (gnp, 4is)");
    gen->add_option("--ell", gen_ell, "vector length (ov)");
    gen->add_option("--length", gen_length, "cycle length");
    gen->add_option("--lengths", gen_lengths, "theta chain lengths")->delimiter(',');
    gen->add_option("--parts", gen_parts, "4is part sizes")->delimiter(',');
    gen->add_flag("--force-no", force_no, "plant an all-ones dimension (ov no-instance)");
    gen->add_option("-o,--output", out_path, "edge-list destination (default stdout)");
    gen->add_option("--sidecar", sidecar_path, "landmark/ground-truth JSON destination");

    // verify
    auto* verify = app.add_subcommand("verify", "cross-check all algorithms against the oracle");
    unsigned trials = 50, max_n = 32;
    verify->add_option("--trials", trials, "number of seeded instances");
    verify->add_option("--max-n", max_n, "vertex cap for generated instances");
    verify->add_option("--seed", seed, "base seed");

    // bench
    auto* bench = app.add_subcommand("bench", "CSV timings over a size sweep");
    std::vector<unsigned> sizes{100, 1000};
    std::vector<std::string> algo_list{"paths"};
    unsigned repeats = 3;
    bench->add_option("--family", family, "gnp|cycle|tree|theta")->required();
    bench->add_option("--sizes", sizes, "comma-separated sizes")->delimiter(',')->required();
    bench->add_option("--repeats", repeats, "repetitions per point (best taken)");
    bench->add_option("--algos", algo_list, "algorithms to time")->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    if (compute->parsed()) return cmd_compute(input, algo, as_json, at_most, threads, ilp_dump);
    if (reduce->parsed()) return cmd_reduce(input, rules, out_path, trace_path);
    if (gen->parsed()) {
        nlohmann::json params;
        if (family == "ov")
            params = {{"n", gen_n}, {"ell", gen_ell}, {"force_no", force_no}};
        else if (family == "4is")
            params = {{"parts", gen_parts}, {"p", gen_p}};
        else if (family == "cycle")
            params = {{"length", gen_length}};
        else if (family == "tree")
            params = {{"n", gen_n}};
        else if (family == "gnp")
            params = {{"n", gen_n}, {"p", gen_p}};
        else if (family == "theta")
            params = {{"lengths", gen_lengths}};
        return cmd_generate(family, params, seed, out_path, sidecar_path);
    }
    if (verify->parsed()) return cmd_verify(trials, max_n, seed, threads);
    if (bench->parsed()) return cmd_bench(family, sizes, repeats, algo_list, threads);
    return 0;
}
