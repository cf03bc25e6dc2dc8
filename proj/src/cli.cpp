#include "cspp/cli.hpp"

#include "cspp/errors.hpp"
#include "cspp/examples.hpp"
#include "cspp/graph_io.hpp"
#include "cspp/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>

namespace cspp {

namespace {

struct Usage : Error {
    using Error::Error;
};

Json parse_params(const std::string& text, const std::vector<std::string>& pairs)
{
    Json p = Json::object();
    if (!text.empty()) {
        try {
            p = Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw Usage{std::string{"--params is not valid JSON: "} + e.what()};
        }
        if (!p.is_object())
            throw Usage{"--params must be a JSON object"};
    }
    for (const auto& kv : pairs) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw Usage{"--param expects key=value, got '" + kv + "'"};
        const auto key = kv.substr(0, eq);
        const auto val = kv.substr(eq + 1);
        try {
            p[key] = Json::parse(val);
        } catch (const Json::parse_error&) {
            p[key] = val;
        }
    }
    return p;
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream f{path, std::ios::binary};
    if (!f)
        throw Usage{"cannot write '" + path + "'"};
    f << text;
}

Json result_to_json(const SolveResult& r, std::string_view algorithm)
{
    Json out{{"algorithm", algorithm}, {"status", status_name(r.status)}, {"iterations", r.iterations},
             {"values", valuation_to_json(r.d)}};
    if (!r.divergent.empty())
        out["divergent"] = r.divergent;
    if (!r.monitor.empty() || r.monitor_truncated) {
        Json mon = Json::array();
        for (const auto& e : r.monitor) {
            Json m{{"state", e.state}, {"transition", e.transition},
                   {"slot_values", valuation_to_json(e.slot_values)}, {"sigma", weight_to_json(e.sigma)}};
            if (e.slot)
                m["slot"] = *e.slot;
            else
                m["below_xi"] = true;
            mon.push_back(std::move(m));
        }
        out["monitor_witnesses"] = std::move(mon);
        if (r.monitor_truncated)
            out["monitor_truncated"] = true;
    }
    return out;
}

QueueKind queue_kind(const std::string& q) { return q == "binary" ? QueueKind::Binary : QueueKind::Fibonacci; }

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Coalgebraic shortest path solver", "cspp"};
    app.require_subcommand(1);
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for every random choice")->capture_default_str();

    std::string graph_path;
    std::size_t max_iters = 0;
    std::optional<double> tol;

    // solve
    auto* solve = app.add_subcommand("solve", "compute the valuation of a graph");
    std::string algorithm = "dijkstra";
    std::string queue = "fib";
    bool monitor = false;
    solve->add_option("--graph", graph_path, "graph file")->required();
    solve->add_option("--algorithm", algorithm)->check(CLI::IsMember({"kleene", "dijkstra", "dijkstra-heap"}))->capture_default_str();
    solve->add_option("--max-iters", max_iters, "Kleene iteration cap (0: 10V+100)");
    solve->add_option("--tol", tol, "Kleene tolerance, float mode");
    solve->add_flag("--monitor", monitor, "record expansiveness violations during Dijkstra");
    solve->add_option("--queue", queue)->check(CLI::IsMember({"fib", "binary"}))->capture_default_str();

    // trace
    auto* trace = app.add_subcommand("trace", "print the Dijkstra iteration table");
    trace->add_option("--graph", graph_path, "graph file")->required();

    // compare
    auto* compare = app.add_subcommand("compare", "cross-check all solvers; exit 2 on disagreement");
    std::optional<std::size_t> rt_height;
    compare->add_option("--graph", graph_path, "graph file")->required();
    compare->add_option("--run-tree-height", rt_height, "also compare against run trees up to this height");
    compare->add_option("--max-iters", max_iters);
    compare->add_option("--tol", tol);
    compare->add_option("--queue", queue)->check(CLI::IsMember({"fib", "binary"}))->capture_default_str();

    // check-expansive
    auto* check = app.add_subcommand("check-expansive", "decide or sample expansiveness of an instance");
    std::string instance_id;
    std::string params_text;
    std::vector<std::string> param_pairs;
    std::string mode = "auto";
    std::size_t depth = 3;
    std::size_t draws = 4;
    std::size_t eval_budget = ClosureLimits{}.eval_budget;
    std::size_t value_cap = ClosureLimits{}.value_cap;
    check->add_option("--instance", instance_id);
    check->add_option("--params", params_text, "instance parameters as a JSON object");
    check->add_option("--param", param_pairs, "one instance parameter, key=value");
    check->add_option("--mode", mode)->check(CLI::IsMember({"auto", "analytic", "sample", "from-graph"}))->capture_default_str();
    check->add_option("--depth", depth)->capture_default_str();
    check->add_option("--graph", graph_path, "graph file for from-graph mode");
    check->add_option("--draws", draws, "random payloads on top of the fixed grid")->capture_default_str();
    check->add_option("--budget", eval_budget, "maximum σ evaluations")->capture_default_str();
    check->add_option("--value-cap", value_cap)->capture_default_str();

    // counterexample
    auto* cex = app.add_subcommand("counterexample", "build a graph on which Dijkstra fails");
    std::string witness_path;
    std::string out_path;
    bool search = false;
    cex->add_option("--witness", witness_path, "witness JSON");
    cex->add_option("--instance", instance_id);
    cex->add_option("--params", params_text);
    cex->add_option("--param", param_pairs);
    cex->add_flag("--search", search, "search for a witness first");
    cex->add_option("--depth", depth)->capture_default_str();
    cex->add_option("--draws", draws)->capture_default_str();
    cex->add_option("--out", out_path, "write the graph here instead of stdout");

    // examples
    auto* ex = app.add_subcommand("examples", "bundled example graphs");
    std::string emit;
    std::string emit_all;
    bool list = false;
    ex->add_option("--emit", emit, "example name");
    ex->add_option("--out", out_path);
    ex->add_option("--emit-all", emit_all, "write every example into this directory");
    ex->add_flag("--list", list);

    // bench
    auto* bench = app.add_subcommand("bench", "time the Dijkstra solvers on a random sparse graph");
    std::size_t V = 1000;
    std::size_t E = 5000;
    std::string solver = "both";
    std::size_t repeat = 1;
    bench->add_option("--instance", instance_id)->required();
    bench->add_option("--params", params_text);
    bench->add_option("--param", param_pairs);
    bench->add_option("--v", V)->capture_default_str();
    bench->add_option("--e", E)->capture_default_str();
    bench->add_option("--queue", queue)->check(CLI::IsMember({"fib", "binary"}))->capture_default_str();
    bench->add_option("--solver", solver)->check(CLI::IsMember({"both", "dijkstra", "dijkstra-heap"}))->capture_default_str();
    bench->add_option("--repeat", repeat)->capture_default_str();

    std::vector<std::string> rev{args.rbegin(), args.rend()};
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (*solve) {
            const auto g = load_graph_file(graph_path);
            SolveResult r;
            if (algorithm == "kleene")
                r = kleene_gfp(g, KleeneOptions{max_iters, tol});
            else if (algorithm == "dijkstra")
                r = coalg_dijkstra(g, DijkstraOptions{false, monitor, 0.0});
            else
                r = coalg_dijkstra_heap(g, HeapOptions{queue_kind(queue), 0.0});
            out << result_to_json(r, algorithm).dump(2) << "\n";
            return 0;
        }
        if (*trace) {
            const auto g = load_graph_file(graph_path);
            out << render_trace(*coalg_dijkstra(g, DijkstraOptions{true, false, 0.0}).trace);
            return 0;
        }
        if (*compare) {
            const auto g = load_graph_file(graph_path);
            CrossCheckConfig cfg;
            cfg.max_iters = max_iters;
            cfg.tol = tol;
            cfg.run_tree_height = rt_height;
            cfg.queue = queue_kind(queue);
            const auto r = cross_check(g, cfg);
            out << report_to_json(r).dump(2) << "\n";
            return r.disagreement ? 2 : 0;
        }
        if (*check) {
            std::optional<WeightedGraph> g;
            if (!graph_path.empty())
                g = load_graph_file(graph_path);
            InstancePtr inst;
            if (!instance_id.empty())
                inst = make_instance(instance_id, parse_params(params_text, param_pairs));
            else if (g)
                inst = g->instance_ptr();
            else
                throw Usage{"check-expansive needs --instance or --graph"};

            OmegaSource src = OmegaSource::sample(seed, draws);
            if (mode == "analytic" || (mode == "auto" && has_analytic_verdict(*inst)))
                src = OmegaSource::analytic();
            else if (mode == "from-graph") {
                if (!g)
                    throw Usage{"from-graph mode needs --graph"};
                src = OmegaSource::from_graph(*g);
            }
            const auto r = check_expansive(*inst, depth, src, ClosureLimits{value_cap, eval_budget});
            Json j = Json{{"instance", Json{{"id", inst->id}, {"params", inst->params}}},
                          {"expected", expected_name(inst->expected)}};
            j.update(report_to_json(r));
            if (inst->modality.kind() == Modality::Kind::DiscountedGame)
                j["bardi_lopez"] = report_to_json(bardi_lopez(*inst));
            out << j.dump(2) << "\n";
            return 0;
        }
        if (*cex) {
            Witness w;
            if (!witness_path.empty()) {
                w = witness_from_json(Json::parse(read_text_file(witness_path)));
            } else if (search && !instance_id.empty()) {
                const auto inst = make_instance(instance_id, parse_params(params_text, param_pairs));
                const auto src = has_analytic_verdict(*inst) ? OmegaSource::analytic() : OmegaSource::sample(seed, draws);
                const auto r = check_expansive(*inst, depth, src);
                if (!r.witness) {
                    err << "no witness found: verdict " << verdict_name(r.verdict);
                    if (!r.note.empty())
                        err << " (" << r.note << ")";
                    err << "\n";
                    return 1;
                }
                w = *r.witness;
            } else {
                throw Usage{"counterexample needs --witness W.json or --instance ID --search"};
            }
            const auto g = contraction_coalgebra(w);
            const auto r = cross_check(g);
            Json demo{{"witness", witness_to_json(w)}, {"report", report_to_json(r)}};
            if (!out_path.empty()) {
                write_file(out_path, save_graph(g));
                out << demo.dump(2) << "\n";
            } else {
                demo["graph"] = graph_to_json(g);
                out << demo.dump(2) << "\n";
            }
            return 0;
        }
        if (*ex) {
            if (list) {
                for (const auto& n : example_names())
                    out << n << "\t" << example_file_name(n) << "\n";
                return 0;
            }
            if (!emit_all.empty()) {
                for (const auto& n : example_names())
                    write_file(emit_all + "/" + example_file_name(n), save_graph(example_graph(n)));
                return 0;
            }
            if (emit.empty())
                throw Usage{"examples needs --emit NAME, --emit-all DIR or --list"};
            const auto text = save_graph(example_graph(emit));
            if (!out_path.empty())
                write_file(out_path, text);
            else
                out << text;
            return 0;
        }
        if (*bench) {
            const auto inst = make_instance(instance_id, parse_params(params_text, param_pairs));
            const auto g = random_sparse_graph(inst, V, E, seed);
            if (const auto diags = g.validate(); !diags.empty())
                throw Usage{"instance '" + inst->id + "' cannot be benchmarked: " + to_string(diags.front())};
            out << "instance,V,E,queue,solver,wall_ms,iterations\n";
            auto run = [&](std::string_view name, std::string_view qname, auto&& fn) {
                double best = 0;
                std::size_t iters = 0;
                for (std::size_t i = 0; i < std::max<std::size_t>(1, repeat); ++i) {
                    const auto t0 = std::chrono::steady_clock::now();
                    const auto r = fn();
                    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                    best = i == 0 ? ms : std::min(best, ms);
                    iters = r.iterations;
                }
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.3f", best);
                out << inst->id << "," << V << "," << E << "," << qname << "," << name << "," << buf << "," << iters
                    << "\n";
            };
            if (solver != "dijkstra-heap")
                run("dijkstra", "none", [&] { return coalg_dijkstra(g); });
            if (solver != "dijkstra")
                run("dijkstra-heap", queue, [&] { return coalg_dijkstra_heap(g, HeapOptions{queue_kind(queue), 0.0}); });
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

} // namespace cspp
