/*
 * Copyright 2026 the slowcol authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command line front end. Subcommands:
//   solve   exact optimal score of an instance
//   play    one or more matches between named strategies, trace JSON per line
//   verify  run a verification suite, one record JSON per line plus a summary
//   bounds  upper-bound calculators for a graph, partition, or class flags
//   gen     write an instance in the graph text format
//
// Every command is deterministic given its full flag set; --no-timestamp
// strips the only non-reproducible field from the JSON output.
//
// Exit codes: 0 success, 1 verification failure, 2 instance over the solver
// cap, 3 in-game rule or guarantee violation, 4 bad input.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "slowcol/decompose.hpp"
#include "slowcol/errors.hpp"
#include "slowcol/generators.hpp"
#include "slowcol/potential.hpp"
#include "slowcol/rng.hpp"
#include "slowcol/solver.hpp"
#include "slowcol/strategies.hpp"
#include "slowcol/verify.hpp"

namespace {

using nlohmann::json;
using namespace slowcol;

constexpr const char* kFamilies =
    "complete|multipartite|path|star|tree|maximal-outerplanar|maximal-planar|c4xpath|union|file";

struct InstanceFlags {
    std::string family;
    std::string file;  // positional graph file, implies family=file
    int n = -1;
    std::vector<int> parts;
    std::uint64_t seed = 0;
    bool has_seed = false;
};

struct OutputFlags {
    std::string out;
    bool no_timestamp = false;
};

std::string utc_timestamp() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void add_instance_flags(CLI::App* cmd, InstanceFlags& f, bool with_file) {
    cmd->add_option("--family", f.family, std::string("graph family: ") + kFamilies);
    cmd->add_option("--n", f.n, "size parameter (vertices; path length for c4xpath)");
    cmd->add_option("--parts", f.parts, "part sizes for multipartite, clique sizes for union")
        ->delimiter(',');
    cmd->add_option("--seed", f.seed, "seed for randomized families and strategies")
        ->each([&f](const std::string&) { f.has_seed = true; });
    if (with_file) cmd->add_option("file", f.file, "graph file (overrides --family)");
}

void add_output_flags(CLI::App* cmd, OutputFlags& f) {
    cmd->add_option("--out", f.out, "write output to this file instead of stdout");
    cmd->add_flag("--no-timestamp", f.no_timestamp, "omit the timestamp field");
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadInput("cannot open graph file: " + path);
    return read_graph_text(in);
}

int require_n(const InstanceFlags& f) {
    if (f.n < 0) throw BadInput("family " + f.family + " needs --n");
    return f.n;
}

Rng require_rng(const InstanceFlags& f) {
    if (!f.has_seed) throw BadInput("family " + f.family + " needs --seed");
    return Rng(f.seed);
}

Graph build_graph(const InstanceFlags& f, std::string& label) {
    if (!f.file.empty()) {
        label = f.file;
        return read_graph_file(f.file);
    }
    label = f.family;
    if (f.family == "complete") return gen_complete(require_n(f));
    if (f.family == "path") return gen_path(require_n(f));
    if (f.family == "star") return gen_star(require_n(f));
    if (f.family == "c4xpath") return gen_c4_box_path(require_n(f));
    if (f.family == "multipartite") {
        if (f.parts.empty()) throw BadInput("family multipartite needs --parts");
        return gen_complete_multipartite(f.parts);
    }
    if (f.family == "union") {
        if (f.parts.empty()) throw BadInput("family union needs --parts");
        std::vector<Graph> cliques;
        cliques.reserve(f.parts.size());
        for (int r : f.parts) cliques.push_back(gen_complete(r));
        return gen_disjoint_union(cliques);
    }
    if (f.family == "tree") {
        Rng rng = require_rng(f);
        return gen_random_tree(require_n(f), rng);
    }
    if (f.family == "maximal-outerplanar") {
        Rng rng = require_rng(f);
        return gen_maximal_outerplanar(require_n(f), rng);
    }
    if (f.family == "maximal-planar") {
        Rng rng = require_rng(f);
        return gen_maximal_planar(require_n(f), rng);
    }
    if (f.family == "file") {
        throw BadInput("family file needs a graph file argument");
    }
    if (f.family.empty()) throw BadInput("no graph given: pass --family or a graph file");
    throw BadInput("unknown family: " + f.family);
}

std::vector<WeightedPart> read_partition_file(const std::string& path, int ground) {
    std::ifstream in(path);
    if (!in) throw BadInput("cannot open partition file: " + path);
    return read_partition_text(in, ground);
}

std::unique_ptr<Painter> build_painter(const std::string& name, const Graph& g,
                                       std::optional<int> cap, bool debug) {
    if (name == "greedy") return cap ? make_greedy_painter(*cap) : make_greedy_painter();
    if (name == "optimal") return make_optimal_painter(nullptr, cap);
    if (name == "potential-4col")
        return make_potential_painter(PotentialClass::FourColorable, debug);
    if (name == "potential-outerplanar")
        return make_potential_painter(PotentialClass::Outerplanar, debug);
    if (name == "composite-forests")
        return std::make_unique<CompositePainter>(WeightedPartition(g, forest_partition(g)));
    if (name.rfind("composite:", 0) == 0) {
        auto parts = read_partition_file(name.substr(10), g.n());
        return std::make_unique<CompositePainter>(WeightedPartition(g, std::move(parts)));
    }
    throw BadInput("unknown painter: " + name);
}

std::unique_ptr<Lister> build_lister(const std::string& name, const InstanceFlags& f,
                                     std::uint64_t rep, std::optional<int> cap) {
    if (name == "full") return make_full_lister();
    if (name == "singletons") return make_singletons_lister();
    if (name == "optimal") return make_optimal_lister(nullptr, cap);
    if (name == "random" || name == "connected-random") {
        if (!f.has_seed) throw BadInput("lister " + name + " needs --seed");
        std::uint64_t seed = f.seed + rep;
        return name == "random" ? make_random_lister(seed) : make_connected_random_lister(seed);
    }
    throw BadInput("unknown lister: " + name);
}

void emit(const OutputFlags& out, const std::string& text) {
    if (out.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out.out);
    if (!f) throw BadInput("cannot open output file: " + out.out);
    f << text;
}

json q15_json(Q15 v) { return v.to_string(); }

json rat_json(const Rat& r) {
    return json{{"value", r.to_double()}, {"exact", r.to_string()}};
}

int cmd_solve(const InstanceFlags& inst, const OutputFlags& out, std::optional<int> cap,
              bool debug) {
    std::string label;
    Graph g = build_graph(inst, label);
    auto solver = std::make_shared<ExactSolver>(g, cap);

    json j;
    j["instance"] = label;
    j["n"] = g.n();
    j["m"] = g.m();
    j["sum_color_cost"] = solver->sum_color_cost();
    if (debug) {
        auto lister = make_optimal_lister(solver);
        auto painter = make_optimal_painter(solver);
        Trace t = play(g, *lister, *painter);
        j["optimal_trace"] = json::parse(trace_to_json(t));
    }
    if (!out.no_timestamp) j["timestamp"] = utc_timestamp();
    emit(out, j.dump() + "\n");
    return 0;
}

json debug_rounds_json(const Painter& painter) {
    json rounds = json::array();
    for (const PotentialRoundDebug& r : potential_debug(painter)) {
        json choices = json::array();
        for (const auto& [cls, u] : r.choices) choices.push_back({cls, q15_json(u)});
        rounds.push_back({{"round", r.round},
                          {"marked", r.marked},
                          {"phi_before", q15_json(r.phi_before)},
                          {"phi_after", q15_json(r.phi_after)},
                          {"choices", choices}});
    }
    return rounds;
}

int cmd_play(const InstanceFlags& inst, const OutputFlags& out, const std::string& painter_name,
             const std::string& lister_name, std::optional<int> cap, int reps, bool debug) {
    if (reps < 1) throw BadInput("--reps must be positive");
    std::string label;
    Graph g = build_graph(inst, label);

    std::ostringstream lines;
    for (int rep = 0; rep < reps; ++rep) {
        auto painter = build_painter(painter_name, g, cap, debug);
        auto lister = build_lister(lister_name, inst, static_cast<std::uint64_t>(rep), cap);
        Trace t = play(g, *lister, *painter);
        json j = json::parse(trace_to_json(t));
        j["instance"] = label;
        if (debug && painter->name().rfind("potential-", 0) == 0)
            j["potential_debug"] = debug_rounds_json(*painter);
        if (!out.no_timestamp) j["timestamp"] = utc_timestamp();
        lines << j.dump() << "\n";
    }
    emit(out, lines.str());
    return 0;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

int cmd_verify(const std::string& suite, const OutputFlags& out, std::uint64_t seed,
               std::optional<int> cap, std::optional<int> reps, bool csv) {
    SuiteOptions opt;
    opt.seed = seed;
    opt.cap = cap;
    if (reps) {
        opt.planar_reps = *reps;
        opt.outer_reps = *reps;
    }

    std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
    std::ostringstream lines;
    if (csv) lines << "suite,group,id,n,m,check,bound,observed,pass,detail\n";
    int failures = 0;
    for (const std::string& name : names) {
        SuiteReport rep = run_suite(name, opt);
        failures += rep.failures();
        for (const InstanceRecord& r : rep.instances) {
            if (csv) {
                lines << csv_escape(r.suite) << ',' << csv_escape(r.group) << ','
                      << csv_escape(r.id) << ',' << r.n << ',' << r.m << ','
                      << csv_escape(r.check) << ',' << r.bound << ',' << r.observed << ','
                      << (r.pass ? "true" : "false") << ',' << csv_escape(r.detail) << '\n';
            } else {
                lines << record_to_json(r) << "\n";
            }
        }
        if (!csv) {
            json summary;
            summary["suite"] = rep.suite;
            summary["seed"] = rep.seed;
            summary["instances"] = rep.instances.size();
            summary["failures"] = rep.failures();
            summary["pass"] = rep.passed();
            if (!out.no_timestamp) summary["timestamp"] = utc_timestamp();
            lines << summary.dump() << "\n";
        }
    }
    emit(out, lines.str());
    return failures == 0 ? 0 : 1;
}

int cmd_bounds(const std::string& graph_file, const std::string& partition_file,
               const OutputFlags& out, bool planar, bool outerplanar, int acyclic_k,
               std::int64_t flag_n, std::int64_t flag_m) {
    json j;
    std::optional<Graph> g;
    if (!graph_file.empty()) {
        g = read_graph_file(graph_file);
        j["n"] = g->n();
        j["m"] = g->m();
        int k = degeneracy(*g);
        j["degeneracy"] = k;
        j["degenerate_upper"] = rat_json(bound_degenerate(k, g->n()));
    }
    std::int64_t n = g ? g->n() : flag_n;
    std::int64_t m = g ? g->m() : flag_m;
    if (!g) {
        if (n >= 0) j["n"] = n;
        if (m >= 0) j["m"] = m;
    }

    if (!partition_file.empty()) {
        if (!g) throw BadInput("a partition file needs a graph file");
        WeightedPartition wp(*g, read_partition_file(partition_file, g->n()));
        BoundReport r = bound_report(*g, wp);
        j["sqrt_sum_upper"] = r.sqrt_sum;
        j["cost_sum_upper"] = rat_json(r.cost_sum);
    }
    if (planar) {
        if (n < 0 || m < 0) throw BadInput("--planar needs --n and --m (or a graph file)");
        j["planar_upper"] = rat_json(Rat(8 * n + 3 * m, 5));
    }
    if (outerplanar) {
        if (n < 0) throw BadInput("--outerplanar needs --n (or a graph file)");
        j["outerplanar_upper"] = rat_json(Rat(7 * n, 3));
    }
    if (acyclic_k > 0) {
        if (n < 0) throw BadInput("--acyclic-k needs --n (or a graph file)");
        j["acyclic_upper"] = rat_json(bound_acyclic(acyclic_k, n));
        if (acyclic_k % 2 == 1 && acyclic_k > 1)
            j["acyclic_odd_upper"] = bound_acyclic_odd(acyclic_k, n);
    }
    if (j.empty()) throw BadInput("nothing to compute: pass a graph file or class flags");
    if (!out.no_timestamp) j["timestamp"] = utc_timestamp();
    emit(out, j.dump() + "\n");
    return 0;
}

int cmd_gen(const InstanceFlags& inst, const OutputFlags& out) {
    std::string label;
    Graph g = build_graph(inst, label);
    std::ostringstream text;
    write_graph_text(g, text);
    emit(out, text.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"slow-coloring game toolkit"};
    app.require_subcommand(1);

    InstanceFlags solve_inst, play_inst, gen_inst;
    OutputFlags solve_out, play_out, verify_out, bounds_out, gen_out;
    int cap_flag = -1;
    bool solve_debug = false;

    CLI::App* solve = app.add_subcommand("solve", "exact optimal score");
    add_instance_flags(solve, solve_inst, true);
    add_output_flags(solve, solve_out);
    solve->add_option("--cap", cap_flag, "solver cap override (vertices)");
    solve->add_flag("--debug", solve_debug, "include an optimal-play trace");

    std::string painter_name = "greedy";
    std::string lister_name = "full";
    int play_cap = -1, play_reps = 1;
    bool play_debug = false;
    CLI::App* playc = app.add_subcommand("play", "play matches between strategies");
    add_instance_flags(playc, play_inst, true);
    add_output_flags(playc, play_out);
    playc->add_option("--painter", painter_name,
                      "greedy|optimal|potential-4col|potential-outerplanar|composite-forests|"
                      "composite:<partition file>");
    playc->add_option("--lister", lister_name, "full|singletons|random|connected-random|optimal");
    playc->add_option("--cap", play_cap, "solver cap for the optimal strategies");
    playc->add_option("--reps", play_reps, "matches to play (seeds advance per match)");
    playc->add_flag("--debug", play_debug, "include per-round painter diagnostics");

    std::string suite;
    std::uint64_t verify_seed = 1;
    int verify_cap = -1, verify_reps = -1;
    bool verify_csv = false;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "suite name, or 'all'")->required();
    add_output_flags(verify, verify_out);
    verify->add_option("--seed", verify_seed, "suite seed");
    verify->add_option("--cap", verify_cap, "solver cap override");
    verify->add_option("--reps", verify_reps, "per-size repetitions for the painter suites");
    verify->add_flag("--csv", verify_csv, "emit CSV rows instead of JSON lines");

    std::string bounds_graph, bounds_partition;
    bool planar = false, outerplanar = false;
    int acyclic_k = 0;
    std::int64_t bounds_n = -1, bounds_m = -1;
    CLI::App* bounds = app.add_subcommand("bounds", "upper-bound calculators");
    bounds->add_option("graph", bounds_graph, "graph file");
    bounds->add_option("partition", bounds_partition, "partition file (with the graph)");
    bounds->add_flag("--planar", planar, "planar bound (8n+3m)/5");
    bounds->add_flag("--outerplanar", outerplanar, "outerplanar bound (7/3)n");
    bounds->add_option("--acyclic-k", acyclic_k, "bound from an acyclic k-coloring");
    bounds->add_option("--n", bounds_n, "vertex count when no graph file is given");
    bounds->add_option("--m", bounds_m, "edge count when no graph file is given");
    add_output_flags(bounds, bounds_out);

    CLI::App* gen = app.add_subcommand("gen", "write an instance as graph text");
    add_instance_flags(gen, gen_inst, false);
    add_output_flags(gen, gen_out);

    try {
        app.parse(argc, argv);

        if (solve->parsed())
            return cmd_solve(solve_inst, solve_out,
                             cap_flag >= 0 ? std::optional<int>(cap_flag) : std::nullopt,
                             solve_debug);
        if (playc->parsed())
            return cmd_play(play_inst, play_out, painter_name, lister_name,
                            play_cap >= 0 ? std::optional<int>(play_cap) : std::nullopt, play_reps,
                            play_debug);
        if (verify->parsed())
            return cmd_verify(suite, verify_out, verify_seed,
                              verify_cap >= 0 ? std::optional<int>(verify_cap) : std::nullopt,
                              verify_reps >= 0 ? std::optional<int>(verify_reps) : std::nullopt,
                              verify_csv);
        if (bounds->parsed())
            return cmd_bounds(bounds_graph, bounds_partition, bounds_out, planar, outerplanar,
                              acyclic_k, bounds_n, bounds_m);
        if (gen->parsed()) return cmd_gen(gen_inst, gen_out);
        return 4;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 4;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IllegalMark& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const IllegalResponse& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const RoundCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const TheoryViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
