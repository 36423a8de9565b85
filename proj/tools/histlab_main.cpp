// histlab: batch command-line front end. Graph6 lines in, tab-separated
// records out; diagnostics and tallies go to stderr. Exit codes: 0 success,
// 2 parse failure, 64 usage error.

#include <CLI11.hpp>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "histlab/canon.hpp"
#include "histlab/classify.hpp"
#include "histlab/constructions.hpp"
#include "histlab/generate.hpp"
#include "histlab/graph6.hpp"
#include "histlab/hist_search.hpp"
#include "histlab/oracles.hpp"
#include "histlab/planarity.hpp"

using namespace histlab;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputGraph {
    std::size_t line_no;  // 1-based
    std::string text;
    Graph graph;
};

std::vector<InputGraph> read_graph_stream(std::istream& in) {
    std::vector<InputGraph> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() && in.peek() == EOF) break;  // tolerate one trailing blank
        try {
            Graph g = from_graph6(line);
            out.push_back({line_no, line, std::move(g)});
        } catch (const Graph6Error& e) {
            throw InputError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

int default_jobs() {
    if (const char* env = std::getenv("HISTLAB_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

// Applies fn to every input in index order (parallel when jobs > 1), keeping
// the output order equal to the input order.
template <typename F>
std::vector<std::string> map_ordered(const std::vector<InputGraph>& inputs, int jobs, F&& fn) {
    std::vector<std::string> out(inputs.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < inputs.size(); ++i) out[i] = fn(inputs[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= inputs.size() || failed.load()) return;
                try {
                    out[i] = fn(inputs[i]);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!error) error = std::current_exception();
                    failed.store(true);
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return out;
}

std::vector<int> parse_vertex_list(const std::string& list) {
    std::vector<int> out;
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size() || v < 0) throw UsageError("bad vertex id '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

ExemptSet exempt_for(const std::vector<int>& vs, const Graph& g, std::size_t line_no) {
    ExemptSet e;
    for (int v : vs) {
        if (v >= g.order())
            throw UsageError("line " + std::to_string(line_no) + ": exempt vertex " +
                             std::to_string(v) + " out of range");
        e.vertices.set(v);
    }
    return e;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::HasHist: return "HAS_HIST";
        case Verdict::HistFreeNotCritical: return "HIST_FREE";
        case Verdict::HistCritical: return "HIST_CRITICAL";
    }
    return "?";
}

struct Elapsed {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

// ----------------------------------------------------------------- count

int cmd_count(const std::string& exempt_list, std::optional<std::uint64_t> stop_after,
              int jobs) {
    Elapsed timer;
    auto inputs = read_graph_stream(std::cin);
    std::vector<int> exempt = parse_vertex_list(exempt_list);
    auto rows = map_ordered(inputs, jobs, [&](const InputGraph& in) {
        BigCount c = count_hists(in.graph, exempt_for(exempt, in.graph, in.line_no), stop_after);
        return in.text + "\t" + c.str();
    });
    BigCount total = 0;
    std::size_t with_hist = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::cout << rows[i] << "\n";
        BigCount c(rows[i].substr(rows[i].find('\t') + 1));
        total += c;
        with_hist += c > 0;
    }
    std::cerr << "count: " << rows.size() << " graphs, " << with_hist
              << " with a HIST, total " << total << ", " << timer.seconds() << "s\n";
    return 0;
}

// -------------------------------------------------------------- classify

int cmd_classify(int jobs) {
    Elapsed timer;
    auto inputs = read_graph_stream(std::cin);
    auto rows = map_ordered(inputs, jobs, [&](const InputGraph& in) {
        Classification c = classify(in.graph);
        return in.text + "\t" + verdict_name(c.verdict) + "\t" +
               (c.k1_histonian ? "K1=true" : "K1=false");
    });
    std::size_t tally[3] = {0, 0, 0};
    for (const auto& r : rows) {
        std::cout << r << "\n";
        if (r.find("\tHAS_HIST\t") != std::string::npos) ++tally[0];
        else if (r.find("\tHIST_FREE\t") != std::string::npos) ++tally[1];
        else ++tally[2];
    }
    std::cerr << "classify: " << rows.size() << " graphs, " << tally[0] << " HAS_HIST, "
              << tally[1] << " HIST_FREE, " << tally[2] << " HIST_CRITICAL, "
              << timer.seconds() << "s\n";
    return 0;
}

// ---------------------------------------------------------------- filter

int cmd_filter(const std::string& predicate, int girth_min, bool planar,
               std::uint64_t min_hists, int jobs) {
    Elapsed timer;
    auto inputs = read_graph_stream(std::cin);
    auto rows = map_ordered(inputs, jobs, [&](const InputGraph& in) -> std::string {
        const Graph& g = in.graph;
        if (girth_min > 0 && !girth_at_least(g, girth_min)) return "";
        if (planar && !is_planar(g)) return "";
        if (min_hists > 0 && count_hists(g, {}, min_hists) < min_hists) return "";
        if (predicate == "critical" && !is_hist_critical(g)) return "";
        if (predicate == "hist-free" && has_hist(g)) return "";
        if (predicate == "k1" && !is_k1_histonian(g)) return "";
        return in.text;
    });
    std::size_t kept = 0;
    for (const auto& r : rows)
        if (!r.empty()) {
            std::cout << r << "\n";
            ++kept;
        }
    std::cerr << "filter: kept " << kept << " of " << inputs.size() << ", "
              << timer.seconds() << "s\n";
    return 0;
}

// ------------------------------------------------------------------ make

int cmd_make(const std::vector<std::string>& args) {
    if (args.empty()) throw UsageError("make: missing family name");
    const std::string& family = args[0];
    auto want_params = [&](std::size_t k, const std::string& usage) {
        if (args.size() != k + 1) throw UsageError("make " + family + ": expected " + usage);
    };
    auto int_param = [&](std::size_t i) {
        std::size_t pos = 0;
        int v = std::stoi(args[i], &pos);
        if (pos != args[i].size()) throw UsageError("make: bad integer '" + args[i] + "'");
        return v;
    };

    if (family == "antiprism" || family == "gk" || family == "hk") {
        if (args.size() < 2) throw UsageError("make " + family + ": expected k [k ...]");
        for (std::size_t i = 1; i < args.size(); ++i) {
            int k = int_param(i);
            Graph g = family == "antiprism" ? antiprism(k).graph
                      : family == "gk"      ? g_k(k).graph
                                            : h_k(k).graph;
            std::cout << to_graph6(g) << "\n";
        }
        return 0;
    }
    if (family == "f1" || family == "f2") {
        want_params(0, "no parameters");
        std::cout << to_graph6((family == "f1" ? fragment_f1() : fragment_f2()).fragment.graph)
                  << "\n";
        return 0;
    }
    if (family == "chain") {
        if (args.size() < 3) throw UsageError("make chain: expected two or more of f1|f2");
        std::vector<Fragment> parts;
        for (std::size_t i = 1; i < args.size(); ++i) {
            if (args[i] == "f1") parts.push_back(fragment_f1().fragment);
            else if (args[i] == "f2") parts.push_back(fragment_f2().fragment);
            else throw UsageError("make chain: unknown fragment '" + args[i] + "'");
        }
        std::cout << to_graph6(chain(parts)) << "\n";
        return 0;
    }
    if (family == "glue") {
        want_params(4, "xG yG xH yH (two graphs on stdin)");
        auto inputs = read_graph_stream(std::cin);
        if (inputs.size() != 2) throw UsageError("make glue: expected exactly two input graphs");
        std::cout << to_graph6(glue(inputs[0].graph, int_param(1), int_param(2),
                                    inputs[1].graph, int_param(3), int_param(4)))
                  << "\n";
        return 0;
    }
    if (family == "linegraph" || family == "truncate" || family == "inflate-k4") {
        want_params(0, "no parameters (graphs on stdin)");
        for (const InputGraph& in : read_graph_stream(std::cin)) {
            Graph g = family == "linegraph" ? line_graph(in.graph)
                      : family == "truncate" ? truncate_cubic(in.graph)
                                             : inflate_k4(in.graph);
            std::cout << to_graph6(g) << "\n";
        }
        return 0;
    }
    if (family == "subdivide") {
        want_params(2, "u v (graphs on stdin)");
        int u = int_param(1), v = int_param(2);
        for (const InputGraph& in : read_graph_stream(std::cin))
            std::cout << to_graph6(subdivide_edge(in.graph, Edge(u, v))) << "\n";
        return 0;
    }
    throw UsageError("make: unknown family '" + family + "'");
}

// ------------------------------------------------------- verify-fragment

int cmd_verify_fragment(int x, int y) {
    auto inputs = read_graph_stream(std::cin);
    if (inputs.size() != 1) throw UsageError("verify-fragment: expected exactly one graph");
    Fragment f(inputs[0].graph, x, y);
    FragmentReport r = verify_fragment(f);

    auto edges_str = [](const std::vector<Edge>& es) {
        std::string s;
        for (const Edge& e : es)
            s += (s.empty() ? "" : " ") + std::to_string(e.u) + "-" + std::to_string(e.v);
        return s;
    };
    std::cout << "property 1: " << (r.p1 ? "PASS" : "FAIL");
    if (r.p1_witness) std::cout << "\texcluded HIST: " << edges_str(*r.p1_witness);
    std::cout << "\n";
    std::cout << "property 2: " << (r.p2 ? "PASS" : "FAIL");
    if (r.p2_witness_minus_x) std::cout << "\twithout x: " << edges_str(*r.p2_witness_minus_x);
    if (r.p2_witness_minus_y) std::cout << "\twithout y: " << edges_str(*r.p2_witness_minus_y);
    std::cout << "\n";
    std::cout << "property 3: " << (r.p3 ? "PASS" : "FAIL");
    if (r.p3_failing_vertex) std::cout << "\tfails at vertex " << *r.p3_failing_vertex;
    else {
        std::cout << "\tcases:";
        for (const auto& e : r.p3_cases) std::cout << " " << e.vertex << ":" << e.used_case;
    }
    std::cout << "\n";
    std::cout << "property 4: " << (r.p4 ? "PASS" : "FAIL") << "\n";
    return 0;
}

// ------------------------------------------------------------------- gen

int cmd_gen(const GenConstraints& c) {
    Elapsed timer;
    std::size_t count = 0;
    generate(c, [&](const Graph& g) {
        std::cout << to_graph6(g) << "\n";
        ++count;
        return true;
    });
    std::cerr << "gen: " << count << " graphs, " << timer.seconds() << "s\n";
    return 0;
}

// ---------------------------------------------------------------- tables

int cmd_tables(const std::string& which, int max_order, int girth) {
    auto refuse = [&](int ceiling) {
        if (max_order > ceiling)
            throw UsageError("tables " + which + ": ceiling is order " +
                             std::to_string(ceiling));
    };
    Elapsed timer;
    if (which == "t1" || which == "t2") {
        refuse(11);
        const bool planar = which == "t2";
        std::cout << "order\t" << (planar ? "planar-hist-critical" : "hist-critical")
                  << (girth > 3 ? " (girth >= " + std::to_string(girth) + ")" : "") << "\n";
        for (int n = 3; n <= max_order; ++n) {
            GenConstraints c;
            c.order = n;
            c.connectivity_min = 2;
            if (girth > 3) c.girth_min = girth;
            long count = 0;
            generate(c, [&](const Graph& g) {
                if (is_hist_critical(g) && (!planar || is_planar(g))) ++count;
                return true;
            });
            std::cout << n << "\t" << count << "\n";
        }
    } else if (which == "t3" || which == "t4") {
        refuse(10);
        std::cout << "order\t" << (which == "t3" ? "min-hists" : "planar-4-connected") << "\n";
        for (int n = 6; n <= max_order; ++n) {
            GenConstraints c;
            c.order = n;
            c.min_degree = 4;
            c.connectivity_min = 4;
            c.planar_only = true;
            long count = 0;
            BigCount min_hists = -1;
            generate(c, [&](const Graph& g) {
                ++count;
                BigCount h = count_hists(g);
                if (min_hists < 0 || h < min_hists) min_hists = h;
                return true;
            });
            if (which == "t4") std::cout << n << "\t" << count << "\n";
            else std::cout << n << "\t" << min_hists << "\n";
        }
    } else {
        throw UsageError("tables: unknown table '" + which + "'");
    }
    std::cerr << "tables: " << timer.seconds() << "s\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"HIST toolkit: count and classify homeomorphically irreducible "
                 "spanning trees, build graph families, generate small graphs"};
    app.require_subcommand(1);

    // count
    auto* count = app.add_subcommand("count", "count HISTs of each graph6 input line");
    std::string exempt_list;
    std::uint64_t stop_after_val = 0;
    int jobs = default_jobs();
    count->add_option("--exempt", exempt_list, "comma-separated vertices allowed degree 2");
    count->add_option("--stop-after", stop_after_val, "stop each count at this many");
    count->add_option("--jobs", jobs, "worker threads (env HISTLAB_JOBS)");

    // classify
    auto* cls = app.add_subcommand("classify", "verdict per graph: HAS_HIST, HIST_FREE or "
                                               "HIST_CRITICAL, plus the K1 flag");
    cls->add_option("--jobs", jobs, "worker threads");

    // filter
    auto* filter = app.add_subcommand("filter", "pass through graphs matching predicates");
    std::string predicate;
    int girth_min = 0;
    bool planar = false;
    std::uint64_t min_hists = 0;
    filter->add_option("--predicate", predicate, "critical | hist-free | k1")
        ->check(CLI::IsMember({"critical", "hist-free", "k1"}));
    filter->add_option("--girth-min", girth_min, "minimum girth");
    filter->add_flag("--planar", planar, "planar graphs only");
    filter->add_option("--min-hists", min_hists, "at least this many HISTs");
    filter->add_option("--jobs", jobs, "worker threads");

    // make
    auto* make = app.add_subcommand("make", "emit a named construction as graph6");
    std::vector<std::string> make_args;
    make->add_option("family", make_args,
                     "antiprism k... | gk k... | hk k... | f1 | f2 | chain f1|f2 ... | "
                     "glue xG yG xH yH | linegraph | truncate | inflate-k4 | subdivide u v");

    // verify-fragment
    auto* vf = app.add_subcommand("verify-fragment",
                                  "check fragment properties 1-4 of the stdin graph");
    int vf_x = -1, vf_y = -1;
    vf->add_option("--x", vf_x, "terminal x")->required();
    vf->add_option("--y", vf_y, "terminal y")->required();

    // gen
    auto* gen = app.add_subcommand("gen", "isomorph-free exhaustive generation");
    GenConstraints gc;
    int gen_min_deg = -1, gen_max_deg = -1, gen_regular = -1, gen_conn = -1, gen_girth = -1;
    gen->add_option("--order", gc.order, "number of vertices")->required();
    gen->add_option("--min-degree", gen_min_deg, "minimum degree");
    gen->add_option("--max-degree", gen_max_deg, "maximum degree");
    gen->add_option("--regular", gen_regular, "k-regular");
    gen->add_option("--connectivity", gen_conn, "minimum connectivity (1, 2 or 4)");
    gen->add_option("--girth-min", gen_girth, "minimum girth");
    gen->add_flag("--planar", gc.planar_only, "planar graphs only");

    // tables
    auto* tables = app.add_subcommand("tables", "recompute a table slice");
    std::string which;
    int max_order = -1, table_girth = 3;
    tables->add_option("table", which, "t1 | t2 | t3 | t4")->required();
    tables->add_option("--max-order", max_order, "largest order (defaults per table)");
    tables->add_option("--girth", table_girth, "t1/t2 girth restriction");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*count)
            return cmd_count(exempt_list,
                             stop_after_val > 0 ? std::optional<std::uint64_t>(stop_after_val)
                                                : std::nullopt,
                             jobs);
        if (*cls) return cmd_classify(jobs);
        if (*filter) return cmd_filter(predicate, girth_min, planar, min_hists, jobs);
        if (*make) return cmd_make(make_args);
        if (*vf) return cmd_verify_fragment(vf_x, vf_y);
        if (*gen) {
            if (gen_min_deg >= 0) gc.min_degree = gen_min_deg;
            if (gen_max_deg >= 0) gc.max_degree = gen_max_deg;
            if (gen_regular >= 0) gc.regular_k = gen_regular;
            if (gen_conn >= 0) gc.connectivity_min = gen_conn;
            if (gen_girth >= 0) gc.girth_min = gen_girth;
            return cmd_gen(gc);
        }
        if (*tables) {
            if (max_order < 0) max_order = (which == "t1" || which == "t2") ? 9 : 10;
            return cmd_tables(which, max_order, table_girth);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
