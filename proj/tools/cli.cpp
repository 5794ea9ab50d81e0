#include "cli.hpp"

#include "cograph/graph_io.hpp"
#include "cograph/json_io.hpp"
#include "cograph/obstructions.hpp"
#include "cograph/oracle.hpp"
#include "cograph/solver.hpp"
#include "cograph/strength.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace cograph {

namespace {

struct Options {
    std::string graph6;
    std::string edges;
    std::string dsl;
    std::string triple;
    std::string box;
    std::string goal;
    std::string certificate;
    std::string family = "A2";
    std::string format = "dsl";
    bool human = false;
    bool count_only = false;
    bool balanced = false;
    int p = 0;
    int q = 0;
    int i = 0;
    int m = 2;
    int n = 1;
    int jobs = 1;
    int random_leaves = 0;
    int max_vertices = 12;
    std::uint64_t seed = 1;
};

struct Output {
    std::ostream& out;
    bool human;

    void emit(const Json& j) const {
        if (!human) {
            out << j.dump() << '\n';
            return;
        }
        if (j.is_object()) {
            for (const auto& [key, value] : j.items()) {
                out << key << "\t" << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
            }
        } else if (j.is_array()) {
            for (const auto& value : j) {
                out << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
            }
        } else {
            out << j.dump() << '\n';
        }
    }
};

Graph load_graph(const Options& o) {
    const int given = !o.graph6.empty() + !o.edges.empty() + !o.dsl.empty();
    if (given != 1) {
        throw InputError("give exactly one of --graph6, --edges, --dsl");
    }
    if (!o.graph6.empty()) {
        return from_graph6(o.graph6);
    }
    if (!o.edges.empty()) {
        return read_edge_list_file(o.edges);
    }
    return realize(parse_expr(o.dsl));
}

Cotree load_cotree(const Options& o) {
    if (!o.dsl.empty() && o.graph6.empty() && o.edges.empty()) {
        return parse_expr(o.dsl);
    }
    return require_cograph(load_graph(o));
}

Triple parse_triple(const std::string& text, const char* what) {
    if (text.empty()) {
        throw InputError(std::string("missing ") + what);
    }
    const TripleGoalSet set = parse_goal(text);
    if (set.triples.size() != 1) {
        throw InputError(std::string(what) + " must be a single p,q,r");
    }
    return set.triples.front();
}

Json p4_json(const P4Witness& w) {
    return Json::array({w.path[0], w.path[1], w.path[2], w.path[3]});
}

std::string render(const Cotree& t, const std::string& format) {
    if (format == "graph6") {
        return to_graph6(realize(t));
    }
    return to_expr(t);
}

std::string read_certificate_text(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '{') {
        return arg;
    }
    std::ifstream in(arg);
    if (!in) {
        throw InputError("cannot read certificate file " + arg);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void add_input(CLI::App* sub, Options& o) {
    sub->add_option("--graph6", o.graph6, "graph in graph6 format");
    sub->add_option("--edges", o.edges, "edge-list file");
    sub->add_option("--dsl", o.dsl, "cotree expression");
    sub->add_flag("--human", o.human, "tab-separated text instead of JSON");
}

using Handler = std::function<int(const Options&, const Output&)>;

int cmd_recognize(const Options& o, const Output& out) {
    const Graph g = load_graph(o);
    auto rec = recognize(g);
    if (auto* w = std::get_if<P4Witness>(&rec)) {
        out.emit({{"cograph", false}, {"p4", p4_json(*w)}});
        return 1;
    }
    const auto& t = std::get<Cotree>(rec);
    out.emit({{"cograph", true},
              {"n", t.vertex_count()},
              {"dsl", to_expr(t)},
              {"canonical", canonical_code(t).hex()},
              {"height", height(t)}});
    return 0;
}

int cmd_realize(const Options& o, const Output& out) {
    const Graph g = load_graph(o);
    Json edges = Json::array();
    for (const auto& e : g.edges()) {
        edges.push_back(Json::array({e.first, e.second}));
    }
    out.emit({{"n", g.order()}, {"m", g.edge_count()}, {"graph6", to_graph6(g)}, {"edges", edges}});
    return 0;
}

int cmd_solve(const Options& o, const Output& out) {
    const Triple t = parse_triple(o.triple, "--triple");
    const bool ok = is_partitionable(load_cotree(o), t);
    out.emit({{"triple", to_json(t)}, {"feasible", ok}});
    return ok ? 0 : 1;
}

int cmd_frontier(const Options& o, const Output& out) {
    const Triple b = parse_triple(o.box, "--box");
    out.emit(to_json(feasible_set(load_cotree(o), Box{b.p, b.q, b.r})));
    return 0;
}

int cmd_certificate(const Options& o, const Output& out) {
    const Triple t = parse_triple(o.triple, "--triple");
    const Cotree tree = load_cotree(o);
    if (!is_partitionable(tree, t)) {
        out.emit({{"triple", to_json(t)}, {"feasible", false}});
        return 1;
    }
    Json j = to_json(extract_certificate(tree, t));
    j["triple"] = to_json(t);
    j["feasible"] = true;
    out.emit(j);
    return 0;
}

int cmd_check(const Options& o, const Output& out) {
    const Triple t = parse_triple(o.triple, "--triple");
    if (o.certificate.empty()) {
        throw InputError("missing --certificate");
    }
    const Graph g = load_graph(o);
    Json parsed;
    try {
        parsed = Json::parse(read_certificate_text(o.certificate));
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("certificate JSON: ") + e.what());
    }
    const bool ok = check_partition(g, certificate_from_json(parsed), t);
    out.emit({{"triple", to_json(t)}, {"valid", ok}});
    return ok ? 0 : 1;
}

int cmd_oracle(const Options& o, const Output& out) {
    const Triple t = parse_triple(o.triple, "--triple");
    OracleBudget budget;
    budget.max_vertices = o.max_vertices;
    const bool ok = brute_force_partitionable(load_graph(o), t, budget);
    out.emit({{"triple", to_json(t)}, {"feasible", ok}, {"method", "brute-force"}});
    return ok ? 0 : 1;
}

int cmd_families(const Options& o, const Output& out) {
    std::vector<Cotree> members;
    if (o.family == "A2") {
        members = family_A2();
    } else if (o.family == "Ap") {
        members = family_Ap(o.p);
    } else if (o.family == "Oi") {
        members = all_Oi(o.p, o.i);
    } else if (o.family == "stars") {
        members = star_forests(o.m);
    } else if (o.family == "H") {
        const Cotree g = parse_expr(kA2Expressions[1]);
        members.push_back(build_H(g, g, 2));
    } else {
        throw InputError("unknown family " + o.family);
    }
    Json list = Json::array();
    for (const auto& t : members) {
        list.push_back(render(t, o.format));
    }
    out.emit(list);
    return 0;
}

int cmd_obstruction_check(const Options& o, const Output& out) {
    if (o.goal.empty()) {
        throw InputError("missing --goal");
    }
    const ObstructionReport r = is_minimal_obstruction(load_cotree(o), parse_goal(o.goal));
    out.emit(to_json(r));
    return r.is_minimal ? 0 : 1;
}

int cmd_obstruction_search(const Options& o, const Output& out) {
    if (o.goal.empty()) {
        throw InputError("missing --goal");
    }
    if (o.n < 1 || o.n > 12) {
        throw InputError("--n must lie in 1..12");
    }
    for (const auto& r : search_minimal_obstructions(o.n, parse_goal(o.goal), o.jobs)) {
        if (o.human) {
            out.out << r.tree.vertex_count() << '\t' << r.graph6 << '\t' << r.dsl << '\n';
        } else {
            out.out << to_json(r).dump() << '\n';
        }
    }
    return 0;
}

int cmd_obstruction_count(const Options& o, const Output& out) {
    const OiCount c = count_Oi(o.p, o.i);
    out.emit({{"p", o.p},
              {"i", o.i},
              {"generated", c.generated},
              {"multisets", c.multisets},
              {"formula", c.formula},
              {"formula_matches", c.formula_matches}});
    return 0;
}

int cmd_enumerate(const Options& o, const Output& out) {
    if (o.random_leaves > 0) {
        std::mt19937_64 rng(o.seed);
        const Cotree t = random_cotree(o.random_leaves, rng, {o.balanced, 4});
        out.out << render(t, o.format) << '\n';
        return 0;
    }
    if (o.n < 1 || o.n > 14) {
        throw InputError("--n must lie in 1..14");
    }
    if (o.count_only) {
        long long count = 0;
        for_each_cograph(o.n, [&](const Cotree&) { ++count; });
        out.emit({{"n", o.n}, {"count", count}});
        return 0;
    }
    for_each_cograph(o.n, [&](const Cotree& t) { out.out << render(t, o.format) << '\n'; });
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Cograph (p,q,r)-partitions and minimal obstructions", "cograph"};
    app.require_subcommand(1);
    std::map<CLI::App*, Handler> handlers;

    auto simple = [&](const char* name, const char* help, Handler h) {
        CLI::App* sub = app.add_subcommand(name, help);
        add_input(sub, o);
        handlers[sub] = std::move(h);
        return sub;
    };

    simple("recognize", "cotree of the input or an induced P4", cmd_recognize);
    simple("realize", "graph of the input", cmd_realize);
    simple("solve", "decide a (p,q,r)-partition", cmd_solve)->add_option("--triple", o.triple, "p,q,r");
    simple("frontier", "minimal feasible triples inside a box", cmd_frontier)->add_option("--box", o.box, "P,Q,R");
    simple("arboricity", "vertex arboricity", [](const Options& opt, const Output& w) {
        w.emit({{"rho", vertex_arboricity(load_cotree(opt))}});
        return 0;
    });
    simple("chromatic", "chromatic number", [](const Options& opt, const Output& w) {
        w.emit({{"chi", chromatic_number(load_cotree(opt))}});
        return 0;
    });
    auto* mindel = simple("mindel", "minimum deletions for p forests and q independent sets",
                          [](const Options& opt, const Output& w) {
                              w.emit({{"p", opt.p}, {"q", opt.q}, {"r", min_deletions(load_cotree(opt), opt.p, opt.q)}});
                              return 0;
                          });
    mindel->add_option("--p", o.p)->check(CLI::NonNegativeNumber);
    mindel->add_option("--q", o.q)->check(CLI::NonNegativeNumber);
    simple("ifvs-q", "least q with a q-colourable feedback vertex set", [](const Options& opt, const Output& w) {
        w.emit({{"q", min_q_feedback(load_cotree(opt))}});
        return 0;
    });
    simple("strength", "clique, thick clique and strength", [](const Options& opt, const Output& w) {
        w.emit(to_json(strength_profile(load_cotree(opt))));
        return 0;
    });
    simple("certificate", "labelled partition for a feasible triple", cmd_certificate)
        ->add_option("--triple", o.triple, "p,q,r");
    auto* check = simple("check", "validate a certificate against any graph", cmd_check);
    check->add_option("--triple", o.triple, "p,q,r");
    check->add_option("--certificate", o.certificate, "certificate JSON or a file holding it");
    auto* oracle = simple("oracle", "brute-force verdict for any small graph", cmd_oracle);
    oracle->add_option("--triple", o.triple, "p,q,r");
    oracle->add_option("--max-vertices", o.max_vertices)->check(CLI::Range(1, 24));

    auto* enumerate = app.add_subcommand("enumerate", "all cographs on n vertices, or one random cotree");
    enumerate->add_option("--n", o.n);
    enumerate->add_option("--format", o.format)->check(CLI::IsMember({"dsl", "graph6"}));
    enumerate->add_flag("--count", o.count_only);
    enumerate->add_flag("--human", o.human);
    enumerate->add_option("--random", o.random_leaves, "leaf count of a random cotree")->check(CLI::PositiveNumber);
    enumerate->add_flag("--balanced", o.balanced);
    enumerate->add_option("--seed", o.seed);
    handlers[enumerate] = cmd_enumerate;

    auto* obstructions = app.add_subcommand("obstructions", "obstruction families, checks and searches");
    obstructions->require_subcommand(1);
    auto* families = obstructions->add_subcommand("families", "list a family (A2, Ap, Oi, stars, H)");
    families->add_option("--family", o.family)->check(CLI::IsMember({"A2", "Ap", "Oi", "stars", "H"}));
    families->add_option("--p", o.p);
    families->add_option("--i", o.i);
    families->add_option("--m", o.m);
    families->add_option("--format", o.format)->check(CLI::IsMember({"dsl", "graph6"}));
    families->add_flag("--human", o.human);
    handlers[families] = cmd_families;
    auto* ocheck = obstructions->add_subcommand("check", "minimal obstruction check");
    add_input(ocheck, o);
    ocheck->add_option("--goal", o.goal, "triple list, e.g. \"(2,0,0),(1,1,0)\"");
    handlers[ocheck] = cmd_obstruction_check;
    auto* search = obstructions->add_subcommand("search", "minimal obstructions up to n vertices");
    search->add_option("--n", o.n);
    search->add_option("--goal", o.goal);
    search->add_option("--jobs", o.jobs)->check(CLI::Range(1, 1024));
    search->add_flag("--human", o.human);
    handlers[search] = cmd_obstruction_search;
    auto* count = obstructions->add_subcommand("count", "O_i counts at (p,i)");
    count->add_option("--p", o.p);
    count->add_option("--i", o.i);
    count->add_flag("--human", o.human);
    handlers[count] = cmd_obstruction_count;

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const Output output{out, o.human};
    for (auto& [sub, handler] : handlers) {
        if (!sub->parsed()) {
            continue;
        }
        try {
            return handler(o, output);
        } catch (const NotCographError& e) {
            err << Json{{"error", "not a cograph"}, {"p4", p4_json(e.witness())}}.dump() << '\n';
            return 2;
        } catch (const InputError& e) {
            err << Json{{"error", e.what()}}.dump() << '\n';
            return 2;
        } catch (const OracleBudgetExceeded& e) {
            err << Json{{"error", e.what()}}.dump() << '\n';
            return 2;
        }
    }
    err << "no command\n";
    return 2;
}

}  // namespace cograph
