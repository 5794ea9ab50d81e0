#include "cograph/obstructions.hpp"

#include "cograph/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <set>

namespace cograph {

namespace {

struct GoalRegion {
    int max_p = 0;
    int max_pq = 0;
};

GoalRegion region_of(const TripleGoalSet& goal) {
    if (goal.triples.empty()) {
        throw InputError("goal set is empty");
    }
    GoalRegion out;
    for (const Triple& t : goal.triples) {
        if (t.p < 0 || t.q < 0 || t.r < 0) {
            throw InputError("goal triple " + to_string(t) + " has a negative entry");
        }
        out.max_p = std::max(out.max_p, t.p);
        out.max_pq = std::max(out.max_pq, t.p + t.q);
    }
    return out;
}

// First goal triple that t admits, if any.
std::optional<Triple> first_admitted(const Cotree& t, const TripleGoalSet& goal, const GoalRegion& region) {
    const DeletionTable table = evaluate_serial(t, region.max_p, region.max_pq);
    for (const Triple& g : goal.triples) {
        if (table.at(g.p, g.q) <= g.r) {
            return g;
        }
    }
    return std::nullopt;
}

Cotree as_cotree(const Graph& g) {
    auto rec = recognize(g);
    if (auto* w = std::get_if<P4Witness>(&rec)) {
        throw NotCographError(*w);
    }
    return std::get<Cotree>(std::move(rec));
}

void for_each_partition(int m, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int rest, int cap) {
        if (rest == 0) {
            visit(parts);
            return;
        }
        for (int k = std::min(rest, cap); k >= 1; --k) {
            parts.push_back(k);
            rec(rest - k, k);
            parts.pop_back();
        }
    };
    rec(m, m);
}

Cotree star(int k) {
    if (k == 1) {
        return Cotree::leaf();
    }
    return join({Cotree::leaf(), Cotree::edgeless(k - 1)});
}

std::string substitute_p(std::string text, int p) {
    // "{a*p+b}" placeholders, a and b possibly negative
    std::string out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '{') {
            out += text[i];
            continue;
        }
        const std::size_t close = text.find('}', i);
        const std::string body = text.substr(i + 1, close - i - 1);
        int a = 0;
        int b = 0;
        std::sscanf(body.c_str(), "%d,%d", &a, &b);
        out += std::to_string(a * p + b);
        i = close;
    }
    return out;
}

}  // namespace

TripleGoalSet parse_goal(const std::string& text) {
    std::vector<int> numbers;
    int depth = 0;
    for (std::size_t i = 0; i < text.size();) {
        const char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                ++j;
            }
            if (j - i > 6) {
                throw InputError("goal entry too large: " + text.substr(i, j - i));
            }
            numbers.push_back(std::stoi(text.substr(i, j - i)));
            i = j;
            continue;
        }
        if (c == '(') {
            if (++depth > 1) {
                throw InputError("nested parentheses in goal: " + text);
            }
        } else if (c == ')') {
            if (--depth < 0) {
                throw InputError("unbalanced parentheses in goal: " + text);
            }
        } else if (c != ',' && c != ';' && !std::isspace(static_cast<unsigned char>(c))) {
            throw InputError(std::string("unexpected character '") + c + "' in goal: " + text);
        }
        ++i;
    }
    if (depth != 0) {
        throw InputError("unbalanced parentheses in goal: " + text);
    }
    if (numbers.empty() || numbers.size() % 3 != 0) {
        throw InputError("goal must list whole triples: " + text);
    }
    TripleGoalSet out;
    for (std::size_t i = 0; i < numbers.size(); i += 3) {
        out.triples.push_back({numbers[i], numbers[i + 1], numbers[i + 2]});
    }
    return out;
}

std::string to_string(const TripleGoalSet& goal) {
    std::string out;
    for (const Triple& t : goal.triples) {
        if (!out.empty()) {
            out += ',';
        }
        out += to_string(t);
    }
    return out;
}

std::vector<Cotree> family_A2() {
    std::vector<Cotree> out;
    for (const char* expr : kA2Expressions) {
        out.push_back(parse_expr(expr));
    }
    return out;
}

std::vector<std::string> family_Ap_expressions(int p) {
    if (p < 2) {
        throw InputError("family A_p needs p >= 2, got " + std::to_string(p));
    }
    static const char* const fixed[] = {
        "K({2,1})",
        "C(U({1,1}*K({1,1})))",
        "J(U(2*K({2,-1})),I(2))",
        "J(U(2*C(U({1,0}*K({1,0})))),I({1,1}))",
        "J(C(U({1,0}*K(2))),U(K(1),K({1,0})))",
        "J(U(C(U({1,0}*K({1,0}))),K({2,-1})),I(2))",
    };
    std::vector<std::string> out;
    for (const char* f : fixed) {
        out.push_back(substitute_p(f, p));
    }
    for (int i = 0; i <= (p - 1) / 2; ++i) {
        const int pairs = p + 1 + i;
        const int singles = p - 1 - 2 * i;
        std::string expr = "C(U(" + std::to_string(pairs) + "*K(2)";
        if (singles > 0) {
            expr += "," + std::to_string(singles) + "*K(1)";
        }
        out.push_back(expr + "))");
    }
    return out;
}

std::vector<Cotree> family_Ap(int p) {
    std::vector<Cotree> out;
    for (const auto& expr : family_Ap_expressions(p)) {
        out.push_back(parse_expr(expr));
    }
    return out;
}

long long partition_count(int m) {
    if (m < 0) {
        return 0;
    }
    std::vector<long long> ways(static_cast<std::size_t>(m) + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= m; ++part) {
        for (int s = part; s <= m; ++s) {
            ways[s] += ways[s - part];
        }
    }
    return ways[m];
}

std::vector<Cotree> star_forests(int m) {
    if (m < 2) {
        throw InputError("star forests need at least 2 vertices, got " + std::to_string(m));
    }
    std::vector<Cotree> out;
    for_each_partition(m, [&](const std::vector<int>& parts) {
        if (parts.front() == 1) {
            return;
        }
        std::vector<Cotree> stars;
        for (int k : parts) {
            stars.push_back(star(k));
        }
        out.push_back(disjoint_union(stars));
    });
    return out;
}

Cotree family_Oi(int p, int i, const std::vector<Cotree>& forests) {
    if (p < 2 || i < 0 || i > p) {
        throw InputError("O_i needs p >= 2 and 0 <= i <= p");
    }
    if (static_cast<int>(forests.size()) != i) {
        throw InputError("O_i needs exactly i forests");
    }
    std::set<CanonicalCode> allowed;
    if (i > 0) {
        for (const auto& f : star_forests(p + 2 - i)) {
            allowed.insert(canonical_code(f));
        }
    }
    for (const auto& f : forests) {
        if (!allowed.contains(canonical_code(f))) {
            throw InputError("forest is not a star forest on " + std::to_string(p + 2 - i) + " vertices");
        }
    }
    const int k = p + 1 - i;
    std::vector<Cotree> parts{complement(repeat(k, Cotree::complete(k)))};
    parts.insert(parts.end(), forests.begin(), forests.end());
    return join(parts);
}

std::vector<Cotree> all_Oi(int p, int i) {
    if (p < 2 || i < 0 || i > p) {
        throw InputError("O_i needs p >= 2 and 0 <= i <= p");
    }
    const std::vector<Cotree> pool = i > 0 ? star_forests(p + 2 - i) : std::vector<Cotree>{};
    std::vector<Cotree> out;
    std::set<CanonicalCode> seen;
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(pick.size()) == i) {
            std::vector<Cotree> forests;
            for (int idx : pick) {
                forests.push_back(pool[idx]);
            }
            Cotree g = family_Oi(p, i, forests);
            if (seen.insert(canonical_code(g)).second) {
                out.push_back(std::move(g));
            }
            return;
        }
        for (int idx = from; idx < static_cast<int>(pool.size()); ++idx) {
            pick.push_back(idx);
            rec(idx);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

OiCount count_Oi(int p, int i) {
    OiCount out;
    out.generated = static_cast<long long>(all_Oi(p, i).size());
    const long long forests = i > 0 ? partition_count(p + 2 - i) - 1 : 0;
    // multiset coefficient C(forests + i - 1, i)
    long long multisets = 1;
    for (int k = 1; k <= i; ++k) {
        multisets = multisets * (forests + k - 1) / k;
    }
    out.multisets = multisets;
    out.formula = std::pow(static_cast<double>(forests), i) / std::tgamma(i + 1.0);
    out.formula_matches = std::abs(out.formula - static_cast<double>(out.generated)) < 1e-9;
    return out;
}

Cotree build_H(const Cotree& g1, const Cotree& g2, int p) {
    if (p < 1) {
        throw InputError("build_H needs p >= 1");
    }
    const TripleGoalSet goal{{{p, 0, 0}}};
    for (const Cotree* g : {&g1, &g2}) {
        if (!is_minimal_obstruction(*g, goal).is_minimal) {
            throw InputError("build_H input is not a minimal obstruction for " + to_string(Triple{p, 0, 0}));
        }
        if (vertex_arboricity(*g) != p + 1 || chromatic_number(*g) != p + 1) {
            throw InputError("build_H input must have arboricity and chromatic number p+1");
        }
    }
    return join({disjoint_union({g1, g2}), Cotree::edgeless(p + 2)});
}

namespace {

ObstructionReport check_obstruction(const Cotree& t, const TripleGoalSet& goal, bool with_certificates) {
    const GoalRegion region = region_of(goal);
    ObstructionReport report;
    report.tree = t;
    report.goal = goal;
    report.is_obstruction = !first_admitted(t, goal, region).has_value();
    if (!report.is_obstruction) {
        return report;
    }
    const Graph g = realize(t);
    std::vector<std::pair<Cotree, Triple>> found;
    for (int v = 0; v < g.order(); ++v) {
        Cotree sub = as_cotree(delete_vertex(g, v));
        const auto hit = first_admitted(sub, goal, region);
        if (!hit) {
            report.surviving_vertex = v;
            return report;
        }
        found.emplace_back(std::move(sub), *hit);
    }
    report.is_minimal = true;
    if (with_certificates) {
        for (int v = 0; v < g.order(); ++v) {
            const auto& [sub, triple] = found[static_cast<std::size_t>(v)];
            report.witnesses.push_back({v, triple, extract_certificate(sub, triple)});
        }
    }
    return report;
}

void fill_text(ObstructionReport& report) {
    report.graph6 = to_graph6(realize(report.tree));
    report.dsl = to_expr(report.tree);
}

}  // namespace

ObstructionReport is_minimal_obstruction(const Cotree& t, const TripleGoalSet& goal) {
    ObstructionReport report = check_obstruction(t, goal, true);
    fill_text(report);
    return report;
}

bool contains_induced(const Graph& g, const Graph& h) {
    if (h.order() > g.order() || h.edge_count() > g.edge_count()) {
        return false;
    }
    return find_induced_copy(g, h).has_value();
}

bool is_family_free(const Graph& g, const std::vector<Graph>& family) {
    return std::ranges::none_of(family, [&](const Graph& h) { return contains_induced(g, h); });
}

std::vector<ObstructionReport> search_minimal_obstructions(int n_max, const TripleGoalSet& goal, int jobs) {
    region_of(goal);
    if (jobs < 1) {
        throw InputError("jobs must be positive");
    }
    std::vector<ObstructionReport> out;
    for (int n = 1; n <= n_max; ++n) {
        const std::vector<Cotree> all = enumerate_cographs(n);
        std::vector<std::optional<ObstructionReport>> slots(all.size());
        const long long count = static_cast<long long>(all.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(jobs)
        for (long long i = 0; i < count; ++i) {
            ObstructionReport report = check_obstruction(all[i], goal, true);
            if (report.is_minimal) {
                fill_text(report);
                slots[i] = std::move(report);
            }
        }
        std::vector<std::pair<CanonicalCode, ObstructionReport>> level;
        for (auto& slot : slots) {
            if (slot) {
                level.emplace_back(canonical_code(slot->tree), std::move(*slot));
            }
        }
        std::ranges::sort(level, {}, [](const auto& e) { return e.first; });
        for (auto& [code, report] : level) {
            out.push_back(std::move(report));
        }
    }
    return out;
}

StructuralBounds structural_bounds(const Cotree& t, int p) {
    StructuralBounds out;
    out.height_nodes = t.empty() ? 0 : height(t) + 1;
    out.max_join_children = max_join_children(t);
    out.is_complete_2p1 = canonical_code(t) == canonical_code(Cotree::complete(2 * p + 1));
    out.height_ok = out.height_nodes <= 4 * p + 1;
    out.join_ok = out.is_complete_2p1 || out.max_join_children <= 2 * p;
    return out;
}

Decomposition decompose_disconnected(const Cotree& t, int q, int r) {
    Decomposition out;
    if (t.empty() || t.node(t.root()).kind != NodeKind::disjoint_union) {
        throw InputError("decomposition needs a disconnected cograph");
    }
    const Graph g = realize(t);
    for (const auto& comp : components(g)) {
        out.components.push_back(as_cotree(induced_subgraph(g, comp)));
    }
    out.components_minimal = true;
    int total = 0;
    for (const auto& c : out.components) {
        const int ri = min_deletions(c, 0, q) - 1;
        out.component_r.push_back(ri);
        total += ri;
        if (ri < 0 || !check_obstruction(c, TripleGoalSet{{{0, q, ri}}}, false).is_minimal) {
            out.components_minimal = false;
        }
    }
    out.sum_matches = static_cast<int>(out.components.size()) - 1 + total == r;
    return out;
}

}  // namespace cograph
