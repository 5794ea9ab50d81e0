#include "cograph/graph_io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace cograph {

namespace {

constexpr int kBias = 63;
constexpr char kHeader[] = ">>graph6<<";

void append_size(std::string& out, std::uint64_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
        }
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
        }
    }
}

int sextet(char c, std::size_t pos) {
    const int value = static_cast<unsigned char>(c) - kBias;
    if (value < 0 || value > 63) {
        throw InputError("graph6: byte " + std::to_string(pos) + " outside [63,126]");
    }
    return value;
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    append_size(out, static_cast<std::uint64_t>(n));
    int acc = 0;
    int bits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) {
        out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
    }
    return out;
}

Graph from_graph6(std::string_view text) {
    if (text.starts_with(kHeader)) {
        text.remove_prefix(sizeof(kHeader) - 1);
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw InputError("graph6: empty input");
    }
    if (text.front() == ':' || text.front() == '&') {
        throw InputError("graph6: sparse6/digraph6 input is not supported");
    }
    std::size_t pos = 0;
    std::uint64_t n = 0;
    auto need = [&](std::size_t count) {
        if (pos + count > text.size()) {
            throw InputError("graph6: truncated size header");
        }
    };
    if (static_cast<unsigned char>(text[0]) != 126) {
        n = static_cast<std::uint64_t>(sextet(text[0], 0));
        pos = 1;
    } else if (text.size() > 1 && static_cast<unsigned char>(text[1]) == 126) {
        pos = 2;
        need(6);
        for (int k = 0; k < 6; ++k, ++pos) {
            n = (n << 6) | static_cast<std::uint64_t>(sextet(text[pos], pos));
        }
    } else {
        pos = 1;
        need(3);
        for (int k = 0; k < 3; ++k, ++pos) {
            n = (n << 6) | static_cast<std::uint64_t>(sextet(text[pos], pos));
        }
    }
    if (n > 1'000'000) {
        throw InputError("graph6: graph too large");
    }
    const int order = static_cast<int>(n);
    const std::uint64_t pairs = n * (n == 0 ? 0 : n - 1) / 2;
    const std::uint64_t body = (pairs + 5) / 6;
    if (text.size() - pos != body) {
        throw InputError("graph6: expected " + std::to_string(body) + " body bytes, got " +
                         std::to_string(text.size() - pos));
    }
    Graph g(order);
    std::uint64_t bit = 0;
    for (int j = 1; j < order; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const std::size_t at = pos + bit / 6;
            const int value = sextet(text[at], at);
            if ((value >> (5 - bit % 6)) & 1) {
                g.add_edge(i, j);
            }
        }
    }
    // padding bits must be zero
    if (bit % 6 != 0) {
        const int value = sextet(text.back(), text.size() - 1);
        if ((value & ((1 << (6 - bit % 6)) - 1)) != 0) {
            throw InputError("graph6: nonzero padding bits");
        }
    }
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << '\n';
    for (auto [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
    return out.str();
}

Graph from_edge_list(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<Edge> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream fields(line);
        if (n < 0) {
            if (!(fields >> n) || n < 0) {
                throw InputError("edge list line " + std::to_string(line_no) + ": expected vertex count");
            }
            continue;
        }
        int u = 0;
        int v = 0;
        if (!(fields >> u >> v)) {
            throw InputError("edge list line " + std::to_string(line_no) + ": expected 'u v'");
        }
        std::string rest;
        if (fields >> rest) {
            throw InputError("edge list line " + std::to_string(line_no) + ": trailing data");
        }
        edges.emplace_back(u, v);
    }
    if (n < 0) {
        throw InputError("edge list: missing vertex count");
    }
    return Graph::from_edges(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    return from_edge_list(in);
}

}  // namespace cograph
