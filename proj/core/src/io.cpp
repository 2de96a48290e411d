#include "critposets/io.hpp"

#include <fstream>
#include <sstream>

namespace critposets {

namespace {

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool parse_int(const std::string& tok, int& out) {
    if (tok.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == tok.size();
}

}  // namespace

GraphOrDigraph read_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    bool directed = false;
    int n = 0;
    std::vector<std::pair<int, int>> records;

    while (std::getline(in, line)) {
        ++lineno;
        std::string s = strip(line);
        if (s.empty() || s[0] == '#') continue;
        if (!have_header) {
            std::istringstream hs(s);
            std::string kind, nspec;
            hs >> kind >> nspec;
            std::string rest;
            if (hs >> rest)
                throw ParseError("line " + std::to_string(lineno) + ": malformed header '" + s + "'");
            if (kind == "digraph")
                directed = true;
            else if (kind == "graph")
                directed = false;
            else
                throw ParseError("line " + std::to_string(lineno) +
                                 ": header must start with 'graph' or 'digraph'");
            if (nspec.rfind("n=", 0) != 0 || !parse_int(nspec.substr(2), n) || n < 0)
                throw ParseError("line " + std::to_string(lineno) + ": expected 'n=<count>'");
            have_header = true;
            continue;
        }
        std::istringstream rs(s);
        std::string xs, ys, rest;
        rs >> xs >> ys;
        if (rs >> rest)
            throw ParseError("line " + std::to_string(lineno) + ": expected 'x y'");
        int x, y;
        if (!parse_int(xs, x) || !parse_int(ys, y))
            throw ParseError("line " + std::to_string(lineno) + ": expected 'x y'");
        if (x < 0 || x >= n || y < 0 || y >= n)
            throw ParseError("line " + std::to_string(lineno) + ": endpoint outside 0.." +
                             std::to_string(n - 1));
        if (x == y)
            throw ParseError("line " + std::to_string(lineno) + ": self-loop at " + std::to_string(x));
        records.emplace_back(x, y);
    }
    if (!have_header) throw ParseError("missing 'graph n=<N>' or 'digraph n=<N>' header");

    if (directed) return Digraph(n, records);
    return Graph(n, records);
}

GraphOrDigraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

GraphOrDigraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_edge_list(in);
}

std::string to_edge_list(const Digraph& d) {
    std::ostringstream out;
    out << "digraph n=" << d.order() << '\n';
    for (auto [x, y] : d.arcs()) out << x << ' ' << y << '\n';
    return out.str();
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "graph n=" << g.order() << '\n';
    for (auto [x, y] : g.edges()) out << x << ' ' << y << '\n';
    return out.str();
}

std::string to_edge_list(const Poset& p) { return to_edge_list(p.digraph()); }

std::string to_edge_list(const GraphOrDigraph& g) {
    return std::visit([](const auto& x) { return to_edge_list(x); }, g);
}

std::string to_dot(const Digraph& d) {
    std::ostringstream out;
    out << "digraph D {\n";
    for (int v = 0; v < d.order(); ++v) out << "  " << v << ";\n";
    for (auto [x, y] : d.arcs()) out << "  " << x << " -> " << y << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
    for (auto [x, y] : g.edges()) out << "  " << x << " -- " << y << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_dot(const GraphOrDigraph& g) {
    return std::visit([](const auto& x) { return to_dot(x); }, g);
}

}  // namespace critposets
