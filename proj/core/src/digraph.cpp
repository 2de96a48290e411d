#include "critposets/digraph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace critposets {

namespace {

int words_for(int n) { return n <= 0 ? 1 : (n + 63) / 64; }

void check_vertex(Vertex v, int n, const char* what) {
    if (v < 0 || v >= n)
        throw std::out_of_range(std::string(what) + ": vertex " + std::to_string(v) +
                                " outside 0.." + std::to_string(n - 1));
}

}  // namespace

// ---- VertexSet --------------------------------------------------------------

VertexSet::VertexSet(int universe) : universe_(universe), words_(words_for(universe), 0) {
    if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
}

VertexSet VertexSet::all(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    return s;
}

VertexSet VertexSet::of(int universe, std::initializer_list<Vertex> vs) {
    VertexSet s(universe);
    for (Vertex v : vs) s.add(v);
    return s;
}

VertexSet VertexSet::of(int universe, std::span<const Vertex> vs) {
    VertexSet s(universe);
    for (Vertex v : vs) s.add(v);
    return s;
}

void VertexSet::check(Vertex v) const { check_vertex(v, universe_, "VertexSet"); }

int VertexSet::size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

bool VertexSet::contains(Vertex v) const {
    check(v);
    return words_[v >> 6] >> (v & 63) & 1;
}

VertexSet& VertexSet::add(Vertex v) {
    check(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    return *this;
}

VertexSet& VertexSet::remove(Vertex v) {
    check(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    return *this;
}

bool VertexSet::subset_of(const VertexSet& other) const {
    if (universe_ != other.universe_)
        throw std::invalid_argument("VertexSet::subset_of: universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    for (int v = 0; v < universe_; ++v)
        if (words_[v >> 6] >> (v & 63) & 1) out.push_back(v);
    return out;
}

// ---- Digraph ----------------------------------------------------------------

Digraph::Digraph(int n) : n_(n), words_(words_for(n)) {
    if (n < 0) throw std::invalid_argument("Digraph: negative order");
    out_.assign(std::size_t(n_) * words_, 0);
    in_.assign(std::size_t(n_) * words_, 0);
}

Digraph::Digraph(int n, std::span<const Arc> arcs) : Digraph(n) {
    for (auto [x, y] : arcs) {
        check_vertex(x, n_, "Digraph");
        check_vertex(y, n_, "Digraph");
        if (x == y) throw std::invalid_argument("Digraph: self-loop at " + std::to_string(x));
        out_[std::size_t(x) * words_ + (y >> 6)] |= std::uint64_t{1} << (y & 63);
        in_[std::size_t(y) * words_ + (x >> 6)] |= std::uint64_t{1} << (x & 63);
    }
    for (auto w : out_) arc_count_ += std::popcount(w);
}

Digraph::Digraph(int n, std::initializer_list<Arc> arcs)
    : Digraph(n, std::span<const Arc>(arcs.begin(), arcs.size())) {}

bool Digraph::has_arc(Vertex x, Vertex y) const {
    check_vertex(x, n_, "Digraph::has_arc");
    check_vertex(y, n_, "Digraph::has_arc");
    return out_[std::size_t(x) * words_ + (y >> 6)] >> (y & 63) & 1;
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> out;
    out.reserve(arc_count_);
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
            if (x != y && (out_[std::size_t(x) * words_ + (y >> 6)] >> (y & 63) & 1))
                out.emplace_back(x, y);
    return out;
}

std::span<const std::uint64_t> Digraph::out_row(Vertex x) const {
    check_vertex(x, n_, "Digraph::out_row");
    return {out_.data() + std::size_t(x) * words_, std::size_t(words_)};
}

std::span<const std::uint64_t> Digraph::in_row(Vertex y) const {
    check_vertex(y, n_, "Digraph::in_row");
    return {in_.data() + std::size_t(y) * words_, std::size_t(words_)};
}

// ---- Graph ------------------------------------------------------------------

Graph::Graph(int n) : n_(n), words_(words_for(n)) {
    if (n < 0) throw std::invalid_argument("Graph: negative order");
    adj_.assign(std::size_t(n_) * words_, 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [x, y] : edges) {
        check_vertex(x, n_, "Graph");
        check_vertex(y, n_, "Graph");
        if (x == y) throw std::invalid_argument("Graph: self-loop at " + std::to_string(x));
        adj_[std::size_t(x) * words_ + (y >> 6)] |= std::uint64_t{1} << (y & 63);
        adj_[std::size_t(y) * words_ + (x >> 6)] |= std::uint64_t{1} << (x & 63);
    }
    std::size_t bits = 0;
    for (auto w : adj_) bits += std::popcount(w);
    edge_count_ = bits / 2;
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

bool Graph::has_edge(Vertex x, Vertex y) const {
    check_vertex(x, n_, "Graph::has_edge");
    check_vertex(y, n_, "Graph::has_edge");
    return adj_[std::size_t(x) * words_ + (y >> 6)] >> (y & 63) & 1;
}

int Graph::degree(Vertex v) const {
    int c = 0;
    for (auto w : row(v)) c += std::popcount(w);
    return c;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int x = 0; x < n_; ++x)
        for (int y = x + 1; y < n_; ++y)
            if (adj_[std::size_t(x) * words_ + (y >> 6)] >> (y & 63) & 1) out.emplace_back(x, y);
    return out;
}

std::span<const std::uint64_t> Graph::row(Vertex v) const {
    check_vertex(v, n_, "Graph::row");
    return {adj_.data() + std::size_t(v) * words_, std::size_t(words_)};
}

// ---- Poset ------------------------------------------------------------------

Poset::Poset(Digraph d) : d_(std::move(d)) {
    if (!is_transitive(d_)) throw std::invalid_argument("Poset: digraph is not transitive");
}

Poset::Poset(int n, std::span<const Arc> arcs) : Poset(Digraph(n, arcs)) {}

Poset::Poset(int n, std::initializer_list<Arc> arcs) : Poset(Digraph(n, arcs)) {}

// ---- operations -------------------------------------------------------------

Graph complement(const Graph& g) {
    const int n = g.order();
    std::vector<Edge> es;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (!g.has_edge(x, y)) es.emplace_back(x, y);
    return Graph(n, es);
}

Digraph dual(const Digraph& d) {
    std::vector<Arc> rev;
    rev.reserve(d.arc_count());
    for (auto [x, y] : d.arcs()) rev.emplace_back(y, x);
    return Digraph(d.order(), rev);
}

Poset dual(const Poset& p) { return Poset(dual(p.digraph())); }

namespace {

std::vector<int> induced_map(int n, const VertexSet& keep, const char* what) {
    if (keep.universe() != n)
        throw std::invalid_argument(std::string(what) + ": vertex set universe " +
                                    std::to_string(keep.universe()) + " != order " +
                                    std::to_string(n));
    std::vector<int> map(n, -1);
    int next = 0;
    for (Vertex v : keep.members()) map[v] = next++;
    return map;
}

}  // namespace

Digraph induced(const Digraph& d, const VertexSet& keep) {
    auto map = induced_map(d.order(), keep, "induced");
    std::vector<Arc> arcs;
    for (auto [x, y] : d.arcs())
        if (map[x] >= 0 && map[y] >= 0) arcs.emplace_back(map[x], map[y]);
    return Digraph(keep.size(), arcs);
}

Graph induced(const Graph& g, const VertexSet& keep) {
    auto map = induced_map(g.order(), keep, "induced");
    std::vector<Edge> es;
    for (auto [x, y] : g.edges())
        if (map[x] >= 0 && map[y] >= 0)
            es.emplace_back(std::min(map[x], map[y]), std::max(map[x], map[y]));
    return Graph(keep.size(), es);
}

Poset induced(const Poset& p, const VertexSet& keep) {
    // transitivity is hereditary
    return Poset(induced(p.digraph(), keep));
}

std::vector<Arc> translate(const Digraph& d, int offset) {
    if (offset < 0) throw std::invalid_argument("translate: negative offset");
    std::vector<Arc> out;
    out.reserve(d.arc_count());
    for (auto [x, y] : d.arcs()) out.emplace_back(x + offset, y + offset);
    return out;
}

std::vector<Edge> translate(const Graph& g, int offset) {
    if (offset < 0) throw std::invalid_argument("translate: negative offset");
    std::vector<Edge> out;
    out.reserve(g.edge_count());
    for (auto [x, y] : g.edges()) out.emplace_back(x + offset, y + offset);
    return out;
}

bool is_transitive(const Digraph& d) {
    const int n = d.order();
    const int w = d.words_per_row();
    // (x,y),(y,z) in A -> (x,z) in A; z == x is impossible since loops are
    // excluded, so out(y) must be a subset of out(x) for every arc (x,y).
    for (int x = 0; x < n; ++x) {
        auto ox = d.out_row(x);
        for (int y = 0; y < n; ++y) {
            if (y == x || !(ox[y >> 6] >> (y & 63) & 1)) continue;
            auto oy = d.out_row(y);
            for (int i = 0; i < w; ++i)
                if (oy[i] & ~ox[i]) return false;
        }
    }
    return true;
}

Graph comparability_graph(const Digraph& d) {
    const int n = d.order();
    std::vector<Edge> es;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (d.has_arc(x, y) || d.has_arc(y, x)) es.emplace_back(x, y);
    return Graph(n, es);
}

Graph comparability_graph(const Poset& p) { return comparability_graph(p.digraph()); }

Digraph relabel(const Digraph& d, std::span<const int> perm) {
    if (int(perm.size()) != d.order()) throw std::invalid_argument("relabel: permutation size");
    std::vector<Arc> arcs;
    arcs.reserve(d.arc_count());
    for (auto [x, y] : d.arcs()) arcs.emplace_back(perm[x], perm[y]);
    return Digraph(d.order(), arcs);
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    if (int(perm.size()) != g.order()) throw std::invalid_argument("relabel: permutation size");
    std::vector<Edge> es;
    es.reserve(g.edge_count());
    for (auto [x, y] : g.edges())
        es.emplace_back(std::min(perm[x], perm[y]), std::max(perm[x], perm[y]));
    return Graph(g.order(), es);
}

// ---- named small objects ------------------------------------------------

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: order must be >= 1");
    std::vector<Edge> es;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) es.emplace_back(x, y);
    return Graph(n, es);
}

Graph empty_graph(int n) {
    if (n < 1) throw std::invalid_argument("empty_graph: order must be >= 1");
    return Graph(n);
}

Graph path_p4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}}); }

Poset oriented_p4() { return Poset(4, {{0, 1}, {2, 1}, {2, 3}}); }

Poset total_order(int n) {
    if (n < 1) throw std::invalid_argument("total_order: order must be >= 1");
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) arcs.emplace_back(i, j);
    return Poset(n, arcs);
}

Graph cycle_c5() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}); }

}  // namespace critposets
