#ifndef CRITPOSETS_DIGRAPH_HPP
#define CRITPOSETS_DIGRAPH_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace critposets {

using Vertex = int;
using Arc = std::pair<Vertex, Vertex>;   // ordered pair of distinct vertices
using Edge = std::pair<Vertex, Vertex>;  // stored with first < second

/// Subset of the vertices 0..n-1 of some fixed carrier, bitmask semantics.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);

    static VertexSet all(int universe);
    static VertexSet of(int universe, std::initializer_list<Vertex> vs);
    static VertexSet of(int universe, std::span<const Vertex> vs);

    int universe() const { return universe_; }
    int size() const;
    bool empty() const { return size() == 0; }
    bool contains(Vertex v) const;
    VertexSet& add(Vertex v);
    VertexSet& remove(Vertex v);
    bool subset_of(const VertexSet& other) const;
    std::vector<Vertex> members() const;

    std::span<const std::uint64_t> words() const { return words_; }

    bool operator==(const VertexSet&) const = default;

private:
    void check(Vertex v) const;

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Loop-free directed graph on vertices 0..n-1, adjacency-bitset rows in
/// both directions. Immutable after construction.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n);
    Digraph(int n, std::span<const Arc> arcs);
    Digraph(int n, std::initializer_list<Arc> arcs);

    int order() const { return n_; }
    std::size_t arc_count() const { return arc_count_; }
    bool has_arc(Vertex x, Vertex y) const;
    std::vector<Arc> arcs() const;  // ascending (x, y)

    // successor / predecessor bitsets, one row per vertex
    std::span<const std::uint64_t> out_row(Vertex x) const;
    std::span<const std::uint64_t> in_row(Vertex y) const;
    int words_per_row() const { return words_; }

    bool operator==(const Digraph&) const = default;

private:
    int n_ = 0;
    int words_ = 0;
    std::size_t arc_count_ = 0;
    std::vector<std::uint64_t> out_;
    std::vector<std::uint64_t> in_;
};

/// Symmetric loop-free graph on vertices 0..n-1. A distinct type from
/// Digraph so signatures say which side of a comparability statement
/// they live on.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges);

    int order() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }
    bool has_edge(Vertex x, Vertex y) const;
    int degree(Vertex v) const;
    std::vector<Edge> edges() const;  // ascending (min, max)

    std::span<const std::uint64_t> row(Vertex v) const;
    int words_per_row() const { return words_; }

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    int words_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::uint64_t> adj_;
};

/// Strict partial order: a transitive digraph. Construction rejects
/// non-transitive input.
class Poset {
public:
    explicit Poset(Digraph d);
    Poset(int n, std::span<const Arc> arcs);
    Poset(int n, std::initializer_list<Arc> arcs);

    const Digraph& digraph() const { return d_; }
    int order() const { return d_.order(); }

    bool operator==(const Poset&) const = default;

private:
    Digraph d_;
};

using GraphOrDigraph = std::variant<Graph, Digraph>;

// ---- elementary constructions -------------------------------------------

Graph complement(const Graph& g);
Digraph dual(const Digraph& d);
Poset dual(const Poset& p);

/// Induced subobject, relabeled 0..|keep|-1 preserving ascending member order.
Digraph induced(const Digraph& d, const VertexSet& keep);
Graph induced(const Graph& g, const VertexSet& keep);
Poset induced(const Poset& p, const VertexSet& keep);

/// Arc/edge set shifted by `offset`; an intermediate used when composite
/// family generators assemble a larger carrier.
std::vector<Arc> translate(const Digraph& d, int offset);
std::vector<Edge> translate(const Graph& g, int offset);

bool is_transitive(const Digraph& d);

/// Underlying undirected graph: {x,y} iff (x,y) or (y,x) is an arc.
Graph comparability_graph(const Digraph& d);
Graph comparability_graph(const Poset& p);

/// Image of the object under old-label -> new-label permutation `perm`.
Digraph relabel(const Digraph& d, std::span<const int> perm);
Graph relabel(const Graph& g, std::span<const int> perm);

// ---- named small objects --------------------------------------------------

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_p4();      // edges {01,12,23}
Poset oriented_p4();  // arcs {(0,1),(2,1),(2,3)}
Poset total_order(int n);
Graph cycle_c5();

}  // namespace critposets

#endif
