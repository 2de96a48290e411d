#ifndef CRITPOSETS_INTERVALS_HPP
#define CRITPOSETS_INTERVALS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "critposets/digraph.hpp"

namespace critposets {

// A subset I is an interval (module) when no outside vertex distinguishes
// two of its members by arcs in either direction. Indecomposable = at least
// 3 vertices and only trivial intervals. A digraph and its dual share the
// same intervals; so do a graph and its complement.

enum class Classification {
    Decomposable,
    TooSmall,             // indecomposable on 3 vertices
    Critical,             // >= 4 vertices, every vertex critical
    MinusOneCritical,     // >= 5 vertices, exactly one non-critical vertex
    MultipleNonCritical,
};

std::string to_string(Classification c);

struct CriticalityReport {
    int order = 0;
    VertexSet critical;
    VertexSet noncritical;
    Classification classification = Classification::Decomposable;
    std::optional<Vertex> minus_one_vertex;  // set iff MinusOneCritical
};

bool is_interval(const Digraph& d, const VertexSet& i);
bool is_interval(const Graph& g, const VertexSet& i);

/// Inclusion-minimal interval containing {x,y}, by fixpoint closure with a
/// deterministic ascending-vertex scan.
VertexSet minimal_interval_containing(const Digraph& d, Vertex x, Vertex y);
VertexSet minimal_interval_containing(const Graph& g, Vertex x, Vertex y);

/// Every interval, by scanning all 2^n subsets. Oracle route; order <= 16.
std::vector<VertexSet> intervals_bruteforce(const Digraph& d);
std::vector<VertexSet> intervals_bruteforce(const Graph& g);

/// Closure route: indecomposable iff every pair's minimal interval is V.
bool is_indecomposable(const Digraph& d);
bool is_indecomposable(const Graph& g);

/// Subset-scan route; must agree with the closure route (order <= 16).
bool is_indecomposable_bruteforce(const Digraph& d);
bool is_indecomposable_bruteforce(const Graph& g);

/// Per-vertex criticality of an indecomposable digraph/graph; throws
/// std::invalid_argument on decomposable input.
CriticalityReport critical_vertices(const Digraph& d);
CriticalityReport critical_vertices(const Graph& g);

/// Totalized criticality: decomposable input yields Classification::Decomposable.
CriticalityReport classify(const Digraph& d);
CriticalityReport classify(const Graph& g);

/// For indecomposable d and indecomposable induced d[x] with
/// 3 <= |x| <= n-2: a pair {u,v} outside x with d[x + {u,v}] indecomposable.
/// Existence is guaranteed; an empty result on valid input is a bug witness.
std::optional<std::pair<Vertex, Vertex>> check_extension(const Digraph& d, const VertexSet& x);
std::optional<std::pair<Vertex, Vertex>> check_extension(const Graph& g, const VertexSet& x);

}  // namespace critposets

#endif
