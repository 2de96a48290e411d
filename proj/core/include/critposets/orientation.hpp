#ifndef CRITPOSETS_ORIENTATION_HPP
#define CRITPOSETS_ORIENTATION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "critposets/digraph.hpp"
#include "critposets/families.hpp"

namespace critposets {

struct OrientationOptions {
    std::size_t max_orientations = 10'000;
    std::size_t max_nodes = ~std::size_t{0};  // search-tree node budget
};

struct OrientationResult {
    std::vector<Poset> orientations;
    bool exhausted = false;  // true iff the search completed under both limits
    std::size_t nodes = 0;
};

/// All transitive orientations of g, by backtracking over edge directions
/// with forcing propagation. Deterministic: edges in (min,max) order, the
/// low->high direction tried first. An empty exhausted result means g is
/// not a comparability graph.
OrientationResult transitive_orientations(const Graph& g, const OrientationOptions& opt = {});

bool is_comparability(const Graph& g);

/// Induced-subgraph embedding: some vertex subset of host induces a graph
/// isomorphic to pattern.
bool embeds(const Graph& pattern, const Graph& host);

struct SplitPartition {
    VertexSet clique;
    VertexSet stable;
};

/// Some partition of the vertices into a clique and a stable set, if one
/// exists (greedy by degree with backtracking; any valid partition).
std::optional<SplitPartition> split_partition(const Graph& g);

/// Forbidden-subgraph criteria for split graphs; both throw
/// std::invalid_argument on non-split input.
/// A split graph is a comparability graph iff it embeds none of g1, g2, g4.
bool split_comparability_forbidden(const Graph& g);
/// Its complement is a comparability graph iff it embeds none of g1, g2, g3.
bool split_complement_comparability_forbidden(const Graph& g);

/// Orientation-search evidence about the complements of g_composite /
/// g_prime_composite. Emitted as data, never asserted: the values record
/// whatever the exhaustive search finds.
struct ConjectureProbe {
    std::vector<int> params;
    // empty optional: search hit the node budget, or (for the G' side)
    // n_1 = 1 so the family has no member with these params
    std::optional<bool> complement_of_g_comparability;
    std::optional<bool> complement_of_g_prime_comparability;
    bool g_prime_in_family = true;
    std::size_t nodes_g = 0;
    std::size_t nodes_g_prime = 0;

    bool complete() const;
};

/// k >= 3 required.
ConjectureProbe conjecture_probe(const CompositionParams& params,
                                 std::size_t max_nodes = 50'000'000);

}  // namespace critposets

#endif
