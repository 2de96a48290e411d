#ifndef CRITPOSETS_CENSUS_HPP
#define CRITPOSETS_CENSUS_HPP

#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "critposets/digraph.hpp"

namespace critposets {

enum class ObjectKind { graph, digraph };

/// Order-invariant fingerprint: the lexicographically minimal adjacency
/// bitstring over all vertex relabelings. Equal forms <=> isomorphic inputs.
class CanonicalForm {
public:
    ObjectKind kind() const { return kind_; }
    int order() const { return n_; }
    std::string to_string() const;  // hex, for reports and debugging

    auto operator<=>(const CanonicalForm&) const = default;

private:
    friend CanonicalForm canonical_form(const Digraph&);
    friend CanonicalForm canonical_form(const Graph&);

    ObjectKind kind_ = ObjectKind::digraph;
    int n_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// order <= 12 (pruned full-permutation search).
CanonicalForm canonical_form(const Digraph& d);
CanonicalForm canonical_form(const Graph& g);

/// The relabeling that realizes the canonical form; a fixpoint of itself.
Digraph canonical_relabel(const Digraph& d);
Graph canonical_relabel(const Graph& g);

bool is_isomorphic(const Digraph& a, const Digraph& b);
bool is_isomorphic(const Graph& a, const Graph& b);
/// Throws std::invalid_argument when one side is a graph and the other a digraph.
bool is_isomorphic(const GraphOrDigraph& a, const GraphOrDigraph& b);

/// Every poset on n vertices exactly once up to isomorphism, in canonical
/// labeling, sorted by canonical form. Grown by adding a maximal element
/// over each down-set of each smaller poset. n <= 7.
std::vector<Poset> enumerate_posets(int n);

/// Every graph on n vertices once up to isomorphism. n <= 8.
std::vector<Graph> enumerate_graphs(int n);

// Sampling helpers for the randomized cross-checks.
Digraph random_digraph(std::mt19937_64& rng, int n, double arc_probability);
Graph random_graph(std::mt19937_64& rng, int n, double edge_probability);
std::vector<int> random_permutation(std::mt19937_64& rng, int n);

}  // namespace critposets

#endif
