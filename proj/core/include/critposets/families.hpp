#ifndef CRITPOSETS_FAMILIES_HPP
#define CRITPOSETS_FAMILIES_HPP

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "critposets/digraph.hpp"

namespace critposets {

/// Composition (n_1,...,n_k) of strictly positive integers with prefix sums
/// s_0 = 0, s_i = n_1 + ... + n_i; parameterizes the composite families.
class CompositionParams {
public:
    explicit CompositionParams(std::vector<int> parts);
    CompositionParams(std::initializer_list<int> parts);

    int k() const { return int(parts_.size()); }
    int part(int i) const { return parts_.at(i); }       // n_{i+1}, 0-based
    int prefix(int i) const { return prefix_.at(i); }    // s_i
    int total() const { return prefix_.back(); }         // s_k
    const std::vector<int>& parts() const { return parts_; }

private:
    std::vector<int> parts_;
    std::vector<int> prefix_;
};

// ---- base families ----------------------------------------------------------

/// Half-graph on {0,...,2n-1}: edges {2i,2j+1} for 0 <= i <= j <= n-1. Critical.
Graph g2n(int n);                        // n >= 2
/// g2n plus a clique on the odd vertices (split graph).
Graph g2n_prime(int n);                  // n >= 2

/// Orientation of g2n: arcs (2p,2q+1) for 0 <= p <= q <= n-1. Critical poset.
Poset q2n(int n);                        // n >= 2
/// q2n plus the chain (2p-1,2q-1) for 1 <= p < q <= n.
Poset q2n_prime(int n);                  // n >= 2

/// Arcs (2i,2j) and (2i+1,2j) for i < j.
Poset r2n_prime(int n);                  // n >= 1
/// r2n_prime plus the odd chain (2p+1,2q+1) for p < q.
Poset r2n(int n);                        // n >= 1

// ---- composite families -------------------------------------------------

Graph g_composite(const CompositionParams& p);        // k >= 2
Graph g_prime_composite(const CompositionParams& p);  // k >= 2, n_1 >= 2
Graph h_split(const CompositionParams& p);            // k >= 2; order 2*s_k + 1

Poset q_composite(const CompositionParams& p);        // k >= 2
Poset q_prime_composite(const CompositionParams& p);  // k >= 2, n_1 >= 2

Poset r_split(int n1, int n2);        // n1,n2 >= 1; order 2*(n1+n2) + 1
Poset r_prime_split(int n1, int n2);  // n1,n2 >= 1; order 2*(n1+n2) + 1
Poset o_composite(int n1, int n2);    // n1 >= 2, n2 >= 1; order 2*(n1+n2)

// ---- forbidden-subgraph witnesses -----------------------------------------

/// The four split-graph comparability witnesses: g1 = net (triangle plus a
/// pendant at each corner), g2 = complement(g1) (3-sun), g3 = K4 plus a
/// stable triple glued along consecutive clique pairs, g4 = complement(g3).
struct HammerGraphs {
    Graph g1, g2, g3, g4;
};
HammerGraphs hammer_graphs();

// ---- catalog ---------------------------------------------------------------

struct FamilyId {
    std::string tag;          // "G", "G'", "H", "Q", "Q'", "R", "R'", "O", ...
    std::vector<int> params;  // the n_i values
    bool dual = false;
    bool complement = false;

    std::string name() const;  // e.g. "Q(1,1,1)", "R(1,2)*", "H(1,1)^c"
};

struct CatalogEntry {
    FamilyId id;
    GraphOrDigraph object;  // posets are stored as their digraphs

    int order() const;
};

/// Every poset-family member (with its dual) of order <= max_order:
/// families Q (k >= 3), Q' (k >= 2, n_1 >= 2), O (n_1 >= 2, n_2 >= 1),
/// R and R' (n_1, n_2 >= 1). Deterministic: sorted by tag, then params,
/// original before dual. Isomorphic duplicates are not removed.
std::vector<CatalogEntry> poset_catalog(int max_order);

/// Every graph-family member (with its complement) of order <= max_order:
/// families G (k >= 3), G' (k >= 2, n_1 >= 2), H (k >= 2).
std::vector<CatalogEntry> graph_catalog(int max_order);

/// poset_catalog followed by graph_catalog. max_order >= 5.
std::vector<CatalogEntry> family_catalog(int max_order);

/// Build one family member from a CLI-style tag (case-insensitive; "'" may
/// be written "p", e.g. Q' = Qp). Tags: G, G', H, Q, Q', R, R', O,
/// G1..G4, base-G2n, base-G2n', base-Q2n, base-Q2n', base-R2n, base-R2n'.
/// Throws std::invalid_argument naming the violated guard.
GraphOrDigraph generate_family(const std::string& tag, std::span<const int> params);

}  // namespace critposets

#endif
