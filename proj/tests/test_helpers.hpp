#ifndef CRITPOSETS_TEST_HELPERS_HPP
#define CRITPOSETS_TEST_HELPERS_HPP

// Independent brute-force oracles for the census tests. Everything here is
// deliberately written against the raw definitions (permutation minima over
// row-major bitmasks, triple-loop transitivity) so it shares no code path
// with the library routines it cross-checks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "critposets/digraph.hpp"

namespace testutil {

// row-major n*n adjacency bitmask, n <= 7
inline std::uint64_t rowmajor_bits(const critposets::Digraph& d) {
    const int n = d.order();
    std::uint64_t bits = 0;
    for (auto [x, y] : d.arcs()) bits |= std::uint64_t{1} << (x * n + y);
    return bits;
}

inline std::uint64_t rowmajor_bits(const critposets::Graph& g) {
    const int n = g.order();
    std::uint64_t bits = 0;
    for (auto [x, y] : g.edges()) {
        bits |= std::uint64_t{1} << (x * n + y);
        bits |= std::uint64_t{1} << (y * n + x);
    }
    return bits;
}

// minimum of the row-major bitmask over all n! relabelings
template <typename Object>
std::uint64_t perm_min_key(const Object& obj) {
    const int n = obj.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t base = rowmajor_bits(obj);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t bits = 0;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (base >> (x * n + y) & 1) bits |= std::uint64_t{1} << (perm[x] * n + perm[y]);
        best = std::min(best, bits);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// triple-loop transitivity straight from the definition (covers the
// two-cycle case: (x,y),(y,x) would need the impossible loop (x,x))
inline bool transitive_by_definition(int n, std::uint64_t bits) {
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y || !(bits >> (x * n + y) & 1)) continue;
            for (int z = 0; z < n; ++z) {
                if (z == y || !(bits >> (y * n + z) & 1)) continue;
                if (z == x || !(bits >> (x * n + z) & 1)) return false;
            }
        }
    return true;
}

// canonical keys of every poset on n labeled vertices, deduplicated (n <= 5)
inline std::set<std::uint64_t> labeled_poset_classes(int n) {
    std::set<std::uint64_t> classes;
    std::vector<critposets::Arc> pairs;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y) pairs.emplace_back(x, y);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::uint64_t bits = 0;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) bits |= std::uint64_t{1} << (pairs[i].first * n + pairs[i].second);
        if (!transitive_by_definition(n, bits)) continue;
        std::vector<critposets::Arc> arcs;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) arcs.push_back(pairs[i]);
        classes.insert(perm_min_key(critposets::Digraph(n, arcs)));
    }
    return classes;
}

// canonical keys of every graph on n labeled vertices, deduplicated (n <= 5)
inline std::set<std::uint64_t> labeled_graph_classes(int n) {
    std::set<std::uint64_t> classes;
    std::vector<critposets::Edge> pairs;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) pairs.emplace_back(x, y);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<critposets::Edge> es;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) es.push_back(pairs[i]);
        classes.insert(perm_min_key(critposets::Graph(n, es)));
    }
    return classes;
}

}  // namespace testutil

#endif
