#include "critposets/intervals.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace critposets {

namespace {

// Shared kernel over an adjacency view: a Digraph contributes successor and
// predecessor rows, a Graph contributes its symmetric row twice.
struct DigraphView {
    const Digraph& d;
    int order() const { return d.order(); }
    int words() const { return d.words_per_row(); }
    std::span<const std::uint64_t> fwd(Vertex v) const { return d.out_row(v); }
    std::span<const std::uint64_t> bwd(Vertex v) const { return d.in_row(v); }
    Digraph restrict_to(const VertexSet& keep) const { return induced(d, keep); }
};

struct GraphView {
    const Graph& g;
    int order() const { return g.order(); }
    int words() const { return g.words_per_row(); }
    std::span<const std::uint64_t> fwd(Vertex v) const { return g.row(v); }
    std::span<const std::uint64_t> bwd(Vertex v) const { return g.row(v); }
    Graph restrict_to(const VertexSet& keep) const { return induced(g, keep); }
};

// row & set is empty or equals set
bool uniform_on(std::span<const std::uint64_t> row, std::span<const std::uint64_t> set, int words) {
    bool any = false, all = true;
    for (int i = 0; i < words; ++i) {
        std::uint64_t m = row[i] & set[i];
        if (m) any = true;
        if (m != set[i]) all = false;
    }
    return !any || all;
}

template <typename View>
bool splits(const View& v, Vertex z, std::span<const std::uint64_t> set) {
    return !uniform_on(v.fwd(z), set, v.words()) || !uniform_on(v.bwd(z), set, v.words());
}

template <typename View>
bool is_interval_impl(const View& v, const VertexSet& i) {
    if (i.universe() != v.order())
        throw std::invalid_argument("is_interval: vertex set universe != order");
    auto set = i.words();
    for (int z = 0; z < v.order(); ++z) {
        if (i.contains(z)) continue;
        if (splits(v, z, set)) return false;
    }
    return true;
}

template <typename View>
VertexSet closure_impl(const View& v, Vertex x, Vertex y) {
    const int n = v.order();
    if (x == y) throw std::invalid_argument("minimal_interval_containing: x == y");
    VertexSet w = VertexSet::of(n, {x, y});
    bool grew = true;
    while (grew) {
        grew = false;
        for (int z = 0; z < n; ++z) {
            if (w.contains(z)) continue;
            if (splits(v, z, w.words())) {
                w.add(z);
                grew = true;
            }
        }
    }
    return w;
}

template <typename View>
bool is_indecomposable_impl(const View& v) {
    const int n = v.order();
    if (n < 3) return false;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (closure_impl(v, x, y).size() != n) return false;
    return true;
}

template <typename View>
std::vector<VertexSet> bruteforce_impl(const View& v) {
    const int n = v.order();
    if (n > 16) throw std::invalid_argument("intervals_bruteforce: order > 16");
    // single-word rows here since n <= 16
    std::vector<std::uint64_t> fwd(n), bwd(n);
    for (int z = 0; z < n; ++z) {
        fwd[z] = v.fwd(z)[0];
        bwd[z] = v.bwd(z)[0];
    }
    std::vector<VertexSet> out;
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
        bool ok = true;
        for (int z = 0; z < n && ok; ++z) {
            if (mask >> z & 1) continue;
            std::uint64_t f = fwd[z] & mask, b = bwd[z] & mask;
            if ((f && f != mask) || (b && b != mask)) ok = false;
        }
        if (ok) {
            VertexSet s(n);
            for (int z = 0; z < n; ++z)
                if (mask >> z & 1) s.add(z);
            out.push_back(std::move(s));
        }
    }
    return out;
}

template <typename View>
bool is_indecomposable_bruteforce_impl(const View& v) {
    const int n = v.order();
    if (n < 3) return false;
    if (n > 16) throw std::invalid_argument("is_indecomposable_bruteforce: order > 16");
    std::vector<std::uint64_t> fwd(n), bwd(n);
    for (int z = 0; z < n; ++z) {
        fwd[z] = v.fwd(z)[0];
        bwd[z] = v.bwd(z)[0];
    }
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
        int sz = std::popcount(mask);
        if (sz < 2 || sz >= n) continue;
        bool interval = true;
        for (int z = 0; z < n && interval; ++z) {
            if (mask >> z & 1) continue;
            std::uint64_t f = fwd[z] & mask, b = bwd[z] & mask;
            if ((f && f != mask) || (b && b != mask)) interval = false;
        }
        if (interval) return false;
    }
    return true;
}

template <typename View>
CriticalityReport critical_impl(const View& v) {
    const int n = v.order();
    if (!is_indecomposable_impl(v))
        throw std::invalid_argument("critical_vertices: input is decomposable");
    CriticalityReport r;
    r.order = n;
    r.critical = VertexSet(n);
    r.noncritical = VertexSet(n);
    for (int x = 0; x < n; ++x) {
        VertexSet keep = VertexSet::all(n);
        keep.remove(x);
        if (is_indecomposable(v.restrict_to(keep)))
            r.noncritical.add(x);
        else
            r.critical.add(x);
    }
    const int nc = r.noncritical.size();
    if (n < 4)
        r.classification = Classification::TooSmall;
    else if (nc == 0)
        r.classification = Classification::Critical;
    else if (nc == 1 && n >= 5) {
        r.classification = Classification::MinusOneCritical;
        r.minus_one_vertex = r.noncritical.members().front();
    } else
        r.classification = Classification::MultipleNonCritical;
    return r;
}

template <typename View>
CriticalityReport classify_impl(const View& v) {
    if (!is_indecomposable_impl(v)) {
        CriticalityReport r;
        r.order = v.order();
        r.critical = VertexSet(v.order());
        r.noncritical = VertexSet(v.order());
        r.classification = Classification::Decomposable;
        return r;
    }
    return critical_impl(v);
}

template <typename View>
std::optional<std::pair<Vertex, Vertex>> extension_impl(const View& v, const VertexSet& x) {
    const int n = v.order();
    if (x.universe() != n)
        throw std::invalid_argument("check_extension: vertex set universe != order");
    if (!is_indecomposable_impl(v))
        throw std::invalid_argument("check_extension: digraph is decomposable");
    const int k = x.size();
    if (k < 3 || k > n - 2)
        throw std::invalid_argument("check_extension: need 3 <= |x| <= n-2");
    if (!is_indecomposable(v.restrict_to(x)))
        throw std::invalid_argument("check_extension: induced subobject is decomposable");
    for (int u = 0; u < n; ++u) {
        if (x.contains(u)) continue;
        for (int w = u + 1; w < n; ++w) {
            if (x.contains(w)) continue;
            VertexSet ext = x;
            ext.add(u).add(w);
            if (is_indecomposable(v.restrict_to(ext))) return std::make_pair(u, w);
        }
    }
    return std::nullopt;
}

}  // namespace

std::string to_string(Classification c) {
    switch (c) {
        case Classification::Decomposable: return "Decomposable";
        case Classification::TooSmall: return "TooSmall";
        case Classification::Critical: return "Critical";
        case Classification::MinusOneCritical: return "MinusOneCritical";
        case Classification::MultipleNonCritical: return "MultipleNonCritical";
    }
    return "?";
}

bool is_interval(const Digraph& d, const VertexSet& i) { return is_interval_impl(DigraphView{d}, i); }
bool is_interval(const Graph& g, const VertexSet& i) { return is_interval_impl(GraphView{g}, i); }

VertexSet minimal_interval_containing(const Digraph& d, Vertex x, Vertex y) {
    return closure_impl(DigraphView{d}, x, y);
}
VertexSet minimal_interval_containing(const Graph& g, Vertex x, Vertex y) {
    return closure_impl(GraphView{g}, x, y);
}

std::vector<VertexSet> intervals_bruteforce(const Digraph& d) { return bruteforce_impl(DigraphView{d}); }
std::vector<VertexSet> intervals_bruteforce(const Graph& g) { return bruteforce_impl(GraphView{g}); }

bool is_indecomposable(const Digraph& d) { return is_indecomposable_impl(DigraphView{d}); }
bool is_indecomposable(const Graph& g) { return is_indecomposable_impl(GraphView{g}); }

bool is_indecomposable_bruteforce(const Digraph& d) {
    return is_indecomposable_bruteforce_impl(DigraphView{d});
}
bool is_indecomposable_bruteforce(const Graph& g) {
    return is_indecomposable_bruteforce_impl(GraphView{g});
}

CriticalityReport critical_vertices(const Digraph& d) { return critical_impl(DigraphView{d}); }
CriticalityReport critical_vertices(const Graph& g) { return critical_impl(GraphView{g}); }

CriticalityReport classify(const Digraph& d) { return classify_impl(DigraphView{d}); }
CriticalityReport classify(const Graph& g) { return classify_impl(GraphView{g}); }

std::optional<std::pair<Vertex, Vertex>> check_extension(const Digraph& d, const VertexSet& x) {
    return extension_impl(DigraphView{d}, x);
}
std::optional<std::pair<Vertex, Vertex>> check_extension(const Graph& g, const VertexSet& x) {
    return extension_impl(GraphView{g}, x);
}

}  // namespace critposets
