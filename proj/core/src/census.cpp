#include "critposets/census.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace critposets {

namespace {

constexpr int kMaxCanonicalOrder = 12;

// Minimizes the staged adjacency bitstring over all vertex placements:
// stage p contributes the bits between the vertex placed at position p and
// positions 0..p-1 (interleaved out/in for digraphs, one bit per earlier
// position for graphs). Prefix comparison prunes; automorphic twins are
// placed only once per class.
class CanonicalSearch {
public:
    CanonicalSearch(int n, bool directed, std::vector<std::uint8_t> adj)
        : n_(n), directed_(directed), adj_(std::move(adj)) {
        if (n_ > kMaxCanonicalOrder)
            throw std::invalid_argument("canonical_form: order > 12");
        twin_class_ = twin_classes();
        placed_.reserve(n_);
        cur_.assign(n_, 0);
        best_.assign(n_, 0);
    }

    // returns the position of each original vertex in the canonical labeling
    std::vector<int> run() {
        rec();
        std::vector<int> old_to_new(n_);
        for (int p = 0; p < n_; ++p) old_to_new[best_perm_[p]] = p;
        return old_to_new;
    }

    std::vector<std::uint64_t> packed_bits() const {
        std::vector<std::uint64_t> out;
        std::size_t bit = 0;
        const int per_stage = directed_ ? 2 : 1;
        for (int p = 0; p < n_; ++p) {
            const int width = per_stage * p;
            for (int i = width - 1; i >= 0; --i) {
                if (bit % 64 == 0) out.push_back(0);
                if (best_[p] >> i & 1) out.back() |= std::uint64_t{1} << (63 - bit % 64);
                ++bit;
            }
        }
        return out;
    }

private:
    bool arc(int a, int b) const { return adj_[std::size_t(a) * n_ + b] != 0; }

    std::vector<int> twin_classes() const {
        std::vector<int> cls(n_);
        std::iota(cls.begin(), cls.end(), 0);
        auto root = [&](int v) {
            while (cls[v] != v) v = cls[v] = cls[cls[v]];
            return v;
        };
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v) {
                if (arc(u, v) != arc(v, u)) continue;  // swap must be an automorphism
                bool twin = true;
                for (int w = 0; w < n_ && twin; ++w) {
                    if (w == u || w == v) continue;
                    if (arc(u, w) != arc(v, w) || arc(w, u) != arc(w, v)) twin = false;
                }
                if (twin) cls[root(u) < root(v) ? root(v) : root(u)] = std::min(root(u), root(v));
            }
        for (int v = 0; v < n_; ++v) cls[v] = root(v);
        return cls;
    }

    std::uint32_t stage_block(int v) const {
        const int p = int(placed_.size());
        std::uint32_t block = 0;
        for (int i = 0; i < p; ++i) {
            if (directed_) {
                block = block << 1 | std::uint32_t(arc(v, placed_[i]));
                block = block << 1 | std::uint32_t(arc(placed_[i], v));
            } else {
                block = block << 1 | std::uint32_t(arc(v, placed_[i]));
            }
        }
        return block;
    }

    void rec() {
        const int p = int(placed_.size());
        if (p == n_) {
            // cur_ <= best_ along this path; keep the first minimum found
            if (!have_best_ || std::lexicographical_compare(cur_.begin(), cur_.end(),
                                                            best_.begin(), best_.end())) {
                best_ = cur_;
                best_perm_ = placed_;
                have_best_ = true;
            }
            return;
        }
        std::uint32_t seen_classes = 0;  // n <= 12 classes fit a mask
        for (int v = 0; v < n_; ++v) {
            if (used_ & (1u << v)) continue;
            if (seen_classes & (1u << twin_class_[v])) continue;
            seen_classes |= 1u << twin_class_[v];
            cur_[p] = stage_block(v);
            if (have_best_) {
                int cmp = 0;
                for (int i = 0; i <= p; ++i) {
                    if (cur_[i] != best_[i]) {
                        cmp = cur_[i] < best_[i] ? -1 : 1;
                        break;
                    }
                }
                if (cmp > 0) continue;
            }
            placed_.push_back(v);
            used_ |= 1u << v;
            rec();
            used_ &= ~(1u << v);
            placed_.pop_back();
        }
    }

    int n_;
    bool directed_;
    std::vector<std::uint8_t> adj_;
    std::vector<int> twin_class_;
    std::vector<int> placed_;
    std::vector<int> best_perm_;
    std::vector<std::uint32_t> cur_, best_;
    std::uint32_t used_ = 0;
    bool have_best_ = false;
};

std::vector<std::uint8_t> adjacency_of(const Digraph& d) {
    const int n = d.order();
    std::vector<std::uint8_t> adj(std::size_t(n) * n, 0);
    for (auto [x, y] : d.arcs()) adj[std::size_t(x) * n + y] = 1;
    return adj;
}

std::vector<std::uint8_t> adjacency_of(const Graph& g) {
    const int n = g.order();
    std::vector<std::uint8_t> adj(std::size_t(n) * n, 0);
    for (auto [x, y] : g.edges()) {
        adj[std::size_t(x) * n + y] = 1;
        adj[std::size_t(y) * n + x] = 1;
    }
    return adj;
}

}  // namespace

std::string CanonicalForm::to_string() const {
    static const char* hex = "0123456789abcdef";
    std::string s = (kind_ == ObjectKind::graph ? "g" : "d") + std::to_string(n_) + ":";
    for (auto w : bits_)
        for (int shift = 60; shift >= 0; shift -= 4) s += hex[w >> shift & 0xf];
    return s;
}

CanonicalForm canonical_form(const Digraph& d) {
    CanonicalSearch search(d.order(), true, adjacency_of(d));
    search.run();
    CanonicalForm f;
    f.kind_ = ObjectKind::digraph;
    f.n_ = d.order();
    f.bits_ = search.packed_bits();
    return f;
}

CanonicalForm canonical_form(const Graph& g) {
    CanonicalSearch search(g.order(), false, adjacency_of(g));
    search.run();
    CanonicalForm f;
    f.kind_ = ObjectKind::graph;
    f.n_ = g.order();
    f.bits_ = search.packed_bits();
    return f;
}

Digraph canonical_relabel(const Digraph& d) {
    CanonicalSearch search(d.order(), true, adjacency_of(d));
    return relabel(d, search.run());
}

Graph canonical_relabel(const Graph& g) {
    CanonicalSearch search(g.order(), false, adjacency_of(g));
    return relabel(g, search.run());
}

bool is_isomorphic(const Digraph& a, const Digraph& b) {
    if (a.order() != b.order() || a.arc_count() != b.arc_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

bool is_isomorphic(const GraphOrDigraph& a, const GraphOrDigraph& b) {
    if (a.index() != b.index())
        throw std::invalid_argument("is_isomorphic: cannot compare a graph with a digraph");
    if (std::holds_alternative<Graph>(a))
        return is_isomorphic(std::get<Graph>(a), std::get<Graph>(b));
    return is_isomorphic(std::get<Digraph>(a), std::get<Digraph>(b));
}

std::vector<Poset> enumerate_posets(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("enumerate_posets: need 1 <= n <= 7");
    std::vector<Digraph> level = {Digraph(1)};
    for (int m = 2; m <= n; ++m) {
        std::map<CanonicalForm, Digraph> next;
        for (const Digraph& parent : level) {
            const int pm = m - 1;
            std::vector<std::uint32_t> preds(pm, 0);
            for (auto [x, y] : parent.arcs()) preds[y] |= 1u << x;
            for (std::uint32_t down = 0; down < (1u << pm); ++down) {
                bool closed = true;
                for (int x = 0; x < pm && closed; ++x)
                    if ((down >> x & 1) && (preds[x] & ~down)) closed = false;
                if (!closed) continue;
                std::vector<Arc> arcs = parent.arcs();
                for (int x = 0; x < pm; ++x)
                    if (down >> x & 1) arcs.emplace_back(x, pm);
                Digraph child(m, arcs);
                CanonicalForm f = canonical_form(child);
                if (!next.contains(f)) next.emplace(std::move(f), canonical_relabel(child));
            }
        }
        level.clear();
        for (auto& [f, d] : next) level.push_back(std::move(d));
    }
    std::vector<Poset> out;
    out.reserve(level.size());
    for (auto& d : level) out.emplace_back(std::move(d));
    return out;
}

std::vector<Graph> enumerate_graphs(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("enumerate_graphs: need 1 <= n <= 8");
    std::vector<Graph> level = {Graph(1)};
    for (int m = 2; m <= n; ++m) {
        std::map<CanonicalForm, Graph> next;
        for (const Graph& parent : level) {
            const int pm = m - 1;
            for (std::uint32_t nbhd = 0; nbhd < (1u << pm); ++nbhd) {
                std::vector<Edge> es = parent.edges();
                for (int x = 0; x < pm; ++x)
                    if (nbhd >> x & 1) es.emplace_back(x, pm);
                Graph child(m, es);
                CanonicalForm f = canonical_form(child);
                if (!next.contains(f)) next.emplace(std::move(f), canonical_relabel(child));
            }
        }
        level.clear();
        for (auto& [f, g] : next) level.push_back(std::move(g));
    }
    return level;
}

Digraph random_digraph(std::mt19937_64& rng, int n, double arc_probability) {
    std::bernoulli_distribution flip(arc_probability);
    std::vector<Arc> arcs;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && flip(rng)) arcs.emplace_back(x, y);
    return Digraph(n, arcs);
}

Graph random_graph(std::mt19937_64& rng, int n, double edge_probability) {
    std::bernoulli_distribution flip(edge_probability);
    std::vector<Edge> es;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (flip(rng)) es.emplace_back(x, y);
    return Graph(n, es);
}

std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace critposets
