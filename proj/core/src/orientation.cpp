#include "critposets/orientation.hpp"

#include <algorithm>
#include <stdexcept>

namespace critposets {

namespace {

// Backtracking over edge directions. A direction a->b forces a->c for every
// edge {a,c} with {b,c} not an edge, and c->b for every edge {c,b} with
// {c,a} not an edge; set arcs additionally propagate through triangles
// ((x,y),(y,c) set and {x,c} an edge forces (x,c)). Forcing is pruning only:
// complete assignments are still checked with the full transitivity test.
class OrientationSearch {
public:
    OrientationSearch(const Graph& g, const OrientationOptions& opt) : g_(g), opt_(opt) {
        const int n = g.order();
        edges_ = g.edges();
        edge_at_.assign(std::size_t(n) * n, -1);
        for (int i = 0; i < int(edges_.size()); ++i) {
            auto [u, v] = edges_[i];
            edge_at_[std::size_t(u) * n + v] = i;
            edge_at_[std::size_t(v) * n + u] = i;
        }
        dir_.assign(edges_.size(), Unset);
        adj_.assign(std::size_t(n) * n, 0);
        for (auto [u, v] : edges_) {
            adj_[std::size_t(u) * n + v] = 1;
            adj_[std::size_t(v) * n + u] = 1;
        }
    }

    OrientationResult run() {
        result_.exhausted = true;
        search(0);
        result_.nodes = nodes_;
        return std::move(result_);
    }

private:
    enum Dir : signed char { Unset = 0, Forward = 1, Backward = 2 };

    bool adjacent(int a, int b) const { return adj_[std::size_t(a) * g_.order() + b] != 0; }
    int edge_index(int a, int b) const { return edge_at_[std::size_t(a) * g_.order() + b]; }

    // current direction of edge e as an arc (from,to), valid when set
    Arc arc_of(int e) const {
        auto [u, v] = edges_[e];
        return dir_[e] == Forward ? Arc{u, v} : Arc{v, u};
    }

    // Sets arc a->b; returns false on contradiction. Newly set edges are
    // recorded on trail_ and queued for propagation.
    bool set_arc(int a, int b) {
        const int e = edge_index(a, b);
        const Dir want = (edges_[e].first == a) ? Forward : Backward;
        if (dir_[e] != Unset) return dir_[e] == want;
        dir_[e] = want;
        trail_.push_back(e);
        queue_.push_back(e);
        return true;
    }

    bool propagate() {
        const int n = g_.order();
        while (!queue_.empty()) {
            const int e = queue_.back();
            queue_.pop_back();
            auto [x, y] = arc_of(e);
            for (int c = 0; c < n; ++c) {
                if (c == x || c == y) continue;
                const bool cx = adjacent(c, x), cy = adjacent(c, y);
                if (cx && !cy) {
                    if (!set_arc(x, c)) return false;
                } else if (cy && !cx) {
                    if (!set_arc(c, y)) return false;
                } else if (cx && cy) {
                    const int eyc = edge_index(y, c);
                    if (dir_[eyc] != Unset && arc_of(eyc) == Arc{y, c}) {
                        if (!set_arc(x, c)) return false;
                    }
                    const int ecx = edge_index(c, x);
                    if (dir_[ecx] != Unset && arc_of(ecx) == Arc{c, x}) {
                        if (!set_arc(c, y)) return false;
                    }
                }
            }
        }
        return true;
    }

    void emit() {
        std::vector<Arc> arcs;
        arcs.reserve(edges_.size());
        for (int e = 0; e < int(edges_.size()); ++e) arcs.push_back(arc_of(e));
        Digraph d(g_.order(), arcs);
        if (!is_transitive(d)) return;
        result_.orientations.emplace_back(std::move(d));
        if (result_.orientations.size() >= opt_.max_orientations) {
            result_.exhausted = false;  // stopped at the cap, not a completed search
            stop_ = true;
        }
    }

    void search(int from) {
        if (stop_) return;
        if (++nodes_ > opt_.max_nodes) {
            result_.exhausted = false;
            stop_ = true;
            return;
        }
        int e = from;
        while (e < int(edges_.size()) && dir_[e] != Unset) ++e;
        if (e == int(edges_.size())) {
            emit();
            return;
        }
        auto [u, v] = edges_[e];
        for (auto [a, b] : {Arc{u, v}, Arc{v, u}}) {
            const std::size_t mark = trail_.size();
            queue_.clear();
            if (set_arc(a, b) && propagate()) search(e + 1);
            while (trail_.size() > mark) {
                dir_[trail_.back()] = Unset;
                trail_.pop_back();
            }
            queue_.clear();
            if (stop_) return;
        }
    }

    const Graph& g_;
    OrientationOptions opt_;
    std::vector<Edge> edges_;
    std::vector<int> edge_at_;
    std::vector<signed char> adj_;
    std::vector<Dir> dir_;
    std::vector<int> trail_;
    std::vector<int> queue_;
    OrientationResult result_;
    std::size_t nodes_ = 0;
    bool stop_ = false;
};

}  // namespace

OrientationResult transitive_orientations(const Graph& g, const OrientationOptions& opt) {
    return OrientationSearch(g, opt).run();
}

bool is_comparability(const Graph& g) {
    OrientationOptions opt;
    opt.max_orientations = 1;
    return !transitive_orientations(g, opt).orientations.empty();
}

namespace {

bool extend_embedding(const Graph& pat, const Graph& host, const std::vector<int>& order,
                      std::vector<int>& image, std::vector<char>& used, std::size_t depth) {
    if (depth == order.size()) return true;
    const int p = order[depth];
    for (int h = 0; h < host.order(); ++h) {
        if (used[h] || host.degree(h) < pat.degree(p)) continue;
        bool ok = true;
        for (std::size_t i = 0; i < depth && ok; ++i) {
            const int q = order[i];
            if (pat.has_edge(p, q) != host.has_edge(h, image[q])) ok = false;
        }
        if (!ok) continue;
        image[p] = h;
        used[h] = 1;
        if (extend_embedding(pat, host, order, image, used, depth + 1)) return true;
        used[h] = 0;
    }
    return false;
}

}  // namespace

bool embeds(const Graph& pattern, const Graph& host) {
    if (pattern.order() > host.order()) return false;
    std::vector<int> order(pattern.order());
    for (int i = 0; i < pattern.order(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (pattern.degree(a) != pattern.degree(b)) return pattern.degree(a) > pattern.degree(b);
        return a < b;
    });
    std::vector<int> image(pattern.order(), -1);
    std::vector<char> used(host.order(), 0);
    return extend_embedding(pattern, host, order, image, used, 0);
}

namespace {

bool assign_split(const Graph& g, const std::vector<int>& order, std::vector<signed char>& side,
                  std::size_t depth) {
    if (depth == order.size()) return true;
    const int v = order[depth];
    bool clique_ok = true, stable_ok = true;
    for (std::size_t i = 0; i < depth; ++i) {
        const int u = order[i];
        if (side[u] == 1 && !g.has_edge(u, v)) clique_ok = false;
        if (side[u] == 0 && g.has_edge(u, v)) stable_ok = false;
    }
    if (clique_ok) {
        side[v] = 1;
        if (assign_split(g, order, side, depth + 1)) return true;
    }
    if (stable_ok) {
        side[v] = 0;
        if (assign_split(g, order, side, depth + 1)) return true;
    }
    side[v] = -1;
    return false;
}

}  // namespace

std::optional<SplitPartition> split_partition(const Graph& g) {
    const int n = g.order();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    std::vector<signed char> side(n, -1);
    if (!assign_split(g, order, side, 0)) return std::nullopt;
    SplitPartition p{VertexSet(n), VertexSet(n)};
    for (int v = 0; v < n; ++v) (side[v] == 1 ? p.clique : p.stable).add(v);
    return p;
}

namespace {

void require_split(const Graph& g, const char* what) {
    if (!split_partition(g))
        throw std::invalid_argument(std::string(what) + ": input graph is not split");
}

}  // namespace

bool split_comparability_forbidden(const Graph& g) {
    require_split(g, "split_comparability_forbidden");
    const auto w = hammer_graphs();
    return !embeds(w.g1, g) && !embeds(w.g2, g) && !embeds(w.g4, g);
}

bool split_complement_comparability_forbidden(const Graph& g) {
    require_split(g, "split_complement_comparability_forbidden");
    const auto w = hammer_graphs();
    return !embeds(w.g1, g) && !embeds(w.g2, g) && !embeds(w.g3, g);
}

bool ConjectureProbe::complete() const {
    return complement_of_g_comparability.has_value() &&
           (complement_of_g_prime_comparability.has_value() || !g_prime_in_family);
}

ConjectureProbe conjecture_probe(const CompositionParams& params, std::size_t max_nodes) {
    if (params.k() < 3)
        throw std::invalid_argument("conjecture_probe: the conjecture concerns k >= 3");
    ConjectureProbe probe;
    probe.params = params.parts();

    OrientationOptions opt;
    opt.max_orientations = 1;
    opt.max_nodes = max_nodes;

    auto decide = [&](const Graph& g, std::size_t& nodes) -> std::optional<bool> {
        auto res = transitive_orientations(complement(g), opt);
        nodes = res.nodes;
        if (!res.orientations.empty()) return true;
        if (res.exhausted) return false;
        return std::nullopt;
    };

    probe.complement_of_g_comparability = decide(g_composite(params), probe.nodes_g);
    if (params.part(0) >= 2) {
        probe.complement_of_g_prime_comparability =
            decide(g_prime_composite(params), probe.nodes_g_prime);
    } else {
        probe.g_prime_in_family = false;  // G' requires n_1 >= 2
    }
    return probe;
}

}  // namespace critposets
