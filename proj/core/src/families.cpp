#include "critposets/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace critposets {

namespace {

using ArcList = std::vector<Arc>;
using EdgeList = std::vector<Edge>;

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// The base formulas are meaningful for every n >= 1 and the composites need
// the n = 1 instances as building blocks; the public entry points carry the
// stricter guards.

EdgeList g2n_edges(int n) {
    EdgeList e;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) e.emplace_back(2 * i, 2 * j + 1);
    return e;
}

EdgeList g2n_prime_edges(int n) {
    EdgeList e = g2n_edges(n);
    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q) e.emplace_back(2 * p - 1, 2 * q - 1);
    return e;
}

ArcList q2n_arcs(int n) {
    ArcList a;
    for (int p = 0; p < n; ++p)
        for (int q = p; q < n; ++q) a.emplace_back(2 * p, 2 * q + 1);
    return a;
}

ArcList q2n_prime_arcs(int n) {
    ArcList a = q2n_arcs(n);
    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q) a.emplace_back(2 * p - 1, 2 * q - 1);
    return a;
}

ArcList r2n_prime_arcs(int n) {
    ArcList a;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            a.emplace_back(2 * i, 2 * j);
            a.emplace_back(2 * i + 1, 2 * j);
        }
    return a;
}

ArcList r2n_arcs(int n) {
    ArcList a = r2n_prime_arcs(n);
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) a.emplace_back(2 * p + 1, 2 * q + 1);
    return a;
}

ArcList shifted(const ArcList& arcs, int off) {
    ArcList out;
    out.reserve(arcs.size());
    for (auto [x, y] : arcs) out.emplace_back(x + off, y + off);
    return out;
}

EdgeList shifted(const EdgeList& es, int off) {
    EdgeList out;
    out.reserve(es.size());
    for (auto [x, y] : es) out.emplace_back(x + off, y + off);
    return out;
}

ArcList reversed(const ArcList& arcs) {
    ArcList out;
    out.reserve(arcs.size());
    for (auto [x, y] : arcs) out.emplace_back(y, x);
    return out;
}

void append(ArcList& dst, const ArcList& src) { dst.insert(dst.end(), src.begin(), src.end()); }
void append(EdgeList& dst, const EdgeList& src) { dst.insert(dst.end(), src.begin(), src.end()); }

EdgeList g_composite_edges(const CompositionParams& p) {
    const int k = p.k();
    EdgeList e;
    for (int i = 0; i < k; ++i) append(e, shifted(g2n_edges(p.part(i)), 2 * p.prefix(i)));
    for (int pp = 1; pp <= p.part(0); ++pp)
        for (int q = p.part(0) + 1; q <= p.total(); ++q) e.emplace_back(2 * pp - 1, 2 * q - 1);
    return e;
}

ArcList q_composite_arcs(const CompositionParams& p) {
    const int k = p.k();
    ArcList a = q2n_arcs(p.part(0));
    for (int i = 1; i < k; ++i) append(a, shifted(reversed(q2n_arcs(p.part(i))), 2 * p.prefix(i)));
    for (int pp = 1; pp <= p.part(0); ++pp)
        for (int q = p.part(0) + 1; q <= p.total(); ++q) a.emplace_back(2 * q - 1, 2 * pp - 1);
    return a;
}

EdgeList odd_clique_edges(int n1) {
    EdgeList e;
    for (int pp = 1; pp <= n1; ++pp)
        for (int q = pp + 1; q <= n1; ++q) e.emplace_back(2 * pp - 1, 2 * q - 1);
    return e;
}

}  // namespace

CompositionParams::CompositionParams(std::vector<int> parts) : parts_(std::move(parts)) {
    require(!parts_.empty(), "CompositionParams: need at least one part");
    prefix_.push_back(0);
    for (int x : parts_) {
        require(x >= 1, "CompositionParams: parts must be >= 1");
        prefix_.push_back(prefix_.back() + x);
    }
}

CompositionParams::CompositionParams(std::initializer_list<int> parts)
    : CompositionParams(std::vector<int>(parts)) {}

// ---- base families ----------------------------------------------------------

Graph g2n(int n) {
    require(n >= 2, "g2n: n must be >= 2");
    return Graph(2 * n, g2n_edges(n));
}

Graph g2n_prime(int n) {
    require(n >= 2, "g2n_prime: n must be >= 2");
    return Graph(2 * n, g2n_prime_edges(n));
}

Poset q2n(int n) {
    require(n >= 2, "q2n: n must be >= 2");
    return Poset(2 * n, q2n_arcs(n));
}

Poset q2n_prime(int n) {
    require(n >= 2, "q2n_prime: n must be >= 2");
    return Poset(2 * n, q2n_prime_arcs(n));
}

Poset r2n_prime(int n) {
    require(n >= 1, "r2n_prime: n must be >= 1");
    return Poset(2 * n, r2n_prime_arcs(n));
}

Poset r2n(int n) {
    require(n >= 1, "r2n: n must be >= 1");
    return Poset(2 * n, r2n_arcs(n));
}

// ---- composite families -------------------------------------------------

Graph g_composite(const CompositionParams& p) {
    require(p.k() >= 2, "g_composite: k must be >= 2");
    return Graph(2 * p.total(), g_composite_edges(p));
}

Graph g_prime_composite(const CompositionParams& p) {
    require(p.k() >= 2, "g_prime_composite: k must be >= 2");
    require(p.part(0) >= 2, "g_prime_composite: n_1 must be >= 2");
    EdgeList e = g_composite_edges(p);
    append(e, odd_clique_edges(p.part(0)));
    return Graph(2 * p.total(), e);
}

Graph h_split(const CompositionParams& p) {
    require(p.k() >= 2, "h_split: k must be >= 2");
    EdgeList e;
    for (int i = 0; i < p.k(); ++i)
        append(e, shifted(g2n_prime_edges(p.part(i)), 2 * p.prefix(i) + 1));
    for (int pp = 0; pp <= p.total(); ++pp)
        for (int q = pp + 1; q <= p.total(); ++q) e.emplace_back(2 * pp, 2 * q);
    return Graph(2 * p.total() + 1, e);
}

Poset q_composite(const CompositionParams& p) {
    require(p.k() >= 2, "q_composite: k must be >= 2");
    return Poset(2 * p.total(), q_composite_arcs(p));
}

Poset q_prime_composite(const CompositionParams& p) {
    require(p.k() >= 2, "q_prime_composite: k must be >= 2");
    require(p.part(0) >= 2, "q_prime_composite: n_1 must be >= 2");
    ArcList a = q_composite_arcs(p);
    for (int pp = 1; pp <= p.part(0); ++pp)
        for (int q = pp + 1; q <= p.part(0); ++q) a.emplace_back(2 * pp - 1, 2 * q - 1);
    return Poset(2 * p.total(), a);
}

Poset r_split(int n1, int n2) {
    require(n1 >= 1 && n2 >= 1, "r_split: n1 and n2 must be >= 1");
    const int s2 = n1 + n2;
    ArcList a = shifted(q2n_prime_arcs(n1), 1);
    append(a, shifted(reversed(q2n_prime_arcs(n2)), 2 * n1 + 1));
    // the literal first union starts at p = 0, which would be the loop (0,0)
    for (int p = 1; p <= n1; ++p) a.emplace_back(0, 2 * p);
    for (int p = 0; p <= n1; ++p)
        for (int q = n1 + 1; q <= s2; ++q) a.emplace_back(2 * q, 2 * p);
    return Poset(2 * s2 + 1, a);
}

Poset r_prime_split(int n1, int n2) {
    require(n1 >= 1 && n2 >= 1, "r_prime_split: n1 and n2 must be >= 1");
    const int s2 = n1 + n2;
    ArcList a = shifted(r2n_prime_arcs(n1), 1);
    append(a, shifted(reversed(r2n_prime_arcs(n2)), 2 * n1 + 1));
    for (int p = 0; p <= 2 * n1; ++p)
        for (int q = n1 + 1; q <= s2; ++q) a.emplace_back(2 * q - 1, p);
    for (int p = 1; p <= n1; ++p) {
        a.emplace_back(0, 2 * p - 1);  // the q = 0 clause
        for (int q = n1 + 1; q <= s2; ++q) a.emplace_back(2 * q, 2 * p - 1);
    }
    return Poset(2 * s2 + 1, a);
}

Poset o_composite(int n1, int n2) {
    require(n1 >= 2, "o_composite: n1 must be >= 2");
    require(n2 >= 1, "o_composite: n2 must be >= 1");
    const int s2 = n1 + n2;
    ArcList a = r2n_prime_arcs(n1);
    append(a, shifted(reversed(r2n_arcs(n2)), 2 * n1));
    for (int p = 0; p <= 2 * n1 - 1; ++p)
        for (int q = n1; q <= s2 - 1; ++q) a.emplace_back(2 * q, p);
    for (int p = 0; p <= n1 - 1; ++p)
        for (int q = n1; q <= s2 - 1; ++q) a.emplace_back(2 * q + 1, 2 * p);
    return Poset(2 * s2, a);
}

// ---- forbidden-subgraph witnesses -----------------------------------------

HammerGraphs hammer_graphs() {
    Graph g1(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
    Graph g3(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                 {0, 4}, {1, 4}, {1, 5}, {2, 5}, {2, 6}, {3, 6}});
    return {g1, complement(g1), g3, complement(g3)};
}

// ---- catalog ---------------------------------------------------------------

namespace {

// all (n_1,...,n_k) with sum <= max_total, k >= min_k, n_1 >= first_min,
// sorted lexicographically
std::vector<std::vector<int>> compositions(int max_total, int min_k, int first_min) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (int(cur.size()) >= min_k) out.push_back(cur);
        const int lo = cur.empty() ? first_min : 1;
        for (int x = lo; x <= remaining; ++x) {
            cur.push_back(x);
            self(self, remaining - x);
            cur.pop_back();
        }
    };
    rec(rec, max_total);
    std::sort(out.begin(), out.end());
    return out;
}

void push_poset(std::vector<CatalogEntry>& out, std::string tag, std::vector<int> params,
                const Poset& p) {
    out.push_back({FamilyId{tag, params, false, false}, p.digraph()});
    out.push_back({FamilyId{tag, params, true, false}, dual(p).digraph()});
}

void push_graph(std::vector<CatalogEntry>& out, std::string tag, std::vector<int> params,
                const Graph& g) {
    out.push_back({FamilyId{tag, params, false, false}, g});
    out.push_back({FamilyId{tag, params, false, true}, complement(g)});
}

}  // namespace

std::string FamilyId::name() const {
    std::string s = tag;
    if (!params.empty()) {
        s += '(';
        for (std::size_t i = 0; i < params.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(params[i]);
        }
        s += ')';
    }
    if (dual) s += '*';
    if (complement) s += "^c";
    return s;
}

int CatalogEntry::order() const {
    return std::visit([](const auto& o) { return o.order(); }, object);
}

std::vector<CatalogEntry> poset_catalog(int max_order) {
    require(max_order >= 5, "poset_catalog: max_order must be >= 5");
    std::vector<CatalogEntry> out;
    // O: n1 >= 2, n2 >= 1, order 2*(n1+n2)
    for (int n1 = 2; 2 * (n1 + 1) <= max_order; ++n1)
        for (int n2 = 1; 2 * (n1 + n2) <= max_order; ++n2)
            push_poset(out, "O", {n1, n2}, o_composite(n1, n2));
    // Q: k >= 3, order 2*s_k
    for (const auto& ns : compositions(max_order / 2, 3, 1))
        push_poset(out, "Q", ns, q_composite(CompositionParams(ns)));
    // Q': k >= 2, n1 >= 2
    for (const auto& ns : compositions(max_order / 2, 2, 2))
        push_poset(out, "Q'", ns, q_prime_composite(CompositionParams(ns)));
    // R, R': order 2*(n1+n2) + 1
    for (int n1 = 1; 2 * (n1 + 1) + 1 <= max_order; ++n1)
        for (int n2 = 1; 2 * (n1 + n2) + 1 <= max_order; ++n2)
            push_poset(out, "R", {n1, n2}, r_split(n1, n2));
    for (int n1 = 1; 2 * (n1 + 1) + 1 <= max_order; ++n1)
        for (int n2 = 1; 2 * (n1 + n2) + 1 <= max_order; ++n2)
            push_poset(out, "R'", {n1, n2}, r_prime_split(n1, n2));
    return out;
}

std::vector<CatalogEntry> graph_catalog(int max_order) {
    require(max_order >= 5, "graph_catalog: max_order must be >= 5");
    std::vector<CatalogEntry> out;
    for (const auto& ns : compositions(max_order / 2, 3, 1))
        push_graph(out, "G", ns, g_composite(CompositionParams(ns)));
    for (const auto& ns : compositions(max_order / 2, 2, 2))
        push_graph(out, "G'", ns, g_prime_composite(CompositionParams(ns)));
    for (const auto& ns : compositions((max_order - 1) / 2, 2, 1))
        push_graph(out, "H", ns, h_split(CompositionParams(ns)));
    return out;
}

std::vector<CatalogEntry> family_catalog(int max_order) {
    auto out = poset_catalog(max_order);
    auto gs = graph_catalog(max_order);
    out.insert(out.end(), gs.begin(), gs.end());
    return out;
}

GraphOrDigraph generate_family(const std::string& tag, std::span<const int> params) {
    std::string t;
    for (char c : tag) t += char(std::tolower(static_cast<unsigned char>(c)));
    // "p" suffix is an ASCII spelling of the prime
    auto unprime = [](std::string s) {
        if (!s.empty() && s.back() == 'p') s.back() = '\'';
        return s;
    };
    if (t != "g1" && t != "g2" && t != "g3" && t != "g4") t = unprime(t);

    std::vector<int> ps(params.begin(), params.end());
    auto comp = [&](int min_k, int first_min, const char* guard) {
        if (int(ps.size()) < min_k || (first_min > 1 && (ps.empty() || ps[0] < first_min)))
            throw std::invalid_argument(guard);
        return CompositionParams(ps);
    };
    auto two = [&](const char* guard) {
        if (ps.size() != 2) throw std::invalid_argument(guard);
        return std::pair{ps[0], ps[1]};
    };
    auto one = [&](const char* guard) {
        if (ps.size() != 1) throw std::invalid_argument(guard);
        return ps[0];
    };

    if (t == "g") return g_composite(comp(3, 1, "family G requires k >= 3 parts"));
    if (t == "g'") return g_prime_composite(comp(2, 2, "family G' requires k >= 2 and n1 >= 2"));
    if (t == "h") return h_split(comp(2, 1, "family H requires k >= 2 parts"));
    if (t == "q") return q_composite(comp(3, 1, "family Q requires k >= 3 parts")).digraph();
    if (t == "q'")
        return q_prime_composite(comp(2, 2, "family Q' requires k >= 2 and n1 >= 2")).digraph();
    if (t == "r") {
        auto [a, b] = two("family R takes exactly two parameters n1,n2 >= 1");
        return r_split(a, b).digraph();
    }
    if (t == "r'") {
        auto [a, b] = two("family R' takes exactly two parameters n1,n2 >= 1");
        return r_prime_split(a, b).digraph();
    }
    if (t == "o") {
        auto [a, b] = two("family O takes exactly two parameters, n1 >= 2 and n2 >= 1");
        return o_composite(a, b).digraph();
    }
    if (t == "g1") return hammer_graphs().g1;
    if (t == "g2") return hammer_graphs().g2;
    if (t == "g3") return hammer_graphs().g3;
    if (t == "g4") return hammer_graphs().g4;
    if (t == "base-g2n") return g2n(one("base-G2n takes one parameter n >= 2"));
    if (t == "base-g2n'") return g2n_prime(one("base-G2n' takes one parameter n >= 2"));
    if (t == "base-q2n") return q2n(one("base-Q2n takes one parameter n >= 2")).digraph();
    if (t == "base-q2n'") return q2n_prime(one("base-Q2n' takes one parameter n >= 2")).digraph();
    if (t == "base-r2n") return r2n(one("base-R2n takes one parameter n >= 1")).digraph();
    if (t == "base-r2n'") return r2n_prime(one("base-R2n' takes one parameter n >= 1")).digraph();
    throw std::invalid_argument("unknown family tag '" + tag + "'");
}

}  // namespace critposets
