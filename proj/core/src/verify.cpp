#include "critposets/verify.hpp"

#include <bit>
#include <map>
#include <stdexcept>

#include "critposets/census.hpp"
#include "critposets/families.hpp"
#include "critposets/intervals.hpp"
#include "critposets/io.hpp"
#include "critposets/orientation.hpp"

namespace critposets {

namespace {

void finish(VerificationReport& r) {
    r.status = r.failures == 0 ? VerificationReport::Status::pass
                               : VerificationReport::Status::fail;
}

std::string witness(const std::string& note, const std::string& serialized) {
    return "# " + note + "\n" + serialized;
}

bool minus_one_at_zero(const CriticalityReport& r) {
    return r.classification == Classification::MinusOneCritical && r.minus_one_vertex == 0;
}

}  // namespace

std::string to_string(VerificationReport::Status s) {
    switch (s) {
        case VerificationReport::Status::pass: return "pass";
        case VerificationReport::Status::fail: return "fail";
        case VerificationReport::Status::inconclusive: return "inconclusive";
    }
    return "?";
}

VerificationReport verify_main_theorem(int n) {
    if (n < 5 || n > 7) throw std::invalid_argument("verify_main_theorem: need 5 <= n <= 7");
    VerificationReport r;
    r.check = "minus-one-critical-characterization";
    r.order_lo = r.order_hi = n;

    std::map<CanonicalForm, Digraph> enumerated;
    for (const Poset& p : enumerate_posets(n)) {
        ++r.enumerated;
        ++r.checked;
        if (classify(p.digraph()).classification == Classification::MinusOneCritical)
            enumerated.emplace(canonical_form(p.digraph()), p.digraph());
    }

    std::map<CanonicalForm, Digraph> catalog;
    for (const CatalogEntry& e : poset_catalog(n)) {
        if (e.order() != n) continue;
        ++r.checked;
        const Digraph& d = std::get<Digraph>(e.object);
        if (!minus_one_at_zero(classify(d))) {
            ++r.failures;
            r.witnesses.push_back(witness(
                "catalog member " + e.id.name() + " is not minus-one-critical at vertex 0",
                to_edge_list(d)));
        }
        catalog.emplace(canonical_form(d), d);
    }

    for (const auto& [f, d] : enumerated)
        if (!catalog.contains(f)) {
            ++r.failures;
            r.witnesses.push_back(witness(
                "minus-one-critical poset on " + std::to_string(n) +
                    " vertices not isomorphic to any catalog member",
                to_edge_list(d)));
        }
    for (const auto& [f, d] : catalog)
        if (!enumerated.contains(f)) {
            ++r.failures;
            r.witnesses.push_back(witness(
                "catalog class not found among enumerated minus-one-critical posets",
                to_edge_list(d)));
        }

    finish(r);
    return r;
}

namespace {

VerificationReport check_gallai(const std::vector<Poset>& posets, int n) {
    VerificationReport r;
    r.check = "gallai-transfer";
    r.order_lo = r.order_hi = n;
    r.enumerated = posets.size();
    for (const Poset& p : posets) {
        ++r.checked;
        if (is_indecomposable(p.digraph()) != is_indecomposable(comparability_graph(p))) {
            ++r.failures;
            r.witnesses.push_back(witness("indecomposability differs from comparability graph",
                                          to_edge_list(p)));
        }
    }
    finish(r);
    return r;
}

VerificationReport check_criticality_transfer(const std::vector<Poset>& posets, int n) {
    VerificationReport r;
    r.check = "criticality-transfer";
    r.order_lo = r.order_hi = n;
    r.enumerated = posets.size();
    for (const Poset& p : posets) {
        if (!is_indecomposable(p.digraph())) continue;
        ++r.checked;
        const auto rp = critical_vertices(p.digraph());
        const auto rg = critical_vertices(comparability_graph(p));
        const bool pm = rp.classification == Classification::MinusOneCritical;
        const bool gm = rg.classification == Classification::MinusOneCritical;
        if (pm != gm || (pm && rp.minus_one_vertex != rg.minus_one_vertex)) {
            ++r.failures;
            r.witnesses.push_back(witness("minus-one-criticality does not transfer",
                                          to_edge_list(p)));
        }
    }
    finish(r);
    return r;
}

VerificationReport check_extension_pairs(const std::vector<Poset>& posets, int n) {
    VerificationReport r;
    r.check = "extension-pairs";
    r.order_lo = r.order_hi = n;
    r.enumerated = posets.size();
    for (const Poset& p : posets) {
        const Digraph& d = p.digraph();
        if (!is_indecomposable(d)) continue;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            const int size = std::popcount(mask);
            if (size < 3 || size > n - 2) continue;
            VertexSet x(n);
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) x.add(v);
            if (!is_indecomposable(induced(d, x))) continue;
            ++r.checked;
            if (!check_extension(d, x)) {
                ++r.failures;
                r.witnesses.push_back(witness("no indecomposable two-vertex extension",
                                              to_edge_list(d)));
            }
        }
    }
    finish(r);
    return r;
}

template <typename T>
bool drops_to_indecomposable(const T& d) {
    const int n = d.order();
    for (int x = 0; x < n; ++x) {
        VertexSet keep = VertexSet::all(n);
        keep.remove(x);
        if (is_indecomposable(induced(d, keep))) return true;
    }
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            VertexSet keep = VertexSet::all(n);
            keep.remove(x).remove(y);
            if (is_indecomposable(induced(d, keep))) return true;
        }
    return false;
}

VerificationReport check_order_drop(const std::vector<Poset>& posets, int n) {
    VerificationReport r;
    r.check = "order-drop";
    r.order_lo = r.order_hi = n;
    r.enumerated = posets.size();
    for (const Poset& p : posets) {
        if (!is_indecomposable(p.digraph())) continue;
        ++r.checked;
        if (!drops_to_indecomposable(p.digraph())) {
            ++r.failures;
            r.witnesses.push_back(witness(
                "no indecomposable induced subdigraph of order n-1 or n-2", to_edge_list(p)));
        }
    }
    finish(r);
    return r;
}

VerificationReport check_noncritical_heredity(const std::vector<Poset>& posets, int n) {
    VerificationReport r;
    r.check = "noncritical-heredity";
    r.order_lo = r.order_hi = n;
    r.enumerated = posets.size();
    for (const Poset& p : posets) {
        const Digraph& d = p.digraph();
        if (!is_indecomposable(d)) continue;
        if (critical_vertices(d).noncritical.size() < 2) continue;
        ++r.checked;
        bool found = false;
        for (int x = 0; x < n && !found; ++x) {
            VertexSet keep = VertexSet::all(n);
            keep.remove(x);
            Digraph sub = induced(d, keep);
            if (is_indecomposable(sub) && critical_vertices(sub).noncritical.size() >= 1)
                found = true;
        }
        if (!found) {
            ++r.failures;
            r.witnesses.push_back(witness(
                "no one-vertex deletion stays indecomposable and non-critical", to_edge_list(p)));
        }
    }
    finish(r);
    return r;
}

VerificationReport check_orientation_pair(const std::vector<Graph>& graphs, int n) {
    VerificationReport r;
    r.check = "orientation-pair";
    r.order_lo = r.order_hi = n;
    r.enumerated = graphs.size();
    for (const Graph& g : graphs) {
        if (!is_indecomposable(g) || !is_comparability(g)) continue;
        ++r.checked;
        const auto res = transitive_orientations(g);
        const bool pair_of_duals =
            res.exhausted && res.orientations.size() == 2 &&
            res.orientations[0] == dual(res.orientations[1]);
        if (!pair_of_duals) {
            ++r.failures;
            r.witnesses.push_back(witness(
                "expected exactly two mutually dual transitive orientations, found " +
                    std::to_string(res.orientations.size()),
                to_edge_list(g)));
        }
    }
    finish(r);
    return r;
}

VerificationReport check_split_criteria(const std::vector<Graph>& graphs, int n) {
    VerificationReport r;
    r.check = "split-criteria";
    r.order_lo = r.order_hi = n;
    r.enumerated = graphs.size();
    for (const Graph& g : graphs) {
        if (!split_partition(g)) continue;
        ++r.checked;
        if (split_comparability_forbidden(g) != is_comparability(g)) {
            ++r.failures;
            r.witnesses.push_back(witness(
                "forbidden-subgraph test disagrees with orientation search", to_edge_list(g)));
        }
        if (split_complement_comparability_forbidden(g) != is_comparability(complement(g))) {
            ++r.failures;
            r.witnesses.push_back(witness(
                "complement forbidden-subgraph test disagrees with orientation search",
                to_edge_list(g)));
        }
    }
    finish(r);
    return r;
}

}  // namespace

std::vector<VerificationReport> verify_cited_theorems(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("verify_cited_theorems: need 1 <= n <= 8");
    std::vector<VerificationReport> out;
    if (n <= 7) {
        const auto posets = enumerate_posets(n);
        out.push_back(check_gallai(posets, n));
        if (n >= 5) out.push_back(check_criticality_transfer(posets, n));
        if (n >= 5 && n <= 6) out.push_back(check_extension_pairs(posets, n));
        if (n >= 5) out.push_back(check_order_drop(posets, n));
        if (n == 7) out.push_back(check_noncritical_heredity(posets, n));
    }
    const auto graphs = enumerate_graphs(n);
    out.push_back(check_orientation_pair(graphs, n));
    out.push_back(check_split_criteria(graphs, n));
    return out;
}

namespace {

// indecomposable digraphs sampled with order uniform in 5..max_order
std::vector<Digraph> sample_indecomposable(int samples, int max_order, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> order(5, max_order);
    std::vector<Digraph> out;
    while (int(out.size()) < samples) {
        Digraph d = random_digraph(rng, order(rng), 0.5);
        if (is_indecomposable(d)) out.push_back(std::move(d));
    }
    return out;
}

}  // namespace

VerificationReport verify_extension_random(int samples, int max_order, std::uint64_t seed) {
    VerificationReport r;
    r.check = "extension-pairs-random";
    r.order_lo = 5;
    r.order_hi = max_order;
    for (const Digraph& d : sample_indecomposable(samples, max_order, seed)) {
        ++r.enumerated;
        const int n = d.order();
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            const int size = std::popcount(mask);
            if (size < 3 || size > n - 2) continue;
            VertexSet x(n);
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) x.add(v);
            if (!is_indecomposable(induced(d, x))) continue;
            ++r.checked;
            if (!check_extension(d, x)) {
                ++r.failures;
                r.witnesses.push_back(witness("no indecomposable two-vertex extension",
                                              to_edge_list(d)));
            }
        }
    }
    finish(r);
    return r;
}

VerificationReport verify_order_drop_random(int samples, int max_order, std::uint64_t seed) {
    VerificationReport r;
    r.check = "order-drop-random";
    r.order_lo = 5;
    r.order_hi = max_order;
    for (const Digraph& d : sample_indecomposable(samples, max_order, seed)) {
        ++r.enumerated;
        ++r.checked;
        if (!drops_to_indecomposable(d)) {
            ++r.failures;
            r.witnesses.push_back(witness(
                "no indecomposable induced subdigraph of order n-1 or n-2", to_edge_list(d)));
        }
    }
    finish(r);
    return r;
}

VerificationReport verify_oracle_random(int samples, int max_order, std::uint64_t seed) {
    if (max_order > 16) throw std::invalid_argument("verify_oracle_random: max_order > 16");
    VerificationReport r;
    r.check = "indecomposability-oracle";
    r.order_lo = 3;
    r.order_hi = max_order;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> order(3, max_order);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    for (int i = 0; i < samples; ++i) {
        Digraph d = random_digraph(rng, order(rng), density(rng));
        ++r.enumerated;
        ++r.checked;
        if (is_indecomposable(d) != is_indecomposable_bruteforce(d)) {
            ++r.failures;
            r.witnesses.push_back(witness("closure and subset-scan routes disagree",
                                          to_edge_list(d)));
        }
    }
    finish(r);
    return r;
}

VerificationReport verify_canonical_invariance(int objects, int permutations, int max_order,
                                               std::uint64_t seed) {
    VerificationReport r;
    r.check = "canonical-form-invariance";
    r.order_lo = 2;
    r.order_hi = max_order;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> order(2, max_order);
    for (int i = 0; i < objects; ++i) {
        Digraph d = random_digraph(rng, order(rng), 0.5);
        ++r.enumerated;
        const CanonicalForm f = canonical_form(d);
        bool ok = canonical_form(canonical_relabel(d)) == f;  // fixpoint
        for (int j = 0; j < permutations && ok; ++j) {
            const auto perm = random_permutation(rng, d.order());
            ok = canonical_form(relabel(d, perm)) == f;
        }
        ++r.checked;
        if (!ok) {
            ++r.failures;
            r.witnesses.push_back(witness("canonical form changed under relabeling",
                                          to_edge_list(d)));
        }
    }
    finish(r);
    return r;
}

}  // namespace critposets
