#ifndef CRITPOSETS_VERIFY_HPP
#define CRITPOSETS_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "critposets/digraph.hpp"

namespace critposets {

/// Outcome of one exhaustive check. Witnesses are edge-list serializations
/// (with a leading comment line) so every failure replays through the CLI.
struct VerificationReport {
    enum class Status { pass, fail, inconclusive };

    std::string check;
    int order_lo = 0;
    int order_hi = 0;
    std::size_t enumerated = 0;  // objects produced by the enumeration
    std::size_t checked = 0;     // objects the check applied to
    std::size_t failures = 0;
    std::vector<std::string> witnesses;
    Status status = Status::inconclusive;

    bool passed() const { return status == Status::pass; }
};

std::string to_string(VerificationReport::Status s);

/// The characterization check at order n (5 <= n <= 7): the canonical forms
/// of the minus-one-critical posets among all posets on n vertices must
/// equal the canonical forms of the poset-catalog members (with duals) of
/// order n, each of which must also be minus-one-critical at vertex 0 in
/// its generated labeling.
VerificationReport verify_main_theorem(int n);

/// The classical results the characterization builds on, each checked
/// exhaustively at order n over the poset census (n <= 7) or graph census
/// (n <= 8); returns the sub-reports applicable at n.
///   gallai-transfer        poset indecomposable <=> comparability graph is
///   criticality-transfer   minus-one-critical at x transfers likewise
///   extension-pairs        indecomposable induced subobjects grow by pairs
///   order-drop             indecomposable embeds indecomposable of order n-1 or n-2
///   noncritical-heredity   >= 2 non-critical vertices survive one deletion (n = 7)
///   orientation-pair       indecomposable comparability graphs have exactly
///                          two transitive orientations, mutual duals
///   split-criteria         forbidden-subgraph tests agree with orientation search
std::vector<VerificationReport> verify_cited_theorems(int n);

// Randomized counterparts over sampled indecomposable digraphs.
VerificationReport verify_extension_random(int samples, int max_order, std::uint64_t seed);
VerificationReport verify_order_drop_random(int samples, int max_order, std::uint64_t seed);

/// Closure-based indecomposability against the 2^n subset scan.
VerificationReport verify_oracle_random(int samples, int max_order, std::uint64_t seed);

/// canonical_form is invariant under relabeling and a fixpoint.
VerificationReport verify_canonical_invariance(int objects, int permutations, int max_order,
                                               std::uint64_t seed);

}  // namespace critposets

#endif
