#pragma once

#include "matchcore/dominance.hpp"

namespace matchcore {

// Miller covering over a dominance graph: a covers b iff a strictly
// dominates b and everything b strictly dominates, a strictly dominates too.
bool miller_covers(const DominanceGraph& g, int a, int b);

// pairs[i][j] = domain[i] covers domain[j]. Antisymmetric and transitive by
// construction (asserted in tests); pairs are a subset of the strict edges.
struct CoveringRelation {
    std::vector<std::vector<char>> pairs;

    int size() const { return static_cast<int>(pairs.size()); }
    bool covers(int i, int j) const { return pairs[i][j]; }
    std::vector<std::pair<int, int>> edges() const;
};

CoveringRelation covering_relation(const DominanceGraph& g);

// true iff `c` is antisymmetric and transitive (sanity oracle for tests and
// --debug-oracle runs).
bool covering_is_antisymmetric_and_transitive(const CoveringRelation& c);

// Indices of domain members not Miller-covered by any other member.
std::vector<int> uncovered(const DominanceGraph& g);

// Uncovered elements of the weak core (graph built over the weak core).
MatchingSet compromise_core(const Market& m);

// Uncovered elements of the sub-domain T (indices into g.domain) under the
// T-restricted covering: both covering clauses quantify inside T.
std::vector<int> compromise_of(const DominanceGraph& g, const std::vector<int>& t);

// Fisher covering: a F-covers b iff a strictly dominates b and everything
// that strictly dominates a also strictly dominates b.
bool fisher_covers(const DominanceGraph& g, int a, int b);
std::vector<int> fisher_uncovered(const DominanceGraph& g);

// a >_side b: nobody on `side` does worse in a than in b, and someone on
// `side` does strictly better. (No same-set requirement, unlike succ_s.)
bool side_prefers(const Market& m, const Matching& a, const Matching& b, Side side);

struct SideOptOptions {
    // Default: clause (ii) of side-covering quantifies over the compromise
    // core; switch to quantify over the whole weak core instead.
    bool quantify_over_weak_core = false;
};

// Side-covering-maximal elements of the compromise core.
MatchingSet side_optimal_core(const Market& m, Side side, SideOptOptions opts = {});

// All subsets of the domain that are internally stable (no strict edge
// inside) and externally stable (every outside member strictly dominated
// from inside), ordered lexicographically by member indices.
// Search is seeded with the strictly-undominated members (every stable set
// must contain them); throws CapExceeded when the domain exceeds `cap`.
std::vector<std::vector<int>> vnm_stable_sets(const DominanceGraph& g, int cap = 20);

// Plain subset scan without the seeding shortcut (cross-check oracle).
std::vector<std::vector<int>> vnm_stable_sets_exhaustive(const DominanceGraph& g, int cap = 12);

// For every domain member outside `core`, a member of `core` that strictly
// dominates it.
struct ExternalStabilityReport {
    bool holds = true;
    std::vector<std::pair<int, int>> dominated_by;  // (outside index, core index)
    std::optional<int> violator;                     // outside index with no dominator
};

ExternalStabilityReport check_external_stability(const std::vector<int>& core,
                                                 const DominanceGraph& g);

}  // namespace matchcore
