#pragma once

#include <functional>
#include <optional>
#include <string>

#include "matchcore/solutions.hpp"

namespace matchcore {

// A refinement rule: given a nonempty subset T of the graph domain (sorted
// indices), returns a nonempty subset of T. G(empty)=empty by convention;
// sweeps never pass the empty set.
struct RefinementMap {
    std::string name;
    std::function<std::vector<int>(const DominanceGraph&, const std::vector<int>&)> eval;

    std::vector<int> operator()(const DominanceGraph& g, const std::vector<int>& t) const {
        return eval(g, t);
    }
};

// Built-in maps. The identity map is deliberately broken: it keeps dominated
// bottom elements, so axiom EB must reject it.
RefinementMap compromise_map();
RefinementMap compromise_twice_map();
RefinementMap top_cycle_map();
RefinementMap identity_map();

// Strict dominators (up) / strictly dominated (down) of domain index mu,
// intersected with t. Throws DomainError unless mu is a member of t.
std::vector<int> up_set(const DominanceGraph& g, int mu, const std::vector<int>& t);
std::vector<int> down_set(const DominanceGraph& g, int mu, const std::vector<int>& t);

struct AxiomCounterexample {
    std::vector<int> t;   // subset of the domain (sorted indices)
    int mu = -1;          // offending matching
    std::string detail;
};

struct AxiomReport {
    std::string axiom;  // "IM" | "EB" | "ET"
    bool passed = true;
    std::optional<AxiomCounterexample> counterexample;
};

// IM: every member of t with no strict dominator inside t must be selected;
// and if strict dominance is complete and transitive on t, the selection must
// be exactly {the maximum}.
AxiomReport check_im(const RefinementMap& G, const std::vector<int>& t, const DominanceGraph& g);

// EB: a member of t dominating nothing in t but dominated inside t must be
// excluded.
AxiomReport check_eb(const RefinementMap& G, const std::vector<int>& t, const DominanceGraph& g);

// ET: if mu' is excluded from every subset of t of size <= 3 containing mu
// and mu' (the pair {mu,mu'} included), it must be excluded from t.
AxiomReport check_et(const RefinementMap& G, const std::vector<int>& t, const DominanceGraph& g);

struct MapSurvey {
    std::string map_name;
    AxiomReport im, eb, et;  // aggregated over the sweep; first failure kept
    bool containment_holds = true;  // G(T) subset of C(T) on every swept T
    std::optional<AxiomCounterexample> containment_violation;

    bool satisfies_all() const { return im.passed && eb.passed && et.passed; }
};

struct CharacterizationReport {
    int domain_size = 0;
    long long subsets_checked = 0;
    std::vector<MapSurvey> maps;
    // The canonical covering-based map passed all three axioms on every T.
    bool canonical_passes = false;
    // Every built-in map that passes all axioms satisfies G(T) subset C(T).
    bool containment_ok = true;
};

inline constexpr int kAxiomSweepCap = 16;

// Sweeps every nonempty subset T of the weak core (smallest first, then
// lexicographic) and checks IM/EB/ET for each built-in map, plus the
// containment bound against the canonical map.
// Throws CapExceeded when |weak core| > cap.
CharacterizationReport verify_characterization(const Market& m, int cap = kAxiomSweepCap);

}  // namespace matchcore
