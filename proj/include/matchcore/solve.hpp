#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matchcore/format.hpp"

namespace matchcore {

// Which solution concepts a solve run computes. Everything is built on the
// weak core and its dominance graph, so dependencies need no declaration.
struct ConceptSelection {
    bool weak = true;
    bool strong = true;
    bool compromise = true;
    bool top_cycle = true;
    bool fisher = true;
    bool vnm = true;
    bool men_opt = true;
    bool women_opt = true;

    static ConceptSelection none() {
        return {false, false, false, false, false, false, false, false};
    }
};

// Optional explicit labeling of the weak core (presentation order). Must
// cover the weak core exactly; solve throws DomainError otherwise.
struct Labeling {
    std::vector<std::pair<std::string, Matching>> entries;
};

// Computes the weak core, labels it (canonically mu1..muN in enumeration
// order unless `labeling` is given), builds the dominance graph and the
// covering relation over it, and fills one SolveReport.
SolveReport solve(const Market& m, const std::string& market_name,
                  const ConceptSelection& sel = {},
                  const std::optional<Labeling>& labeling = std::nullopt);

// Deterministic human-readable block. One line per requested concept;
// an empty concept renders "(empty)" ("(none)" for vNM stable-set families).
std::string render_report(const SolveReport& report);

inline constexpr int kDebugOracleAgentCap = 10;

// Recomputes the headline results with the independent (slower) oracles and
// returns one line per disagreement: coalition-form cores vs stability-form
// cores, all-subsets dominance vs restricted dominance, covering sanity,
// external stability of the compromise core, and (on domains small enough)
// the exhaustive vNM scan. Empty result = everything agrees.
// Throws CapExceeded when the market exceeds kDebugOracleAgentCap agents.
std::vector<std::string> run_debug_oracles(const Market& m);

}  // namespace matchcore
