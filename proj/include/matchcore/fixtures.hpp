#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matchcore/solve.hpp"

namespace matchcore {

// One expected weak-core member: its display label plus the matched pairs
// as 1-based (man, woman) side indices; unlisted agents are single.
struct LabeledMatchingSpec {
    std::string label;
    std::vector<std::pair<int, int>> pairs;
};

// A bundled market with its externally worked-out results. `weak_core` is
// exhaustive and fixes the labeling (presentation order); the other concept
// expectations list labels, with nullopt meaning "not asserted" and an
// empty list meaning "asserted empty".
struct Fixture {
    std::string name;
    std::string title;
    std::string source;  // .mkt text
    std::vector<LabeledMatchingSpec> weak_core;
    std::optional<std::vector<std::string>> strong_core;
    std::optional<std::vector<std::string>> compromise_core;
    std::optional<std::vector<std::string>> top_cycle;
    std::optional<std::vector<std::string>> fisher_uncovered;
    std::optional<std::vector<std::vector<std::string>>> vnm_stable_sets;
    std::optional<std::vector<std::string>> men_optimal_core;
    std::optional<std::vector<std::string>> women_optimal_core;
};

struct FixtureResult {
    std::string name;
    bool ok = false;
    std::vector<std::string> failures;  // one line per mismatched expectation
    SolveReport report;                 // fixture labels when the weak core matched
};

const std::vector<Fixture>& all_fixtures();

// Throws DomainError for an unknown name.
const Fixture& fixture_by_name(const std::string& name);

// Parses the source, solves the market, and compares every asserted
// expectation. A weak-core mismatch is fatal for the remaining checks (the
// labels would be meaningless); the report then carries canonical labels.
FixtureResult run_fixture(const Fixture& f);

}  // namespace matchcore
