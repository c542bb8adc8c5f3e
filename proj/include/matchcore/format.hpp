#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matchcore/solutions.hpp"

namespace matchcore {

// Result of parsing a .mkt document. Agents are addressed by canonical ids
// (m1, m2, ... / w1, w2, ...) in declaration order; the original spellings
// are kept for error reporting and display.
struct ParsedMarket {
    Market market;
    std::vector<std::string> men_names;  // declaration order
    std::vector<std::string> women_names;
};

// Parses the market-description language:
//
//   market    := "men" ident* "women" ident* prefblock*
//   prefblock := "pref" ident "{" (pair (";" pair)*)? "}"
//   pair      := term ">" term
//   term      := ident | "@"
//
// "@" denotes the block owner (remaining single). Comments run from '#' to
// end of line; whitespace is otherwise insignificant. The keywords men,
// women and pref cannot be agent names. Every agent must have exactly one
// pref block; an empty block means all alternatives are incomparable. Only
// strict pairs are declared; the transitive closure is computed.
//
// Throws SyntaxError, DuplicateAgent (roster or pref block declared twice),
// MissingPrefBlock, UnknownAlternative (undeclared owner, or a pair term
// that is not an opposite-side agent), CycleError naming the owning agent.
ParsedMarket parse_market(const std::string& text);

// Canonical text form: canonical agent names, one pref block per agent in
// dense order, each preference reduced to its Hasse pairs. Parsing the
// output reproduces the market structurally, and a second
// serialize-parse round trip is byte-identical.
std::string serialize_market(const Market& m);

// One rendered relation edge. Direction: `from` is the dominated (covered)
// matching, `to` the dominating (covering) one.
struct LabeledEdge {
    std::string from;
    std::string to;
    bool strict = false;               // dominance edges: one-directional
    std::vector<std::string> witness;  // enforcing coalition (dominance only)

    friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

// Everything the CLI and the exporters need about one solved market.
// `labels` is parallel to `domain` (the weak core); every concept holds
// labels drawn from it. Concepts that were not requested stay empty.
struct SolveReport {
    std::string market_name;
    Market market;
    std::vector<std::string> labels;
    MatchingSet domain;

    std::optional<std::vector<std::string>> weak_core;
    std::optional<std::vector<std::string>> strong_core;
    std::optional<std::vector<std::string>> compromise_core;
    std::optional<std::vector<std::string>> top_cycle;
    std::optional<std::vector<std::string>> fisher_uncovered;
    std::optional<std::vector<std::vector<std::string>>> vnm_stable_sets;
    std::optional<std::vector<std::string>> men_optimal_core;
    std::optional<std::vector<std::string>> women_optimal_core;

    std::vector<LabeledEdge> dominance_edges;
    std::vector<LabeledEdge> covering_edges;
};

// Label every edge of the (non-strict) dominance relation, sorted by
// (from, to) position in `labels`; witnesses are the enforcing coalition's
// members. Direction: edge.from is the dominated matching.
std::vector<LabeledEdge> label_dominance_edges(const Market& m, const DominanceGraph& g,
                                               const std::vector<std::string>& labels);

// Label every covering pair the same way (edge.from is the covered one).
std::vector<LabeledEdge> label_covering_edges(const CoveringRelation& c,
                                              const std::vector<std::string>& labels);

// Graphviz rendering of the report's nodes and edges. An edge x -> y means
// y dominates x (solid) or y covers x (dashed); the convention is restated
// in a comment at the top of the output. Deterministic: nodes and edges
// appear in label order.
std::string export_dot(const SolveReport& report);

// Stable-key-order JSON document ("schema": "matchcore/1"), terminated by a
// newline. Byte-identical for identical reports; concepts that were not
// computed are omitted.
std::string export_json(const SolveReport& report);

}  // namespace matchcore
