#include "matchcore/solve.hpp"

#include <algorithm>

#include "matchcore/stability.hpp"

namespace matchcore {

namespace {

// Labels of `subset`'s members, in domain order.
std::vector<std::string> member_labels(const MatchingSet& domain,
                                       const std::vector<std::string>& labels,
                                       const MatchingSet& subset) {
    std::vector<std::string> out;
    for (size_t k = 0; k < domain.size(); ++k)
        if (std::find(subset.begin(), subset.end(), domain[k]) != subset.end())
            out.push_back(labels[k]);
    return out;
}

std::vector<std::string> index_labels(const std::vector<std::string>& labels,
                                      const std::vector<int>& indices) {
    std::vector<std::string> out;
    out.reserve(indices.size());
    for (int i : indices) out.push_back(labels[i]);
    return out;
}

}  // namespace

SolveReport solve(const Market& m, const std::string& market_name, const ConceptSelection& sel,
                  const std::optional<Labeling>& labeling) {
    SolveReport r;
    r.market_name = market_name;
    r.market = m;

    MatchingSet w = weak_core(m);
    if (labeling) {
        MatchingSet given;
        given.reserve(labeling->entries.size());
        for (const auto& [label, mu] : labeling->entries) {
            r.labels.push_back(label);
            r.domain.push_back(mu);
            given.push_back(mu);
        }
        MatchingSet sorted_w = w;
        std::sort(sorted_w.begin(), sorted_w.end());
        std::sort(given.begin(), given.end());
        if (sorted_w != given) throw DomainError("labeling does not cover the weak core exactly");
    } else {
        r.domain = std::move(w);
        for (size_t k = 0; k < r.domain.size(); ++k)
            r.labels.push_back("mu" + std::to_string(k + 1));
    }

    const DominanceGraph g = dominance_graph(m, r.domain);
    const CoveringRelation covering = covering_relation(g);
    r.dominance_edges = label_dominance_edges(m, g, r.labels);
    r.covering_edges = label_covering_edges(covering, r.labels);

    if (sel.weak) r.weak_core = r.labels;
    if (sel.strong) r.strong_core = member_labels(r.domain, r.labels, strong_core(m));
    if (sel.compromise) r.compromise_core = index_labels(r.labels, uncovered(g));
    if (sel.top_cycle) r.top_cycle = index_labels(r.labels, top_cycle(g));
    if (sel.fisher) r.fisher_uncovered = index_labels(r.labels, fisher_uncovered(g));
    if (sel.vnm) {
        std::vector<std::vector<std::string>> families;
        for (const std::vector<int>& s : vnm_stable_sets(g)) families.push_back(index_labels(r.labels, s));
        r.vnm_stable_sets = std::move(families);
    }
    if (sel.men_opt)
        r.men_optimal_core = member_labels(r.domain, r.labels, side_optimal_core(m, Side::Man));
    if (sel.women_opt)
        r.women_optimal_core =
            member_labels(r.domain, r.labels, side_optimal_core(m, Side::Woman));
    return r;
}

namespace {

void concept_line(std::string& out, const std::string& name,
                  const std::optional<std::vector<std::string>>& labels) {
    if (!labels) return;
    out += name + ":";
    if (labels->empty()) {
        out += " (empty)";
    } else {
        for (const std::string& label : *labels) out += " " + label;
    }
    out += "\n";
}

}  // namespace

std::string render_report(const SolveReport& r) {
    std::string out = "market: " + r.market_name + "\n";
    out += "men:";
    for (AgentId a : r.market.men()) out += " " + to_string(a);
    out += "\nwomen:";
    for (AgentId w : r.market.women()) out += " " + to_string(w);
    out += "\nmatchings (" + std::to_string(r.domain.size()) + "):\n";
    for (size_t k = 0; k < r.domain.size(); ++k)
        out += "  " + r.labels[k] + " = " + pair_list(r.market, r.domain[k]) + "\n";

    concept_line(out, "weak core", r.weak_core);
    concept_line(out, "strong core", r.strong_core);
    concept_line(out, "compromise core", r.compromise_core);
    concept_line(out, "top cycle", r.top_cycle);
    concept_line(out, "fisher uncovered", r.fisher_uncovered);
    if (r.vnm_stable_sets) {
        out += "vnm stable sets:";
        if (r.vnm_stable_sets->empty()) {
            out += " (none)";
        } else {
            for (const std::vector<std::string>& family : *r.vnm_stable_sets) {
                out += " {";
                for (size_t k = 0; k < family.size(); ++k) out += (k ? " " : "") + family[k];
                out += "}";
            }
        }
        out += "\n";
    }
    concept_line(out, "men-optimal core", r.men_optimal_core);
    concept_line(out, "women-optimal core", r.women_optimal_core);

    out += "dominance edges (" + std::to_string(r.dominance_edges.size()) + "):\n";
    for (const LabeledEdge& e : r.dominance_edges) {
        out += "  " + e.from + " -> " + e.to + "  [";
        for (size_t k = 0; k < e.witness.size(); ++k) out += (k ? " " : "") + e.witness[k];
        out += "]";
        if (!e.strict) out += "  (mutual)";
        out += "\n";
    }
    out += "covering edges (" + std::to_string(r.covering_edges.size()) + "):\n";
    for (const LabeledEdge& e : r.covering_edges) out += "  " + e.from + " -> " + e.to + "\n";
    return out;
}

std::vector<std::string> run_debug_oracles(const Market& m) {
    if (m.size() > kDebugOracleAgentCap)
        throw CapExceeded("debug-oracle market agents", m.size(), kDebugOracleAgentCap);

    std::vector<std::string> failures;
    const MatchingSet w = weak_core(m);
    if (w != coalition_weak_core(m))
        failures.push_back("weak core differs from the coalition-form weak core");
    if (strong_core(m) != coalition_strong_core(m))
        failures.push_back("strong core differs from the coalition-form strong core");

    const DominanceGraph g = dominance_graph(m, w);
    for (int i = 0; i < g.size(); ++i) {
        for (int j = 0; j < g.size(); ++j) {
            if (i == j) continue;
            const bool restricted = g.edge[i][j];
            const bool exhaustive = dominates_exhaustive(m, w[i], w[j]).has_value();
            if (restricted != exhaustive) {
                failures.push_back("dominance(" + std::to_string(i) + "," + std::to_string(j) +
                                   ") disagrees with the all-subsets search");
            }
        }
    }

    const CoveringRelation covering = covering_relation(g);
    if (!covering_is_antisymmetric_and_transitive(covering))
        failures.push_back("covering relation is not antisymmetric and transitive");

    const ExternalStabilityReport ext = check_external_stability(uncovered(g), g);
    if (!ext.holds) {
        failures.push_back("compromise core is not externally stable (violator index " +
                           std::to_string(ext.violator.value_or(-1)) + ")");
    }

    if (g.size() <= 12 && vnm_stable_sets(g) != vnm_stable_sets_exhaustive(g))
        failures.push_back("vNM stable sets differ from the exhaustive subset scan");

    return failures;
}

}  // namespace matchcore
