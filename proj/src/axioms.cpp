#include "matchcore/axioms.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>

namespace matchcore {

namespace {

bool member(const std::vector<int>& t, int x) {
    return std::find(t.begin(), t.end(), x) != t.end();
}

std::string label_set(const std::vector<int>& t) {
    std::string out = "{";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) out += ",";
        out += "#" + std::to_string(t[i]);
    }
    return out + "}";
}

}  // namespace

RefinementMap compromise_map() {
    return {"compromise",
            [](const DominanceGraph& g, const std::vector<int>& t) { return compromise_of(g, t); }};
}

RefinementMap compromise_twice_map() {
    return {"compromise-twice", [](const DominanceGraph& g, const std::vector<int>& t) {
                return compromise_of(g, compromise_of(g, t));
            }};
}

RefinementMap top_cycle_map() {
    return {"top-cycle", [](const DominanceGraph& g, const std::vector<int>& t) {
                const int k = static_cast<int>(t.size());
                std::vector<std::vector<char>> reach(k, std::vector<char>(k, 0));
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) reach[i][j] = g.edge[t[i]][t[j]];
                for (int via = 0; via < k; ++via)
                    for (int i = 0; i < k; ++i)
                        if (reach[i][via])
                            for (int j = 0; j < k; ++j)
                                if (reach[via][j]) reach[i][j] = 1;
                std::vector<int> out;
                for (int x = 0; x < k; ++x) {
                    bool beaten = false;
                    for (int y = 0; y < k && !beaten; ++y)
                        if (reach[y][x] && !reach[x][y]) beaten = true;
                    if (!beaten) out.push_back(t[x]);
                }
                return out;
            }};
}

RefinementMap identity_map() {
    return {"identity",
            [](const DominanceGraph&, const std::vector<int>& t) { return t; }};
}

std::vector<int> up_set(const DominanceGraph& g, int mu, const std::vector<int>& t) {
    if (!member(t, mu)) throw DomainError("matching not in the queried subset");
    std::vector<int> out;
    for (int x : t)
        if (g.strict(x, mu)) out.push_back(x);
    return out;
}

std::vector<int> down_set(const DominanceGraph& g, int mu, const std::vector<int>& t) {
    if (!member(t, mu)) throw DomainError("matching not in the queried subset");
    std::vector<int> out;
    for (int x : t)
        if (g.strict(mu, x)) out.push_back(x);
    return out;
}

AxiomReport check_im(const RefinementMap& G, const std::vector<int>& t, const DominanceGraph& g) {
    AxiomReport report{"IM", true, std::nullopt};
    std::vector<int> chosen = G(g, t);
    for (int mu : t) {
        if (up_set(g, mu, t).empty() && !member(chosen, mu)) {
            report.passed = false;
            report.counterexample = {t, mu,
                                     "maximal element " + std::to_string(mu) +
                                         " missing from G(" + label_set(t) + ")"};
            return report;
        }
    }
    // Second clause: on a completely and transitively ordered t the selection
    // must be exactly the maximum.
    bool complete = true, transitive = true;
    for (size_t i = 0; i < t.size() && complete; ++i)
        for (size_t j = i + 1; j < t.size() && complete; ++j)
            if (!g.strict(t[i], t[j]) && !g.strict(t[j], t[i])) complete = false;
    for (int a : t)
        for (int b : t)
            for (int c : t)
                if (g.strict(a, b) && g.strict(b, c) && !g.strict(a, c)) transitive = false;
    if (complete && transitive) {
        std::vector<int> maximum;
        for (int mu : t) {
            bool beats_all = true;
            for (int other : t)
                if (other != mu && !g.strict(mu, other)) beats_all = false;
            if (beats_all) maximum.push_back(mu);
        }
        if (chosen != maximum) {
            report.passed = false;
            report.counterexample = {t, chosen.empty() ? -1 : chosen.front(),
                                     "totally ordered subset " + label_set(t) +
                                         " must select exactly its maximum"};
        }
    }
    return report;
}

AxiomReport check_eb(const RefinementMap& G, const std::vector<int>& t, const DominanceGraph& g) {
    AxiomReport report{"EB", true, std::nullopt};
    std::vector<int> chosen = G(g, t);
    for (int mu : t) {
        if (down_set(g, mu, t).empty() && !up_set(g, mu, t).empty() && member(chosen, mu)) {
            report.passed = false;
            report.counterexample = {t, mu,
                                     "bottom element " + std::to_string(mu) + " kept in G(" +
                                         label_set(t) + ")"};
            return report;
        }
    }
    return report;
}

AxiomReport check_et(const RefinementMap& G, const std::vector<int>& t, const DominanceGraph& g) {
    AxiomReport report{"ET", true, std::nullopt};
    std::vector<int> chosen = G(g, t);
    for (int x : t) {
        for (int y : t) {
            if (x == y) continue;
            // The pair {x,y} itself belongs to the triple family; test it
            // first, it is the cheapest way to refute the hypothesis.
            std::vector<int> pair{std::min(x, y), std::max(x, y)};
            if (member(G(g, pair), y)) continue;
            bool excluded_everywhere = true;
            for (int z : t) {
                if (z == x || z == y) continue;
                std::vector<int> triple{x, y, z};
                std::sort(triple.begin(), triple.end());
                if (member(G(g, triple), y)) {
                    excluded_everywhere = false;
                    break;
                }
            }
            if (excluded_everywhere && member(chosen, y)) {
                report.passed = false;
                report.counterexample = {t, y,
                                         "element " + std::to_string(y) +
                                             " excluded from every pair/triple with " +
                                             std::to_string(x) + " yet kept in G(" + label_set(t) +
                                             ")"};
                return report;
            }
        }
    }
    return report;
}

CharacterizationReport verify_characterization(const Market& m, int cap) {
    MatchingSet w = weak_core(m);
    const int n = static_cast<int>(w.size());
    if (n > cap) throw CapExceeded("weak core", n, cap);
    DominanceGraph g = dominance_graph(m, std::move(w));

    // Nonempty subsets, smallest first, then lexicographic: failure witnesses
    // come out minimal.
    std::vector<std::uint64_t> masks;
    masks.reserve((std::uint64_t{1} << n) - 1);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) masks.push_back(mask);
    std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    CharacterizationReport report;
    report.domain_size = n;
    report.subsets_checked = static_cast<long long>(masks.size());

    // The sweep re-evaluates the same pairs and triples inside ET for every
    // superset T, so memoize each (pure) map by subset mask.
    auto memoize = [](const RefinementMap& base) {
        auto cache = std::make_shared<std::map<std::uint64_t, std::vector<int>>>();
        RefinementMap wrapped;
        wrapped.name = base.name;
        wrapped.eval = [base, cache](const DominanceGraph& gr, const std::vector<int>& t) {
            std::uint64_t mask = 0;
            for (int i : t) mask |= std::uint64_t{1} << i;
            if (auto it = cache->find(mask); it != cache->end()) return it->second;
            std::vector<int> r = base.eval(gr, t);
            cache->emplace(mask, r);
            return r;
        };
        return wrapped;
    };

    std::vector<RefinementMap> library{memoize(compromise_map()), memoize(compromise_twice_map()),
                                       memoize(top_cycle_map()), memoize(identity_map())};
    RefinementMap canonical = memoize(compromise_map());

    for (const RefinementMap& G : library) {
        MapSurvey survey;
        survey.map_name = G.name;
        survey.im = {"IM", true, std::nullopt};
        survey.eb = {"EB", true, std::nullopt};
        survey.et = {"ET", true, std::nullopt};
        for (std::uint64_t mask : masks) {
            std::vector<int> t;
            for (int i = 0; i < n; ++i)
                if ((mask >> i) & 1u) t.push_back(i);
            if (survey.im.passed) survey.im = check_im(G, t, g);
            if (survey.eb.passed) survey.eb = check_eb(G, t, g);
            if (survey.et.passed) survey.et = check_et(G, t, g);
            if (survey.containment_holds) {
                std::vector<int> chosen = G(g, t);
                std::vector<int> bound = canonical(g, t);
                for (int mu : chosen)
                    if (!member(bound, mu)) {
                        survey.containment_holds = false;
                        survey.containment_violation = {t, mu,
                                                        "G(T) escapes the covering-based bound"};
                        break;
                    }
            }
        }
        if (G.name == "compromise") report.canonical_passes = survey.satisfies_all();
        if (survey.satisfies_all() && !survey.containment_holds) report.containment_ok = false;
        report.maps.push_back(std::move(survey));
    }
    return report;
}

}  // namespace matchcore
