#include "matchcore/fixtures.hpp"

#include <algorithm>

#include "matchcore/stability.hpp"

namespace matchcore {

namespace {

std::vector<Fixture> build_fixtures() {
    std::vector<Fixture> out;

    {
        Fixture f;
        f.name = "ex1";
        f.title = "2x2: men compare nothing; both women rank m1 over m2";
        f.source =
            "# Both men find every pair of alternatives incomparable; each woman\n"
            "# ranks m1 above m2 and cannot compare either with staying single.\n"
            "men m1 m2\n"
            "women w1 w2\n"
            "pref m1 {}\n"
            "pref m2 {}\n"
            "pref w1 { m1 > m2 }\n"
            "pref w2 { m1 > m2 }\n";
        f.weak_core = {
            {"mu1", {}},
            {"mu2", {{1, 1}}},
            {"mu3", {{2, 2}}},
            {"mu4", {{2, 1}}},
            {"mu5", {{1, 2}}},
            {"mu6", {{1, 1}, {2, 2}}},
            {"mu7", {{1, 2}, {2, 1}}},
        };
        f.strong_core = {{"mu1", "mu2", "mu5"}};
        f.compromise_core = {{"mu1", "mu2", "mu5", "mu6", "mu7"}};
        f.top_cycle = {{"mu1", "mu2", "mu5"}};
        f.fisher_uncovered = {{"mu1", "mu2", "mu5"}};
        f.vnm_stable_sets = {{{"mu1", "mu2", "mu5"}}};
        f.men_optimal_core = {{"mu1", "mu2", "mu5", "mu6", "mu7"}};
        f.women_optimal_core = {{"mu1", "mu2", "mu5"}};
        out.push_back(std::move(f));
    }

    {
        Fixture f;
        f.name = "ex2";
        f.title = "3x3: empty strong core; dominance forms two 3-cycles";
        f.source =
            "# Every man: w1 incomparable with both others, w2 above w3, matched\n"
            "# beats single. Every woman: all men incomparable, matched beats single.\n"
            "men m1 m2 m3\n"
            "women w1 w2 w3\n"
            "pref m1 { w1 > @; w2 > w3; w3 > @ }\n"
            "pref m2 { w1 > @; w2 > w3; w3 > @ }\n"
            "pref m3 { w1 > @; w2 > w3; w3 > @ }\n"
            "pref w1 { m1 > @; m2 > @; m3 > @ }\n"
            "pref w2 { m1 > @; m2 > @; m3 > @ }\n"
            "pref w3 { m1 > @; m2 > @; m3 > @ }\n";
        f.weak_core = {
            {"mu1", {{1, 1}, {2, 2}, {3, 3}}},
            {"mu2", {{1, 1}, {2, 3}, {3, 2}}},
            {"mu3", {{1, 2}, {2, 1}, {3, 3}}},
            {"mu4", {{1, 2}, {2, 3}, {3, 1}}},
            {"mu5", {{1, 3}, {2, 1}, {3, 2}}},
            {"mu6", {{1, 3}, {2, 2}, {3, 1}}},
        };
        f.strong_core = {std::vector<std::string>{}};
        f.compromise_core = {{"mu1", "mu2", "mu3", "mu4", "mu5", "mu6"}};
        f.top_cycle = {{"mu1", "mu2", "mu3", "mu4", "mu5", "mu6"}};
        f.fisher_uncovered = {{"mu1", "mu2", "mu3", "mu4", "mu5", "mu6"}};
        f.vnm_stable_sets = {std::vector<std::vector<std::string>>{}};
        f.men_optimal_core = {{"mu1", "mu2", "mu3", "mu4", "mu5", "mu6"}};
        f.women_optimal_core = {{"mu1", "mu2", "mu3", "mu4", "mu5", "mu6"}};
        out.push_back(std::move(f));
    }

    {
        Fixture f;
        f.name = "solo";
        f.title = "1x1: fully incomparable pair";
        f.source =
            "# Neither agent can compare being matched with staying single.\n"
            "men m1\n"
            "women w1\n"
            "pref m1 {}\n"
            "pref w1 {}\n";
        f.weak_core = {
            {"mu1", {{1, 1}}},
            {"mu2", {}},
        };
        f.strong_core = {{"mu1", "mu2"}};
        f.compromise_core = {{"mu1", "mu2"}};
        f.top_cycle = {{"mu1", "mu2"}};
        f.fisher_uncovered = {{"mu1", "mu2"}};
        f.vnm_stable_sets = {{{"mu1", "mu2"}}};
        f.men_optimal_core = {{"mu1", "mu2"}};
        f.women_optimal_core = {{"mu1", "mu2"}};
        out.push_back(std::move(f));
    }

    {
        Fixture f;
        f.name = "ex3";
        f.title = "3x3: aligned men, women favor m2 over m3";
        f.source =
            "# Men share the total order w1 > w2 > w3 > single. Women rank m2\n"
            "# above m3, find m1 incomparable with both, and prefer matching.\n"
            "men m1 m2 m3\n"
            "women w1 w2 w3\n"
            "pref m1 { w1 > w2; w2 > w3; w3 > @ }\n"
            "pref m2 { w1 > w2; w2 > w3; w3 > @ }\n"
            "pref m3 { w1 > w2; w2 > w3; w3 > @ }\n"
            "pref w1 { m1 > @; m2 > m3; m3 > @ }\n"
            "pref w2 { m1 > @; m2 > m3; m3 > @ }\n"
            "pref w3 { m1 > @; m2 > m3; m3 > @ }\n";
        f.weak_core = {
            {"mu1", {{1, 1}, {2, 2}, {3, 3}}},
            {"mu2", {{1, 2}, {2, 1}, {3, 3}}},
            {"mu3", {{1, 3}, {2, 1}, {3, 2}}},
        };
        f.strong_core = {std::vector<std::string>{}};
        f.compromise_core = {{"mu1", "mu2", "mu3"}};
        f.top_cycle = {{"mu1", "mu2", "mu3"}};
        f.fisher_uncovered = {{"mu1", "mu2", "mu3"}};
        f.vnm_stable_sets = {{{"mu1", "mu2", "mu3"}}};
        f.men_optimal_core = {{"mu1", "mu2", "mu3"}};
        f.women_optimal_core = {{"mu1", "mu2"}};
        out.push_back(std::move(f));
    }

    {
        Fixture f;
        f.name = "crossed";
        f.title = "2x2: complete preferences with crossed favorites";
        f.source =
            "# Complete preferences. m1 wants w1, m2 wants w2; w1 wants m2,\n"
            "# w2 wants m1. Everyone prefers matching over staying single.\n"
            "men m1 m2\n"
            "women w1 w2\n"
            "pref m1 { w1 > w2; w2 > @ }\n"
            "pref m2 { w2 > w1; w1 > @ }\n"
            "pref w1 { m2 > m1; m1 > @ }\n"
            "pref w2 { m1 > m2; m2 > @ }\n";
        f.weak_core = {
            {"mu1", {{1, 1}, {2, 2}}},
            {"mu2", {{1, 2}, {2, 1}}},
        };
        f.strong_core = {{"mu1", "mu2"}};
        f.compromise_core = {{"mu1", "mu2"}};
        f.top_cycle = {{"mu1", "mu2"}};
        f.fisher_uncovered = {{"mu1", "mu2"}};
        f.vnm_stable_sets = {{{"mu1", "mu2"}}};
        f.men_optimal_core = {{"mu1"}};
        f.women_optimal_core = {{"mu2"}};
        out.push_back(std::move(f));
    }

    {
        Fixture f;
        f.name = "fishburn";
        f.title = "3x3: unique vNM stable set differs from the compromise core";
        f.source =
            "# m1 has a total order; everyone else leaves one comparison open.\n"
            "# w2 and w3 each rank one man below staying single.\n"
            "men m1 m2 m3\n"
            "women w1 w2 w3\n"
            "pref m1 { w2 > w1; w1 > w3; w3 > @ }\n"
            "pref m2 { w1 > @; w2 > w3; w3 > @ }\n"
            "pref m3 { w1 > w3; w2 > @; w3 > @ }\n"
            "pref w1 { m1 > m3; m2 > @; m3 > @ }\n"
            "pref w2 { m1 > @; m2 > @; @ > m3 }\n"
            "pref w3 { m2 > @; m3 > @; @ > m1 }\n";
        f.weak_core = {
            {"mu1", {{1, 1}, {2, 2}, {3, 3}}},
            {"mu2", {{1, 2}, {2, 1}, {3, 3}}},
            {"mu3", {{1, 2}, {2, 3}, {3, 1}}},
        };
        f.strong_core = {std::vector<std::string>{}};
        f.compromise_core = {{"mu2", "mu3"}};
        f.top_cycle = {{"mu3"}};
        f.fisher_uncovered = {{"mu1", "mu3"}};
        f.vnm_stable_sets = {{{"mu1", "mu3"}}};
        f.men_optimal_core = {{"mu3"}};
        f.women_optimal_core = {{"mu2", "mu3"}};
        out.push_back(std::move(f));
    }

    {
        Fixture f;
        f.name = "fourbyfour";
        f.title = "4x4: compromise core pinned to the matchings pairing m1 with w4";
        f.source =
            "# m1 ranks w1 and w4 (incomparable) above w2 above w3; the other men\n"
            "# rank w2 > w3 > w4 and w1 > w4 with w1 otherwise incomparable.\n"
            "# w2 and w3 rank m2, m3, m4 (mutually incomparable) above m1; w1 and\n"
            "# w4 compare no two men. Everyone prefers matching over single.\n"
            "men m1 m2 m3 m4\n"
            "women w1 w2 w3 w4\n"
            "pref m1 { w1 > w2; w4 > w2; w2 > w3; w3 > @ }\n"
            "pref m2 { w1 > w4; w2 > w3; w3 > w4; w4 > @ }\n"
            "pref m3 { w1 > w4; w2 > w3; w3 > w4; w4 > @ }\n"
            "pref m4 { w1 > w4; w2 > w3; w3 > w4; w4 > @ }\n"
            "pref w1 { m1 > @; m2 > @; m3 > @; m4 > @ }\n"
            "pref w2 { m1 > @; m2 > m1; m3 > m1; m4 > m1 }\n"
            "pref w3 { m1 > @; m2 > m1; m3 > m1; m4 > m1 }\n"
            "pref w4 { m1 > @; m2 > @; m3 > @; m4 > @ }\n";
        f.weak_core = {
            {"mu1", {{1, 1}, {2, 2}, {3, 3}, {4, 4}}},
            {"mu2", {{1, 1}, {2, 2}, {3, 4}, {4, 3}}},
            {"mu3", {{1, 1}, {2, 3}, {3, 2}, {4, 4}}},
            {"mu4", {{1, 1}, {2, 3}, {3, 4}, {4, 2}}},
            {"mu5", {{1, 1}, {2, 4}, {3, 2}, {4, 3}}},
            {"mu6", {{1, 1}, {2, 4}, {3, 3}, {4, 2}}},
            {"mu7", {{1, 4}, {2, 2}, {3, 3}, {4, 1}}},
            {"mu8", {{1, 4}, {2, 2}, {3, 1}, {4, 3}}},
            {"mu9", {{1, 4}, {2, 3}, {3, 2}, {4, 1}}},
            {"mu10", {{1, 4}, {2, 3}, {3, 1}, {4, 2}}},
            {"mu11", {{1, 4}, {2, 1}, {3, 2}, {4, 3}}},
            {"mu12", {{1, 4}, {2, 1}, {3, 3}, {4, 2}}},
        };
        f.strong_core = {std::vector<std::string>{}};
        f.compromise_core = {{"mu7", "mu8", "mu9", "mu10", "mu11", "mu12"}};
        out.push_back(std::move(f));
    }

    return out;
}

void check_labels(std::vector<std::string>& failures, const std::string& name,
                  const std::optional<std::vector<std::string>>& expected,
                  const std::optional<std::vector<std::string>>& computed) {
    if (!expected) return;
    if (computed && *computed == *expected) return;
    const auto render = [](const std::optional<std::vector<std::string>>& v) {
        if (!v) return std::string("(not computed)");
        std::string s = "[";
        for (size_t i = 0; i < v->size(); ++i) s += (i ? " " : "") + (*v)[i];
        return s + "]";
    };
    failures.push_back(name + ": expected " + render(expected) + ", computed " + render(computed));
}

void check_families(std::vector<std::string>& failures, const std::string& name,
                    const std::optional<std::vector<std::vector<std::string>>>& expected,
                    const std::optional<std::vector<std::vector<std::string>>>& computed) {
    if (!expected) return;
    if (computed && *computed == *expected) return;
    const auto render = [](const std::optional<std::vector<std::vector<std::string>>>& v) {
        if (!v) return std::string("(not computed)");
        if (v->empty()) return std::string("(none)");
        std::string s;
        for (const auto& family : *v) {
            s += "{";
            for (size_t i = 0; i < family.size(); ++i) s += (i ? " " : "") + family[i];
            s += "}";
        }
        return s;
    };
    failures.push_back(name + ": expected " + render(expected) + ", computed " + render(computed));
}

}  // namespace

const std::vector<Fixture>& all_fixtures() {
    static const std::vector<Fixture> fixtures = build_fixtures();
    return fixtures;
}

const Fixture& fixture_by_name(const std::string& name) {
    for (const Fixture& f : all_fixtures())
        if (f.name == name) return f;
    throw DomainError("unknown fixture: " + name);
}

FixtureResult run_fixture(const Fixture& f) {
    FixtureResult r;
    r.name = f.name;

    const ParsedMarket parsed = parse_market(f.source);
    const Market& m = parsed.market;

    Labeling labeling;
    MatchingSet expected;
    for (const LabeledMatchingSpec& spec : f.weak_core) {
        Matching mu = make_matching(m, spec.pairs);
        labeling.entries.emplace_back(spec.label, mu);
        expected.push_back(std::move(mu));
    }

    MatchingSet computed = weak_core(m);
    MatchingSet sorted_expected = expected;
    std::sort(sorted_expected.begin(), sorted_expected.end());
    MatchingSet sorted_computed = computed;
    std::sort(sorted_computed.begin(), sorted_computed.end());
    if (sorted_expected != sorted_computed) {
        std::string detail = "weak core: expected " + std::to_string(expected.size()) +
                             " members, computed " + std::to_string(computed.size()) + ";";
        for (const Matching& mu : computed) detail += " " + pair_list(m, mu);
        r.failures.push_back(detail);
        r.report = solve(m, f.name);
        return r;
    }

    r.report = solve(m, f.name, ConceptSelection{}, labeling);
    check_labels(r.failures, "strong core", f.strong_core, r.report.strong_core);
    check_labels(r.failures, "compromise core", f.compromise_core, r.report.compromise_core);
    check_labels(r.failures, "top cycle", f.top_cycle, r.report.top_cycle);
    check_labels(r.failures, "fisher uncovered", f.fisher_uncovered, r.report.fisher_uncovered);
    check_families(r.failures, "vnm stable sets", f.vnm_stable_sets, r.report.vnm_stable_sets);
    check_labels(r.failures, "men-optimal core", f.men_optimal_core, r.report.men_optimal_core);
    check_labels(r.failures, "women-optimal core", f.women_optimal_core,
                 r.report.women_optimal_core);
    r.ok = r.failures.empty();
    return r;
}

}  // namespace matchcore
