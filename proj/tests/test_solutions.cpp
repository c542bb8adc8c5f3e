#include <doctest.h>

#include "helpers.hpp"
#include "matchcore/solutions.hpp"

using namespace matchcore;
using testutil::as_set;
using testutil::labeled_domain;
using testutil::market_of;
using testutil::sorted;

namespace {

DominanceGraph graph_of(const char* name) {
    Market m = market_of(name);
    return dominance_graph(m, labeled_domain(name));
}

MatchingSet pick(const MatchingSet& domain, std::vector<int> idx) {
    MatchingSet out;
    for (int i : idx) out.push_back(domain[i]);
    return out;
}

}  // namespace

TEST_SUITE("solutions") {
    TEST_CASE("covering demands dominating everything the covered one dominates") {
        DominanceGraph g = graph_of("fishburn");
        CHECK(miller_covers(g, 1, 0));        // mu2 beats the chain's bottom
        CHECK_FALSE(miller_covers(g, 2, 1));  // mu3 beats mu2 but not mu1
        CHECK_FALSE(miller_covers(g, 2, 0));  // no edge at all
        CHECK_FALSE(miller_covers(g, 0, 0));
    }

    TEST_CASE("2x2 frozen covering relation") {
        CoveringRelation c = covering_relation(graph_of("ex1"));
        using Edges = std::vector<std::pair<int, int>>;
        // mu2 and mu6 cover mu4; mu5 and mu7 cover mu3.
        CHECK(c.edges() == Edges{{1, 3}, {4, 2}, {5, 3}, {6, 2}});
        CHECK(c.covers(1, 3));
        CHECK_FALSE(c.covers(1, 6));  // mu2 beats mu7 but misses mu7's prey
    }

    TEST_CASE("covering stays antisymmetric and transitive on every bundled market") {
        for (const char* name : {"ex1", "ex2", "ex3", "solo", "crossed", "fishburn",
                                 "fourbyfour"}) {
            CAPTURE(name);
            DominanceGraph g = graph_of(name);
            CoveringRelation c = covering_relation(g);
            CHECK(covering_is_antisymmetric_and_transitive(c));
            // Covering is a sub-relation of strict dominance.
            for (auto [i, j] : c.edges()) CHECK(g.strict(i, j));
        }
    }

    TEST_CASE("uncovered sets of the bundled markets") {
        CHECK(uncovered(graph_of("ex1")) == std::vector<int>{0, 1, 4, 5, 6});
        CHECK(uncovered(graph_of("ex2")) == std::vector<int>{0, 1, 2, 3, 4, 5});
        CHECK(uncovered(graph_of("ex3")) == std::vector<int>{0, 1, 2});
        CHECK(uncovered(graph_of("fishburn")) == std::vector<int>{1, 2});
        CHECK(uncovered(graph_of("crossed")) == std::vector<int>{0, 1});
        CHECK(uncovered(graph_of("fourbyfour")) == std::vector<int>{6, 7, 8, 9, 10, 11});
    }

    TEST_CASE("compromise core matches the uncovered set, as matchings") {
        Market m = market_of("ex1");
        MatchingSet domain = labeled_domain("ex1");
        CHECK(as_set(compromise_core(m)) == as_set(pick(domain, {0, 1, 4, 5, 6})));

        Market fb = market_of("fishburn");
        CHECK(as_set(compromise_core(fb)) == as_set(pick(labeled_domain("fishburn"), {1, 2})));
    }

    TEST_CASE("the 4x4 compromise core pairs m1 with w4 throughout") {
        Market m = market_of("fourbyfour");
        MatchingSet c = compromise_core(m);
        REQUIRE(c.size() == 6);
        for (const Matching& mu : c)
            CHECK(mu.partner(m, testutil::M(1)) == testutil::W(4));
    }

    TEST_CASE("restricting the domain restricts both covering clauses") {
        DominanceGraph g = graph_of("ex1");
        // Within {mu2, mu7} the pair collapses to the dominator.
        CHECK(compromise_of(g, {1, 6}) == std::vector<int>{1});
        // Adding mu3 revives mu7: mu2 fails to dominate mu7's prey mu3.
        CHECK(compromise_of(g, {1, 2, 6}) == std::vector<int>{1, 6});
        CHECK(compromise_of(g, {0}) == std::vector<int>{0});
    }

    TEST_CASE("fisher covering compares upstream instead of downstream") {
        DominanceGraph g = graph_of("fishburn");
        // mu3 is undominated, so it F-covers its prey mu2 vacuously.
        CHECK(fisher_covers(g, 2, 1));
        // mu2 beats mu1, but mu2's dominator mu3 does not; no F-cover.
        CHECK_FALSE(fisher_covers(g, 1, 0));
        CHECK(fisher_uncovered(g) == std::vector<int>{0, 2});
        CHECK(fisher_uncovered(graph_of("ex1")) == std::vector<int>{0, 1, 4});
        // The two notions genuinely part ways on the chain market.
        CHECK(uncovered(g) != fisher_uncovered(g));
    }

    TEST_CASE("vnm stable sets: frozen families") {
        CHECK(vnm_stable_sets(graph_of("ex1")) ==
              std::vector<std::vector<int>>{{0, 1, 4}});
        CHECK(vnm_stable_sets(graph_of("ex2")).empty());  // the two 3-cycles kill every candidate
        CHECK(vnm_stable_sets(graph_of("ex3")) ==
              std::vector<std::vector<int>>{{0, 1, 2}});
        CHECK(vnm_stable_sets(graph_of("crossed")) ==
              std::vector<std::vector<int>>{{0, 1}});
        CHECK(vnm_stable_sets(graph_of("fishburn")) ==
              std::vector<std::vector<int>>{{0, 2}});
        CHECK(vnm_stable_sets(graph_of("solo")) ==
              std::vector<std::vector<int>>{{0, 1}});
    }

    TEST_CASE("seeded vnm search equals the plain subset scan") {
        for (const char* name : {"ex1", "ex2", "ex3", "solo", "crossed", "fishburn",
                                 "fourbyfour"}) {
            CAPTURE(name);
            DominanceGraph g = graph_of(name);
            CHECK(vnm_stable_sets(g) == vnm_stable_sets_exhaustive(g));
        }
    }

    TEST_CASE("vnm search enforces its domain caps") {
        Market m = market_of("solo");
        auto oversized = [&](int n) {
            DominanceGraph g;
            g.domain = MatchingSet(n, make_matching(m, {}));
            g.edge.assign(n, std::vector<char>(n, 0));
            return g;
        };
        CHECK_THROWS_AS(vnm_stable_sets(oversized(21)), CapExceeded);
        CHECK_THROWS_AS(vnm_stable_sets_exhaustive(oversized(13)), CapExceeded);
        CHECK_NOTHROW(vnm_stable_sets_exhaustive(oversized(3)));
    }

    TEST_CASE("external stability of the compromise core, with receipts") {
        for (const char* name : {"ex1", "ex2", "ex3", "crossed", "fishburn", "fourbyfour"}) {
            CAPTURE(name);
            DominanceGraph g = graph_of(name);
            std::vector<int> core = uncovered(g);
            ExternalStabilityReport r = check_external_stability(core, g);
            CHECK(r.holds);
            CHECK_FALSE(r.violator.has_value());
            for (auto [outside, inside] : r.dominated_by) CHECK(g.strict(inside, outside));
        }
        // A genuinely unstable core is reported with its violator.
        DominanceGraph g = graph_of("crossed");  // two unranked matchings
        ExternalStabilityReport bad = check_external_stability({0}, g);
        CHECK_FALSE(bad.holds);
        REQUIRE(bad.violator.has_value());
        CHECK(*bad.violator == 1);
    }

    TEST_CASE("side preference needs a strict gain and no losses on that side") {
        Market m = market_of("ex1");
        MatchingSet d = labeled_domain("ex1");
        CHECK(side_prefers(m, d[1], d[6], Side::Woman));   // w1 trades up, w2 unhooked
        CHECK_FALSE(side_prefers(m, d[6], d[1], Side::Woman));
        CHECK_FALSE(side_prefers(m, d[1], d[0], Side::Woman));  // no strict gain anywhere
        CHECK(side_prefers(m, d[4], d[5], Side::Woman));
        // Men rank nothing, so the men-side order is empty.
        CHECK_FALSE(side_prefers(m, d[1], d[6], Side::Man));
        CHECK_FALSE(side_prefers(m, d[6], d[1], Side::Man));
    }

    TEST_CASE("side-optimal cores of the bundled markets") {
        auto labels_of = [](const char* name, Side side, SideOptOptions opts = {}) {
            Market m = market_of(name);
            MatchingSet domain = labeled_domain(name);
            std::vector<int> out;
            for (const Matching& mu : side_optimal_core(m, side, opts)) {
                for (size_t i = 0; i < domain.size(); ++i)
                    if (domain[i] == mu) out.push_back(static_cast<int>(i));
            }
            return sorted(out);
        };
        using V = std::vector<int>;
        CHECK(labels_of("ex1", Side::Man) == V{0, 1, 4, 5, 6});    // no men-side order at all
        CHECK(labels_of("ex1", Side::Woman) == V{0, 1, 4});        // mu6, mu7 side-covered
        CHECK(labels_of("ex3", Side::Man) == V{0, 1, 2});
        CHECK(labels_of("ex3", Side::Woman) == V{0, 1});
        CHECK(labels_of("crossed", Side::Man) == V{0});
        CHECK(labels_of("crossed", Side::Woman) == V{1});
        CHECK(labels_of("fishburn", Side::Man) == V{2});
        CHECK(labels_of("fishburn", Side::Woman) == V{1, 2});
        // Quantifying clause (ii) over the whole weak core weakens the cover:
        // mu2 then also survives on the chain market.
        SideOptOptions wide{true};
        CHECK(labels_of("fishburn", Side::Man, wide) == V{1, 2});
    }
}
