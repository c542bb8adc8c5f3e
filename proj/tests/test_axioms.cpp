#include <doctest.h>

#include "helpers.hpp"
#include "matchcore/axioms.hpp"

using namespace matchcore;
using testutil::labeled_domain;
using testutil::market_of;

namespace {

DominanceGraph graph_of(const char* name) {
    Market m = market_of(name);
    return dominance_graph(m, labeled_domain(name));
}

const MapSurvey& survey(const CharacterizationReport& r, const std::string& name) {
    for (const MapSurvey& s : r.maps)
        if (s.map_name == name) return s;
    FAIL("no survey named " << name);
    return r.maps.front();  // unreachable
}

}  // namespace

TEST_SUITE("axioms") {
    TEST_CASE("up and down sets restrict to the queried subset") {
        DominanceGraph g = graph_of("fishburn");
        CHECK(up_set(g, 1, {0, 1, 2}) == std::vector<int>{2});
        CHECK(down_set(g, 1, {0, 1, 2}) == std::vector<int>{0});
        CHECK(up_set(g, 1, {0, 1}).empty());  // mu3 cut away
        CHECK(down_set(g, 2, {1, 2}) == std::vector<int>{1});
        CHECK_THROWS_AS(up_set(g, 0, {1, 2}), DomainError);
        CHECK_THROWS_AS(down_set(g, 0, {1, 2}), DomainError);
    }

    TEST_CASE("axiom checks work standalone on chosen subsets") {
        DominanceGraph g = graph_of("fishburn");
        RefinementMap c = compromise_map();
        RefinementMap id = identity_map();

        CHECK(check_im(c, {0, 1, 2}, g).passed);
        CHECK(check_eb(c, {0, 1, 2}, g).passed);
        CHECK(check_et(c, {0, 1, 2}, g).passed);

        // Identity keeps the dominated bottom mu1 around: EB rejects it.
        AxiomReport eb = check_eb(id, {0, 1}, g);
        CHECK_FALSE(eb.passed);
        REQUIRE(eb.counterexample.has_value());
        CHECK(eb.counterexample->t == std::vector<int>{0, 1});
        CHECK(eb.counterexample->mu == 0);

        // On a totally ordered pair, identity also over-selects against IM.
        AxiomReport im = check_im(id, {1, 2}, g);
        CHECK_FALSE(im.passed);

        // Identity never excludes anyone, so the ET hypothesis never fires.
        CHECK(check_et(id, {0, 1, 2}, g).passed);
    }

    TEST_CASE("full sweep on the 2x2 market") {
        CharacterizationReport r = verify_characterization(market_of("ex1"));
        CHECK(r.domain_size == 7);
        CHECK(r.subsets_checked == 127);
        CHECK(r.canonical_passes);
        CHECK(r.containment_ok);
        REQUIRE(r.maps.size() == 4);

        const MapSurvey& c = survey(r, "compromise");
        CHECK(c.satisfies_all());
        CHECK(c.containment_holds);

        const MapSurvey& id = survey(r, "identity");
        CHECK_FALSE(id.eb.passed);
        REQUIRE(id.eb.counterexample.has_value());
        // The sweep runs over the weak core in enumeration order, where
        // index 1 = {(m1,w1)} and index 2 = {(m1,w2),(m2,w1)}. The smallest
        // pair (by subset mask) carrying a strict edge is {1, 2}, with 1
        // dominating 2: keeping the dominated bottom 2 breaks EB.
        CHECK(id.eb.counterexample->t == std::vector<int>{1, 2});
        CHECK(id.eb.counterexample->mu == 2);
        CHECK_FALSE(id.satisfies_all());
    }

    TEST_CASE("full sweep on the chain market") {
        CharacterizationReport r = verify_characterization(market_of("fishburn"));
        CHECK(r.domain_size == 3);
        CHECK(r.subsets_checked == 7);
        CHECK(r.canonical_passes);
        CHECK(r.containment_ok);

        const MapSurvey& id = survey(r, "identity");
        CHECK_FALSE(id.eb.passed);
        REQUIRE(id.eb.counterexample.has_value());
        CHECK(id.eb.counterexample->t == std::vector<int>{0, 1});
        CHECK(id.eb.counterexample->mu == 0);
    }

    TEST_CASE("full sweep on the dominance-free market is vacuously kind") {
        CharacterizationReport r = verify_characterization(market_of("ex3"));
        CHECK(r.domain_size == 3);
        CHECK(r.subsets_checked == 7);
        CHECK(r.canonical_passes);
        CHECK(r.containment_ok);
        // With no dominance edges even the identity map is axiom-clean:
        // every exclusion clause is vacuous and C(T) = T throughout.
        CHECK(survey(r, "identity").satisfies_all());
        CHECK(survey(r, "identity").containment_holds);
    }

    TEST_CASE("sweep refuses oversized weak cores") {
        CHECK_THROWS_AS(verify_characterization(market_of("ex1"), 3), CapExceeded);
    }
}
