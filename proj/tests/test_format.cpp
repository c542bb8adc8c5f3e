#include <doctest.h>

#include <json.hpp>

#include "helpers.hpp"
#include "matchcore/format.hpp"
#include "matchcore/solve.hpp"

using namespace matchcore;
using testutil::M;
using testutil::W;

namespace {

const char* kTinySource =
    "men bob alice\n"
    "women carol\n"
    "pref bob { carol > @ }\n"
    "pref alice {}\n"
    "pref carol { bob > alice }\n";

SolveReport fixture_report(const std::string& name) {
    FixtureResult r = run_fixture(fixture_by_name(name));
    REQUIRE(r.ok);
    return r.report;
}

}  // namespace

TEST_SUITE("format") {
    TEST_CASE("parses every bundled source") {
        for (const Fixture& f : all_fixtures()) CHECK_NOTHROW(parse_market(f.source));
    }

    TEST_CASE("declarations close transitively per owner") {
        ParsedMarket p = parse_market(fixture_by_name("ex1").source);
        CHECK(p.market.num_men() == 2);
        CHECK(p.market.num_women() == 2);
        CHECK(p.men_names == std::vector<std::string>{"m1", "m2"});
        CHECK(p.market.pref(M(1)).pair_count() == 0);
        using P = std::pair<AgentId, AgentId>;
        CHECK(p.market.pref(W(1)).strict_pairs() == std::vector<P>{{M(1), M(2)}});
        CHECK(p.market.pref(W(2)).strict_pairs() == std::vector<P>{{M(1), M(2)}});
    }

    TEST_CASE("original spellings map onto canonical ids in order") {
        ParsedMarket p = parse_market(kTinySource);
        CHECK(p.men_names == std::vector<std::string>{"bob", "alice"});
        CHECK(p.women_names == std::vector<std::string>{"carol"});
        // carol ranked bob (= m1) over alice (= m2).
        CHECK(p.market.pref(W(1)).strictly_prefers(M(1), M(2)));
        // bob prefers carol to staying single.
        CHECK(p.market.pref(M(1)).strictly_prefers(W(1), M(1)));
    }

    TEST_CASE("comments and whitespace are insignificant") {
        ParsedMarket p = parse_market(
            "# a market\nmen m1   # trailing\nwomen w1\npref m1{w1>@}pref w1 {}\n");
        CHECK(p.market.pref(M(1)).strictly_prefers(W(1), M(1)));
    }

    TEST_CASE("syntax errors carry position, expectation, and the found token") {
        auto fails_with = [](const std::string& text, int line, int col,
                             const std::string& expected, const std::string& found) {
            try {
                parse_market(text);
                FAIL_CHECK("expected SyntaxError for: " << text);
            } catch (const SyntaxError& e) {
                CHECK(e.line == line);
                CHECK(e.col == col);
                CHECK(e.expected == expected);
                CHECK(e.found == found);
            }
        };
        fails_with("", 1, 1, "'men'", "end of input");
        fails_with("men m1", 1, 7, "'women'", "end of input");
        fails_with("men m1\nwomen w1\npref m1 { w1 > }\n", 3, 16, "alternative", "'}'");
        fails_with("men m1\nwomen w1\npref m1 { w1 @ }\n", 3, 14, "'>'", "'@'");
        fails_with("men m1\nwomen w1\npref m1 { w1 > @; }\n", 3, 19, "alternative", "'}'");
        fails_with("men m1\nwomen w1\npref m1 { w1 > @ ;; }\n", 3, 19, "alternative", "';'");
        fails_with("men m1\nwomen w1\npref m1 w1 > @ }\n", 3, 9, "'{'", "'w1'");
        fails_with("men m1\nwomen w1\npref m1 {} stray\n", 3, 12, "'pref' or end of input",
                   "'stray'");
        fails_with("men m1\nwomen w1\npref m1 {} pref", 3, 16, "agent name", "end of input");
        fails_with("men m?", 1, 6, "a valid token", "'?'");
    }

    TEST_CASE("duplicate declarations are rejected") {
        CHECK_THROWS_AS(parse_market("men a a\nwomen w1\n"), DuplicateAgent);
        CHECK_THROWS_AS(parse_market("men a\nwomen a\n"), DuplicateAgent);
        CHECK_THROWS_AS(
            parse_market("men m1\nwomen w1\npref m1 {}\npref m1 {}\npref w1 {}\n"),
            DuplicateAgent);
    }

    TEST_CASE("every agent needs a pref block") {
        try {
            parse_market("men m1 m2\nwomen w1\npref m1 {}\npref w1 {}\n");
            FAIL("expected MissingPrefBlock");
        } catch (const MissingPrefBlock& e) {
            CHECK(e.agent == "m2");
        }
    }

    TEST_CASE("terms must name opposite-side agents or @") {
        // Unknown block owner.
        CHECK_THROWS_AS(parse_market("men m1\nwomen w1\npref zz {}\n"), UnknownAlternative);
        // Same-side agent in a pair.
        CHECK_THROWS_AS(
            parse_market("men m1 m2\nwomen w1\npref m1 { m2 > @ }\npref m2 {}\npref w1 {}\n"),
            UnknownAlternative);
        // The owner must write itself as @, not by name.
        CHECK_THROWS_AS(parse_market("men m1\nwomen w1\npref m1 { w1 > m1 }\npref w1 {}\n"),
                        UnknownAlternative);
        // Unknown name in a pair.
        CHECK_THROWS_AS(parse_market("men m1\nwomen w1\npref m1 { w9 > @ }\npref w1 {}\n"),
                        UnknownAlternative);
    }

    TEST_CASE("preference cycles name the owner using original spellings") {
        try {
            parse_market(
                "men ann beth cleo\nwomen w1\n"
                "pref w1 { ann > beth; beth > cleo; cleo > ann }\n"
                "pref ann {}\npref beth {}\npref cleo {}\n");
            FAIL("expected CycleError");
        } catch (const CycleError& e) {
            CHECK(e.owner == "w1");
            REQUIRE(e.cycle.size() >= 3);
            CHECK(e.cycle.front() == e.cycle.back());
            bool uses_original = false;
            for (const std::string& name : e.cycle)
                if (name == "ann" || name == "beth" || name == "cleo") uses_original = true;
            CHECK(uses_original);
            CHECK(std::string(e.what()).find("w1") != std::string::npos);
        }
    }

    TEST_CASE("serializer emits the canonical form") {
        CHECK(serialize_market(Market(0, 0)) == "men\nwomen\n");
        Market ex1 = testutil::market_of("ex1");
        CHECK(serialize_market(ex1) ==
              "men m1 m2\n"
              "women w1 w2\n"
              "pref m1 {}\n"
              "pref m2 {}\n"
              "pref w1 { m1 > m2 }\n"
              "pref w2 { m1 > m2 }\n");
        // Chains serialize reduced: the closure pair w2 > @ is implied.
        Market m(1, 2);
        m.declare_pref(M(1), {{W(2), W(1)}, {W(1), M(1)}});
        CHECK(serialize_market(m) ==
              "men m1\n"
              "women w1 w2\n"
              "pref m1 { w1 > @; w2 > w1 }\n"
              "pref w1 {}\n"
              "pref w2 {}\n");
    }

    TEST_CASE("serialize-parse round trips reproduce the market") {
        for (const Fixture& f : all_fixtures()) {
            Market m = parse_market(f.source).market;
            std::string text = serialize_market(m);
            Market again = parse_market(text).market;
            CHECK(again == m);
            CHECK(serialize_market(again) == text);  // second pass is byte-stable
        }
        Market renamed = parse_market(kTinySource).market;
        CHECK(parse_market(serialize_market(renamed)).market == renamed);
    }

    TEST_CASE("dominance edges are labeled dominated -> dominator") {
        SolveReport r = fixture_report("ex1");
        std::vector<std::pair<std::string, std::string>> got;
        for (const LabeledEdge& e : r.dominance_edges) {
            CHECK(e.strict);  // no mutual dominance anywhere in this market
            got.emplace_back(e.from, e.to);
        }
        std::vector<std::pair<std::string, std::string>> want{
            {"mu3", "mu5"}, {"mu3", "mu7"}, {"mu4", "mu2"},
            {"mu4", "mu6"}, {"mu6", "mu5"}, {"mu7", "mu2"}};
        CHECK(testutil::sorted(got) == want);

        // One witness verified end to end: mu2 dominates mu4 via {m1, m2, w1}.
        for (const LabeledEdge& e : r.dominance_edges)
            if (e.from == "mu4" && e.to == "mu2")
                CHECK(e.witness == std::vector<std::string>{"m1", "m2", "w1"});
    }

    TEST_CASE("covering edges are labeled covered -> coverer") {
        SolveReport r = fixture_report("ex1");
        std::vector<std::pair<std::string, std::string>> got;
        for (const LabeledEdge& e : r.covering_edges) got.emplace_back(e.from, e.to);
        std::vector<std::pair<std::string, std::string>> want{
            {"mu3", "mu5"}, {"mu3", "mu7"}, {"mu4", "mu2"}, {"mu4", "mu6"}};
        CHECK(testutil::sorted(got) == want);
    }

    TEST_CASE("dot export follows the stated edge convention") {
        SolveReport r = fixture_report("ex1");
        std::string dot = export_dot(r);
        CHECK(dot.find("// Edge x -> y reads: y dominates x (solid) or y covers x (dashed).\n") !=
              std::string::npos);
        CHECK(dot.find("digraph matchcore {") != std::string::npos);
        CHECK(dot.find("  \"mu1\";\n") != std::string::npos);
        CHECK(dot.find("  \"mu7\" -> \"mu2\";\n") != std::string::npos);
        CHECK(dot.find("  \"mu6\" -> \"mu5\";\n") != std::string::npos);
        CHECK(dot.find("  \"mu3\" -> \"mu7\" [style=dashed];\n") != std::string::npos);
        CHECK(dot.find("  \"mu4\" -> \"mu2\" [style=dashed];\n") != std::string::npos);
        // Reverse direction must not appear: mu2 is never dominated.
        CHECK(dot.find("\"mu2\" ->") == std::string::npos);
        CHECK(export_dot(r) == dot);  // deterministic
    }

    TEST_CASE("json export is pinned to the stable schema") {
        SolveReport r = fixture_report("ex1");
        std::string text = export_json(r);
        CHECK(text == export_json(r));  // byte-stable
        CHECK(text.back() == '\n');

        nlohmann::json j = nlohmann::json::parse(text);
        CHECK(j["schema"] == "matchcore/1");
        CHECK(j["market"] == "ex1");
        CHECK(j["men"] == nlohmann::json::array({"m1", "m2"}));
        CHECK(j["matchings"].size() == 7);
        CHECK(j["matchings"][0]["label"] == "mu1");
        CHECK(j["matchings"][0]["pairs"].empty());
        CHECK(j["matchings"][0]["single"] == nlohmann::json::array({"m1", "m2", "w1", "w2"}));
        CHECK(j["matchings"][5]["pairs"] ==
              nlohmann::json::array({{"m1", "w1"}, {"m2", "w2"}}));
        CHECK(j["weak_core"].size() == 7);
        CHECK(j["strong_core"] == nlohmann::json::array({"mu1", "mu2", "mu5"}));
        CHECK(j["compromise_core"] ==
              nlohmann::json::array({"mu1", "mu2", "mu5", "mu6", "mu7"}));
        CHECK(j["top_cycle"] == nlohmann::json::array({"mu1", "mu2", "mu5"}));
        CHECK(j["dominance_edges"].size() == 6);
        CHECK(j["covering_edges"].size() == 4);
        for (const auto& e : j["dominance_edges"]) CHECK(e["strict"] == true);

        nlohmann::json fb = nlohmann::json::parse(export_json(fixture_report("fishburn")));
        CHECK(fb["vnm_stable_sets"] == nlohmann::json::array({{"mu1", "mu3"}}));
        CHECK(fb["compromise_core"] == nlohmann::json::array({"mu2", "mu3"}));
    }

    TEST_CASE("unrequested concepts are omitted from the json document") {
        Market m = testutil::market_of("ex1");
        ConceptSelection sel = ConceptSelection::none();
        sel.weak = true;
        SolveReport r = solve(m, "ex1", sel);
        nlohmann::json j = nlohmann::json::parse(export_json(r));
        CHECK(j.contains("weak_core"));
        CHECK_FALSE(j.contains("strong_core"));
        CHECK_FALSE(j.contains("compromise_core"));
        CHECK_FALSE(j.contains("vnm_stable_sets"));
        CHECK(j.contains("dominance_edges"));
    }
}
