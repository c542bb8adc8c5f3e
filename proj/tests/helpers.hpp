#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "matchcore/fixtures.hpp"

namespace matchcore::testutil {

inline AgentId M(int i) { return {Side::Man, i}; }
inline AgentId W(int i) { return {Side::Woman, i}; }

// Market parsed straight from a bundled fixture's source text.
inline Market market_of(const std::string& fixture_name) {
    return parse_market(fixture_by_name(fixture_name).source).market;
}

// Matchings of a fixture in the fixture's own label order (so index k is the
// matching the fixture calls mu{k+1}).
inline MatchingSet labeled_domain(const std::string& fixture_name) {
    const Fixture& f = fixture_by_name(fixture_name);
    const Market m = parse_market(f.source).market;
    MatchingSet out;
    out.reserve(f.weak_core.size());
    for (const LabeledMatchingSpec& spec : f.weak_core) out.push_back(make_matching(m, spec.pairs));
    return out;
}

inline MatchingSet as_set(MatchingSet s) {
    std::sort(s.begin(), s.end());
    return s;
}

template <typename T>
std::vector<T> sorted(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace matchcore::testutil
