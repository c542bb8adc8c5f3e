#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "matchcore/stability.hpp"

namespace matchcore {

struct Coalition {
    std::uint64_t mask = 0;  // bit i = dense agent i

    bool contains(int dense_idx) const { return (mask >> dense_idx) & 1u; }
    bool empty() const { return mask == 0; }
    std::vector<AgentId> members(const Market& m) const;

    friend auto operator<=>(const Coalition&, const Coalition&) = default;
};

// Enforceability of a move from `from` to `to` by coalition s:
// (a) every new match in `to` (partner neither kept nor self) stays inside s;
// (b) every destroyed match (agent newly single) touches s.
bool can_enforce(const Matching& from, const Matching& to, const Coalition& s);

// a >_S b: S's allocation is the same set of agents in both matchings,
// nobody in S does worse in a, and someone in S does strictly better.
bool succ_s(const Market& m, const Matching& a, const Matching& b, const Coalition& s);

// First coalition (ascending mask order over the affected agents) that can
// enforce b -> a and prefers a; nullopt when a does not dominate b.
// Unaffected agents never change any enforceability or gain clause, so the
// search restricted to subsets of the affected set is exhaustive (the
// all-subsets oracle below is asserted equal in tests).
std::optional<Coalition> dominates(const Market& m, const Matching& a, const Matching& b);

// Brute force over all nonempty coalitions of the whole market.
std::optional<Coalition> dominates_exhaustive(const Market& m, const Matching& a,
                                              const Matching& b);

inline constexpr int kDominanceDomainCap = 256;

// The full (non-strict) dominance relation over `domain`, with one witness
// coalition per edge. strict(i,j) = edge(i,j) and not edge(j,i).
struct DominanceGraph {
    MatchingSet domain;
    std::vector<std::vector<char>> edge;           // edge[i][j] = domain[i] dominates domain[j]
    std::map<std::pair<int, int>, Coalition> witness;

    int size() const { return static_cast<int>(domain.size()); }
    bool strict(int i, int j) const { return edge[i][j] && !edge[j][i]; }
    std::vector<std::pair<int, int>> strict_edges() const;
};

DominanceGraph dominance_graph(const Market& m, MatchingSet domain);

// Maximal elements of the domain under the asymmetric part of the transitive
// closure of the dominance relation.
std::vector<int> top_cycle(const DominanceGraph& g);

}  // namespace matchcore
