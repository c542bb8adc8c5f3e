#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matchcore/preference.hpp"

namespace matchcore {

// A two-sided market: rosters plus one PartialOrder per agent over the
// opposite side and self (self listed last in every ground set).
// Agents are addressed either by AgentId or by a dense index: men first in
// roster order, then women.
class Market {
public:
    Market() = default;
    // Creates the rosters; preferences start fully incomparable.
    Market(int num_men, int num_women);

    const std::vector<AgentId>& men() const { return men_; }
    const std::vector<AgentId>& women() const { return women_; }
    int num_men() const { return static_cast<int>(men_.size()); }
    int num_women() const { return static_cast<int>(women_.size()); }
    int size() const { return num_men() + num_women(); }

    int dense(AgentId a) const;  // throws UnknownAlternative if not in the market
    AgentId agent(int dense_idx) const;

    // The canonical ground set for an agent: opposite side in roster order,
    // self last.
    std::vector<AgentId> ground_for(AgentId a) const;

    const PartialOrder& pref(AgentId a) const { return prefs_[dense(a)]; }
    const PartialOrder& pref_dense(int idx) const { return prefs_[idx]; }
    // Replaces an agent's preference; the ground set must be the canonical one.
    void set_pref(AgentId a, PartialOrder po);
    // Builds and installs the closure of `declared` for agent `a`.
    void declare_pref(AgentId a, const std::vector<std::pair<AgentId, AgentId>>& declared);

    bool same_shape(const Market& other) const {
        return num_men() == other.num_men() && num_women() == other.num_women();
    }

    friend bool operator==(const Market&, const Market&) = default;

private:
    std::vector<AgentId> men_;
    std::vector<AgentId> women_;
    std::vector<PartialOrder> prefs_;  // dense order
};

// An involution on dense agent indices; mate[i] == i means single.
struct Matching {
    std::vector<int> mate;

    int size() const { return static_cast<int>(mate.size()); }
    bool single(int i) const { return mate[i] == i; }
    AgentId partner(const Market& m, AgentId a) const { return m.agent(mate[m.dense(a)]); }

    friend auto operator<=>(const Matching&, const Matching&) = default;
};

// Renders "{(m1,w1),(m2,w2)}" with pairs listed by man index; singles omitted.
std::string pair_list(const Market& m, const Matching& mu);

// Builds the matching pairing man i with woman j for every (i, j) entry
// (1-based side indices); everyone else is single. Throws DomainError on
// out-of-range indices or an agent matched twice.
Matching make_matching(const Market& m, const std::vector<std::pair<int, int>>& man_woman_pairs);

using MatchingSet = std::vector<Matching>;

inline constexpr int kDefaultAgentCap = 16;
// The enumeration cap honoring the MATCHCORE_CAP environment variable
// (read once per process).
int enumeration_agent_cap();

// Every involution pairing a subset of men with an equal-sized subset of
// women (everyone else single), in canonical order: lexicographic over the
// men's partner tuples, women in roster order, self sorting last.
MatchingSet enumerate_matchings(const Market& m, std::optional<int> cap = std::nullopt);

// Closed-form count the enumeration must match: sum_k C(|M|,k) C(|W|,k) k!.
long long matching_count(int num_men, int num_women);

// Dense indices of agents whose partner differs between a and b, ascending.
std::vector<int> affected_agents(const Matching& a, const Matching& b);

// Bitmask form of affected_agents (bit i = dense agent i).
std::uint64_t affected_mask(const Matching& a, const Matching& b);

// true iff `mu` satisfies the involution and cross-side-or-self laws of `m`.
bool is_valid_matching(const Market& m, const Matching& mu);

}  // namespace matchcore
