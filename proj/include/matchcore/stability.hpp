#pragma once

#include <optional>
#include <vector>

#include "matchcore/market.hpp"

namespace matchcore {

enum class BlockKind { Strong, WeakViaManIncomparable, WeakViaWomanIncomparable };

// A man-woman pair that blocks a matching. Kinds:
//   Strong                   — both strictly prefer each other to their match;
//   WeakViaManIncomparable   — the woman strictly gains, the man moves between
//                              incomparable alternatives;
//   WeakViaWomanIncomparable — the man strictly gains, the woman moves between
//                              incomparable alternatives.
struct BlockingPair {
    AgentId man;
    AgentId woman;
    BlockKind kind;

    friend bool operator==(const BlockingPair&, const BlockingPair&) = default;
};

bool is_individually_rational(const Market& m, const Matching& mu);

// Pairs (m,w) with w > current for the man AND m > current for the woman,
// listed by (man index, woman index).
std::vector<BlockingPair> strong_blocking_pairs(const Market& m, const Matching& mu);

// All weak blocking pairs (strong ones included, tagged Strong).
std::vector<BlockingPair> weak_blocking_pairs(const Market& m, const Matching& mu);

bool is_weakly_stable(const Market& m, const Matching& mu);
bool is_strongly_stable(const Market& m, const Matching& mu);

// Individually rational matchings with no strong (resp. weak) blocking pair,
// in canonical enumeration order.
MatchingSet weak_core(const Market& m);
MatchingSet strong_core(const Market& m);

// Coalition-form oracles for the two cores. A coalition S strongly blocks mu
// via mu' if S re-matches within itself (mu'(i) in S for all i in S) and every
// member strictly gains; it weakly blocks if nobody in S is worse off and at
// least one member strictly gains. Exhaustive over all nonempty S and all
// matchings mu'; desk-scale only.
bool coalition_strongly_blocks(const Market& m, const Matching& mu);
bool coalition_weakly_blocks(const Market& m, const Matching& mu);
MatchingSet coalition_weak_core(const Market& m);
MatchingSet coalition_strong_core(const Market& m);

// A full strict preference profile, one TotalOrder per agent (dense order).
struct CompletionProfile {
    std::vector<TotalOrder> orders;

    const TotalOrder& of(const Market& m, AgentId a) const { return orders[m.dense(a)]; }
};

// Throws NotAnExtension naming the offending agent if some order does not
// contain the agent's declared strict pairs, or is not a permutation of the
// agent's ground set.
void require_extension(const Market& m, const CompletionProfile& profile);

// Classical stability (individual rationality + no blocking pair) under a
// complete strict profile.
bool is_stable_under(const Market& m, const CompletionProfile& profile, const Matching& mu);

// If mu is weakly stable, builds a completion under which it is stable:
// raise mu(i) above everything i finds incomparable to mu(i), close, then
// extend to a total order (lexicographically first extension). Returns
// nullopt iff mu is not weakly stable.
std::optional<CompletionProfile> find_stabilizing_completion(const Market& m, const Matching& mu);

// Every completion profile (product of per-agent linear extensions).
// Throws CapExceeded if the product would exceed `cap` profiles.
std::vector<CompletionProfile> all_completions(const Market& m, long long cap = 2'000'000);

// Gale-Shapley deferred acceptance under a complete strict profile.
// Proposers never propose to anyone ranked below self; receivers reject
// proposals ranked below self.
Matching deferred_acceptance(const Market& m, const CompletionProfile& profile, Side proposing);

}  // namespace matchcore
