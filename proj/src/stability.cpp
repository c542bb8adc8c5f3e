#include "matchcore/stability.hpp"

#include <algorithm>

namespace matchcore {

namespace {

// compare(a: candidate partner, b: current partner) for agent `agent_idx`.
Cmp against_current(const Market& m, const Matching& mu, int agent_idx, int candidate_idx) {
    const PartialOrder& po = m.pref_dense(agent_idx);
    AgentId candidate = m.agent(candidate_idx);
    AgentId current = m.agent(mu.mate[agent_idx]);
    return po.compare(candidate, current);
}

}  // namespace

bool is_individually_rational(const Market& m, const Matching& mu) {
    if (mu.size() != m.size()) throw MarketMismatch();
    for (int i = 0; i < m.size(); ++i) {
        const PartialOrder& po = m.pref_dense(i);
        if (po.compare(m.agent(i), m.agent(mu.mate[i])) == Cmp::Better) return false;
    }
    return true;
}

std::vector<BlockingPair> strong_blocking_pairs(const Market& m, const Matching& mu) {
    if (mu.size() != m.size()) throw MarketMismatch();
    std::vector<BlockingPair> out;
    for (int mi = 0; mi < m.num_men(); ++mi) {
        for (int wi = m.num_men(); wi < m.size(); ++wi) {
            if (against_current(m, mu, mi, wi) == Cmp::Better &&
                against_current(m, mu, wi, mi) == Cmp::Better)
                out.push_back({m.agent(mi), m.agent(wi), BlockKind::Strong});
        }
    }
    return out;
}

std::vector<BlockingPair> weak_blocking_pairs(const Market& m, const Matching& mu) {
    if (mu.size() != m.size()) throw MarketMismatch();
    std::vector<BlockingPair> out;
    for (int mi = 0; mi < m.num_men(); ++mi) {
        for (int wi = m.num_men(); wi < m.size(); ++wi) {
            Cmp man_view = against_current(m, mu, mi, wi);
            Cmp woman_view = against_current(m, mu, wi, mi);
            if (man_view == Cmp::Better && woman_view == Cmp::Better)
                out.push_back({m.agent(mi), m.agent(wi), BlockKind::Strong});
            else if (woman_view == Cmp::Better && man_view == Cmp::Incomparable)
                out.push_back({m.agent(mi), m.agent(wi), BlockKind::WeakViaManIncomparable});
            else if (man_view == Cmp::Better && woman_view == Cmp::Incomparable)
                out.push_back({m.agent(mi), m.agent(wi), BlockKind::WeakViaWomanIncomparable});
        }
    }
    return out;
}

bool is_weakly_stable(const Market& m, const Matching& mu) {
    return is_individually_rational(m, mu) && strong_blocking_pairs(m, mu).empty();
}

bool is_strongly_stable(const Market& m, const Matching& mu) {
    return is_individually_rational(m, mu) && weak_blocking_pairs(m, mu).empty();
}

MatchingSet weak_core(const Market& m) {
    MatchingSet out;
    for (const Matching& mu : enumerate_matchings(m))
        if (is_weakly_stable(m, mu)) out.push_back(mu);
    return out;
}

MatchingSet strong_core(const Market& m) {
    MatchingSet out;
    for (const Matching& mu : enumerate_matchings(m))
        if (is_strongly_stable(m, mu)) out.push_back(mu);
    return out;
}

namespace {

enum class BlockMode { AllStrict, NobodyWorseSomeoneBetter };

bool coalition_blocks(const Market& m, const Matching& mu, BlockMode mode) {
    const int n = m.size();
    MatchingSet all = enumerate_matchings(m);
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
        for (const Matching& alt : all) {
            bool inside = true;       // alt re-matches S within itself
            bool someone_better = false;
            bool nobody_worse = true;
            bool all_better = true;
            for (int i = 0; i < n && inside; ++i) {
                if (!((s >> i) & 1u)) continue;
                if (!((s >> alt.mate[i]) & 1u)) {
                    inside = false;
                    break;
                }
                Cmp c = m.pref_dense(i).compare(m.agent(alt.mate[i]), m.agent(mu.mate[i]));
                if (c == Cmp::Better) someone_better = true;
                else all_better = false;
                if (c == Cmp::Worse) nobody_worse = false;
            }
            if (!inside) continue;
            if (mode == BlockMode::AllStrict ? all_better && someone_better
                                             : nobody_worse && someone_better)
                return true;
        }
    }
    return false;
}

}  // namespace

bool coalition_strongly_blocks(const Market& m, const Matching& mu) {
    return coalition_blocks(m, mu, BlockMode::AllStrict);
}

bool coalition_weakly_blocks(const Market& m, const Matching& mu) {
    return coalition_blocks(m, mu, BlockMode::NobodyWorseSomeoneBetter);
}

MatchingSet coalition_weak_core(const Market& m) {
    MatchingSet out;
    for (const Matching& mu : enumerate_matchings(m))
        if (!coalition_strongly_blocks(m, mu)) out.push_back(mu);
    return out;
}

MatchingSet coalition_strong_core(const Market& m) {
    MatchingSet out;
    for (const Matching& mu : enumerate_matchings(m))
        if (!coalition_weakly_blocks(m, mu)) out.push_back(mu);
    return out;
}

void require_extension(const Market& m, const CompletionProfile& profile) {
    if (static_cast<int>(profile.orders.size()) != m.size()) throw MarketMismatch();
    for (int i = 0; i < m.size(); ++i) {
        const PartialOrder& po = m.pref_dense(i);
        const TotalOrder& t = profile.orders[i];
        std::vector<AgentId> sorted_ground = po.ground();
        std::vector<AgentId> sorted_ranking = t.ranking;
        std::sort(sorted_ground.begin(), sorted_ground.end());
        std::sort(sorted_ranking.begin(), sorted_ranking.end());
        if (sorted_ground != sorted_ranking) throw NotAnExtension(to_string(m.agent(i)));
        for (const auto& [a, b] : po.strict_pairs())
            if (!t.prefers(a, b)) throw NotAnExtension(to_string(m.agent(i)));
    }
}

bool is_stable_under(const Market& m, const CompletionProfile& profile, const Matching& mu) {
    require_extension(m, profile);
    if (mu.size() != m.size()) throw MarketMismatch();
    for (int i = 0; i < m.size(); ++i)
        if (profile.orders[i].prefers(m.agent(i), m.agent(mu.mate[i]))) return false;
    for (int mi = 0; mi < m.num_men(); ++mi)
        for (int wi = m.num_men(); wi < m.size(); ++wi)
            if (profile.orders[mi].prefers(m.agent(wi), m.agent(mu.mate[mi])) &&
                profile.orders[wi].prefers(m.agent(mi), m.agent(mu.mate[wi])))
                return false;
    return true;
}

std::optional<CompletionProfile> find_stabilizing_completion(const Market& m, const Matching& mu) {
    if (!is_weakly_stable(m, mu)) return std::nullopt;
    CompletionProfile profile;
    profile.orders.reserve(m.size());
    for (int i = 0; i < m.size(); ++i) {
        const PartialOrder& po = m.pref_dense(i);
        AgentId assigned = m.agent(mu.mate[i]);
        // Raise the assigned partner above everything currently incomparable
        // to it. New pairs all start at `assigned`, so the closure stays
        // acyclic: a cycle would need a pre-existing path back into
        // `assigned`, contradicting the incomparability.
        std::vector<std::pair<AgentId, AgentId>> pairs = po.strict_pairs();
        for (AgentId alt : po.ground())
            if (po.compare(assigned, alt) == Cmp::Incomparable) pairs.emplace_back(assigned, alt);
        PartialOrder raised = PartialOrder::build(po.ground(), pairs);
        // Lexicographically first extension keeps the result deterministic.
        profile.orders.push_back(linear_extensions(raised).front());
    }
    return profile;
}

std::vector<CompletionProfile> all_completions(const Market& m, long long cap) {
    std::vector<std::vector<TotalOrder>> per_agent;
    per_agent.reserve(m.size());
    long long total = 1;
    for (int i = 0; i < m.size(); ++i) {
        per_agent.push_back(linear_extensions(m.pref_dense(i)));
        total *= static_cast<long long>(per_agent.back().size());
        if (total > cap) throw CapExceeded("completion profiles", total, cap);
    }
    std::vector<CompletionProfile> out;
    out.reserve(static_cast<size_t>(total));
    CompletionProfile current;
    current.orders.resize(m.size());
    // Odometer over the per-agent extension lists.
    std::vector<size_t> pick(m.size(), 0);
    for (;;) {
        for (int i = 0; i < m.size(); ++i) current.orders[i] = per_agent[i][pick[i]];
        out.push_back(current);
        int pos = m.size() - 1;
        while (pos >= 0 && ++pick[pos] == per_agent[pos].size()) pick[pos--] = 0;
        if (pos < 0) break;
    }
    return out;
}

Matching deferred_acceptance(const Market& m, const CompletionProfile& profile, Side proposing) {
    require_extension(m, profile);
    const int n = m.size();
    std::vector<int> proposers, receivers;
    for (int i = 0; i < n; ++i)
        (m.agent(i).side == proposing ? proposers : receivers).push_back(i);

    Matching mu;
    mu.mate.resize(n);
    for (int i = 0; i < n; ++i) mu.mate[i] = i;

    // next_choice[p] walks down p's ranking; a proposer stops for good once
    // the walk reaches self.
    std::vector<size_t> next_choice(n, 0);
    std::vector<char> done(n, 0);
    for (;;) {
        int p = -1;
        for (int cand : proposers)
            if (!done[cand] && mu.single(cand)) {
                p = cand;
                break;
            }
        if (p < 0) break;
        const TotalOrder& order = profile.orders[p];
        AgentId self = m.agent(p);
        AgentId target = order.ranking[next_choice[p]++];
        if (target == self) {
            done[p] = 1;
            continue;
        }
        int r = m.dense(target);
        const TotalOrder& r_order = profile.orders[r];
        AgentId holder = m.agent(mu.mate[r]);  // self when unmatched
        if (r_order.prefers(m.agent(p), holder)) {
            if (mu.mate[r] != r) {
                int old = mu.mate[r];
                mu.mate[old] = old;
            }
            mu.mate[p] = r;
            mu.mate[r] = p;
        }
    }
    return mu;
}

}  // namespace matchcore
