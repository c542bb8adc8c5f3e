#include "matchcore/market.hpp"

#include <cstdlib>

namespace matchcore {

Market::Market(int num_men, int num_women) {
    men_.reserve(num_men);
    women_.reserve(num_women);
    for (int i = 1; i <= num_men; ++i) men_.push_back({Side::Man, i});
    for (int i = 1; i <= num_women; ++i) women_.push_back({Side::Woman, i});
    prefs_.reserve(size());
    for (int i = 0; i < size(); ++i)
        prefs_.push_back(PartialOrder::build(ground_for(agent(i)), {}));
}

int Market::dense(AgentId a) const {
    int side_size = a.side == Side::Man ? num_men() : num_women();
    if (a.index < 1 || a.index > side_size) throw UnknownAlternative(to_string(a));
    return a.side == Side::Man ? a.index - 1 : num_men() + a.index - 1;
}

AgentId Market::agent(int dense_idx) const {
    if (dense_idx < 0 || dense_idx >= size()) throw UnknownAlternative("#" + std::to_string(dense_idx));
    return dense_idx < num_men() ? men_[dense_idx] : women_[dense_idx - num_men()];
}

std::vector<AgentId> Market::ground_for(AgentId a) const {
    std::vector<AgentId> g = a.side == Side::Man ? women_ : men_;
    g.push_back(a);
    return g;
}

void Market::set_pref(AgentId a, PartialOrder po) {
    if (po.ground() != ground_for(a)) throw GroundSetMismatch();
    prefs_[dense(a)] = std::move(po);
}

void Market::declare_pref(AgentId a, const std::vector<std::pair<AgentId, AgentId>>& declared) {
    prefs_[dense(a)] = PartialOrder::build(ground_for(a), declared);
}

std::string pair_list(const Market& m, const Matching& mu) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < m.num_men(); ++i) {
        if (mu.single(i)) continue;
        if (!first) out += ",";
        first = false;
        out += "(" + to_string(m.agent(i)) + "," + to_string(m.agent(mu.mate[i])) + ")";
    }
    return out + "}";
}

Matching make_matching(const Market& m, const std::vector<std::pair<int, int>>& man_woman_pairs) {
    Matching mu;
    mu.mate.resize(m.size());
    for (int i = 0; i < m.size(); ++i) mu.mate[i] = i;
    for (const auto& [mi, wi] : man_woman_pairs) {
        if (mi < 1 || mi > m.num_men() || wi < 1 || wi > m.num_women())
            throw DomainError("matching pair (" + std::to_string(mi) + "," + std::to_string(wi) +
                              ") is out of range");
        const int man = m.dense(AgentId{Side::Man, mi});
        const int woman = m.dense(AgentId{Side::Woman, wi});
        if (mu.mate[man] != man || mu.mate[woman] != woman)
            throw DomainError("agent matched twice in (" + std::to_string(mi) + "," +
                              std::to_string(wi) + ")");
        mu.mate[man] = woman;
        mu.mate[woman] = man;
    }
    return mu;
}

int enumeration_agent_cap() {
    static const int cap = [] {
        if (const char* env = std::getenv("MATCHCORE_CAP")) {
            int v = std::atoi(env);
            if (v > 0) return v;
        }
        return kDefaultAgentCap;
    }();
    return cap;
}

namespace {

void enumerate_rec(const Market& m, int man, std::vector<int>& mate, MatchingSet& out) {
    if (man == m.num_men()) {
        out.push_back(Matching{mate});
        return;
    }
    // Women in roster order first, then self: exactly the canonical
    // partner order (self sorts last).
    for (int w = m.num_men(); w < m.size(); ++w) {
        if (mate[w] != w) continue;  // taken
        mate[man] = w;
        mate[w] = man;
        enumerate_rec(m, man + 1, mate, out);
        mate[man] = man;
        mate[w] = w;
    }
    enumerate_rec(m, man + 1, mate, out);
}

}  // namespace

MatchingSet enumerate_matchings(const Market& m, std::optional<int> cap) {
    int limit = cap.value_or(enumeration_agent_cap());
    if (m.size() > limit) throw CapExceeded("market agents", m.size(), limit);
    std::vector<int> mate(m.size());
    for (int i = 0; i < m.size(); ++i) mate[i] = i;
    MatchingSet out;
    out.reserve(static_cast<size_t>(matching_count(m.num_men(), m.num_women())));
    enumerate_rec(m, 0, mate, out);
    return out;
}

long long matching_count(int num_men, int num_women) {
    int k_max = num_men < num_women ? num_men : num_women;
    long long total = 0;
    for (int k = 0; k <= k_max; ++k) {
        // C(num_men,k) * C(num_women,k) * k!
        long long c1 = 1, c2 = 1, f = 1;
        for (int i = 0; i < k; ++i) {
            c1 = c1 * (num_men - i) / (i + 1);
            c2 = c2 * (num_women - i) / (i + 1);
            f *= i + 1;
        }
        total += c1 * c2 * f;
    }
    return total;
}

std::vector<int> affected_agents(const Matching& a, const Matching& b) {
    if (a.size() != b.size()) throw MarketMismatch();
    std::vector<int> out;
    for (int i = 0; i < a.size(); ++i)
        if (a.mate[i] != b.mate[i]) out.push_back(i);
    return out;
}

std::uint64_t affected_mask(const Matching& a, const Matching& b) {
    if (a.size() != b.size()) throw MarketMismatch();
    std::uint64_t mask = 0;
    for (int i = 0; i < a.size(); ++i)
        if (a.mate[i] != b.mate[i]) mask |= std::uint64_t{1} << i;
    return mask;
}

bool is_valid_matching(const Market& m, const Matching& mu) {
    if (mu.size() != m.size()) return false;
    for (int i = 0; i < m.size(); ++i) {
        int j = mu.mate[i];
        if (j < 0 || j >= m.size()) return false;
        if (mu.mate[j] != i) return false;
        if (j != i && m.agent(i).side == m.agent(j).side) return false;
    }
    return true;
}

}  // namespace matchcore
