#include "matchcore/dominance.hpp"

namespace matchcore {

std::vector<AgentId> Coalition::members(const Market& m) const {
    std::vector<AgentId> out;
    for (int i = 0; i < m.size(); ++i)
        if (contains(i)) out.push_back(m.agent(i));
    return out;
}

bool can_enforce(const Matching& from, const Matching& to, const Coalition& s) {
    if (from.size() != to.size()) throw MarketMismatch();
    for (int i = 0; i < to.size(); ++i) {
        int target = to.mate[i];
        if (target != from.mate[i] && target != i) {
            if (!s.contains(i) || !s.contains(target)) return false;
        }
        if (target == i && from.mate[i] != i) {
            if (!s.contains(i) && !s.contains(from.mate[i])) return false;
        }
    }
    return true;
}

bool succ_s(const Market& m, const Matching& a, const Matching& b, const Coalition& s) {
    if (a.size() != m.size() || b.size() != m.size()) throw MarketMismatch();
    // a(S) and b(S) must be the same set of agents.
    std::uint64_t image_a = 0, image_b = 0;
    for (int i = 0; i < m.size(); ++i) {
        if (!s.contains(i)) continue;
        image_a |= std::uint64_t{1} << a.mate[i];
        image_b |= std::uint64_t{1} << b.mate[i];
    }
    if (image_a != image_b) return false;

    bool someone_better = false;
    for (int i = 0; i < m.size(); ++i) {
        if (!s.contains(i)) continue;
        Cmp c = m.pref_dense(i).compare(m.agent(a.mate[i]), m.agent(b.mate[i]));
        if (c == Cmp::Worse) return false;
        if (c == Cmp::Better) someone_better = true;
    }
    return someone_better;
}

namespace {

std::optional<Coalition> first_witness(const Market& m, const Matching& a, const Matching& b,
                                       const std::vector<int>& pool) {
    const int k = static_cast<int>(pool.size());
    if (k == 0 || k > 63) return std::nullopt;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << k); ++bits) {
        Coalition s;
        for (int p = 0; p < k; ++p)
            if ((bits >> p) & 1u) s.mask |= std::uint64_t{1} << pool[p];
        if (can_enforce(b, a, s) && succ_s(m, a, b, s)) return s;
    }
    return std::nullopt;
}

}  // namespace

std::optional<Coalition> dominates(const Market& m, const Matching& a, const Matching& b) {
    return first_witness(m, a, b, affected_agents(a, b));
}

std::optional<Coalition> dominates_exhaustive(const Market& m, const Matching& a,
                                              const Matching& b) {
    std::vector<int> everyone(m.size());
    for (int i = 0; i < m.size(); ++i) everyone[i] = i;
    return first_witness(m, a, b, everyone);
}

std::vector<std::pair<int, int>> DominanceGraph::strict_edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j)
            if (strict(i, j)) out.emplace_back(i, j);
    return out;
}

DominanceGraph dominance_graph(const Market& m, MatchingSet domain) {
    if (static_cast<int>(domain.size()) > kDominanceDomainCap)
        throw CapExceeded("dominance domain", static_cast<long long>(domain.size()),
                          kDominanceDomainCap);
    DominanceGraph g;
    g.domain = std::move(domain);
    const int n = g.size();
    g.edge.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (auto s = dominates(m, g.domain[i], g.domain[j])) {
                g.edge[i][j] = 1;
                g.witness[{i, j}] = *s;
            }
        }
    }
    return g;
}

std::vector<int> top_cycle(const DominanceGraph& g) {
    const int n = g.size();
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) reach[i][j] = g.edge[i][j];
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (reach[i][k])
                for (int j = 0; j < n; ++j)
                    if (reach[k][j]) reach[i][j] = 1;
    // Maximal under the asymmetric part of the closure.
    std::vector<int> out;
    for (int x = 0; x < n; ++x) {
        bool beaten = false;
        for (int y = 0; y < n && !beaten; ++y)
            if (reach[y][x] && !reach[x][y]) beaten = true;
        if (!beaten) out.push_back(x);
    }
    return out;
}

}  // namespace matchcore
