#include "matchcore/solutions.hpp"

#include <algorithm>

namespace matchcore {

bool miller_covers(const DominanceGraph& g, int a, int b) {
    const int n = g.size();
    if (a < 0 || b < 0 || a >= n || b >= n) throw DomainError("matching outside graph domain");
    if (!g.strict(a, b)) return false;
    for (int c = 0; c < n; ++c)
        if (g.strict(b, c) && !g.strict(a, c)) return false;
    return true;
}

std::vector<std::pair<int, int>> CoveringRelation::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j)
            if (pairs[i][j]) out.emplace_back(i, j);
    return out;
}

CoveringRelation covering_relation(const DominanceGraph& g) {
    const int n = g.size();
    CoveringRelation c;
    c.pairs.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && miller_covers(g, i, j)) c.pairs[i][j] = 1;
    return c;
}

bool covering_is_antisymmetric_and_transitive(const CoveringRelation& c) {
    const int n = c.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i != j && c.covers(i, j) && c.covers(j, i)) return false;
            for (int k = 0; k < n; ++k)
                if (c.covers(i, j) && c.covers(j, k) && !c.covers(i, k)) return false;
        }
    return true;
}

std::vector<int> uncovered(const DominanceGraph& g) {
    CoveringRelation c = covering_relation(g);
    std::vector<int> out;
    for (int j = 0; j < g.size(); ++j) {
        bool covered = false;
        for (int i = 0; i < g.size() && !covered; ++i)
            if (c.covers(i, j)) covered = true;
        if (!covered) out.push_back(j);
    }
    return out;
}

MatchingSet compromise_core(const Market& m) {
    DominanceGraph g = dominance_graph(m, weak_core(m));
    MatchingSet out;
    for (int idx : uncovered(g)) out.push_back(g.domain[idx]);
    return out;
}

std::vector<int> compromise_of(const DominanceGraph& g, const std::vector<int>& t) {
    std::vector<int> out;
    for (int b : t) {
        bool covered = false;
        for (int a : t) {
            if (a == b || !g.strict(a, b)) continue;
            bool all = true;
            for (int c : t)
                if (g.strict(b, c) && !g.strict(a, c)) {
                    all = false;
                    break;
                }
            if (all) {
                covered = true;
                break;
            }
        }
        if (!covered) out.push_back(b);
    }
    return out;
}

bool fisher_covers(const DominanceGraph& g, int a, int b) {
    const int n = g.size();
    if (a < 0 || b < 0 || a >= n || b >= n) throw DomainError("matching outside graph domain");
    if (!g.strict(a, b)) return false;
    for (int c = 0; c < n; ++c)
        if (g.strict(c, a) && !g.strict(c, b)) return false;
    return true;
}

std::vector<int> fisher_uncovered(const DominanceGraph& g) {
    std::vector<int> out;
    for (int j = 0; j < g.size(); ++j) {
        bool covered = false;
        for (int i = 0; i < g.size() && !covered; ++i)
            if (i != j && fisher_covers(g, i, j)) covered = true;
        if (!covered) out.push_back(j);
    }
    return out;
}

bool side_prefers(const Market& m, const Matching& a, const Matching& b, Side side) {
    if (a.size() != m.size() || b.size() != m.size()) throw MarketMismatch();
    bool someone_better = false;
    for (int i = 0; i < m.size(); ++i) {
        if (m.agent(i).side != side) continue;
        Cmp c = m.pref_dense(i).compare(m.agent(a.mate[i]), m.agent(b.mate[i]));
        if (c == Cmp::Worse) return false;
        if (c == Cmp::Better) someone_better = true;
    }
    return someone_better;
}

MatchingSet side_optimal_core(const Market& m, Side side, SideOptOptions opts) {
    MatchingSet w = weak_core(m);
    DominanceGraph g = dominance_graph(m, w);
    std::vector<int> c_idx = uncovered(g);
    const MatchingSet& domain = g.domain;

    std::vector<int> quant = c_idx;
    if (opts.quantify_over_weak_core) {
        quant.resize(domain.size());
        for (size_t i = 0; i < domain.size(); ++i) quant[i] = static_cast<int>(i);
    }

    auto sp = [&](int x, int y) { return side_prefers(m, domain[x], domain[y], side); };
    // a side-covers b iff a >_side b and everything b side-beats, a side-beats.
    auto side_covers = [&](int a, int b) {
        if (!sp(a, b)) return false;
        for (int c : quant)
            if (sp(b, c) && !sp(a, c)) return false;
        return true;
    };

    MatchingSet out;
    for (int b : c_idx) {
        bool covered = false;
        for (int a : c_idx)
            if (a != b && side_covers(a, b)) {
                covered = true;
                break;
            }
        if (!covered) out.push_back(domain[b]);
    }
    return out;
}

namespace {

std::vector<std::vector<int>> collect_stable_sets(const DominanceGraph& g,
                                                  std::uint64_t seed_mask,
                                                  const std::vector<int>& free_members) {
    const int n = g.size();
    const int k = static_cast<int>(free_members.size());
    std::vector<std::vector<int>> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
        std::uint64_t mask = seed_mask;
        for (int p = 0; p < k; ++p)
            if ((bits >> p) & 1u) mask |= std::uint64_t{1} << free_members[p];
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            bool inside = (mask >> i) & 1u;
            if (inside) {
                for (int j = 0; j < n && ok; ++j)
                    if (((mask >> j) & 1u) && g.strict(i, j)) ok = false;  // internal
            } else {
                bool dominated = false;
                for (int j = 0; j < n && !dominated; ++j)
                    if (((mask >> j) & 1u) && g.strict(j, i)) dominated = true;  // external
                if (!dominated) ok = false;
            }
        }
        if (ok) {
            std::vector<int> members;
            for (int i = 0; i < n; ++i)
                if ((mask >> i) & 1u) members.push_back(i);
            out.push_back(std::move(members));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<std::vector<int>> vnm_stable_sets(const DominanceGraph& g, int cap) {
    const int n = g.size();
    if (n > cap) throw CapExceeded("vNM domain", n, cap);
    // Strictly-undominated members belong to every stable set: were one left
    // out, external stability could not reach it.
    std::uint64_t seed = 0;
    std::vector<int> free_members;
    for (int i = 0; i < n; ++i) {
        bool dominated = false;
        for (int j = 0; j < n && !dominated; ++j)
            if (g.strict(j, i)) dominated = true;
        if (!dominated) seed |= std::uint64_t{1} << i;
        else free_members.push_back(i);
    }
    return collect_stable_sets(g, seed, free_members);
}

std::vector<std::vector<int>> vnm_stable_sets_exhaustive(const DominanceGraph& g, int cap) {
    const int n = g.size();
    if (n > cap) throw CapExceeded("vNM domain", n, cap);
    std::vector<int> everyone(n);
    for (int i = 0; i < n; ++i) everyone[i] = i;
    return collect_stable_sets(g, 0, everyone);
}

ExternalStabilityReport check_external_stability(const std::vector<int>& core,
                                                 const DominanceGraph& g) {
    for (int i : core)
        if (i < 0 || i >= g.size()) throw DomainError("core member outside graph domain");
    ExternalStabilityReport report;
    std::vector<char> in_core(g.size(), 0);
    for (int i : core) in_core[i] = 1;
    for (int outside = 0; outside < g.size(); ++outside) {
        if (in_core[outside]) continue;
        int dominator = -1;
        for (int i : core)
            if (g.strict(i, outside)) {
                dominator = i;
                break;
            }
        if (dominator < 0) {
            report.holds = false;
            report.violator = outside;
            return report;
        }
        report.dominated_by.emplace_back(outside, dominator);
    }
    return report;
}

}  // namespace matchcore
