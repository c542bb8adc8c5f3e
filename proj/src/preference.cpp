#include "matchcore/preference.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace matchcore {

namespace {

// Reconstruct one directed cycle among the declared pairs for the error
// witness. Called only when the closure has put some element above itself.
std::vector<std::string> find_cycle(const std::vector<AgentId>& ground,
                                    const std::vector<std::vector<int>>& next, int start) {
    std::vector<std::string> names;
    std::vector<int> path{start};
    std::vector<char> on_path(ground.size(), 0);
    on_path[start] = 1;
    // Depth-first walk until we revisit `start`; a cycle through `start`
    // exists by assumption, so the walk terminates.
    struct Frame {
        int node;
        size_t edge;
    };
    std::vector<Frame> stack{{start, 0}};
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.edge < next[f.node].size()) {
            int to = next[f.node][f.edge++];
            if (to == start) {
                for (int v : path) names.push_back(to_string(ground[v]));
                names.push_back(to_string(ground[start]));
                return names;
            }
            if (!on_path[to]) {
                on_path[to] = 1;
                path.push_back(to);
                stack.push_back({to, 0});
            }
        } else {
            on_path[f.node] = 0;
            path.pop_back();
            stack.pop_back();
        }
    }
    return {to_string(ground[start]), to_string(ground[start])};
}

}  // namespace

PartialOrder PartialOrder::build(std::vector<AgentId> ground,
                                 const std::vector<std::pair<AgentId, AgentId>>& declared) {
    PartialOrder po;
    po.ground_ = std::move(ground);
    const int n = po.size();
    if (n > 64) throw CapExceeded("ground set", n, 64);
    po.rows_.assign(n, 0);

    std::vector<std::vector<int>> next(n);
    for (const auto& [a, b] : declared) {
        int ia = po.index_of(a);  // throws UnknownAlternative
        int ib = po.index_of(b);
        po.rows_[ia] |= (std::uint64_t{1} << ib);
        next[ia].push_back(ib);
    }

    // Warshall closure over the bitmask rows.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if ((po.rows_[i] >> k) & 1u) po.rows_[i] |= po.rows_[k];

    for (int i = 0; i < n; ++i)
        if ((po.rows_[i] >> i) & 1u) throw CycleError(find_cycle(po.ground_, next, i));

    return po;
}

bool PartialOrder::contains(AgentId a) const {
    return std::find(ground_.begin(), ground_.end(), a) != ground_.end();
}

int PartialOrder::index_of(AgentId a) const {
    auto it = std::find(ground_.begin(), ground_.end(), a);
    if (it == ground_.end()) throw UnknownAlternative(to_string(a));
    return static_cast<int>(it - ground_.begin());
}

Cmp PartialOrder::compare(AgentId a, AgentId b) const {
    return compare_idx(index_of(a), index_of(b));
}

Cmp PartialOrder::compare_idx(int a, int b) const {
    if (a == b) return Cmp::Equal;
    if (better_idx(a, b)) return Cmp::Better;
    if (better_idx(b, a)) return Cmp::Worse;
    return Cmp::Incomparable;
}

std::vector<std::pair<AgentId, AgentId>> PartialOrder::strict_pairs() const {
    std::vector<std::pair<AgentId, AgentId>> out;
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b)
            if (better_idx(a, b)) out.emplace_back(ground_[a], ground_[b]);
    return out;
}

std::vector<std::pair<AgentId, AgentId>> PartialOrder::hasse_pairs() const {
    // (a,b) is in the reduction iff a > b and no c has a > c > b.
    std::vector<std::pair<AgentId, AgentId>> out;
    for (int a = 0; a < size(); ++a) {
        for (int b = 0; b < size(); ++b) {
            if (!better_idx(a, b)) continue;
            bool direct = true;
            for (int c = 0; c < size() && direct; ++c)
                if (better_idx(a, c) && better_idx(c, b)) direct = false;
            if (direct) out.emplace_back(ground_[a], ground_[b]);
        }
    }
    return out;
}

int PartialOrder::pair_count() const {
    int total = 0;
    for (auto row : rows_) total += std::popcount(row);
    return total;
}

bool TotalOrder::prefers(AgentId a, AgentId b) const {
    return rank_of(a) < rank_of(b);
}

int TotalOrder::rank_of(AgentId a) const {
    auto it = std::find(ranking.begin(), ranking.end(), a);
    if (it == ranking.end()) throw UnknownAlternative(to_string(a));
    return static_cast<int>(it - ranking.begin());
}

PartialOrder TotalOrder::as_partial_order(const PartialOrder& like) const {
    std::vector<std::pair<AgentId, AgentId>> pairs;
    for (size_t i = 0; i < ranking.size(); ++i)
        for (size_t j = i + 1; j < ranking.size(); ++j)
            pairs.emplace_back(ranking[i], ranking[j]);
    return PartialOrder::build(like.ground(), pairs);
}

std::vector<TotalOrder> linear_extensions(const PartialOrder& po, int cap) {
    const int n = po.size();
    if (n > cap) throw CapExceeded("completion ground set", n, cap);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<TotalOrder> out;
    do {
        // perm lists ground indices best-first; it extends po iff no strict
        // pair is reversed, i.e. nothing later in perm beats something earlier.
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if (po.better_idx(perm[j], perm[i])) ok = false;
        if (ok) {
            TotalOrder t;
            t.ranking.reserve(n);
            for (int idx : perm) t.ranking.push_back(po.ground()[idx]);
            out.push_back(std::move(t));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

bool is_more_complete(const PartialOrder& po1, const PartialOrder& po2) {
    if (po1.ground() != po2.ground()) throw GroundSetMismatch();
    for (int a = 0; a < po2.size(); ++a)
        for (int b = 0; b < po2.size(); ++b)
            if (po2.better_idx(a, b) && !po1.better_idx(a, b)) return false;
    return true;
}

}  // namespace matchcore
