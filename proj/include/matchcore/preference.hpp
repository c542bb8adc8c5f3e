#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "matchcore/error.hpp"

namespace matchcore {

enum class Side { Man, Woman };

inline Side opposite(Side s) { return s == Side::Man ? Side::Woman : Side::Man; }

// One agent. Display names are deterministic: m1, m2, ... / w1, w2, ...
struct AgentId {
    Side side{Side::Man};
    int index{1};  // 1-based within the side

    friend auto operator<=>(const AgentId&, const AgentId&) = default;
};

inline std::string to_string(AgentId a) {
    return (a.side == Side::Man ? "m" : "w") + std::to_string(a.index);
}

enum class Cmp { Better, Worse, Equal, Incomparable };

// One agent's preference over the opposite side plus themselves: a strict
// partial order (the reflexive part is implicit). Stored as the transitive
// closure of the declared pairs over a fixed ground-set order; rows are
// bitmasks, so ground sets are limited to 64 alternatives (far above any
// market this library enumerates).
class PartialOrder {
public:
    PartialOrder() = default;

    // Closes `declared` transitively. Throws CycleError if the closure would
    // violate antisymmetry, UnknownAlternative if a pair leaves `ground`.
    static PartialOrder build(std::vector<AgentId> ground,
                              const std::vector<std::pair<AgentId, AgentId>>& declared);

    int size() const { return static_cast<int>(ground_.size()); }
    const std::vector<AgentId>& ground() const { return ground_; }

    bool contains(AgentId a) const;
    int index_of(AgentId a) const;  // throws UnknownAlternative

    Cmp compare(AgentId a, AgentId b) const;
    bool strictly_prefers(AgentId a, AgentId b) const { return compare(a, b) == Cmp::Better; }

    // Index-level access used by the hot inner loops.
    bool better_idx(int a, int b) const { return (rows_[a] >> b) & 1u; }
    Cmp compare_idx(int a, int b) const;

    // All strict pairs (closed), sorted by (ground index of left, of right).
    std::vector<std::pair<AgentId, AgentId>> strict_pairs() const;
    // Transitive reduction of the strict pairs (the minimal generating set),
    // same sort order. This is what the canonical serializer prints.
    std::vector<std::pair<AgentId, AgentId>> hasse_pairs() const;

    int pair_count() const;

    friend bool operator==(const PartialOrder& x, const PartialOrder& y) {
        return x.ground_ == y.ground_ && x.rows_ == y.rows_;
    }

private:
    std::vector<AgentId> ground_;
    std::vector<std::uint64_t> rows_;  // rows_[a] bit b set <=> ground_[a] > ground_[b]
};

// A completion: permutation of a ground set, best first.
struct TotalOrder {
    std::vector<AgentId> ranking;

    bool prefers(AgentId a, AgentId b) const;  // strict: a ranked above b
    int rank_of(AgentId a) const;              // 0 = best; throws UnknownAlternative

    // View the completion as a (fully ordered) PartialOrder over the same
    // ground set as `like`, i.e. with `like`'s ground-set order.
    PartialOrder as_partial_order(const PartialOrder& like) const;
};

inline constexpr int kCompletionGroundCap = 8;

// All total orders whose strict part contains po's strict pairs, in
// lexicographic order of the ranking sequences (by ground index).
// Throws CapExceeded when the ground set is larger than `cap`.
std::vector<TotalOrder> linear_extensions(const PartialOrder& po, int cap = kCompletionGroundCap);

// true iff po1's strict pairs are a superset of po2's (same ground set).
bool is_more_complete(const PartialOrder& po1, const PartialOrder& po2);

}  // namespace matchcore
