#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "hnsw/neighbor.hpp"

namespace hnsw {

/// Which neighbor-selection rule connects new elements and shrinks over-full
/// adjacency lists.
enum class Selector { Simple, Heuristic };

inline const char* to_string(Selector s) {
    return s == Selector::Simple ? "simple" : "heuristic";
}

/// Keep the min(m, |candidates|) closest candidates, ties to the smaller id.
/// Returned nearest first.
inline std::vector<Neighbor> select_neighbors_simple(std::vector<Neighbor> candidates,
                                                     std::size_t m) {
    std::sort(candidates.begin(), candidates.end(), CloserFirst{});
    if (candidates.size() > m) candidates.resize(m);
    return candidates;
}

/// Diversity-pruning selection. Candidates are examined nearest-first; a
/// candidate is kept only if it is strictly closer to the base element than
/// to every neighbor already kept, which favours connections in distinct
/// directions and preserves links between clusters. With `keep_pruned`,
/// discarded candidates back-fill the result nearest-first up to m.
///
/// `candidates` carry distances to the base element; `dist_between(a, b)`
/// must return the distance between two candidate ids under the same metric.
/// First-pass picks come first in the returned list, in admission order.
template <typename DistBetween>
std::vector<Neighbor> select_neighbors_heuristic(std::vector<Neighbor> candidates, std::size_t m,
                                                 bool keep_pruned, DistBetween&& dist_between) {
    std::sort(candidates.begin(), candidates.end(), CloserFirst{});

    std::vector<Neighbor> result;
    std::vector<Neighbor> discarded;
    for (const Neighbor& e : candidates) {
        if (result.size() >= m) break;
        bool dominated = false;
        for (const Neighbor& r : result) {
            if (dist_between(e.id, r.id) <= e.dist) {
                dominated = true;
                break;
            }
        }
        if (dominated) {
            discarded.push_back(e);
        } else {
            result.push_back(e);
        }
    }
    if (keep_pruned) {
        // discarded is already nearest-first.
        for (const Neighbor& e : discarded) {
            if (result.size() >= m) break;
            result.push_back(e);
        }
    }
    return result;
}

}  // namespace hnsw
