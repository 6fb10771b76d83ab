#pragma once

#include <cstdint>

namespace hnsw {

/// Dense element id, assigned in insertion order starting at 0.
using NodeId = std::uint32_t;

/// (element id, distance to a reference point). The currency of every
/// candidate queue, result list and ground-truth entry.
struct Neighbor {
    NodeId id{0};
    double dist{0.0};

    friend bool operator==(const Neighbor& a, const Neighbor& b) {
        return a.id == b.id && a.dist == b.dist;
    }
};

// Equal-distance orderings resolve by smaller id, everywhere. Builds and
// searches stay deterministic under distance ties.
inline bool closer(const Neighbor& a, const Neighbor& b) {
    if (a.dist != b.dist) return a.dist < b.dist;
    return a.id < b.id;
}

inline bool further(const Neighbor& a, const Neighbor& b) { return closer(b, a); }

/// Orders nearest first; as a priority_queue comparator yields a max-queue
/// whose top is the furthest element.
struct CloserFirst {
    bool operator()(const Neighbor& a, const Neighbor& b) const { return closer(a, b); }
};

/// Orders furthest first; as a priority_queue comparator yields a min-queue
/// whose top is the closest element.
struct FurtherFirst {
    bool operator()(const Neighbor& a, const Neighbor& b) const { return further(a, b); }
};

}  // namespace hnsw
