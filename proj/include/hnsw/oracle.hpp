#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "hnsw/dataset.hpp"
#include "hnsw/distance.hpp"
#include "hnsw/neighbor.hpp"

namespace hnsw {

/// Per-query exact nearest-neighbor lists, sorted ascending by distance
/// (ties by id), each of length min(k, dataset size).
struct GroundTruth {
    std::size_t k = 0;
    std::vector<std::vector<Neighbor>> lists;

    std::vector<std::vector<NodeId>> id_lists() const {
        std::vector<std::vector<NodeId>> out(lists.size());
        for (std::size_t i = 0; i < lists.size(); ++i) {
            out[i].reserve(lists[i].size());
            for (const Neighbor& nb : lists[i]) out[i].push_back(nb.id);
        }
        return out;
    }
};

/// Exact k nearest by full scan. Distance sums accumulate in 64 bits,
/// identically to the index, so both sides rank identically.
inline std::vector<Neighbor> brute_force_knn(const Dataset& data, const Metric& metric,
                                             std::span<const float> q, std::size_t k) {
    if (data.empty()) throw std::invalid_argument("brute_force_knn: empty dataset");
    if (q.size() != data.dim()) {
        throw std::invalid_argument("brute_force_knn: query dimension mismatch");
    }
    std::vector<Neighbor> all(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        all[i] = {static_cast<NodeId>(i), metric(q, data[i])};
    }
    const std::size_t keep = std::min(k, all.size());
    std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(keep), all.end(),
                      CloserFirst{});
    all.resize(keep);
    return all;
}

inline std::vector<Neighbor> brute_force_knn(const Dataset& data, std::span<const float> q,
                                             std::size_t k) {
    return brute_force_knn(data, Metric::of(data.kind()), q, k);
}

inline GroundTruth exact_ground_truth(const Dataset& data, const Metric& metric,
                                      const Dataset& queries, std::size_t k) {
    GroundTruth gt;
    gt.k = k;
    gt.lists.reserve(queries.size());
    for (std::size_t i = 0; i < queries.size(); ++i) {
        gt.lists.push_back(brute_force_knn(data, metric, queries[i], k));
    }
    return gt;
}

/// Fraction of the true K nearest present in `found`: |found ∩ truth| / K
/// with K = |truth|. Membership only; order never matters.
inline double recall(std::span<const NodeId> found, std::span<const NodeId> truth) {
    if (truth.empty()) throw std::invalid_argument("recall: empty truth list");
    if (found.size() > truth.size()) {
        throw std::invalid_argument("recall: found list longer than truth list");
    }
    std::size_t hits = 0;
    for (const NodeId f : found) {
        if (std::find(truth.begin(), truth.end(), f) != truth.end()) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(truth.size());
}

/// Tie-tolerant scoring: an element whose distance equals the K-th true
/// distance counts as correct even when the id tie-break kept it out of the
/// truth list. Both sides must compute distances with the same kernels so
/// equal distances compare bit-equal.
inline double recall_tie_tolerant(std::span<const Neighbor> found,
                                  std::span<const NodeId> truth_ids, double kth_true_dist) {
    if (truth_ids.empty()) throw std::invalid_argument("recall: empty truth list");
    if (found.size() > truth_ids.size()) {
        throw std::invalid_argument("recall: found list longer than truth list");
    }
    std::size_t hits = 0;
    for (const Neighbor& f : found) {
        const bool member =
            std::find(truth_ids.begin(), truth_ids.end(), f.id) != truth_ids.end();
        if (member || f.dist == kth_true_dist) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(truth_ids.size());
}

inline double recall_tie_tolerant(std::span<const Neighbor> found,
                                  std::span<const Neighbor> truth) {
    if (truth.empty()) throw std::invalid_argument("recall: empty truth list");
    std::vector<NodeId> ids;
    ids.reserve(truth.size());
    for (const Neighbor& t : truth) ids.push_back(t.id);
    return recall_tie_tolerant(found, ids, truth.back().dist);
}

}  // namespace hnsw
