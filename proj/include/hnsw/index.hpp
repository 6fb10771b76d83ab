#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <queue>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hnsw/distance.hpp"
#include "hnsw/neighbor.hpp"
#include "hnsw/select.hpp"

namespace hnsw {

/// Hard ceiling on sampled levels. The sampling formula is unbounded as the
/// uniform draw approaches 0; the clamp bounds layer allocations at
/// negligible probability cost.
inline constexpr int kMaxLevel = 31;

/// Construction knobs. `m_max`, `m_max0` and `level_mult` default to m,
/// 2*m and 1/ln(m) respectively when left unset.
struct IndexParams {
    std::uint32_t m = 16;                    ///< links added per element per layer
    std::optional<std::uint32_t> m_max;      ///< degree cap, layers > 0
    std::optional<std::uint32_t> m_max0;     ///< degree cap, layer 0
    std::uint32_t ef_construction = 200;     ///< beam width during build
    std::optional<double> level_mult;        ///< level-distribution scale
    Selector selector = Selector::Heuristic;
    bool extend_candidates = false;
    bool keep_pruned_connections = true;
    std::uint64_t seed = 0;

    /// Copy with every optional knob resolved to its default.
    IndexParams resolved() const {
        IndexParams p = *this;
        if (!p.m_max) p.m_max = p.m;
        if (!p.m_max0) p.m_max0 = 2 * p.m;
        if (!p.level_mult) p.level_mult = default_level_mult(p.m);
        return p;
    }

    static double default_level_mult(std::uint32_t m) {
        return m > 1 ? 1.0 / std::log(static_cast<double>(m)) : 0.0;
    }
};

struct SearchParams {
    std::uint32_t k = 10;   ///< neighbors requested
    std::uint32_t ef = 10;  ///< beam width at layer 0; must be >= k
};

struct SearchStats {
    std::uint64_t distance_computations = 0;
};

struct LayerStats {
    std::size_t population = 0;
    std::size_t link_entries = 0;                ///< directed entries stored at this layer
    std::vector<std::size_t> degree_histogram;   ///< index = degree, value = node count
};

struct StatsReport {
    std::size_t size = 0;
    int max_layer = 0;
    int enter_point_level = -1;  ///< -1 when the index is empty
    std::size_t total_link_entries = 0;  ///< == 2 x number of undirected links
    double mean_level = 0.0;
    std::vector<LayerStats> layers;  ///< layers 0..max_layer
};

/// Level for a uniform draw u in (0,1): floor(-ln(u) * level_mult), clamped
/// to [0, kMaxLevel]. level_mult = 0 collapses the structure to one layer.
inline int level_from_uniform(double u, double level_mult) {
    const double raw = -std::log(u) * level_mult;
    if (!(raw < static_cast<double>(kMaxLevel + 1))) return kMaxLevel;  // also catches u -> 0
    const int level = static_cast<int>(raw);
    return level < 0 ? 0 : level;
}

/// One draw strictly inside (0,1): 53 mantissa bits offset by half an ulp,
/// so the log never blows up and exactly one engine value is consumed.
inline double draw_unit_open(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

/// Sample a node level. Consumes exactly one draw from the engine.
inline int generate_level(std::mt19937_64& rng, double level_mult) {
    return level_from_uniform(draw_unit_open(rng), level_mult);
}

namespace detail {

// Epoch-stamped visited marks, reusable across searches without re-zeroing.
class VisitedSet {
public:
    void prepare(std::size_t n) {
        if (stamps_.size() < n) stamps_.resize(n, 0);
        if (++epoch_ == 0) {
            std::fill(stamps_.begin(), stamps_.end(), std::uint16_t{0});
            epoch_ = 1;
        }
    }

    bool test_and_set(NodeId id) {
        if (stamps_[id] == epoch_) return true;
        stamps_[id] = epoch_;
        return false;
    }

private:
    std::vector<std::uint16_t> stamps_;
    std::uint16_t epoch_ = 0;
};

// Hands a VisitedSet to each in-flight search and takes it back on scope
// exit. Lets concurrent read-only searches share scratch without clearing
// O(n) memory per query.
class VisitedSetPool {
public:
    class Lease {
    public:
        Lease(VisitedSetPool* pool, std::unique_ptr<VisitedSet> set)
            : pool_(pool), set_(std::move(set)) {}
        Lease(Lease&&) = default;
        Lease(const Lease&) = delete;
        Lease& operator=(const Lease&) = delete;
        ~Lease() {
            if (set_) pool_->put(std::move(set_));
        }
        VisitedSet& operator*() { return *set_; }

    private:
        VisitedSetPool* pool_;
        std::unique_ptr<VisitedSet> set_;
    };

    Lease acquire(std::size_t n) {
        std::unique_ptr<VisitedSet> set;
        {
            std::lock_guard<std::mutex> lock(mu_);
            if (!idle_.empty()) {
                set = std::move(idle_.back());
                idle_.pop_back();
            }
        }
        if (!set) set = std::make_unique<VisitedSet>();
        set->prepare(n);
        return Lease(this, std::move(set));
    }

private:
    friend class Lease;
    void put(std::unique_ptr<VisitedSet> set) {
        std::lock_guard<std::mutex> lock(mu_);
        idle_.push_back(std::move(set));
    }

    std::mutex mu_;
    std::vector<std::unique_ptr<VisitedSet>> idle_;
};

}  // namespace detail

/// Layered navigable small-world graph over float vectors.
///
/// Every node occupies layers 0..level, with level sampled from an
/// exponentially decaying distribution. Insertion greedily descends the
/// upper layers, then connects the new element on every shared layer from a
/// beam-search candidate set; queries descend the same way and widen the
/// beam only on layer 0.
///
/// Concurrency: any number of knn_search calls may run against a quiescent
/// index; insert requires exclusive access.
class HnswIndex {
public:
    HnswIndex(std::size_t dim, Metric metric, IndexParams params)
        : dim_(dim),
          metric_(std::move(metric)),
          params_(params.resolved()),
          rng_(params_.seed),
          visited_pool_(std::make_unique<detail::VisitedSetPool>()) {
        if (dim_ == 0) throw std::invalid_argument("index dimension must be at least 1");
        validate_params(params_);
    }

    HnswIndex(HnswIndex&&) noexcept = default;
    HnswIndex& operator=(HnswIndex&&) noexcept = default;

    std::size_t size() const { return levels_.size(); }
    bool empty() const { return levels_.empty(); }
    std::size_t dim() const { return dim_; }
    const Metric& metric() const { return metric_; }
    DistanceKind kind() const { return metric_.kind(); }
    /// Fully resolved construction parameters.
    const IndexParams& params() const { return params_; }

    std::optional<NodeId> enter_point() const { return enter_point_; }
    int max_layer() const { return max_layer_; }
    int level_of(NodeId id) const { return levels_.at(id); }

    std::span<const float> vector_of(NodeId id) const {
        if (id >= size()) throw std::out_of_range("vector_of: no such node");
        return {elements_.data() + static_cast<std::size_t>(id) * dim_, dim_};
    }

    /// Layer-l adjacency list of a node. Asking above the node's level is
    /// an error: lists exist exactly for layers 0..level.
    std::span<const NodeId> neighbors(NodeId id, int layer) const {
        if (id >= size()) throw std::out_of_range("neighbors: no such node");
        if (layer < 0 || layer > levels_[id]) {
            throw std::out_of_range("neighbors: node does not occupy layer " +
                                    std::to_string(layer));
        }
        return links_[id][static_cast<std::size_t>(layer)];
    }

    std::uint32_t degree_cap(int layer) const {
        return layer == 0 ? *params_.m_max0 : *params_.m_max;
    }

    /// Insert one element and wire it into every layer up to its sampled
    /// level. Returns the new node's id. Requires exclusive access.
    NodeId insert(std::span<const float> v) {
        validate_point(v, "insert");
        if (size() >= std::numeric_limits<NodeId>::max()) {
            throw std::length_error("index is at NodeId capacity");
        }

        const int level = generate_level(rng_, *params_.level_mult);
        const NodeId id = static_cast<NodeId>(size());
        elements_.insert(elements_.end(), v.begin(), v.end());
        levels_.push_back(level);
        links_.emplace_back(static_cast<std::size_t>(level) + 1);

        if (!enter_point_) {
            // First element: becomes the enter point at its sampled level.
            enter_point_ = id;
            max_layer_ = level;
            return id;
        }

        CountingDistance dist(metric_);
        auto lease = visited_pool_->acquire(size());

        std::vector<Neighbor> eps{{*enter_point_, dist(v, vector_of(*enter_point_))}};

        // Phase 1: greedy descent (beam 1) through the layers above the
        // new node's level, carrying the closest element downward.
        for (int layer = max_layer_; layer > level; --layer) {
            (*lease).prepare(size());
            eps = search_layer_impl(v, eps, 1, layer, dist, *lease);
        }

        // Phase 2: on every shared layer, widen the beam, pick connection
        // targets with the configured selector, link bidirectionally and
        // shrink any neighbor pushed past its cap. The result list seeds
        // the next layer down.
        for (int layer = std::min(max_layer_, level); layer >= 0; --layer) {
            (*lease).prepare(size());
            std::vector<Neighbor> found =
                search_layer_impl(v, eps, params_.ef_construction, layer, dist, *lease);
            std::vector<Neighbor> targets = select_targets(v, found, params_.m, layer, dist);
            auto& own = links_[id][static_cast<std::size_t>(layer)];
            for (const Neighbor& t : targets) {
                own.push_back(t.id);
                links_[t.id][static_cast<std::size_t>(layer)].push_back(id);
            }
            for (const Neighbor& t : targets) {
                if (links_[t.id][static_cast<std::size_t>(layer)].size() > degree_cap(layer)) {
                    shrink_connections_impl(t.id, layer, dist);
                }
            }
            eps = std::move(found);
        }

        if (level > max_layer_) {
            max_layer_ = level;
            enter_point_ = id;
        }
        return id;
    }

    /// k nearest neighbors of q: greedy descent with beam 1 through layers
    /// maxLayer..1, then a beam of search.ef on layer 0. Nearest first,
    /// ties by id.
    std::vector<Neighbor> knn_search(std::span<const float> q, const SearchParams& search) const {
        SearchStats stats;
        return knn_search(q, search, stats);
    }

    std::vector<Neighbor> knn_search(std::span<const float> q, const SearchParams& search,
                                     SearchStats& stats) const {
        if (empty()) throw std::runtime_error("knn_search on an empty index");
        if (search.k == 0) throw std::invalid_argument("knn_search requires k >= 1");
        if (search.ef < search.k) throw std::invalid_argument("knn_search requires ef >= k");
        validate_point(q, "knn_search");

        CountingDistance dist(metric_);
        auto lease = visited_pool_->acquire(size());

        std::vector<Neighbor> eps{{*enter_point_, dist(q, vector_of(*enter_point_))}};
        for (int layer = max_layer_; layer >= 1; --layer) {
            (*lease).prepare(size());
            eps = search_layer_impl(q, eps, 1, layer, dist, *lease);
        }
        (*lease).prepare(size());
        std::vector<Neighbor> result = search_layer_impl(q, eps, search.ef, 0, dist, *lease);
        if (result.size() > search.k) result.resize(search.k);
        stats.distance_computations = dist.count();
        return result;
    }

    /// Beam search within one layer, seeded with enter points whose
    /// distances are already known. Returns up to ef elements nearest first.
    std::vector<Neighbor> search_layer(std::span<const float> q,
                                       std::vector<Neighbor> enter_points, std::uint32_t ef,
                                       int layer) const {
        if (empty()) throw std::runtime_error("search_layer on an empty index");
        if (ef == 0) throw std::invalid_argument("search_layer requires ef >= 1");
        if (layer < 0 || layer > max_layer_) {
            throw std::invalid_argument("search_layer: layer " + std::to_string(layer) +
                                        " has no nodes");
        }
        if (enter_points.empty()) {
            throw std::invalid_argument("search_layer requires at least one enter point");
        }
        for (const Neighbor& ep : enter_points) {
            if (ep.id >= size() || levels_[ep.id] < layer) {
                throw std::invalid_argument("search_layer: enter point " + std::to_string(ep.id) +
                                            " does not occupy layer " + std::to_string(layer));
            }
        }
        CountingDistance dist(metric_);
        auto lease = visited_pool_->acquire(size());
        return search_layer_impl(q, enter_points, ef, layer, dist, *lease);
    }

    /// Diversity-selection over a candidate set relative to `base`.
    /// With extend_candidates, the set is first augmented with the one-hop
    /// layer-l neighborhood of every candidate (deduplicated, distances
    /// computed to base; `exclude` drops the base element itself when it
    /// already lives in the graph).
    std::vector<Neighbor> select_neighbors_heuristic(std::span<const float> base,
                                                     std::vector<Neighbor> candidates,
                                                     std::uint32_t m, int layer,
                                                     bool extend_candidates, bool keep_pruned,
                                                     std::optional<NodeId> exclude = {}) const {
        CountingDistance dist(metric_);
        return heuristic_impl(base, std::move(candidates), m, layer, extend_candidates,
                              keep_pruned, exclude, dist);
    }

    /// Re-select an over-full adjacency list down to the layer cap with the
    /// configured selector. Dropped links are removed from both endpoints.
    /// No-op when the list is within its cap.
    void shrink_connections(NodeId node, int layer) {
        if (node >= size()) throw std::out_of_range("shrink_connections: no such node");
        if (layer < 0 || layer > levels_[node]) {
            throw std::out_of_range("shrink_connections: node does not occupy layer " +
                                    std::to_string(layer));
        }
        CountingDistance dist(metric_);
        shrink_connections_impl(node, layer, dist);
    }

    /// Exact structural counts over the whole graph.
    StatsReport stats() const {
        StatsReport report;
        report.size = size();
        report.max_layer = max_layer_;
        if (enter_point_) report.enter_point_level = levels_[*enter_point_];
        report.layers.resize(static_cast<std::size_t>(max_layer_) + 1);
        double level_sum = 0.0;
        for (NodeId id = 0; id < size(); ++id) {
            level_sum += levels_[id];
            for (int layer = 0; layer <= levels_[id]; ++layer) {
                auto& ls = report.layers[static_cast<std::size_t>(layer)];
                const std::size_t degree = links_[id][static_cast<std::size_t>(layer)].size();
                ls.population += 1;
                ls.link_entries += degree;
                if (ls.degree_histogram.size() <= degree) ls.degree_histogram.resize(degree + 1);
                ls.degree_histogram[degree] += 1;
                report.total_link_entries += degree;
            }
        }
        if (!empty()) report.mean_level = level_sum / static_cast<double>(size());
        return report;
    }

    /// Reassemble an index from its serialized parts, validating every
    /// structural invariant before accepting it. Throws std::runtime_error
    /// naming the first failed check.
    static HnswIndex from_parts(std::size_t dim, Metric metric, IndexParams params,
                                std::vector<float> vectors, std::vector<std::int32_t> levels,
                                std::vector<std::vector<std::vector<NodeId>>> links,
                                std::optional<NodeId> enter_point, int max_layer) {
        HnswIndex index(dim, std::move(metric), std::move(params));
        index.elements_ = std::move(vectors);
        index.levels_ = std::move(levels);
        index.links_ = std::move(links);
        index.enter_point_ = enter_point;
        index.max_layer_ = max_layer;
        index.validate_structure();
        return index;
    }

private:
    static void validate_params(const IndexParams& p) {
        if (p.m == 0) throw std::invalid_argument("params: m must be positive");
        if (*p.m_max < p.m) throw std::invalid_argument("params: m_max must be >= m");
        if (*p.m_max0 < p.m) throw std::invalid_argument("params: m_max0 must be >= m");
        if (p.ef_construction < p.m) {
            throw std::invalid_argument("params: ef_construction must be >= m");
        }
        if (!(*p.level_mult >= 0.0) || !std::isfinite(*p.level_mult)) {
            throw std::invalid_argument("params: level_mult must be a non-negative real");
        }
    }

    void validate_point(std::span<const float> v, const char* op) const {
        if (v.size() != dim_) {
            throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                                        std::to_string(v.size()) + " vs index dimension " +
                                        std::to_string(dim_) + ")");
        }
        if (!all_finite(v)) {
            throw std::invalid_argument(std::string(op) + ": non-finite component");
        }
        if (metric_.kind() == DistanceKind::Cosine && is_zero_vector(v)) {
            throw std::invalid_argument(std::string(op) +
                                        ": zero vector is not admissible under cosine distance");
        }
    }

    std::span<const float> vec(NodeId id) const {
        return {elements_.data() + static_cast<std::size_t>(id) * dim_, dim_};
    }

    // Alg: beam search at one layer. candidates is a min-queue (closest on
    // top), result a max-queue (furthest on top) trimmed to ef. All three
    // books are seeded with the enter points; the loop pops the closest
    // unexpanded candidate, stops once it is further than the worst kept
    // result, and otherwise admits unvisited neighbors that beat the worst
    // kept result (or while fewer than ef are kept).
    std::vector<Neighbor> search_layer_impl(std::span<const float> q,
                                            std::span<const Neighbor> enter_points,
                                            std::uint32_t ef, int layer, CountingDistance& dist,
                                            detail::VisitedSet& visited) const {
        std::priority_queue<Neighbor, std::vector<Neighbor>, FurtherFirst> candidates;
        std::priority_queue<Neighbor, std::vector<Neighbor>, CloserFirst> result;
        for (const Neighbor& ep : enter_points) {
            if (visited.test_and_set(ep.id)) continue;
            candidates.push(ep);
            result.push(ep);
        }
        while (result.size() > ef) result.pop();

        while (!candidates.empty()) {
            const Neighbor c = candidates.top();
            if (c.dist > result.top().dist) break;
            candidates.pop();
            for (const NodeId e : links_[c.id][static_cast<std::size_t>(layer)]) {
                if (visited.test_and_set(e)) continue;
                const double d = dist(q, vec(e));
                if (result.size() < ef || d < result.top().dist) {
                    candidates.push({e, d});
                    result.push({e, d});
                    if (result.size() > ef) result.pop();
                }
            }
        }

        std::vector<Neighbor> out(result.size());
        for (std::size_t i = out.size(); i-- > 0;) {
            out[i] = result.top();
            result.pop();
        }
        return out;
    }

    std::vector<Neighbor> select_targets(std::span<const float> base,
                                         std::vector<Neighbor> candidates, std::uint32_t m,
                                         int layer, CountingDistance& dist) const {
        if (params_.selector == Selector::Simple) {
            return select_neighbors_simple(std::move(candidates), m);
        }
        return heuristic_impl(base, std::move(candidates), m, layer, params_.extend_candidates,
                              params_.keep_pruned_connections, std::nullopt, dist);
    }

    std::vector<Neighbor> heuristic_impl(std::span<const float> base,
                                         std::vector<Neighbor> candidates, std::uint32_t m,
                                         int layer, bool extend_candidates, bool keep_pruned,
                                         std::optional<NodeId> exclude,
                                         CountingDistance& dist) const {
        if (extend_candidates) {
            std::unordered_set<NodeId> seen;
            seen.reserve(candidates.size() * 4);
            for (const Neighbor& c : candidates) seen.insert(c.id);
            if (exclude) seen.insert(*exclude);
            const std::size_t first_hop = candidates.size();
            for (std::size_t i = 0; i < first_hop; ++i) {
                for (const NodeId e :
                     links_[candidates[i].id][static_cast<std::size_t>(layer)]) {
                    if (!seen.insert(e).second) continue;
                    candidates.push_back({e, dist(base, vec(e))});
                }
            }
        }
        return hnsw::select_neighbors_heuristic(
            std::move(candidates), m, keep_pruned,
            [&](NodeId a, NodeId b) { return dist(vec(a), vec(b)); });
    }

    void shrink_connections_impl(NodeId node, int layer, CountingDistance& dist) {
        auto& list = links_[node][static_cast<std::size_t>(layer)];
        const std::uint32_t cap = degree_cap(layer);
        if (list.size() <= cap) return;

        std::vector<Neighbor> candidates;
        candidates.reserve(list.size());
        for (const NodeId m : list) candidates.push_back({m, dist(vec(node), vec(m))});

        // The cap is a hard bound: no pruned-connection back-fill and no
        // candidate extension here — re-selection draws from the current
        // neighbors only.
        std::vector<Neighbor> kept =
            params_.selector == Selector::Simple
                ? select_neighbors_simple(std::move(candidates), cap)
                : hnsw::select_neighbors_heuristic(
                      std::move(candidates), cap, false,
                      [&](NodeId a, NodeId b) { return dist(vec(a), vec(b)); });

        // Both lists are at most a few dozen entries; linear scans beat any
        // per-call allocation here.
        auto is_kept = [&kept](NodeId id) {
            for (const Neighbor& k : kept) {
                if (k.id == id) return true;
            }
            return false;
        };
        for (const NodeId dropped : list) {
            if (is_kept(dropped)) continue;
            auto& other = links_[dropped][static_cast<std::size_t>(layer)];
            other.erase(std::remove(other.begin(), other.end(), node), other.end());
        }
        list.clear();
        for (const Neighbor& k : kept) list.push_back(k.id);
    }

    void validate_structure() const;

    std::size_t dim_;
    Metric metric_;
    IndexParams params_;  // fully resolved
    std::mt19937_64 rng_;

    std::vector<float> elements_;       // size() * dim_, row-major
    std::vector<std::int32_t> levels_;  // per node
    // links_[node][layer] for layer 0..levels_[node]
    std::vector<std::vector<std::vector<NodeId>>> links_;
    std::optional<NodeId> enter_point_;
    int max_layer_ = 0;

    std::unique_ptr<detail::VisitedSetPool> visited_pool_;
};

inline void HnswIndex::validate_structure() const {
    auto fail = [](const std::string& check) {
        throw std::runtime_error("index validation failed: " + check);
    };

    const std::size_t n = levels_.size();
    if (elements_.size() != n * dim_) fail("vector block size does not match count * dim");
    if (links_.size() != n) fail("adjacency block count does not match element count");
    if (!all_finite(elements_)) fail("non-finite vector component");
    if (metric_.kind() == DistanceKind::Cosine) {
        for (std::size_t i = 0; i < n; ++i) {
            if (is_zero_vector(vec(static_cast<NodeId>(i)))) {
                fail("zero vector stored under cosine distance");
            }
        }
    }

    if (n == 0) {
        if (enter_point_) fail("enter point set on an empty index");
        return;
    }
    if (!enter_point_) fail("missing enter point on a non-empty index");
    if (*enter_point_ >= n) fail("enter point id out of range");

    std::int32_t max_level_seen = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (levels_[i] < 0 || levels_[i] > kMaxLevel) fail("node level out of range");
        if (links_[i].size() != static_cast<std::size_t>(levels_[i]) + 1) {
            fail("adjacency lists do not cover exactly layers 0..level");
        }
        max_level_seen = std::max(max_level_seen, levels_[i]);
    }
    if (max_layer_ != max_level_seen) fail("max layer does not equal the maximum node level");
    if (levels_[*enter_point_] != max_layer_) fail("enter point level does not equal max layer");

    // Per-list checks, then global symmetry: the sorted directed-edge table
    // must equal its own transpose.
    using Edge = std::tuple<std::uint32_t, NodeId, NodeId>;  // (layer, from, to)
    std::vector<Edge> forward;
    std::vector<Edge> reverse;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t layer = 0; layer < links_[i].size(); ++layer) {
            const auto& list = links_[i][layer];
            const std::uint32_t cap = layer == 0 ? *params_.m_max0 : *params_.m_max;
            if (list.size() > cap) fail("degree cap exceeded");
            for (const NodeId m : list) {
                if (m >= n) fail("neighbor id out of range");
                if (m == i) fail("self-loop");
                if (static_cast<std::size_t>(levels_[m]) < layer) {
                    fail("neighbor does not occupy the layer it is linked on");
                }
                const auto layer32 = static_cast<std::uint32_t>(layer);
                forward.emplace_back(layer32, static_cast<NodeId>(i), m);
                reverse.emplace_back(layer32, m, static_cast<NodeId>(i));
            }
        }
    }
    std::sort(forward.begin(), forward.end());
    std::sort(reverse.begin(), reverse.end());
    if (std::adjacent_find(forward.begin(), forward.end()) != forward.end()) {
        fail("duplicate entry within a neighbor list");
    }
    if (forward != reverse) fail("asymmetric adjacency");
}

}  // namespace hnsw
