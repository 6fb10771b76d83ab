#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "hnsw/dataset.hpp"
#include "hnsw/index.hpp"
#include "hnsw/oracle.hpp"

namespace hnsw {

/// One benchmark measurement row: the full parameter set plus what it
/// measured. recall is a mean over the query set, query time and distance
/// computations are per-query means, build time covers the whole build.
struct RunRecord {
    std::string dataset_label;
    std::size_t n = 0;
    std::size_t dim = 0;
    DistanceKind kind = DistanceKind::Euclidean;
    IndexParams params;  // resolved
    std::uint32_t k = 0;
    std::uint32_t ef = 0;
    double recall = 0.0;
    double query_time_us = 0.0;
    double dist_comps = 0.0;
    double build_time_ms = 0.0;
    bool failed = false;  ///< sweep error marker: measurement fields are nan
};

inline std::string csv_header() {
    return "dataset,n,dim,distance,m,m_max,m_max0,ef_construction,level_mult,selector,"
           "extend_candidates,keep_pruned,seed,k,ef,recall,query_time_us,dist_comps,"
           "build_time_ms";
}

inline std::string to_csv(const RunRecord& r) {
    char buf[512];
    const double recall = r.failed ? std::nan("") : r.recall;
    const double qt = r.failed ? std::nan("") : r.query_time_us;
    const double dc = r.failed ? std::nan("") : r.dist_comps;
    const double bt = r.failed ? std::nan("") : r.build_time_ms;
    std::snprintf(buf, sizeof(buf),
                  "%s,%zu,%zu,%s,%u,%u,%u,%u,%.6f,%s,%d,%d,%llu,%u,%u,%.6f,%.3f,%.2f,%.3f",
                  r.dataset_label.c_str(), r.n, r.dim, to_string(r.kind), r.params.m,
                  *r.params.m_max, *r.params.m_max0, r.params.ef_construction,
                  *r.params.level_mult, to_string(r.params.selector),
                  r.params.extend_candidates ? 1 : 0, r.params.keep_pruned_connections ? 1 : 0,
                  static_cast<unsigned long long>(r.params.seed), r.k, r.ef, recall, qt, dc, bt);
    return buf;
}

struct QueryMeasurement {
    double recall = 0.0;         ///< mean tie-tolerant recall
    double query_time_us = 0.0;  ///< mean wall time per query
    double dist_comps = 0.0;     ///< mean distance computations per query
};

/// Run every query at one ef and average. Timing covers knn_search only.
inline QueryMeasurement measure_queries(const HnswIndex& index, const Dataset& queries,
                                        const GroundTruth& gt, std::uint32_t k,
                                        std::uint32_t ef) {
    if (queries.size() != gt.lists.size()) {
        throw std::invalid_argument("measure_queries: query/ground-truth count mismatch");
    }
    if (queries.empty()) throw std::invalid_argument("measure_queries: no queries");

    QueryMeasurement out;
    for (std::size_t i = 0; i < queries.size(); ++i) {
        SearchStats stats;
        const auto start = std::chrono::steady_clock::now();
        const std::vector<Neighbor> found = index.knn_search(queries[i], {k, ef}, stats);
        const auto stop = std::chrono::steady_clock::now();
        out.query_time_us +=
            std::chrono::duration<double, std::micro>(stop - start).count();
        out.dist_comps += static_cast<double>(stats.distance_computations);
        out.recall += recall_tie_tolerant(found, gt.lists[i]);
    }
    const auto count = static_cast<double>(queries.size());
    out.recall /= count;
    out.query_time_us /= count;
    out.dist_comps /= count;
    return out;
}

/// Build an index over a dataset, reporting the build wall time.
inline HnswIndex build_index(const Dataset& data, const IndexParams& params,
                             double* build_time_ms = nullptr) {
    HnswIndex index(data.dim(), Metric::of(data.kind()), params);
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < data.size(); ++i) index.insert(data[i]);
    const auto stop = std::chrono::steady_clock::now();
    if (build_time_ms) {
        *build_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    }
    return index;
}

}  // namespace hnsw
