#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hnsw/distance.hpp"

namespace hnsw {

/// Ordered collection of fixed-dimension dense float vectors plus the
/// distance they are meant to be searched under. All components are finite.
class Dataset {
public:
    Dataset() = default;
    Dataset(std::size_t dim, DistanceKind kind) : dim_(dim), kind_(kind) {
        if (dim_ == 0) throw std::invalid_argument("dataset dimension must be at least 1");
    }

    std::size_t size() const { return dim_ == 0 ? 0 : data_.size() / dim_; }
    bool empty() const { return data_.empty(); }
    std::size_t dim() const { return dim_; }
    DistanceKind kind() const { return kind_; }
    void set_kind(DistanceKind kind) { kind_ = kind; }

    std::span<const float> operator[](std::size_t i) const {
        return {data_.data() + i * dim_, dim_};
    }

    void push_back(std::span<const float> v) {
        if (v.size() != dim_) {
            throw std::invalid_argument("dataset: vector dimension mismatch");
        }
        if (!all_finite(v)) {
            throw std::invalid_argument("dataset: non-finite component");
        }
        data_.insert(data_.end(), v.begin(), v.end());
    }

    const std::vector<float>& raw() const { return data_; }

    /// First `count` vectors as a new dataset (benchmark size sweeps).
    Dataset prefix(std::size_t count) const {
        if (count > size()) throw std::invalid_argument("dataset: prefix larger than dataset");
        Dataset out(dim_, kind_);
        out.data_.assign(data_.begin(),
                         data_.begin() + static_cast<std::ptrdiff_t>(count * dim_));
        return out;
    }

private:
    std::vector<float> data_;  // size() * dim_, row-major
    std::size_t dim_ = 0;
    DistanceKind kind_ = DistanceKind::Euclidean;
};

enum class Family { UniformCube, Clusters };

inline const char* to_string(Family f) {
    return f == Family::UniformCube ? "uniform" : "clusters";
}

/// Recipe for a seeded synthetic dataset.
///
/// UniformCube draws components i.i.d. uniform in [0,1]. Clusters draws
/// `cluster_count` centers uniform in [0,1]^dim, then points round-robin
/// across clusters as center + uniform offsets of half-width
/// `cluster_spread`. The point stream is prefix-stable: the first n points
/// of a larger run with the same seed are identical.
struct SyntheticSpec {
    Family family = Family::UniformCube;
    std::size_t n = 0;
    std::size_t dim = 1;
    std::size_t cluster_count = 1;  ///< Clusters only
    double cluster_spread = 0.001;  ///< fraction of the unit cube edge
    std::uint64_t seed = 0;
};

/// What generate() actually did: the seed that produced isolated clusters
/// (seeds whose centers collide are skipped) and the centers themselves.
struct GenerateInfo {
    std::uint64_t effective_seed = 0;
    std::size_t seeds_skipped = 0;
    std::vector<float> centers;  // cluster_count * dim, Clusters only
};

namespace detail {

inline double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
}

// Smallest pairwise L2 distance between cluster centers.
inline double min_center_distance(const std::vector<float>& centers, std::size_t dim) {
    const std::size_t count = centers.size() / dim;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a + 1 < count; ++a) {
        for (std::size_t b = a + 1; b < count; ++b) {
            double acc = 0.0;
            for (std::size_t j = 0; j < dim; ++j) {
                const double diff = static_cast<double>(centers[a * dim + j]) -
                                    static_cast<double>(centers[b * dim + j]);
                acc += diff * diff;
            }
            best = std::min(best, std::sqrt(acc));
        }
    }
    return best;
}

}  // namespace detail

/// Deterministic synthetic data. Cluster isolation is verified, not
/// assumed: if a seed's centers land closer than 2 * spread * sqrt(dim),
/// the next seed is tried and the substitution is reported through `info`.
inline Dataset generate(const SyntheticSpec& spec, GenerateInfo* info = nullptr) {
    if (spec.dim == 0) throw std::invalid_argument("generate: dim must be at least 1");
    if (spec.family == Family::Clusters && spec.cluster_count == 0) {
        throw std::invalid_argument("generate: cluster_count must be at least 1");
    }
    if (spec.family == Family::Clusters && !(spec.cluster_spread > 0.0)) {
        throw std::invalid_argument("generate: cluster_spread must be positive");
    }

    Dataset out(spec.dim, DistanceKind::Euclidean);
    GenerateInfo local;
    GenerateInfo& report = info ? *info : local;
    report.effective_seed = spec.seed;
    report.seeds_skipped = 0;
    report.centers.clear();

    if (spec.family == Family::UniformCube) {
        std::mt19937_64 rng(spec.seed);
        std::vector<float> point(spec.dim);
        for (std::size_t i = 0; i < spec.n; ++i) {
            for (auto& c : point) c = static_cast<float>(detail::unit_draw(rng));
            out.push_back(point);
        }
        return out;
    }

    const double required = 2.0 * spec.cluster_spread * std::sqrt(static_cast<double>(spec.dim));
    constexpr std::size_t kMaxSeedTries = 64;
    std::mt19937_64 rng;
    for (std::size_t attempt = 0;; ++attempt) {
        if (attempt == kMaxSeedTries) {
            throw std::runtime_error("generate: no isolated cluster layout within " +
                                     std::to_string(kMaxSeedTries) + " seeds of " +
                                     std::to_string(spec.seed));
        }
        const std::uint64_t seed = spec.seed + attempt;
        rng.seed(seed);
        report.centers.resize(spec.cluster_count * spec.dim);
        for (auto& c : report.centers) c = static_cast<float>(detail::unit_draw(rng));
        if (spec.cluster_count < 2 ||
            detail::min_center_distance(report.centers, spec.dim) > required) {
            report.effective_seed = seed;
            report.seeds_skipped = attempt;
            break;
        }
    }

    std::vector<float> point(spec.dim);
    for (std::size_t i = 0; i < spec.n; ++i) {
        const std::size_t cluster = i % spec.cluster_count;
        for (std::size_t j = 0; j < spec.dim; ++j) {
            const double offset = (2.0 * detail::unit_draw(rng) - 1.0) * spec.cluster_spread;
            point[j] = static_cast<float>(report.centers[cluster * spec.dim + j] + offset);
        }
        out.push_back(point);
    }
    return out;
}

}  // namespace hnsw
