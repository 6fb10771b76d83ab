#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

namespace hnsw {

/// Built-in dissimilarities plus an extension point for user-supplied ones.
/// Euclidean is a metric; cosine distance is a symmetric non-negative
/// dissimilarity (for nonzero inputs) but not a metric.
enum class DistanceKind { Euclidean, Cosine, Custom };

inline const char* to_string(DistanceKind kind) {
    switch (kind) {
        case DistanceKind::Euclidean: return "l2";
        case DistanceKind::Cosine: return "cosine";
        case DistanceKind::Custom: return "custom";
    }
    return "?";
}

namespace detail {

// Components are stored as 32-bit floats; sums accumulate in 64-bit.
inline double l2_distance(std::span<const float> a, std::span<const float> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = static_cast<double>(a[i]) - static_cast<double>(b[i]);
        acc += diff * diff;
    }
    return std::sqrt(acc);
}

inline double cosine_distance(std::span<const float> a, std::span<const float> b) {
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double x = a[i];
        const double y = b[i];
        dot += x * y;
        na += x * x;
        nb += y * y;
    }
    if (na == 0.0 || nb == 0.0) {
        throw std::domain_error("cosine distance undefined for a zero vector");
    }
    // Rounding can push the ratio a hair past 1 when a == b; clamp keeps the
    // result non-negative.
    const double d = 1.0 - dot / (std::sqrt(na) * std::sqrt(nb));
    return d < 0.0 ? 0.0 : d;
}

}  // namespace detail

/// Dispatchable dissimilarity. The two built-in kinds carry no state; a
/// custom metric wraps any callable over equal-dimension float spans.
class Metric {
public:
    using Fn = std::function<double(std::span<const float>, std::span<const float>)>;

    static Metric euclidean() { return Metric(DistanceKind::Euclidean, nullptr); }
    static Metric cosine() { return Metric(DistanceKind::Cosine, nullptr); }
    static Metric custom(Fn fn) {
        if (!fn) throw std::invalid_argument("custom metric requires a callable");
        return Metric(DistanceKind::Custom, std::move(fn));
    }
    static Metric of(DistanceKind kind) {
        switch (kind) {
            case DistanceKind::Euclidean: return euclidean();
            case DistanceKind::Cosine: return cosine();
            case DistanceKind::Custom: break;
        }
        throw std::invalid_argument("Metric::of requires a built-in distance kind");
    }

    DistanceKind kind() const { return kind_; }

    /// Unchecked kernel dispatch; callers guarantee equal dimensions.
    double operator()(std::span<const float> a, std::span<const float> b) const {
        switch (kind_) {
            case DistanceKind::Euclidean: return detail::l2_distance(a, b);
            case DistanceKind::Cosine: return detail::cosine_distance(a, b);
            case DistanceKind::Custom: return fn_(a, b);
        }
        throw std::logic_error("unreachable distance kind");
    }

private:
    Metric(DistanceKind kind, Fn fn) : kind_(kind), fn_(std::move(fn)) {}

    DistanceKind kind_;
    Fn fn_;
};

/// Dimension-checked distance between two vectors.
inline double distance(const Metric& metric, std::span<const float> a, std::span<const float> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("distance: dimension mismatch (" + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()) + ")");
    }
    return metric(a, b);
}

inline double distance(DistanceKind kind, std::span<const float> a, std::span<const float> b) {
    return distance(Metric::of(kind), a, b);
}

/// Counting handle: computes the same values as the wrapped metric while
/// incrementing a session-local counter. One handle per search or build
/// invocation; never shared across threads.
class CountingDistance {
public:
    explicit CountingDistance(Metric metric) : metric_(std::move(metric)) {}

    double operator()(std::span<const float> a, std::span<const float> b) {
        ++count_;
        return metric_(a, b);
    }

    std::uint64_t count() const { return count_; }

private:
    Metric metric_;
    std::uint64_t count_ = 0;
};

/// True when every component is finite. Non-finite components are rejected
/// at ingestion so the distance kernels stay branch-free.
inline bool all_finite(std::span<const float> v) {
    for (float x : v) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

inline bool is_zero_vector(std::span<const float> v) {
    for (float x : v) {
        if (x != 0.0f) return false;
    }
    return true;
}

}  // namespace hnsw
