#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hnsw/index.hpp"
#include "hnsw/vecs_io.hpp"

namespace hnsw {

// Snapshot format, version 1. Everything little-endian:
//
//   magic           8 bytes  "HNSWSNAP"
//   version         u32
//   kind            u8       0 = l2, 1 = cosine
//   selector        u8       0 = simple, 1 = heuristic
//   extend          u8
//   keep_pruned     u8
//   m               u32
//   m_max           u32
//   m_max0          u32
//   ef_construction u32
//   level_mult      f64 (bit pattern)
//   seed            u64
//   dim             u32
//   count           u64
//   has_enter_point u8
//   enter_point     u32      (0 when absent)
//   max_layer       u32
//   vectors         count * dim * f32
//   levels          count * u32
//   adjacency       per node, per layer 0..level: u32 count, count * u32 ids
//
// A snapshot is deterministic: the same index always serializes to the same
// bytes. Loading validates every structural invariant rather than trusting
// the stream; a version mismatch is rejected, never migrated.

inline constexpr std::array<char, 8> kSnapshotMagic = {'H', 'N', 'S', 'W',
                                                       'S', 'N', 'A', 'P'};
inline constexpr std::uint32_t kSnapshotVersion = 1;

namespace detail {

inline void write_u64_le(std::ostream& out, std::uint64_t v) {
    write_u32_le(out, static_cast<std::uint32_t>(v & 0xffffffffu));
    write_u32_le(out, static_cast<std::uint32_t>(v >> 32));
}

inline void write_f64_le(std::ostream& out, double v) {
    write_u64_le(out, std::bit_cast<std::uint64_t>(v));
}

inline std::uint64_t read_u64_le(ByteReader& r, const char* what) {
    const std::uint64_t lo = r.read_u32_le(what);
    const std::uint64_t hi = r.read_u32_le(what);
    return lo | (hi << 32);
}

inline double read_f64_le(ByteReader& r, const char* what) {
    return std::bit_cast<double>(read_u64_le(r, what));
}

}  // namespace detail

/// Serialize a quiescent index. Returns the number of bytes written.
inline std::uint64_t save_index(const HnswIndex& index, std::ostream& out) {
    using namespace detail;

    std::uint8_t kind_tag = 0;
    switch (index.kind()) {
        case DistanceKind::Euclidean: kind_tag = 0; break;
        case DistanceKind::Cosine: kind_tag = 1; break;
        case DistanceKind::Custom:
            throw std::invalid_argument("save_index: custom metrics are not serializable");
    }

    const IndexParams& p = index.params();
    const std::uint64_t n = index.size();

    out.write(kSnapshotMagic.data(), kSnapshotMagic.size());
    write_u32_le(out, kSnapshotVersion);
    out.put(static_cast<char>(kind_tag));
    out.put(static_cast<char>(p.selector == Selector::Heuristic ? 1 : 0));
    out.put(static_cast<char>(p.extend_candidates ? 1 : 0));
    out.put(static_cast<char>(p.keep_pruned_connections ? 1 : 0));
    write_u32_le(out, p.m);
    write_u32_le(out, *p.m_max);
    write_u32_le(out, *p.m_max0);
    write_u32_le(out, p.ef_construction);
    write_f64_le(out, *p.level_mult);
    write_u64_le(out, p.seed);
    write_u32_le(out, static_cast<std::uint32_t>(index.dim()));
    write_u64_le(out, n);
    out.put(static_cast<char>(index.enter_point() ? 1 : 0));
    write_u32_le(out, index.enter_point().value_or(0));
    write_u32_le(out, static_cast<std::uint32_t>(index.max_layer()));

    std::uint64_t bytes = 8 + 4 + 4 + 4 * 4 + 8 + 8 + 4 + 8 + 1 + 4 + 4;

    for (NodeId id = 0; id < n; ++id) {
        for (const float c : index.vector_of(id)) write_f32_le(out, c);
    }
    bytes += n * index.dim() * 4;

    for (NodeId id = 0; id < n; ++id) {
        write_u32_le(out, static_cast<std::uint32_t>(index.level_of(id)));
    }
    bytes += n * 4;

    for (NodeId id = 0; id < n; ++id) {
        for (int layer = 0; layer <= index.level_of(id); ++layer) {
            const auto list = index.neighbors(id, layer);
            write_u32_le(out, static_cast<std::uint32_t>(list.size()));
            for (const NodeId m : list) write_u32_le(out, m);
            bytes += 4 + list.size() * 4;
        }
    }

    if (!out) throw std::runtime_error("save_index: write failure");
    return bytes;
}

/// Reconstruct an index from a snapshot, validating all structural
/// invariants before returning. Truncation, version mismatch and invariant
/// violations throw with the failed check named.
inline HnswIndex load_index(std::istream& in) {
    using namespace detail;
    ByteReader reader(in);

    std::array<char, 8> magic{};
    reader.read_exact(magic.data(), magic.size(), "snapshot magic");
    if (magic != kSnapshotMagic) {
        throw std::runtime_error("load_index: bad magic tag (not an index snapshot)");
    }
    const std::uint32_t version = reader.read_u32_le("snapshot version");
    if (version != kSnapshotVersion) {
        throw std::runtime_error("load_index: unsupported snapshot version " +
                                 std::to_string(version) + " (expected " +
                                 std::to_string(kSnapshotVersion) + ")");
    }

    char tags[4];
    reader.read_exact(tags, 4, "snapshot header");
    const auto kind_tag = static_cast<std::uint8_t>(tags[0]);
    if (kind_tag > 1) {
        throw std::runtime_error("load_index: unknown distance kind tag " +
                                 std::to_string(kind_tag));
    }
    const Metric metric = kind_tag == 0 ? Metric::euclidean() : Metric::cosine();

    IndexParams params;
    params.selector = tags[1] ? Selector::Heuristic : Selector::Simple;
    params.extend_candidates = tags[2] != 0;
    params.keep_pruned_connections = tags[3] != 0;
    params.m = reader.read_u32_le("snapshot params");
    params.m_max = reader.read_u32_le("snapshot params");
    params.m_max0 = reader.read_u32_le("snapshot params");
    params.ef_construction = reader.read_u32_le("snapshot params");
    params.level_mult = read_f64_le(reader, "snapshot params");
    params.seed = read_u64_le(reader, "snapshot params");

    const std::uint32_t dim = reader.read_u32_le("snapshot header");
    const std::uint64_t n = read_u64_le(reader, "snapshot header");
    char has_ep;
    reader.read_exact(&has_ep, 1, "snapshot header");
    const std::uint32_t enter_point = reader.read_u32_le("snapshot header");
    const std::uint32_t max_layer = reader.read_u32_le("snapshot header");
    if (max_layer > static_cast<std::uint32_t>(kMaxLevel)) {
        throw std::runtime_error("load_index: max layer out of range");
    }

    std::vector<float> vectors(n * dim);
    for (auto& c : vectors) c = reader.read_f32_le("vector block");

    std::vector<std::int32_t> levels(n);
    for (auto& l : levels) {
        const std::uint32_t raw = reader.read_u32_le("levels block");
        if (raw > static_cast<std::uint32_t>(kMaxLevel)) {
            throw std::runtime_error("load_index: node level out of range");
        }
        l = static_cast<std::int32_t>(raw);
    }

    std::vector<std::vector<std::vector<NodeId>>> links(n);
    for (std::uint64_t id = 0; id < n; ++id) {
        links[id].resize(static_cast<std::size_t>(levels[id]) + 1);
        for (auto& list : links[id]) {
            const std::uint32_t count = reader.read_u32_le("adjacency block");
            if (count > n) throw std::runtime_error("load_index: neighbor count exceeds size");
            list.resize(count);
            for (auto& m : list) m = reader.read_u32_le("adjacency block");
        }
    }

    if (!reader.at_end()) {
        throw std::runtime_error("load_index: trailing bytes after snapshot");
    }

    return HnswIndex::from_parts(dim, metric, params, std::move(vectors), std::move(levels),
                                 std::move(links),
                                 has_ep ? std::optional<NodeId>(enter_point) : std::nullopt,
                                 static_cast<int>(max_layer));
}

inline std::uint64_t save_index(const HnswIndex& index, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    return save_index(index, out);
}

inline HnswIndex load_index(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return load_index(in);
}

}  // namespace hnsw
