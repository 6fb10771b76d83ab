#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hnsw/dataset.hpp"
#include "hnsw/neighbor.hpp"

namespace hnsw {

// fvecs / bvecs / ivecs: the de-facto containers for published vector
// benchmark data. Every record is a 4-byte little-endian count d followed
// by d components (f32 for fvecs, u8 for bvecs, i32 for ivecs). Encoding is
// little-endian on every platform.

namespace detail {

inline void write_u32_le(std::ostream& out, std::uint32_t v) {
    const char bytes[4] = {
        static_cast<char>(v & 0xff),
        static_cast<char>((v >> 8) & 0xff),
        static_cast<char>((v >> 16) & 0xff),
        static_cast<char>((v >> 24) & 0xff),
    };
    out.write(bytes, 4);
}

inline void write_i32_le(std::ostream& out, std::int32_t v) {
    write_u32_le(out, static_cast<std::uint32_t>(v));
}

inline void write_f32_le(std::ostream& out, float v) {
    write_u32_le(out, std::bit_cast<std::uint32_t>(v));
}

// Reader that tracks its byte offset so parse errors can name it.
class ByteReader {
public:
    explicit ByteReader(std::istream& in) : in_(in) {}

    std::uint64_t offset() const { return offset_; }

    bool at_end() {
        return in_.peek() == std::char_traits<char>::eof();
    }

    // Fails with the offset of the first missing byte.
    void read_exact(char* buf, std::size_t n, const char* what) {
        in_.read(buf, static_cast<std::streamsize>(n));
        if (static_cast<std::size_t>(in_.gcount()) != n) {
            throw std::runtime_error(std::string("truncated ") + what + " at byte offset " +
                                     std::to_string(offset_ + static_cast<std::uint64_t>(
                                                                  in_.gcount())));
        }
        offset_ += n;
    }

    std::uint32_t read_u32_le(const char* what) {
        unsigned char bytes[4];
        read_exact(reinterpret_cast<char*>(bytes), 4, what);
        return static_cast<std::uint32_t>(bytes[0]) | (static_cast<std::uint32_t>(bytes[1]) << 8) |
               (static_cast<std::uint32_t>(bytes[2]) << 16) |
               (static_cast<std::uint32_t>(bytes[3]) << 24);
    }

    std::int32_t read_i32_le(const char* what) {
        return static_cast<std::int32_t>(read_u32_le(what));
    }

    float read_f32_le(const char* what) { return std::bit_cast<float>(read_u32_le(what)); }

private:
    std::istream& in_;
    std::uint64_t offset_ = 0;
};

template <typename ReadComponent>
Dataset read_vecs(std::istream& in, DistanceKind kind, const char* format,
                  ReadComponent&& read_component) {
    ByteReader reader(in);
    Dataset out;
    std::int32_t dim = 0;
    std::vector<float> point;
    while (!reader.at_end()) {
        const std::uint64_t record_offset = reader.offset();
        const std::int32_t d = reader.read_i32_le(format);
        if (d <= 0) {
            throw std::runtime_error(std::string(format) + ": non-positive dimension " +
                                     std::to_string(d) + " at byte offset " +
                                     std::to_string(record_offset));
        }
        if (out.empty() && dim == 0) {
            dim = d;
            out = Dataset(static_cast<std::size_t>(dim), kind);
            point.resize(static_cast<std::size_t>(dim));
        } else if (d != dim) {
            throw std::runtime_error(std::string(format) + ": inconsistent dimension " +
                                     std::to_string(d) + " (expected " + std::to_string(dim) +
                                     ") at byte offset " + std::to_string(record_offset));
        }
        for (auto& c : point) c = read_component(reader);
        if (!all_finite(point)) {
            throw std::runtime_error(std::string(format) + ": non-finite component in record at "
                                     "byte offset " + std::to_string(record_offset));
        }
        out.push_back(point);
    }
    return out;
}

}  // namespace detail

/// f32 components.
inline Dataset read_fvecs(std::istream& in, DistanceKind kind = DistanceKind::Euclidean) {
    return detail::read_vecs(in, kind, "fvecs",
                             [](detail::ByteReader& r) { return r.read_f32_le("fvecs record"); });
}

/// u8 components, widened to float.
inline Dataset read_bvecs(std::istream& in, DistanceKind kind = DistanceKind::Euclidean) {
    return detail::read_vecs(in, kind, "bvecs", [](detail::ByteReader& r) {
        unsigned char byte;
        r.read_exact(reinterpret_cast<char*>(&byte), 1, "bvecs record");
        return static_cast<float>(byte);
    });
}

inline void write_fvecs(std::ostream& out, const Dataset& data) {
    for (std::size_t i = 0; i < data.size(); ++i) {
        detail::write_i32_le(out, static_cast<std::int32_t>(data.dim()));
        for (const float c : data[i]) detail::write_f32_le(out, c);
    }
    if (!out) throw std::runtime_error("fvecs: write failure");
}

/// Inverse of read_bvecs; every component must be an integer in [0, 255].
inline void write_bvecs(std::ostream& out, const Dataset& data) {
    for (std::size_t i = 0; i < data.size(); ++i) {
        detail::write_i32_le(out, static_cast<std::int32_t>(data.dim()));
        for (const float c : data[i]) {
            if (c < 0.0f || c > 255.0f || c != std::floor(c)) {
                throw std::invalid_argument("bvecs: component " + std::to_string(c) +
                                            " is not an unsigned byte");
            }
            out.put(static_cast<char>(static_cast<unsigned char>(c)));
        }
    }
    if (!out) throw std::runtime_error("bvecs: write failure");
}

/// Ground-truth id lists, one record per query, nearest first.
inline std::vector<std::vector<NodeId>> read_ivecs(std::istream& in) {
    detail::ByteReader reader(in);
    std::vector<std::vector<NodeId>> lists;
    while (!reader.at_end()) {
        const std::uint64_t record_offset = reader.offset();
        const std::int32_t count = reader.read_i32_le("ivecs");
        if (count < 0) {
            throw std::runtime_error("ivecs: negative count at byte offset " +
                                     std::to_string(record_offset));
        }
        std::vector<NodeId> ids(static_cast<std::size_t>(count));
        for (auto& id : ids) {
            const std::int32_t v = reader.read_i32_le("ivecs record");
            if (v < 0) {
                throw std::runtime_error("ivecs: negative id at byte offset " +
                                         std::to_string(record_offset));
            }
            id = static_cast<NodeId>(v);
        }
        lists.push_back(std::move(ids));
    }
    return lists;
}

inline void write_ivecs(std::ostream& out, const std::vector<std::vector<NodeId>>& lists) {
    constexpr NodeId kMaxIvecsId = 0x7fffffffu;
    for (const auto& ids : lists) {
        detail::write_i32_le(out, static_cast<std::int32_t>(ids.size()));
        for (const NodeId id : ids) {
            if (id > kMaxIvecsId) {
                throw std::runtime_error("ivecs: id " + std::to_string(id) +
                                         " does not fit a signed 32-bit integer");
            }
            detail::write_i32_le(out, static_cast<std::int32_t>(id));
        }
    }
    if (!out) throw std::runtime_error("ivecs: write failure");
}

// Path conveniences.

inline Dataset read_fvecs(const std::filesystem::path& path,
                          DistanceKind kind = DistanceKind::Euclidean) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_fvecs(in, kind);
}

inline Dataset read_bvecs(const std::filesystem::path& path,
                          DistanceKind kind = DistanceKind::Euclidean) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_bvecs(in, kind);
}

inline void write_fvecs(const std::filesystem::path& path, const Dataset& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_fvecs(out, data);
}

inline std::vector<std::vector<NodeId>> read_ivecs(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_ivecs(in);
}

inline void write_ivecs(const std::filesystem::path& path,
                        const std::vector<std::vector<NodeId>>& lists) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_ivecs(out, lists);
}

}  // namespace hnsw
