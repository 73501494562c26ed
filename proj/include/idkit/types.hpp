#ifndef IDKIT_TYPES_HPP
#define IDKIT_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace idkit {

using Vertex = std::uint32_t;
using Color = std::uint32_t;

// Class ids inside a pair partition. C(64,2) = 2016 < 65536, so sizes up
// to the hard vertex cap fit in 16 bits.
using ClassId = std::uint16_t;
using Code = std::vector<ClassId>;

inline constexpr std::uint32_t kMaxVertices = 64;

/// Unordered pair of vertex indices, stored with a < b.
struct VertexPair {
    Vertex a;
    Vertex b;

    VertexPair(Vertex x, Vertex y) : a(x < y ? x : y), b(x < y ? y : x) {
        if (x == y) throw std::invalid_argument("VertexPair: endpoints must differ");
    }

    friend bool operator==(const VertexPair&, const VertexPair&) = default;
    friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

/// Index of pair (i,j), i<j, in lexicographic order over pairs of {0..n-1}:
/// (0,1),(0,2),...,(0,n-1),(1,2),...
inline std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

inline std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

/// Inverse of pair_index for small n.
inline std::pair<std::size_t, std::size_t> pair_at(std::size_t idx, std::size_t n) {
    std::size_t i = 0;
    std::size_t rowLen = n - 1;
    while (idx >= rowLen) {
        idx -= rowLen;
        ++i;
        --rowLen;
    }
    return {i, i + 1 + idx};
}

/// Input that violates an operation's contract (malformed partition,
/// tuple outside the field, ...).
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured resource bound was exceeded (enumeration size cap,
/// canonicalization node budget, ...).
class BoundExceeded : public std::runtime_error {
public:
    explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace idkit

#endif
