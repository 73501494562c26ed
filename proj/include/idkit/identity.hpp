#ifndef IDKIT_IDENTITY_HPP
#define IDKIT_IDENTITY_HPP

#include <compare>
#include <cstddef>
#include <vector>

#include "idkit/coloring.hpp"
#include "idkit/types.hpp"

namespace idkit {

/**
 * Canonical form of a pair partition of the complete graph on {0..n-1},
 * taken up to vertex permutation and color renaming.
 *
 * The stored code lists, in lexicographic pair order, the class of each
 * pair with classes numbered by first appearance; the code is minimal
 * over all vertex permutations. Equal canonical values compare equal
 * with operator==.
 */
class Identity {
public:
    /// Canonicalize a raw class-per-pair assignment (values arbitrary).
    static Identity from_partition(std::uint32_t n, const Code& raw);

    /// Build from explicit blocks; validates disjointness and coverage.
    static Identity from_classes(std::uint32_t n,
                                 const std::vector<std::vector<VertexPair>>& blocks);

    std::uint32_t size() const { return size_; }
    const Code& code() const { return code_; }

    /// Blocks in canonical order (by first pair), pairs sorted within.
    std::vector<std::vector<VertexPair>> classes() const;

    std::size_t class_count() const;

    /// Pairs that are alone in their class.
    std::vector<VertexPair> singleton_classes() const;

    /// The identity viewed as a coloring on field {0..n-1} with the class
    /// ids as colors (a canonical representative of the class).
    Coloring as_coloring() const;

    friend bool operator==(const Identity&, const Identity&) = default;
    friend auto operator<=>(const Identity& x, const Identity& y) {
        if (auto c = x.size_ <=> y.size_; c != 0) return c;
        return x.code_ <=> y.code_;
    }

private:
    Identity(std::uint32_t n, Code code) : size_(n), code_(std::move(code)) {}

    std::uint32_t size_ = 0;
    Code code_;
};

/**
 * Pair partition with the vertex order significant: canonical under
 * color renaming only (classes numbered by first appearance along the
 * lexicographic pair order).
 */
class VIdentity {
public:
    static VIdentity from_partition(std::uint32_t n, const Code& raw);
    static VIdentity from_classes(std::uint32_t n,
                                  const std::vector<std::vector<VertexPair>>& blocks);

    std::uint32_t size() const { return size_; }
    const Code& code() const { return code_; }
    std::vector<std::vector<VertexPair>> classes() const;

    /// Forget the vertex order.
    Identity forget_order() const { return Identity::from_partition(size_, code_); }

    Coloring as_coloring() const;

    friend bool operator==(const VIdentity&, const VIdentity&) = default;
    friend auto operator<=>(const VIdentity& x, const VIdentity& y) {
        if (auto c = x.size_ <=> y.size_; c != 0) return c;
        return x.code_ <=> y.code_;
    }

private:
    VIdentity(std::uint32_t n, Code code) : size_(n), code_(std::move(code)) {}

    std::uint32_t size_ = 0;
    Code code_;
};

/// Renumber arbitrary class values by first appearance. Total and pure.
Code relabel_first_appearance(const Code& raw);

/// Canonical (vertex-permutation-minimal) code of a partition given in
/// first-appearance form. Exhaustive for n <= 8; pruned search above.
Code canonical_code(std::uint32_t n, const Code& relabeled);

/// The identity of a concrete coloring: fibers of the color map after
/// order-isomorphic relabeling of the field onto {0..n-1}.
Identity identity_of(const Coloring& c);

/// Order-sensitive counterpart of identity_of.
VIdentity v_identity_of(const Coloring& c);

/// True iff the canonical forms coincide.
bool equivalent(const Identity& lhs, const Identity& rhs);

/// Partition induced on the pairs inside a vertex subset, re-canonicalized.
/// An empty subset yields the internal size-0 identity.
Identity restrict_to(const Identity& id, const std::vector<Vertex>& subset);
VIdentity restrict_to(const VIdentity& id, const std::vector<Vertex>& subset);

/// Node budget for the pruned canonical search (n > 8); exceeding it
/// raises BoundExceeded.
inline constexpr std::size_t kCanonicalSearchBudget = 4'000'000;

namespace detail {
// Both strategies exposed so they can be cross-checked against each other.
Code canonical_code_exhaustive(std::uint32_t n, const Code& code);
Code canonical_code_search(std::uint32_t n, const Code& code);
}  // namespace detail

}  // namespace idkit

#endif
