#ifndef IDKIT_ENUMERATE_HPP
#define IDKIT_ENUMERATE_HPP

#include <set>
#include <vector>

#include "idkit/coloring.hpp"
#include "idkit/identity.hpp"

namespace idkit {

inline constexpr std::uint32_t kDefaultEnumerationBound = 6;

/// All canonical identities of exactly the given size, ascending by
/// canonical code. Sizes above the bound raise BoundExceeded.
std::vector<Identity> enumerate_identities(std::uint32_t size,
                                           std::uint32_t bound = kDefaultEnumerationBound);

/// All canonical identities of size <= maxSize realized by f: induced
/// partitions of vertex subsets together with every refinement.
std::set<Identity> realized_identities(const Coloring& f, std::uint32_t maxSize);

/// Order-preserving counterpart: V-identities realized by f.
std::set<VIdentity> v_realized_identities(const Coloring& f, std::uint32_t maxSize);

/// All partitions refining `base` (same pair set; every base block split
/// arbitrarily), emitted as raw codes.
std::vector<Code> refinements_of(const Code& base);

}  // namespace idkit

#endif
