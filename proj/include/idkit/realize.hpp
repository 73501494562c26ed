#ifndef IDKIT_REALIZE_HPP
#define IDKIT_REALIZE_HPP

#include <optional>
#include <vector>

#include "idkit/coloring.hpp"
#include "idkit/identity.hpp"

namespace idkit {

/**
 * Witness map for a realization: injective on vertex labels, with a flag
 * recording whether it was produced under the order-preserving contract.
 */
struct Embedding {
    std::vector<std::pair<Vertex, Vertex>> map;  // (source label, target label)
    bool orderPreserving = false;

    std::optional<Vertex> image_of(Vertex source) const {
        for (const auto& [s, t] : map)
            if (s == source) return t;
        return std::nullopt;
    }
};

/// f realizes g: some injection sends equal-class pairs of g to
/// equal-colored pairs of f. Nothing is required of unequal pairs.
std::optional<Embedding> realizes(const Coloring& f, const Identity& g);
std::optional<Embedding> realizes(const Coloring& f, const Coloring& g);

/// Identity-level realization (g subidentity of f).
std::optional<Embedding> realizes(const Identity& f, const Identity& g);

/// Order-preserving variant.
std::optional<Embedding> v_realizes(const Coloring& f, const VIdentity& g);

/// Every embedding of the partition `code` (on `size` vertices, class ids
/// in first-appearance form) into f. Source vertices are 0..size-1;
/// targets reported as f's field labels.
std::vector<Embedding> find_all_embeddings(const Coloring& f, std::uint32_t size,
                                           const Code& code, bool orderPreserving = false);

}  // namespace idkit

#endif
