#ifndef IDKIT_COLORING_HPP
#define IDKIT_COLORING_HPP

#include <array>
#include <optional>
#include <vector>

#include "idkit/types.hpp"

namespace idkit {

/**
 * A concrete edge coloring of the complete graph on a finite, strictly
 * increasing vertex set. Colors are plain naturals; only their
 * equality pattern carries meaning.
 *
 * Immutable after construction.
 */
class Coloring {
public:
    /// Single-vertex coloring (no pairs).
    explicit Coloring(Vertex v) : field_{v} {}

    /// field must be strictly increasing; colors indexed by pair position
    /// in lexicographic order over field positions.
    Coloring(std::vector<Vertex> field, std::vector<Color> colors);

    /// Build from (label, label, color) triplets; every pair must appear
    /// exactly once.
    static Coloring from_triplets(std::vector<Vertex> field,
                                  const std::vector<std::array<std::uint64_t, 3>>& triplets);

    std::size_t size() const { return field_.size(); }
    const std::vector<Vertex>& field() const { return field_; }
    Vertex label(std::size_t pos) const { return field_.at(pos); }

    /// Position of a field label, if present.
    std::optional<std::size_t> position_of(Vertex label) const;

    /// Color by field positions (i != j, any order).
    Color color_at(std::size_t posI, std::size_t posJ) const;

    /// Color by field labels.
    Color color_of(Vertex labelI, Vertex labelJ) const;

    const std::vector<Color>& colors() const { return colors_; }

    /// Smallest natural strictly above every used color (0 when empty).
    Color fresh_color() const;

    /// Sub-coloring induced on a set of field positions (kept in order).
    Coloring restrict_positions(const std::vector<std::size_t>& positions) const;

    /// Pair partition of the coloring: class per pair position, classes
    /// numbered by first appearance in lexicographic pair order.
    Code partition_code() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    Coloring() = default;

    std::vector<Vertex> field_;
    std::vector<Color> colors_;
};

}  // namespace idkit

#endif
