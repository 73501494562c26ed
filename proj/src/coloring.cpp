#include "idkit/coloring.hpp"

#include <algorithm>
#include <array>

namespace idkit {

Coloring::Coloring(std::vector<Vertex> field, std::vector<Color> colors)
    : field_(std::move(field)), colors_(std::move(colors)) {
    if (field_.empty()) throw InvalidInput("Coloring: field must be nonempty");
    if (field_.size() > kMaxVertices) throw InvalidInput("Coloring: field too large");
    if (!std::is_sorted(field_.begin(), field_.end()) ||
        std::adjacent_find(field_.begin(), field_.end()) != field_.end())
        throw InvalidInput("Coloring: field must be strictly increasing");
    if (colors_.size() != pair_count(field_.size()))
        throw InvalidInput("Coloring: need exactly one color per pair");
}

Coloring Coloring::from_triplets(std::vector<Vertex> field,
                                 const std::vector<std::array<std::uint64_t, 3>>& triplets) {
    Coloring c;
    c.field_ = std::move(field);
    if (c.field_.empty()) throw InvalidInput("Coloring: field must be nonempty");
    if (!std::is_sorted(c.field_.begin(), c.field_.end()) ||
        std::adjacent_find(c.field_.begin(), c.field_.end()) != c.field_.end())
        throw InvalidInput("Coloring: field must be strictly increasing");
    const std::size_t n = c.field_.size();
    c.colors_.assign(pair_count(n), 0);
    std::vector<bool> seen(pair_count(n), false);
    for (const auto& t : triplets) {
        auto pi = c.position_of(static_cast<Vertex>(t[0]));
        auto pj = c.position_of(static_cast<Vertex>(t[1]));
        if (!pi || !pj || *pi == *pj)
            throw InvalidInput("Coloring: triplet endpoints must be distinct field labels");
        std::size_t i = std::min(*pi, *pj), j = std::max(*pi, *pj);
        std::size_t idx = pair_index(i, j, n);
        if (seen[idx]) throw InvalidInput("Coloring: duplicate pair in triplets");
        seen[idx] = true;
        c.colors_[idx] = static_cast<Color>(t[2]);
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        throw InvalidInput("Coloring: triplets must cover every pair");
    return c;
}

std::optional<std::size_t> Coloring::position_of(Vertex label) const {
    auto it = std::lower_bound(field_.begin(), field_.end(), label);
    if (it == field_.end() || *it != label) return std::nullopt;
    return static_cast<std::size_t>(it - field_.begin());
}

Color Coloring::color_at(std::size_t posI, std::size_t posJ) const {
    if (posI == posJ || posI >= field_.size() || posJ >= field_.size())
        throw InvalidInput("Coloring::color_at: bad positions");
    if (posI > posJ) std::swap(posI, posJ);
    return colors_[pair_index(posI, posJ, field_.size())];
}

Color Coloring::color_of(Vertex labelI, Vertex labelJ) const {
    auto pi = position_of(labelI);
    auto pj = position_of(labelJ);
    if (!pi || !pj) throw InvalidInput("Coloring::color_of: labels not in field");
    return color_at(*pi, *pj);
}

Color Coloring::fresh_color() const {
    Color fresh = 0;
    for (Color c : colors_)
        if (c >= fresh) fresh = c + 1;
    return fresh;
}

Coloring Coloring::restrict_positions(const std::vector<std::size_t>& positions) const {
    Coloring out;
    if (positions.empty()) throw InvalidInput("restrict_positions: empty subset");
    if (!std::is_sorted(positions.begin(), positions.end()) ||
        std::adjacent_find(positions.begin(), positions.end()) != positions.end())
        throw InvalidInput("restrict_positions: positions must be strictly increasing");
    const std::size_t m = positions.size();
    out.field_.reserve(m);
    for (std::size_t p : positions) out.field_.push_back(field_.at(p));
    out.colors_.reserve(pair_count(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            out.colors_.push_back(color_at(positions[i], positions[j]));
    return out;
}

Code Coloring::partition_code() const {
    Code code(colors_.size());
    std::vector<std::pair<Color, ClassId>> seen;  // color -> class id, small linear map
    for (std::size_t t = 0; t < colors_.size(); ++t) {
        Color c = colors_[t];
        auto it = std::find_if(seen.begin(), seen.end(),
                               [c](const auto& e) { return e.first == c; });
        if (it == seen.end()) {
            ClassId id = static_cast<ClassId>(seen.size());
            seen.emplace_back(c, id);
            code[t] = id;
        } else {
            code[t] = it->second;
        }
    }
    return code;
}

}  // namespace idkit
