#include "idkit/tree.hpp"

#include <algorithm>
#include <map>

#include "idkit/closure.hpp"
#include "idkit/realize.hpp"

namespace idkit {

Branch Branch::parse(const std::string& bitString) {
    Branch b;
    b.bits.reserve(bitString.size());
    for (char c : bitString) {
        if (c != '0' && c != '1') throw InvalidInput("Branch: bits must be 0 or 1");
        b.bits.push_back(c == '1');
    }
    return b;
}

std::string Branch::str() const {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
}

std::size_t Branch::meet_length(const Branch& x, const Branch& y) {
    std::size_t k = 0;
    while (k < x.bits.size() && k < y.bits.size() && x.bits[k] == y.bits[k]) ++k;
    return k;
}

bool SpecialSequence::valid() const {
    if (entries.size() < 2) return false;
    const std::size_t len = entries.front().bits.size();
    if (len != entries.size() - 1) return false;  // m+2 entries of length m+1
    for (const auto& e : entries)
        if (e.bits.size() != len) return false;
    for (std::size_t i = 0; i + 1 < entries.size(); ++i)
        if (Branch::meet_length(entries[i], entries[i + 1]) != i) return false;
    return true;
}

Coloring meet_coloring(const std::vector<Branch>& branches) {
    if (branches.empty()) throw InvalidInput("meet_coloring: need at least one branch");
    const std::size_t len = branches.front().bits.size();
    for (const auto& b : branches)
        if (b.bits.size() != len) throw InvalidInput("meet_coloring: mixed branch lengths");

    std::vector<Branch> sorted(branches);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidInput("meet_coloring: duplicate branches");

    const std::size_t n = sorted.size();
    std::vector<Vertex> field(n);
    for (std::size_t i = 0; i < n; ++i) field[i] = static_cast<Vertex>(i);

    std::vector<Color> colors(pair_count(n), 0);
    std::map<std::vector<std::uint8_t>, Color> nodeColor;  // meet prefix, first appearance
    std::size_t t = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::size_t ml = Branch::meet_length(sorted[i], sorted[j]);
            std::vector<std::uint8_t> prefix(sorted[i].bits.begin(),
                                             sorted[i].bits.begin() + ml);
            auto [it, fresh] = nodeColor.try_emplace(std::move(prefix),
                                                     static_cast<Color>(nodeColor.size()));
            colors[t++] = it->second;
        }
    return Coloring(std::move(field), std::move(colors));
}

namespace {

std::vector<Branch> all_branches(std::size_t len) {
    std::vector<Branch> out;
    out.reserve(std::size_t{1} << len);
    for (std::size_t w = 0; w < (std::size_t{1} << len); ++w) {
        Branch b;
        b.bits.resize(len);
        for (std::size_t k = 0; k < len; ++k) b.bits[k] = (w >> (len - 1 - k)) & 1;
        out.push_back(std::move(b));
    }
    return out;
}

}  // namespace

Identity build_Im(std::uint32_t m, std::uint32_t bound) {
    if (m < 1) throw InvalidInput("build_Im: m must be at least 1");
    if (m > bound) throw BoundExceeded("build_Im: m beyond configured bound");
    return identity_of(meet_coloring(all_branches(m + 1)));
}

std::vector<SpecialSequence> special_sequences(std::uint32_t m) {
    if (m < 1) throw InvalidInput("special_sequences: m must be at least 1");
    const std::size_t len = m + 1;
    auto universe = all_branches(len);

    std::vector<SpecialSequence> out;
    SpecialSequence cur;
    auto rec = [&](auto&& self) -> void {
        if (cur.entries.size() == m + 2) {
            out.push_back(cur);
            return;
        }
        if (cur.entries.empty()) {
            for (const Branch& b : universe) {
                cur.entries.push_back(b);
                self(self);
                cur.entries.pop_back();
            }
            return;
        }
        const std::size_t need = cur.entries.size() - 1;
        for (const Branch& b : universe) {
            if (Branch::meet_length(cur.entries.back(), b) != need) continue;
            cur.entries.push_back(b);
            self(self);
            cur.entries.pop_back();
        }
    };
    rec(rec);
    return out;
}

std::vector<VertexPair> singleton_classes(const Identity& id) { return id.singleton_classes(); }

namespace {

// Meet coloring of one ordered binary tree shape: leaves 0..n-1 left to
// right, color of a leaf pair = its lowest branching node.
struct ShapeColoring {
    std::size_t leaves;
    std::vector<Color> colors;  // per leaf pair, lex order
};

// Combine left and right sub-shapes under a new root.
void combine(const ShapeColoring& l, const ShapeColoring& r, std::vector<ShapeColoring>& out) {
    ShapeColoring s;
    s.leaves = l.leaves + r.leaves;
    s.colors.assign(pair_count(s.leaves), 0);
    Color shift = 1;  // 0 is the new root
    for (std::size_t i = 0; i < l.leaves; ++i)
        for (std::size_t j = i + 1; j < l.leaves; ++j)
            s.colors[pair_index(i, j, s.leaves)] =
                l.colors[pair_index(i, j, l.leaves)] + shift;
    Color lMax = 0;
    for (Color c : l.colors) lMax = std::max(lMax, c + 1);
    shift += lMax;
    for (std::size_t i = 0; i < r.leaves; ++i)
        for (std::size_t j = i + 1; j < r.leaves; ++j)
            s.colors[pair_index(l.leaves + i, l.leaves + j, s.leaves)] =
                r.colors[pair_index(i, j, r.leaves)] + shift;
    // Cross pairs meet at the root.
    for (std::size_t i = 0; i < l.leaves; ++i)
        for (std::size_t j = 0; j < r.leaves; ++j)
            s.colors[pair_index(i, l.leaves + j, s.leaves)] = 0;
    out.push_back(std::move(s));
}

std::vector<ShapeColoring> shapes_with_leaves(std::size_t n) {
    std::vector<ShapeColoring> out;
    if (n == 1) {
        out.push_back(ShapeColoring{1, {}});
        return out;
    }
    for (std::size_t l = 1; l < n; ++l) {
        auto lefts = shapes_with_leaves(l);
        auto rights = shapes_with_leaves(n - l);
        for (const auto& ls : lefts)
            for (const auto& rs : rights) combine(ls, rs, out);
    }
    return out;
}

}  // namespace

bool tree_realizes(const Identity& g, std::uint32_t sizeBound) {
    if (g.size() > sizeBound) throw BoundExceeded("tree_realizes: size beyond bound");
    if (g.size() <= 2) return true;
    for (const auto& shape : shapes_with_leaves(g.size())) {
        std::vector<Vertex> field(shape.leaves);
        for (std::size_t i = 0; i < shape.leaves; ++i) field[i] = static_cast<Vertex>(i);
        Coloring c(field, shape.colors);
        if (realizes(c, g)) return true;
    }
    return false;
}

PairClaimReport verify_t2_pair_claim(std::uint32_t m) {
    PairClaimReport rep;
    rep.m = m;
    auto seqs = special_sequences(m);
    rep.sequenceCount = seqs.size();
    rep.profiles.reserve(seqs.size());

    for (const auto& seq : seqs) {
        // Restriction of I_m to the sequence = the meet pattern of its
        // branches; positions follow the branch lex order.
        std::vector<Branch> sorted(seq.entries);
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> posOf(seq.entries.size());  // sequence index -> vertex
        for (std::size_t i = 0; i < seq.entries.size(); ++i)
            posOf[i] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), seq.entries[i]) -
                sorted.begin());

        // Work on the order-sensitive pattern so singleton pairs can be
        // reported by sequence position.
        VIdentity vres = v_identity_of(meet_coloring(seq.entries));

        SequenceProfile prof;
        for (const auto& e : seq.entries) prof.entries.push_back(e.str());
        for (const auto& block : vres.classes()) prof.blockSizes.push_back(block.size());

        std::vector<int> seqIndexOfVertex(seq.entries.size());
        for (std::size_t i = 0; i < seq.entries.size(); ++i) seqIndexOfVertex[posOf[i]] = static_cast<int>(i);

        std::vector<VertexPair> singles;
        {
            Code code = vres.code();
            std::vector<std::size_t> freq(code.size(), 0);
            for (ClassId c : code) ++freq[c];
            std::size_t t = 0;
            const std::uint32_t n = vres.size();
            for (std::uint32_t i = 0; i < n; ++i)
                for (std::uint32_t j = i + 1; j < n; ++j) {
                    if (freq[code[t]] == 1) singles.push_back(VertexPair(i, j));
                    ++t;
                }
        }
        for (const auto& p : singles) {
            int si = seqIndexOfVertex[p.a], sj = seqIndexOfVertex[p.b];
            prof.singletons.emplace_back(std::min(si, sj), std::max(si, sj));
        }
        prof.pass = singles.size() == 1 && prof.singletons.front().first == static_cast<int>(m) &&
                    prof.singletons.front().second == static_cast<int>(m) + 1;
        if (prof.pass) ++rep.passCount;
        rep.profiles.push_back(std::move(prof));
    }
    return rep;
}

AmalgamStepReport verify_s2_step(std::uint32_t k) {
    AmalgamStepReport rep;
    rep.k = k;

    Coloring piece = k == 0 ? Coloring({0, 1}, {0}) : meet_coloring(all_branches(k + 1));
    Identity constructed = identity_of(eh_amalgam({piece, piece}));
    Identity target = build_Im(k + 1);

    rep.resultSize = constructed.size();
    rep.resultClasses = constructed.class_count();
    rep.equal = equivalent(constructed, target);
    return rep;
}

}  // namespace idkit
