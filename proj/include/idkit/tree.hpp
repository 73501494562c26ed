#ifndef IDKIT_TREE_HPP
#define IDKIT_TREE_HPP

#include <string>
#include <vector>

#include "idkit/coloring.hpp"
#include "idkit/identity.hpp"

namespace idkit {

/// A branch of the complete binary tree at a fixed depth: its bit word.
struct Branch {
    std::vector<std::uint8_t> bits;

    static Branch parse(const std::string& bitString);
    std::string str() const;

    /// Length of the longest common prefix.
    static std::size_t meet_length(const Branch& x, const Branch& y);

    friend bool operator==(const Branch&, const Branch&) = default;
    friend auto operator<=>(const Branch&, const Branch&) = default;
};

/// Branches eta_0..eta_{m+1} of length m+1 with |eta_i ^ eta_{i+1}| = i.
struct SpecialSequence {
    std::vector<Branch> entries;

    bool valid() const;
};

inline constexpr std::uint32_t kDefaultImBound = 3;

/// Coloring on the branch set (lex order, relabeled to 0..n-1): the color
/// of a pair is the canonical index of the pair's meet, assigned by first
/// appearance. All branches must share one length.
Coloring meet_coloring(const std::vector<Branch>& branches);

/// The meet identity on all 2^{m+1} branches of length m+1:
/// 2^{m+1} vertices, 2^{m+1} - 1 classes.
Identity build_Im(std::uint32_t m, std::uint32_t bound = kDefaultImBound);

/// Exhaustive, deterministic enumeration (lex along the chain).
std::vector<SpecialSequence> special_sequences(std::uint32_t m);

/// Pairs alone in their class.
std::vector<VertexPair> singleton_classes(const Identity& id);

/// True iff some leaf-labeled binary meet-topology on size(g) leaves
/// realizes g; the independent membership oracle at small size.
bool tree_realizes(const Identity& g, std::uint32_t sizeBound = 6);

/// Per-sequence outcome of the unique-color-pair check.
struct SequenceProfile {
    std::vector<std::string> entries;
    std::vector<std::size_t> blockSizes;           // restricted partition profile
    std::vector<std::pair<int, int>> singletons;   // singleton pairs, by sequence position
    bool pass = false;
};

struct PairClaimReport {
    std::uint32_t m = 0;
    std::size_t sequenceCount = 0;
    std::size_t passCount = 0;
    std::vector<SequenceProfile> profiles;
    bool pass() const { return passCount == sequenceCount; }
};

/// For every special sequence, the restriction of I_m to it must have a
/// unique singleton class, {eta_m, eta_{m+1}}.
PairClaimReport verify_t2_pair_claim(std::uint32_t m);

struct AmalgamStepReport {
    std::uint32_t k = 0;
    std::uint32_t resultSize = 0;
    std::size_t resultClasses = 0;
    bool equal = false;
};

/// The doubling construction: the end-homogeneous amalgam of two copies
/// of I_k (two-point trivial identity for k = 0) equals I_{k+1}.
AmalgamStepReport verify_s2_step(std::uint32_t k);

}  // namespace idkit

#endif
