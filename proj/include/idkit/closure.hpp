#ifndef IDKIT_CLOSURE_HPP
#define IDKIT_CLOSURE_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "idkit/coloring.hpp"
#include "idkit/enumerate.hpp"
#include "idkit/identity.hpp"

namespace idkit {

/**
 * One step of a witness construction: a duplication of an explicit
 * tuple, or of the final segment of the field.
 */
struct TraceStep {
    enum class Op { Duplicate, EndDuplicate };
    Op op;
    std::vector<Vertex> tuple;  // Duplicate: field labels, in order
    std::uint32_t segLen = 0;   // EndDuplicate
};

using Trace = std::vector<TraceStep>;

/// Extend f by a twin copy of the tuple: copies keep every color toward
/// the rest of the field and among themselves; every original-vs-copy
/// pair gets a globally fresh color, pairwise distinct. Copy labels are
/// allocated above max(field) in tuple order.
Coloring duplicate(const Coloring& f, const std::vector<Vertex>& tuple);

/// Duplication of the final segment, copies appended as the new final
/// segment.
Coloring end_duplicate(const Coloring& f, std::uint32_t segLen);

/// Disjoint relabeled union with disjoint color ranges; every cross pair
/// is colored by the smallest block index it touches, one fresh color
/// per index.
Coloring eh_amalgam(const std::vector<Coloring>& seq);

/// Replay a trace from the one-vertex coloring.
Coloring replay_trace(const Trace& trace);

/// Identities of size <= maxSize arising as eh_amalgam of sequences
/// (with repetition, length <= maxSeqLen) of catalog members.
std::set<Identity> cl_step(const std::set<Identity>& catalog, std::uint32_t maxSeqLen,
                           std::uint32_t maxSize);

enum class ClassTag { IDM, IDE };

struct CatalogEntry {
    Identity id;
    Coloring witness;
    Trace trace;
};

struct SearchLimits {
    std::size_t maxStates = 200'000;
};

/**
 * Bounded closure catalog: witness colorings generated from the
 * one-vertex coloring, identities extracted from them by subset plus
 * refinement.
 */
struct ClassCatalog {
    ClassTag tag = ClassTag::IDM;
    std::uint32_t maxSize = 0;
    std::uint32_t witnessBound = 0;
    std::uint32_t depthBudget = 0;
    bool onePointOnly = false;
    bool complete = true;  // false when a resource budget truncated the search

    std::map<std::uint32_t, std::vector<Identity>> bySize;
    std::map<std::uint32_t, std::vector<VIdentity>> bySizeV;  // IDE only (the ordered class)
    std::map<Identity, CatalogEntry> entries;

    bool contains(const Identity& id) const { return entries.count(id) != 0; }
    std::set<Identity> identity_set(std::uint32_t upToSize) const;
};

/// Breadth-first closure under duplicate starting from the one-vertex
/// coloring. onePointOnly restricts tuples to single vertices.
ClassCatalog generate_idm(std::uint32_t maxSize, std::uint32_t witnessBound,
                          std::uint32_t depthBudget = 0, bool onePointOnly = false,
                          const SearchLimits& limits = {});

/// Same closure under end_duplicate only; both the ordered catalog and
/// its order-forgetting reduct are filled in.
ClassCatalog generate_ide(std::uint32_t maxSize, std::uint32_t witnessBound,
                          std::uint32_t depthBudget = 0, const SearchLimits& limits = {});

struct MembershipResult {
    bool member = false;
    std::optional<CatalogEntry> entry;  // set on positive answers
    std::uint32_t witnessBound = 0;     // echo of the bounds the answer is relative to
    std::uint32_t depthBudget = 0;
};

/// Bounded search for a witness realizing g; negative answers are
/// bound-relative, never absolute.
MembershipResult membership(const Identity& g, ClassTag cls, std::uint32_t witnessBound,
                            std::uint32_t depthBudget, const SearchLimits& limits = {});

}  // namespace idkit

#endif
