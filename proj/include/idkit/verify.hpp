#ifndef IDKIT_VERIFY_HPP
#define IDKIT_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "idkit/closure.hpp"
#include "idkit/forcing.hpp"
#include "idkit/tree.hpp"

namespace idkit {

/// Pair partition of a special sequence's restriction, indexed by
/// sequence positions 0..m+1 (not by branch order), so embeddings carry
/// the sequence roles.
Code sequence_restriction_code(const SpecialSequence& seq);

struct QqViolation {
    std::string condition;   // offending extension, as JSON text
    std::string sequence;
    std::vector<std::pair<Vertex, Vertex>> embedding;
};

struct QqReport {
    std::uint32_t m = 0;
    Vertex universe = 0;
    std::uint32_t depth = 0;
    std::string oracle;
    bool truncated = false;
    std::size_t conditions = 0;
    std::size_t extensions = 0;
    std::size_t sequences = 0;
    std::size_t distinctPatterns = 0;
    std::size_t embeddingsChecked = 0;
    std::vector<QqViolation> violations;
    bool pass() const { return violations.empty(); }
};

/// One-point extensions admit no new embeddings of special-sequence
/// restrictions: every embedding into the extension stays inside the
/// parent. Exhaustive over the generated hierarchy.
QqReport verify_lemma_qq(std::uint32_t m, Vertex universe, std::uint32_t depth,
                         const DefinabilityOracle& oracle, const GenLimits& limits = {});

struct KernelHit {
    std::string condition;
    std::string sequence;
    std::vector<std::pair<Vertex, Vertex>> embedding;
    std::string provenance;
};

struct KernelOracleReport {
    std::string oracle;
    std::size_t conditions = 0;
    std::size_t validated = 0;
    std::size_t crossPairViolations = 0;
    std::size_t embeddingsChecked = 0;
    bool truncated = false;
    std::vector<KernelHit> hits;
};

struct KernelReport {
    std::uint32_t m = 0;
    Vertex universe = 0;
    std::uint32_t depth = 0;
    std::vector<KernelOracleReport> perOracle;
    bool pass() const {
        for (const auto& r : perOracle)
            if (!r.hits.empty() || r.validated != r.conditions || r.crossPairViolations != 0)
                return false;
        return true;
    }
};

/// No generated condition admits an oracle-closed special-sequence
/// embedding (the two tail images definable over the earlier images);
/// additionally every generated condition revalidates and amalgam cross
/// pairs stay uniquely colored.
KernelReport verify_t2_kernel(std::uint32_t m, Vertex universe, std::uint32_t depth,
                              const std::vector<DefinabilityOracle>& oracles,
                              const GenLimits& limits = {});

struct TreeIdmRow {
    std::string identity;  // canonical JSON
    bool tree = false;
    bool idm = false;
};

struct TreeIdmReport {
    std::uint32_t maxSize = 0;
    std::uint32_t witnessBound = 0;
    std::size_t identities = 0;
    std::size_t agreements = 0;
    std::vector<TreeIdmRow> disagreements;
    bool catalogComplete = true;
    bool pass() const { return agreements == identities && catalogComplete; }
};

/// The meet-coloring oracle and bounded duplication closure must accept
/// exactly the same identities up to maxSize.
TreeIdmReport verify_tree_idm(std::uint32_t maxSize, std::uint32_t witnessBound,
                              const SearchLimits& limits = {});

struct CoherenceReport {
    std::size_t cases = 0;
    std::size_t passed = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> failures;
    bool pass() const { return cases == passed; }
};

/// Seeded spot-check that duplication coincides, as an identity, with
/// amalgamating a coloring against its order-isomorphic copy placed on
/// interleaved labels, under an oracle denying the copied points.
CoherenceReport verify_duplication_amalgam_coherence(std::size_t cases, std::uint64_t seed);

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    double budgetSeconds = 0;
    std::string detail;

    bool ok() const { return pass && seconds < budgetSeconds; }
};

/// The full desk-scale acceptance run, in criterion order. The same
/// checks back both the acceptance binary and `verify all`.
std::vector<CriterionResult> run_acceptance();

}  // namespace idkit

#endif
