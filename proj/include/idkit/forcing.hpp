#ifndef IDKIT_FORCING_HPP
#define IDKIT_FORCING_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "idkit/coloring.hpp"
#include "idkit/identity.hpp"
#include "idkit/realize.hpp"

namespace idkit {

/**
 * Monotone, reflexive stand-in for "b lies in a small set definable over
 * the parameters". Implementations must be pure.
 */
class DefinabilityOracle {
public:
    using Fn = std::function<bool(Vertex, const std::vector<Vertex>&)>;

    DefinabilityOracle(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {}

    const std::string& name() const { return name_; }
    bool rel(Vertex b, const std::vector<Vertex>& params) const { return fn_(b, params); }

    static DefinabilityOracle membership();  // b in params
    static DefinabilityOracle interval();    // b <= max(params)
    static DefinabilityOracle always();      // constant true
    /// Constant false; deliberately violates the reflexivity contract and
    /// exists as a stress mode for filtered searches.
    static DefinabilityOracle never();
    /// Base facts plus reflexivity, closed upward under parameter growth.
    static DefinabilityOracle table(std::vector<std::pair<Vertex, std::vector<Vertex>>> facts);

    /// The family acceptance checks run against.
    static std::vector<DefinabilityOracle> builtin_family(Vertex universe);

private:
    std::string name_;
    Fn fn_;
};

/// Exhaustive reflexivity/monotonicity check over a small universe.
struct OracleContractReport {
    bool reflexive = true;
    bool monotone = true;
    std::string detail;
};
OracleContractReport check_oracle_contract(const DefinabilityOracle& o, Vertex universe);

struct Condition;
using ConditionPtr = std::shared_ptr<const Condition>;

struct Provenance {
    enum class Kind { Singleton, OnePoint, Amalgam };
    Kind kind = Kind::Singleton;
    ConditionPtr parent;  // OnePoint
    Vertex newPoint = 0;  // OnePoint
    ConditionPtr left, right;  // Amalgam
    std::vector<std::pair<Vertex, Vertex>> matching;  // Amalgam position iso
};

/// A finite forcing condition: a colored finite subset of the universe
/// with full construction history.
struct Condition {
    explicit Condition(Coloring c) : coloring(std::move(c)) {}

    Coloring coloring;  // field = u
    std::uint32_t level = 0;
    Provenance provenance;

    const std::vector<Vertex>& u() const { return coloring.field(); }
};

ConditionPtr singleton_condition(Vertex point);

/// Extension order: p <= q iff u and c of p extend those of q.
bool extends(const Condition& p, const Condition& q);

struct ValidationReport {
    bool valid = true;
    std::string step;    // first failing step, construction description
    int clause = 0;      // first violated clause number within that step
    std::string detail;
    std::size_t stepsChecked = 0;
};

/// Replay the provenance and re-check every numbered clause of the
/// matching definition at each step.
ValidationReport validate_condition(const ConditionPtr& p, const DefinabilityOracle& oracle);

/// All canonical one-point extensions by a new top point below the
/// universe bound: fresh colors on new pairs, successive naturals.
std::vector<ConditionPtr> one_point_extensions(const ConditionPtr& q, Vertex universe);

struct AmalgamResult {
    enum class Status { Ok, ClauseFailed, Structural };
    Status status = Status::Ok;
    ConditionPtr condition;  // when Ok
    int clause = 0;          // when ClauseFailed
    std::string detail;
};

/// The asymmetric merge of two equal-size conditions: matched positions
/// must agree in color, divergent points of the right side must escape
/// the oracle, and every pair across the two sides is freshly colored.
AmalgamResult amalgamate(const ConditionPtr& p0, const ConditionPtr& p1,
                         const DefinabilityOracle& oracle);

struct GenLimits {
    std::size_t maxConditionsPerLevel = SIZE_MAX;
    std::size_t maxAmalgamPairsPerLevel = SIZE_MAX;
    std::optional<std::uint64_t> seed;  // required once sampling kicks in
};

struct Generation {
    std::vector<ConditionPtr> conditions;       // deduplicated, deterministic order
    std::vector<std::size_t> levelSizes;        // cumulative per level
    bool truncated = false;
};

/// The level hierarchy: level 0 holds the singletons; each next level
/// adds canonical one-point extensions and successful amalgams of pairs,
/// deduplicated up to color renaming.
Generation generate_P(std::uint32_t depth, Vertex universe, const DefinabilityOracle& oracle,
                      const GenLimits& limits = {});

/// Filter for embeddings of a special-sequence restriction: the images
/// of the two tail vertices must be oracle-definable over the images of
/// the first m vertices.
struct SideCondition {
    const DefinabilityOracle* oracle;
    std::uint32_t m;
};

/// All embeddings of the partition (size, code) into the condition's
/// coloring, optionally filtered by the side condition.
std::vector<Embedding> find_embeddings(const Condition& p, std::uint32_t size, const Code& code,
                                       const std::optional<SideCondition>& side = std::nullopt);

std::vector<Embedding> find_embeddings(const Condition& p, const Identity& I,
                                       const std::optional<SideCondition>& side = std::nullopt);

}  // namespace idkit

#endif
