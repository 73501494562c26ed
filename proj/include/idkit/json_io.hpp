#ifndef IDKIT_JSON_IO_HPP
#define IDKIT_JSON_IO_HPP

#include <json.hpp>

#include "idkit/closure.hpp"
#include "idkit/forcing.hpp"
#include "idkit/identity.hpp"
#include "idkit/realize.hpp"
#include "idkit/tree.hpp"
#include "idkit/verify.hpp"

namespace idkit {

// Insertion-ordered values keep serialized output byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const Identity& id);
Json to_json(const VIdentity& id);
Json to_json(const Coloring& c);
Json to_json(const Embedding& e);
Json to_json(const Trace& t);
Json to_json(const Condition& c);
Json to_json(const CatalogEntry& e, ClassTag tag);
Json to_json(const ClassCatalog& cat);

Json to_json(const PairClaimReport& r);
Json to_json(const AmalgamStepReport& r);
Json to_json(const QqReport& r);
Json to_json(const KernelReport& r);
Json to_json(const TreeIdmReport& r);
Json to_json(const CoherenceReport& r);
Json to_json(const ValidationReport& r);

Identity identity_from_json(const Json& j);
VIdentity v_identity_from_json(const Json& j);
Coloring coloring_from_json(const Json& j);
Trace trace_from_json(const Json& j);
ConditionPtr condition_from_json(const Json& j);

/// Raw-partition form {"size": n, "classes": [...]} without canonical
/// requirements; returns the class-per-pair code.
std::pair<std::uint32_t, Code> partition_from_json(const Json& j);

}  // namespace idkit

#endif
