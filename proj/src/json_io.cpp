#include "idkit/json_io.hpp"

namespace idkit {

namespace {

Json classes_json(std::uint32_t n, const std::vector<std::vector<VertexPair>>& blocks) {
    Json arr = Json::array();
    for (const auto& block : blocks) {
        Json b = Json::array();
        for (const auto& p : block) b.push_back(Json::array({p.a, p.b}));
        arr.push_back(std::move(b));
    }
    (void)n;
    return arr;
}

}  // namespace

Json to_json(const Identity& id) {
    return Json{{"size", id.size()}, {"classes", classes_json(id.size(), id.classes())}};
}

Json to_json(const VIdentity& id) {
    return Json{{"size", id.size()}, {"classes", classes_json(id.size(), id.classes())}};
}

Json to_json(const Coloring& c) {
    Json field = Json::array();
    for (Vertex v : c.field()) field.push_back(v);
    Json colors = Json::array();
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            colors.push_back(Json::array({c.label(i), c.label(j), c.color_at(i, j)}));
    return Json{{"field", std::move(field)}, {"colors", std::move(colors)}};
}

Json to_json(const Embedding& e) {
    Json map = Json::array();
    for (const auto& [s, t] : e.map) map.push_back(Json::array({s, t}));
    return Json{{"map", std::move(map)}, {"orderPreserving", e.orderPreserving}};
}

Json to_json(const Trace& t) {
    Json arr = Json::array();
    for (const auto& step : t) {
        if (step.op == TraceStep::Op::Duplicate) {
            Json tuple = Json::array();
            for (Vertex v : step.tuple) tuple.push_back(v);
            arr.push_back(Json{{"op", "dup"}, {"tuple", std::move(tuple)}});
        } else {
            arr.push_back(Json{{"op", "end-dup"}, {"segLen", step.segLen}});
        }
    }
    return arr;
}

namespace {

Json provenance_json(const Condition& c) {
    switch (c.provenance.kind) {
        case Provenance::Kind::Singleton:
            return Json{{"kind", "singleton"}};
        case Provenance::Kind::OnePoint:
            return Json{{"kind", "one-point"},
                        {"newPoint", c.provenance.newPoint},
                        {"parent", to_json(*c.provenance.parent)}};
        case Provenance::Kind::Amalgam: {
            Json matching = Json::array();
            for (const auto& [a, b] : c.provenance.matching)
                matching.push_back(Json::array({a, b}));
            return Json{{"kind", "amalgam"},
                        {"matching", std::move(matching)},
                        {"left", to_json(*c.provenance.left)},
                        {"right", to_json(*c.provenance.right)}};
        }
    }
    return {};
}

}  // namespace

Json to_json(const Condition& c) {
    Json u = Json::array();
    for (Vertex v : c.u()) u.push_back(v);
    Json colors = Json::array();
    const std::size_t n = c.u().size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            colors.push_back(Json::array({c.u()[i], c.u()[j], c.coloring.color_at(i, j)}));
    return Json{{"u", std::move(u)},
                {"colors", std::move(colors)},
                {"level", c.level},
                {"provenance", provenance_json(c)}};
}

Json to_json(const CatalogEntry& e, ClassTag tag) {
    return Json{{"identity", to_json(e.id)},
                {"classes", Json::array({tag == ClassTag::IDM ? "IDM" : "IDE"})},
                {"witness", to_json(e.witness)},
                {"trace", to_json(e.trace)}};
}

Json to_json(const ClassCatalog& cat) {
    Json sizes = Json::object();
    for (const auto& [sz, ids] : cat.bySize) sizes[std::to_string(sz)] = ids.size();
    Json j{{"class", cat.tag == ClassTag::IDM ? "IDM" : "IDE"},
           {"maxSize", cat.maxSize},
           {"witnessBound", cat.witnessBound},
           {"depthBudget", cat.depthBudget},
           {"complete", cat.complete},
           {"countsBySize", std::move(sizes)}};
    if (cat.tag == ClassTag::IDE) {
        Json vsizes = Json::object();
        for (const auto& [sz, ids] : cat.bySizeV) vsizes[std::to_string(sz)] = ids.size();
        j["orderedCountsBySize"] = std::move(vsizes);
    }
    Json entries = Json::array();
    for (const auto& [id, entry] : cat.entries) entries.push_back(to_json(entry, cat.tag));
    j["entries"] = std::move(entries);
    return j;
}

Json to_json(const PairClaimReport& r) {
    Json profiles = Json::array();
    for (const auto& p : r.profiles) {
        Json singles = Json::array();
        for (const auto& [a, b] : p.singletons) singles.push_back(Json::array({a, b}));
        profiles.push_back(Json{{"entries", p.entries},
                                {"blockSizes", p.blockSizes},
                                {"singletons", std::move(singles)},
                                {"pass", p.pass}});
    }
    return Json{{"check", "t2-pairs"},
                {"m", r.m},
                {"sequences", r.sequenceCount},
                {"passed", r.passCount},
                {"pass", r.pass()},
                {"profiles", std::move(profiles)}};
}

Json to_json(const AmalgamStepReport& r) {
    return Json{{"check", "s2"},
                {"k", r.k},
                {"resultSize", r.resultSize},
                {"resultClasses", r.resultClasses},
                {"pass", r.equal}};
}

Json to_json(const QqReport& r) {
    Json viols = Json::array();
    for (const auto& v : r.violations) {
        Json emb = Json::array();
        for (const auto& [s, t] : v.embedding) emb.push_back(Json::array({s, t}));
        viols.push_back(Json{{"condition", Json::parse(v.condition)},
                             {"sequence", v.sequence},
                             {"embedding", std::move(emb)}});
    }
    return Json{{"check", "lemma-qq"},
                {"m", r.m},
                {"universe", r.universe},
                {"depth", r.depth},
                {"oracle", r.oracle},
                {"truncated", r.truncated},
                {"conditions", r.conditions},
                {"extensions", r.extensions},
                {"sequences", r.sequences},
                {"distinctPatterns", r.distinctPatterns},
                {"embeddingsChecked", r.embeddingsChecked},
                {"violations", std::move(viols)},
                {"pass", r.pass()}};
}

Json to_json(const KernelReport& r) {
    Json per = Json::array();
    for (const auto& o : r.perOracle) {
        Json hits = Json::array();
        for (const auto& h : o.hits) {
            Json emb = Json::array();
            for (const auto& [s, t] : h.embedding) emb.push_back(Json::array({s, t}));
            hits.push_back(Json{{"condition", Json::parse(h.condition)},
                                {"sequence", h.sequence},
                                {"embedding", std::move(emb)},
                                {"provenance", Json::parse(h.provenance)}});
        }
        per.push_back(Json{{"oracle", o.oracle},
                           {"conditions", o.conditions},
                           {"validated", o.validated},
                           {"crossPairViolations", o.crossPairViolations},
                           {"embeddingsChecked", o.embeddingsChecked},
                           {"truncated", o.truncated},
                           {"hits", std::move(hits)}});
    }
    return Json{{"check", "t2-kernel"},
                {"m", r.m},
                {"universe", r.universe},
                {"depth", r.depth},
                {"oracles", std::move(per)},
                {"pass", r.pass()}};
}

Json to_json(const TreeIdmReport& r) {
    Json dis = Json::array();
    for (const auto& row : r.disagreements)
        dis.push_back(Json{{"identity", Json::parse(row.identity)},
                           {"tree", row.tree},
                           {"idm", row.idm}});
    return Json{{"check", "tree-idm"},
                {"maxSize", r.maxSize},
                {"witnessBound", r.witnessBound},
                {"identities", r.identities},
                {"agreements", r.agreements},
                {"catalogComplete", r.catalogComplete},
                {"disagreements", std::move(dis)},
                {"pass", r.pass()}};
}

Json to_json(const CoherenceReport& r) {
    return Json{{"check", "dup-amalgam-coherence"},
                {"cases", r.cases},
                {"passed", r.passed},
                {"seed", r.seed},
                {"failures", r.failures},
                {"pass", r.pass()}};
}

Json to_json(const ValidationReport& r) {
    return Json{{"valid", r.valid},
                {"step", r.step},
                {"clause", r.clause},
                {"detail", r.detail},
                {"stepsChecked", r.stepsChecked}};
}

std::pair<std::uint32_t, Code> partition_from_json(const Json& j) {
    std::uint32_t n = j.at("size").get<std::uint32_t>();
    if (n > kMaxVertices) throw InvalidInput("partition: too many vertices");
    Code raw(pair_count(n), 0);
    std::vector<bool> seen(raw.size(), false);
    ClassId cls = 0;
    for (const auto& block : j.at("classes")) {
        for (const auto& pr : block) {
            Vertex a = pr.at(0).get<Vertex>(), b = pr.at(1).get<Vertex>();
            if (a == b || a >= n || b >= n) throw InvalidInput("partition: bad pair");
            if (a > b) std::swap(a, b);
            std::size_t idx = pair_index(a, b, n);
            if (seen[idx]) throw InvalidInput("partition: overlapping blocks");
            seen[idx] = true;
            raw[idx] = cls;
        }
        ++cls;
    }
    for (bool s : seen)
        if (!s) throw InvalidInput("partition: blocks do not cover all pairs");
    return {n, raw};
}

Identity identity_from_json(const Json& j) {
    auto [n, raw] = partition_from_json(j);
    return Identity::from_partition(n, raw);
}

VIdentity v_identity_from_json(const Json& j) {
    auto [n, raw] = partition_from_json(j);
    return VIdentity::from_partition(n, raw);
}

Coloring coloring_from_json(const Json& j) {
    std::vector<Vertex> field;
    for (const auto& v : j.at("field")) field.push_back(v.get<Vertex>());
    std::vector<std::array<std::uint64_t, 3>> triplets;
    for (const auto& t : j.at("colors"))
        triplets.push_back({t.at(0).get<std::uint64_t>(), t.at(1).get<std::uint64_t>(),
                            t.at(2).get<std::uint64_t>()});
    return Coloring::from_triplets(std::move(field), triplets);
}

Trace trace_from_json(const Json& j) {
    Trace t;
    for (const auto& step : j) {
        std::string op = step.at("op").get<std::string>();
        if (op == "dup") {
            TraceStep s{TraceStep::Op::Duplicate, {}, 0};
            for (const auto& v : step.at("tuple")) s.tuple.push_back(v.get<Vertex>());
            t.push_back(std::move(s));
        } else if (op == "end-dup") {
            t.push_back({TraceStep::Op::EndDuplicate, {}, step.at("segLen").get<std::uint32_t>()});
        } else {
            throw InvalidInput("trace: unknown op " + op);
        }
    }
    return t;
}

ConditionPtr condition_from_json(const Json& j) {
    std::vector<Vertex> field;
    for (const auto& v : j.at("u")) field.push_back(v.get<Vertex>());
    std::vector<std::array<std::uint64_t, 3>> triplets;
    for (const auto& t : j.at("colors"))
        triplets.push_back({t.at(0).get<std::uint64_t>(), t.at(1).get<std::uint64_t>(),
                            t.at(2).get<std::uint64_t>()});
    auto c = std::make_shared<Condition>(Coloring::from_triplets(std::move(field), triplets));
    c->level = j.at("level").get<std::uint32_t>();

    const Json& prov = j.at("provenance");
    std::string kind = prov.at("kind").get<std::string>();
    if (kind == "singleton") {
        c->provenance.kind = Provenance::Kind::Singleton;
    } else if (kind == "one-point") {
        c->provenance.kind = Provenance::Kind::OnePoint;
        c->provenance.newPoint = prov.at("newPoint").get<Vertex>();
        c->provenance.parent = condition_from_json(prov.at("parent"));
    } else if (kind == "amalgam") {
        c->provenance.kind = Provenance::Kind::Amalgam;
        c->provenance.left = condition_from_json(prov.at("left"));
        c->provenance.right = condition_from_json(prov.at("right"));
        for (const auto& m : prov.at("matching"))
            c->provenance.matching.emplace_back(m.at(0).get<Vertex>(), m.at(1).get<Vertex>());
    } else {
        throw InvalidInput("condition: unknown provenance kind " + kind);
    }
    return c;
}

}  // namespace idkit
