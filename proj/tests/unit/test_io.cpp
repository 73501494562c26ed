#include <doctest.h>

#include <filesystem>

#include "idkit/catalog_io.hpp"
#include "idkit/json_io.hpp"

using namespace idkit;

TEST_CASE("identity JSON round trip is byte-stable") {
    Identity id = Identity::from_classes(4, {{{0, 1}, {2, 3}}, {{0, 2}}, {{0, 3}}, {{1, 2}}, {{1, 3}}});
    Json j = to_json(id);
    CHECK(j["size"] == 4);
    Identity back = identity_from_json(j);
    CHECK(back == id);
    CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("non-canonical partition JSON canonicalizes on load") {
    Json j{{"size", 3}, {"classes", Json::array({Json::array({Json::array({0, 2}), Json::array({1, 2})}),
                                                 Json::array({Json::array({0, 1})})})}};
    Identity id = identity_from_json(j);
    Identity expected = Identity::from_classes(3, {{{0, 1}, {0, 2}}, {{1, 2}}});
    CHECK(id == expected);

    VIdentity vid = v_identity_from_json(j);
    CHECK(vid.forget_order() == expected);
    CHECK(to_json(vid) != to_json(id));  // the V-form keeps the original order
}

TEST_CASE("coloring JSON round trip preserves labels and colors") {
    Coloring c({3, 7, 9}, {5, 5, 8});
    Json j = to_json(c);
    Coloring back = coloring_from_json(j);
    CHECK(back == c);
    CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("bad JSON inputs are rejected") {
    CHECK_THROWS(coloring_from_json(Json{{"field", {0, 1}}, {"colors", Json::array()}}));
    CHECK_THROWS(identity_from_json(Json{{"size", 3}, {"classes", Json::array()}}));
}

TEST_CASE("condition JSON keeps the provenance tree") {
    auto q = singleton_condition(0);
    auto p = one_point_extensions(q, 3).front();
    auto res = amalgamate(p, p, DefinabilityOracle::membership());
    REQUIRE(res.status == AmalgamResult::Status::Ok);

    Json j = to_json(*res.condition);
    auto back = condition_from_json(j);
    CHECK(back->coloring == res.condition->coloring);
    CHECK(back->level == res.condition->level);
    CHECK(validate_condition(back, DefinabilityOracle::membership()).valid);
    CHECK(to_json(*back).dump() == j.dump());
}

TEST_CASE("trace JSON round trip replays identically") {
    Trace t{{TraceStep::Op::Duplicate, {0}, 0},
            {TraceStep::Op::Duplicate, {0, 1}, 0},
            {TraceStep::Op::EndDuplicate, {}, 2}};
    Json j = to_json(t);
    Trace back = trace_from_json(j);
    CHECK(replay_trace(back) == replay_trace(t));
}

TEST_CASE("catalog cache round trips through disk") {
    auto dir = std::filesystem::temp_directory_path() / "idkit-cache-test";
    std::filesystem::remove_all(dir);

    ClassCatalog cat = generate_ide(3, 5);
    save_catalog(cat, dir);
    auto loaded = load_catalog(dir, ClassTag::IDE, 3, 5, cat.depthBudget);
    REQUIRE(loaded.has_value());
    CHECK(loaded->entries.size() == cat.entries.size());
    CHECK(loaded->bySize == cat.bySize);
    CHECK(loaded->bySizeV.size() == cat.bySizeV.size());
    for (const auto& [id, entry] : cat.entries) {
        REQUIRE(loaded->entries.count(id));
        CHECK(loaded->entries.at(id).witness == entry.witness);
    }

    // a different configuration misses the cache
    CHECK_FALSE(load_catalog(dir, ClassTag::IDE, 4, 5, cat.depthBudget).has_value());
    CHECK_FALSE(load_catalog(dir, ClassTag::IDM, 3, 5, cat.depthBudget).has_value());

    // one-point and full-tuple catalogs never share a cache slot
    ClassCatalog onePoint = generate_idm(3, 5, 0, true);
    save_catalog(onePoint, dir);
    CHECK_FALSE(load_catalog(dir, ClassTag::IDM, 3, 5, onePoint.depthBudget).has_value());
    auto p1 = load_catalog(dir, ClassTag::IDM, 3, 5, onePoint.depthBudget, true);
    REQUIRE(p1.has_value());
    CHECK(p1->onePointOnly);
    std::filesystem::remove_all(dir);
}
