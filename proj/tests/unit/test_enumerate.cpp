#include <doctest.h>

#include "idkit/enumerate.hpp"
#include "idkit/realize.hpp"
#include "oracles.hpp"

using namespace idkit;

TEST_CASE("identity counts at small sizes") {
    CHECK(enumerate_identities(1).size() == 1);
    CHECK(enumerate_identities(2).size() == 1);
    CHECK(enumerate_identities(3).size() == 3);
}

TEST_CASE("size-4 count matches the orbit-count oracle") {
    CHECK(enumerate_identities(4).size() == testing::orbit_count(4));
}

TEST_CASE("enumeration output is canonical, deterministic and deduplicated") {
    auto a = enumerate_identities(4);
    auto b = enumerate_identities(4);
    CHECK(a == b);
    for (std::size_t t = 0; t + 1 < a.size(); ++t) CHECK(a[t] < a[t + 1]);
    for (const Identity& id : a)
        CHECK(Identity::from_partition(4, id.code()) == id);
}

TEST_CASE("sizes beyond the configured bound are rejected") {
    CHECK_THROWS_AS(enumerate_identities(7, 6), BoundExceeded);
    CHECK_THROWS_AS(enumerate_identities(0), InvalidInput);
}

TEST_CASE("rainbow coloring realizes exactly the all-singleton identities") {
    Coloring rainbow({0, 1, 2}, {0, 1, 2});
    auto ids = realized_identities(rainbow, 3);
    CHECK(ids.size() == 3);
    for (const Identity& id : ids) CHECK(id.class_count() == pair_count(id.size()));
}

TEST_CASE("monochromatic coloring realizes every identity of fitting size") {
    Coloring mono({0, 1, 2}, {7, 7, 7});
    auto ids = realized_identities(mono, 3);
    CHECK(ids.size() == 5);  // 1 + 1 + 3
}

TEST_CASE("maxSize one yields only the single-vertex identity") {
    Coloring f({0, 1, 2, 3}, {0, 1, 2, 0, 1, 2});
    auto ids = realized_identities(f, 1);
    REQUIRE(ids.size() == 1);
    CHECK(ids.begin()->size() == 1);
}

TEST_CASE("maxSize above the field is rejected") {
    Coloring f({0, 1}, {0});
    CHECK_THROWS_AS(realized_identities(f, 3), InvalidInput);
}

TEST_CASE("realized identities refine the induced partition of their witness subset") {
    Coloring f({0, 1, 2, 3}, {1, 1, 2, 1, 2, 3});
    auto ids = realized_identities(f, 3);
    for (const Identity& id : ids) {
        if (id.size() == 0) continue;
        CHECK(realizes(f, id).has_value());
        CHECK(testing::brute_force_realizes(f, id.size(), id.code()));
    }
}

TEST_CASE("refinements_of enumerates exactly the finer partitions") {
    // one block of three pairs: Bell(3) = 5 refinements
    CHECK(refinements_of(Code{0, 0, 0}).size() == 5);
    // two blocks of sizes 2 and 1: Bell(2) * Bell(1) = 2
    CHECK(refinements_of(Code{0, 0, 1}).size() == 2);
    // all singletons: exactly itself
    CHECK(refinements_of(Code{0, 1, 2}).size() == 1);
}
