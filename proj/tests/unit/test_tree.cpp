#include <doctest.h>

#include "idkit/closure.hpp"
#include "idkit/enumerate.hpp"
#include "idkit/tree.hpp"
#include "oracles.hpp"

using namespace idkit;

namespace {

std::vector<Branch> branches(std::initializer_list<const char*> bs) {
    std::vector<Branch> out;
    for (const char* b : bs) out.push_back(Branch::parse(b));
    return out;
}

}  // namespace

TEST_CASE("meet coloring of the full depth-2 tree is the balanced identity") {
    Coloring c = meet_coloring(branches({"00", "01", "10", "11"}));
    REQUIRE(c.size() == 4);
    CHECK(c.color_at(0, 1) != c.color_at(2, 3));
    CHECK(c.color_at(0, 2) == c.color_at(0, 3));
    CHECK(c.color_at(0, 2) == c.color_at(1, 2));
    CHECK(identity_of(c) == build_Im(1));
}

TEST_CASE("any three branches form the two-and-one pattern") {
    Identity twoOne = Identity::from_classes(3, {{{0, 1}, {0, 2}}, {{1, 2}}});
    for (std::size_t L = 2; L <= 5; ++L) {
        std::vector<Branch> all;
        for (std::size_t w = 0; w < (std::size_t{1} << L); ++w) {
            Branch b;
            for (std::size_t k = 0; k < L; ++k) b.bits.push_back((w >> (L - 1 - k)) & 1);
            all.push_back(b);
        }
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j)
                for (std::size_t k = j + 1; k < all.size(); ++k) {
                    Identity id = identity_of(meet_coloring({all[i], all[j], all[k]}));
                    CHECK(id == twoOne);  // never monochromatic, never rainbow
                }
    }
}

TEST_CASE("single branch gives an empty edge set") {
    Coloring c = meet_coloring(branches({"0110"}));
    CHECK(c.size() == 1);
    CHECK_THROWS_AS(meet_coloring({Branch::parse("01"), Branch::parse("011")}), InvalidInput);
}

TEST_CASE("meet identity sizes and class counts") {
    for (std::uint32_t m = 1; m <= 3; ++m) {
        Identity im = build_Im(m);
        CHECK(im.size() == (1u << (m + 1)));
        CHECK(im.class_count() == (1u << (m + 1)) - 1);
    }
    CHECK_THROWS_AS(build_Im(0), InvalidInput);
    CHECK_THROWS_AS(build_Im(4), BoundExceeded);
}

TEST_CASE("restricting the depth-2 meet identity to one side") {
    Identity i1 = build_Im(1);
    CHECK(restrict_to(i1, {0, 1}).size() == 2);
}

TEST_CASE("special sequence counts match brute force") {
    CHECK(special_sequences(1).size() == 8);
    CHECK(special_sequences(2).size() == 64);
    CHECK(testing::brute_force_special_count(1) == 8);
    CHECK(testing::brute_force_special_count(2) == 64);
    CHECK(special_sequences(3).size() == testing::brute_force_special_count(3));
}

TEST_CASE("every enumerated special sequence validates") {
    for (std::uint32_t m = 1; m <= 3; ++m)
        for (const auto& s : special_sequences(m)) CHECK(s.valid());
}

TEST_CASE("singleton classes of small patterns") {
    Identity mono3 = Identity::from_classes(3, {{{0, 1}, {0, 2}, {1, 2}}});
    Identity rainbow3 = Identity::from_classes(3, {{{0, 1}}, {{0, 2}}, {{1, 2}}});
    CHECK(singleton_classes(mono3).empty());
    CHECK(singleton_classes(rainbow3).size() == 3);

    // the three-branch meet pattern has exactly one singleton
    auto seqs = special_sequences(1);
    for (const auto& s : seqs) {
        std::vector<Branch> first3(s.entries.begin(), s.entries.begin() + 3);
        Identity id = identity_of(meet_coloring(first3));
        CHECK(singleton_classes(id).size() == 1);
    }
}

TEST_CASE("unique-color-pair claim holds for m up to 3") {
    for (std::uint32_t m = 1; m <= 3; ++m) {
        auto rep = verify_t2_pair_claim(m);
        CHECK(rep.pass());
        CHECK(rep.sequenceCount == special_sequences(m).size());
        // the report carries one profile per sequence
        CHECK(rep.profiles.size() == rep.sequenceCount);
        for (const auto& p : rep.profiles) {
            CHECK(p.singletons.size() == 1);
            CHECK(p.singletons.front() == std::pair<int, int>(static_cast<int>(m),
                                                              static_cast<int>(m) + 1));
        }
    }
}

TEST_CASE("restriction via meets agrees with restriction of the full coloring") {
    for (std::uint32_t m = 1; m <= 2; ++m) {
        std::vector<Branch> all;
        for (std::size_t w = 0; w < (std::size_t{1} << (m + 1)); ++w) {
            Branch b;
            for (std::size_t k = 0; k <= m; ++k) b.bits.push_back((w >> (m - k)) & 1);
            all.push_back(b);
        }
        Coloring full = meet_coloring(all);
        for (const auto& s : special_sequences(m)) {
            // positions of the sequence entries inside the lex branch list
            std::vector<std::size_t> pos;
            for (const auto& e : s.entries) {
                std::size_t idx = 0;
                for (std::size_t k = 0; k < e.bits.size(); ++k) idx = idx * 2 + e.bits[k];
                pos.push_back(idx);
            }
            std::sort(pos.begin(), pos.end());
            CHECK(identity_of(full.restrict_positions(pos)) ==
                  identity_of(meet_coloring(s.entries)));
        }
    }
}

TEST_CASE("tree oracle accepts the balanced identity and rejects the triangle") {
    CHECK(tree_realizes(build_Im(1)));
    Identity mono3 = Identity::from_classes(3, {{{0, 1}, {0, 2}, {1, 2}}});
    CHECK_FALSE(tree_realizes(mono3));
}

TEST_CASE("tree oracle accepts every rainbow identity up to the bound") {
    for (std::uint32_t s = 1; s <= 6; ++s) {
        Code rainbow(pair_count(s));
        for (std::size_t t = 0; t < rainbow.size(); ++t) rainbow[t] = static_cast<ClassId>(t);
        CHECK(tree_realizes(Identity::from_partition(s, rainbow)));
    }
    CHECK_THROWS_AS(tree_realizes(Identity::from_partition(7, Code(21, 0)), 6), BoundExceeded);
}

TEST_CASE("doubling steps reproduce the next meet identity") {
    for (std::uint32_t k = 0; k <= 1; ++k) {
        auto rep = verify_s2_step(k);
        CHECK(rep.equal);
        CHECK(rep.resultSize == (1u << (k + 2)));
        CHECK(rep.resultClasses == (1u << (k + 2)) - 1);
    }
}

TEST_CASE("closure step reaches the next level identity") {
    auto out = cl_step({build_Im(1)}, 2, 8);
    CHECK(out.count(build_Im(2)) == 1);
}

TEST_CASE("both amalgam constructions of the same identity canonicalize together") {
    Coloring viaMeet = meet_coloring(branches({"00", "01", "10", "11"}));
    Coloring edge({0, 1}, {0});
    Coloring viaAmalgam = eh_amalgam({edge, edge});
    CHECK(equivalent(identity_of(viaMeet), identity_of(viaAmalgam)));
}
