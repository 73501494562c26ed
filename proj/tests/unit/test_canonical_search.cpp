// Property coverage for the pruned canonical search, which only runs
// above 8 vertices where no exhaustive cross-check is feasible. The
// load-bearing property is permutation invariance: relabeling the
// vertices must never change the canonical form.

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "idkit/closure.hpp"
#include "idkit/identity.hpp"
#include "idkit/tree.hpp"
#include "oracles.hpp"

using namespace idkit;

namespace {

Code permuted(const Code& code, std::uint32_t n, const std::vector<std::uint32_t>& perm) {
    Code out(code.size());
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) {
            std::uint32_t a = perm[i], b = perm[j];
            if (a > b) std::swap(a, b);
            out[pair_index(std::min(i, j), std::max(i, j), n)] = code[pair_index(a, b, n)];
        }
    return out;
}

void check_permutation_invariance(const Coloring& f, std::mt19937& rng, int perms) {
    const auto n = static_cast<std::uint32_t>(f.size());
    Code base = f.partition_code();
    Identity canon = Identity::from_partition(n, base);
    // idempotence at full size
    CHECK(Identity::from_partition(n, canon.code()) == canon);

    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int t = 0; t < perms; ++t) {
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(Identity::from_partition(n, permuted(base, n, perm)) == canon);
    }
}

}  // namespace

TEST_CASE("search agrees with exhaustive minimization on every size-5 partition") {
    for (const Code& raw : testing::all_partitions(5)) {
        Code rel = relabel_first_appearance(raw);
        CHECK(detail::canonical_code_exhaustive(5, rel) ==
              detail::canonical_code_search(5, rel));
    }
}

TEST_CASE("search agrees with exhaustive minimization on random size-9 partitions") {
    std::mt19937 rng(31337);
    for (int t = 0; t < 12; ++t) {
        Code raw(pair_count(9));
        std::uniform_int_distribution<int> d(0, t % 2 ? 2 : 5);  // coarse and fine palettes
        for (auto& c : raw) c = static_cast<ClassId>(d(rng));
        Code rel = relabel_first_appearance(raw);
        CHECK(detail::canonical_code_exhaustive(9, rel) == detail::canonical_code_search(9, rel));
    }
}

TEST_CASE("canonical form is permutation-invariant on random large partitions") {
    std::mt19937 rng(4242);
    for (std::uint32_t n : {9u, 10u, 12u, 14u}) {
        for (int cases = 0; cases < 4; ++cases) {
            std::vector<Vertex> field(n);
            std::iota(field.begin(), field.end(), 0);
            std::uniform_int_distribution<Color> d(0, 3 + cases);
            std::vector<Color> colors(pair_count(n));
            for (auto& c : colors) c = d(rng);
            check_permutation_invariance(Coloring(field, colors), rng, 6);
        }
    }
}

TEST_CASE("canonical form is permutation-invariant on meet colorings") {
    // Tree meet structures exercise the tied-group branches: sibling
    // subtrees of equal size are indistinguishable until deep rows.
    std::mt19937 rng(777);
    for (int t = 0; t < 8; ++t) {
        std::uniform_int_distribution<std::size_t> depthDist(4, 5);
        std::size_t L = depthDist(rng);
        std::vector<Branch> all;
        for (std::size_t w = 0; w < (std::size_t{1} << L); ++w) {
            Branch b;
            for (std::size_t k = 0; k < L; ++k) b.bits.push_back((w >> (L - 1 - k)) & 1);
            all.push_back(std::move(b));
        }
        std::shuffle(all.begin(), all.end(), rng);
        std::uniform_int_distribution<std::size_t> sizeDist(9, 13);
        all.resize(sizeDist(rng));
        check_permutation_invariance(meet_coloring(all), rng, 6);
    }
}

TEST_CASE("canonical form is permutation-invariant on amalgam colorings") {
    std::mt19937 rng(555);
    Coloring edge({0, 1}, {0});
    Coloring tri({0, 1, 2}, {0, 0, 1});
    for (int t = 0; t < 6; ++t) {
        std::vector<Coloring> seq;
        std::uniform_int_distribution<int> len(3, 4);
        int k = len(rng);
        for (int i = 0; i < k; ++i) seq.push_back(i % 2 ? tri : edge);
        check_permutation_invariance(eh_amalgam(seq), rng, 6);
    }
}

TEST_CASE("the 16-vertex meet identity canonicalizes consistently from shuffled input") {
    Identity i3 = build_Im(3);
    std::mt19937 rng(99);
    std::vector<std::uint32_t> perm(16);
    std::iota(perm.begin(), perm.end(), 0);
    for (int t = 0; t < 5; ++t) {
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(Identity::from_partition(16, permuted(i3.code(), 16, perm)) == i3);
    }
}
