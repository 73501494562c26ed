// The desk-scale acceptance criteria behind `verify all`.

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>

#include "idkit/enumerate.hpp"
#include "idkit/realize.hpp"
#include "idkit/verify.hpp"

namespace idkit {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Reference count of size-4 identities: raw enumeration of the 203
// partitions of the 6-edge set, orbits under the 24 vertex permutations.
// Kept deliberately separate from the enumeration code path it checks.
std::size_t brute_orbit_count_size4() {
    constexpr int kPairs = 6;
    static const int pairOf[kPairs][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    auto indexOf = [](int a, int b) {
        if (a > b) std::swap(a, b);
        if (a == 0) return b - 1;
        if (a == 1) return 1 + b;
        return 5;
    };

    std::set<std::string> reps;
    int rg[kPairs] = {0};
    auto canon = [&](const int* part) {
        int perm[4] = {0, 1, 2, 3};
        std::string best;
        do {
            int moved[kPairs];
            for (int t = 0; t < kPairs; ++t)
                moved[t] = part[indexOf(perm[pairOf[t][0]], perm[pairOf[t][1]])];
            int map[kPairs];
            std::fill(map, map + kPairs, -1);
            int next = 0;
            std::string s(kPairs, ' ');
            for (int t = 0; t < kPairs; ++t) {
                if (map[moved[t]] < 0) map[moved[t]] = next++;
                s[t] = static_cast<char>('a' + map[moved[t]]);
            }
            if (best.empty() || s < best) best = s;
        } while (std::next_permutation(perm, perm + 4));
        return best;
    };
    auto rec = [&](auto&& self, int t, int mx) -> void {
        if (t == kPairs) {
            reps.insert(canon(rg));
            return;
        }
        for (int v = 0; v <= mx; ++v) {
            rg[t] = v;
            self(self, t + 1, std::max(mx, v + 1));
        }
    };
    rec(rec, 0, 0);
    return reps.size();
}

Coloring random_coloring(std::mt19937_64& rng, std::size_t maxSize, Color palette) {
    std::uniform_int_distribution<std::size_t> sizeDist(1, maxSize);
    std::size_t n = sizeDist(rng);
    std::vector<Vertex> field(n);
    std::iota(field.begin(), field.end(), 0);
    std::uniform_int_distribution<Color> colDist(0, palette - 1);
    std::vector<Color> colors(pair_count(n));
    for (auto& c : colors) c = colDist(rng);
    return Coloring(field, colors);
}

CriterionResult criterion1() {
    CriterionResult r{1, "identity-counts", false, 0, 60, ""};
    auto t0 = Clock::now();
    bool pass = enumerate_identities(1).size() == 1 && enumerate_identities(2).size() == 1 &&
                enumerate_identities(3).size() == 3;
    std::size_t expected = brute_orbit_count_size4();
    std::size_t got = enumerate_identities(4).size();
    r.pass = pass && got == expected;
    r.seconds = elapsed(t0);
    r.detail = "sizes 1-4: 1,1,3," + std::to_string(got) + " (oracle " +
               std::to_string(expected) + ")";
    return r;
}

CriterionResult criterion2() {
    CriterionResult r{2, "doubling-constructions", true, 0, 300, ""};
    auto t0 = Clock::now();
    for (std::uint32_t k = 0; k <= 2; ++k) {
        auto rep = verify_s2_step(k);
        r.pass = r.pass && rep.equal;
        r.detail += (k ? " " : "") + std::to_string(rep.resultSize) + "v:" +
                    (rep.equal ? "ok" : "NE");
    }
    r.seconds = elapsed(t0);
    return r;
}

CriterionResult criterion3() {
    CriterionResult r{3, "bounded-membership", false, 0, 60, ""};
    auto t0 = Clock::now();
    Identity i1 = build_Im(1);
    auto pos = membership(i1, ClassTag::IDM, 4, 3);
    bool pass = pos.member && pos.entry && pos.entry->witness.size() <= 4 &&
                pos.entry->trace.size() <= 3 && realizes(pos.entry->witness, i1).has_value() &&
                replay_trace(pos.entry->trace) == pos.entry->witness;

    Identity mono3 = Identity::from_classes(3, {{{0, 1}, {0, 2}, {1, 2}}});
    auto neg = membership(mono3, ClassTag::IDM, 8, 6);
    r.pass = pass && !neg.member && !tree_realizes(mono3);
    r.seconds = elapsed(t0);
    r.detail = "trace=" + std::to_string(pos.entry ? pos.entry->trace.size() : 0);
    return r;
}

CriterionResult criterion4() {
    CriterionResult r{4, "tree-oracle-agreement", false, 0, 600, ""};
    auto t0 = Clock::now();
    auto rep = verify_tree_idm(4, 8);
    std::set<Identity> treeSet;
    ClassCatalog cat = generate_idm(4, 8);
    for (std::uint32_t s = 1; s <= 4; ++s)
        for (const Identity& id : enumerate_identities(s))
            if (tree_realizes(id)) treeSet.insert(id);
    std::set<Identity> idmSet = cat.identity_set(4);
    r.pass = rep.pass() && treeSet == idmSet && cat.complete;
    r.seconds = elapsed(t0);
    r.detail = std::to_string(rep.agreements) + "/" + std::to_string(rep.identities) +
               " agree, " + std::to_string(idmSet.size()) + " members";
    return r;
}

CriterionResult criterion5() {
    CriterionResult r{5, "end-duplication-inclusion", false, 0, 600, ""};
    auto t0 = Clock::now();
    ClassCatalog ide = generate_ide(5, 8);
    ClassCatalog idm = generate_idm(5, 8);
    bool pass = ide.complete && idm.complete;
    std::size_t checked = 0;
    for (const auto& [id, entry] : ide.entries) {
        ++checked;
        if (!idm.contains(id)) pass = false;
    }
    r.pass = pass;
    r.seconds = elapsed(t0);
    r.detail = std::to_string(checked) + " identities included";
    return r;
}

CriterionResult criterion6() {
    CriterionResult r{6, "special-sequences", false, 0, 60, ""};
    auto t0 = Clock::now();
    bool pass = special_sequences(1).size() == 8 && special_sequences(2).size() == 64;
    r.detail = "counts 8,64; pairs";
    for (std::uint32_t m = 1; m <= 4; ++m) {
        auto rep = verify_t2_pair_claim(m);
        pass = pass && rep.pass();
        r.detail += " m" + std::to_string(m) + "=" + std::to_string(rep.passCount) + "/" +
                    std::to_string(rep.sequenceCount);
    }
    r.pass = pass;
    r.seconds = elapsed(t0);
    return r;
}

CriterionResult criterion7() {
    CriterionResult r{7, "extension-absorption", false, 0, 900, ""};
    auto t0 = Clock::now();
    auto exhaustive = verify_lemma_qq(1, 5, 2, DefinabilityOracle::membership());
    bool pass = exhaustive.pass() && !exhaustive.truncated;

    GenLimits audit;
    audit.maxAmalgamPairsPerLevel = 20000;
    audit.seed = 20260811;
    auto sampled = verify_lemma_qq(1, 8, 3, DefinabilityOracle::membership(), audit);
    r.pass = pass && sampled.pass();
    r.seconds = elapsed(t0);
    r.detail = "exhaustive " + std::to_string(exhaustive.embeddingsChecked) + " + audit " +
               std::to_string(sampled.embeddingsChecked) + " embeddings, " +
               std::to_string(exhaustive.violations.size() + sampled.violations.size()) +
               " violations";
    return r;
}

CriterionResult criterion8() {
    CriterionResult r{8, "oracle-closed-embeddings", false, 0, 900, ""};
    auto t0 = Clock::now();
    auto rep = verify_t2_kernel(1, 5, 2, DefinabilityOracle::builtin_family(5));
    bool pass = rep.pass();
    std::size_t conditions = 0, hits = 0;
    for (const auto& o : rep.perOracle) {
        conditions += o.conditions;
        hits += o.hits.size();
        if (o.truncated) pass = false;
    }
    r.pass = pass;
    r.seconds = elapsed(t0);
    r.detail = std::to_string(conditions) + " conditions over " +
               std::to_string(rep.perOracle.size()) + " oracles, " + std::to_string(hits) +
               " hits";
    return r;
}

CriterionResult criterion9() {
    CriterionResult r{9, "core-algebra", false, 0, 300, ""};
    auto t0 = Clock::now();
    bool pass = true;

    std::mt19937_64 rng(987654321);
    std::size_t premises = 0;
    for (int t = 0; t < 1000; ++t) {
        Coloring f = random_coloring(rng, 5, 2);
        Coloring g = random_coloring(rng, 5, 2);
        Coloring h = random_coloring(rng, 5, 2);
        if (!realizes(f, f) || !realizes(g, g) || !realizes(h, h)) pass = false;
        if (realizes(f, g) && realizes(g, h)) {
            ++premises;
            if (!realizes(f, h)) pass = false;
        }
    }
    if (premises == 0) pass = false;

    std::vector<Identity> all;
    for (std::uint32_t s = 1; s <= 4; ++s)
        for (const Identity& id : enumerate_identities(s)) all.push_back(id);
    for (const Identity& a : all)
        for (const Identity& b : all) {
            bool mutual = realizes(a, b).has_value() && realizes(b, a).has_value();
            if (equivalent(a, b) != mutual) pass = false;
        }

    std::size_t partitions = 0;
    for (std::uint32_t n = 1; n <= 5; ++n) {
        Code rg(pair_count(n), 0);
        auto rec = [&](auto&& self, std::size_t t, ClassId mx) -> void {
            if (t == rg.size()) {
                ++partitions;
                Identity once = Identity::from_partition(n, rg);
                if (Identity::from_partition(n, once.code()) != once) pass = false;
                return;
            }
            for (ClassId v = 0; v <= mx; ++v) {
                rg[t] = v;
                self(self, t + 1, std::max<ClassId>(mx, v + 1));
            }
        };
        if (rg.empty())
            ++partitions;
        else
            rec(rec, 0, 0);
    }
    r.pass = pass;
    r.seconds = elapsed(t0);
    r.detail = std::to_string(premises) + " transitive premises, " + std::to_string(partitions) +
               " partitions idempotent";
    return r;
}

CriterionResult criterion10() {
    CriterionResult r{10, "duplication-amalgam-coherence", false, 0, 120, ""};
    auto t0 = Clock::now();
    auto rep = verify_duplication_amalgam_coherence(100, 20260811);
    r.pass = rep.pass();
    r.seconds = elapsed(t0);
    r.detail = std::to_string(rep.passed) + "/" + std::to_string(rep.cases);
    return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
    return {criterion1(), criterion2(), criterion3(), criterion4(), criterion5(),
            criterion6(), criterion7(), criterion8(), criterion9(), criterion10()};
}

}  // namespace idkit
