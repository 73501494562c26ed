#include "idkit/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_set>

#include "idkit/json_io.hpp"

namespace idkit {

Code sequence_restriction_code(const SpecialSequence& seq) {
    const std::size_t n = seq.entries.size();
    Code raw(pair_count(n), 0);
    std::vector<std::pair<std::size_t, std::string>> nodes;  // meet prefix -> class
    auto class_of = [&](const std::string& prefix) -> ClassId {
        for (std::size_t t = 0; t < nodes.size(); ++t)
            if (nodes[t].second == prefix) return static_cast<ClassId>(t);
        nodes.emplace_back(nodes.size(), prefix);
        return static_cast<ClassId>(nodes.size() - 1);
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::size_t ml = Branch::meet_length(seq.entries[i], seq.entries[j]);
            raw[pair_index(i, j, n)] = class_of(seq.entries[i].str().substr(0, ml));
        }
    return relabel_first_appearance(raw);
}

namespace {

std::string seq_string(const SpecialSequence& seq) {
    std::string s;
    for (std::size_t i = 0; i < seq.entries.size(); ++i) {
        if (i) s.push_back(',');
        s += seq.entries[i].str();
    }
    return s;
}

// Distinct restriction patterns with one representative sequence each;
// all sequences of one m share the pattern, but we do not rely on that.
std::vector<std::pair<Code, const SpecialSequence*>> distinct_patterns(
    const std::vector<SpecialSequence>& seqs) {
    std::vector<std::pair<Code, const SpecialSequence*>> out;
    for (const auto& s : seqs) {
        Code c = sequence_restriction_code(s);
        bool found = false;
        for (const auto& [pc, rep] : out)
            if (pc == c) {
                found = true;
                break;
            }
        if (!found) out.emplace_back(std::move(c), &s);
    }
    return out;
}

}  // namespace

QqReport verify_lemma_qq(std::uint32_t m, Vertex universe, std::uint32_t depth,
                         const DefinabilityOracle& oracle, const GenLimits& limits) {
    QqReport rep;
    rep.m = m;
    rep.universe = universe;
    rep.depth = depth;
    rep.oracle = oracle.name();

    auto gen = generate_P(depth, universe, oracle, limits);
    rep.truncated = gen.truncated;
    rep.conditions = gen.conditions.size();

    auto seqs = special_sequences(m);
    rep.sequences = seqs.size();
    auto patterns = distinct_patterns(seqs);
    rep.distinctPatterns = patterns.size();
    const std::uint32_t jSize = m + 2;

    for (const auto& q : gen.conditions) {
        for (const auto& p : one_point_extensions(q, universe)) {
            ++rep.extensions;
            const Vertex newPoint = p->provenance.newPoint;
            for (const auto& [code, seqRep] : patterns) {
                auto embs = find_embeddings(*p, jSize, code);
                rep.embeddingsChecked += embs.size();
                for (const auto& e : embs) {
                    bool insideParent = true;
                    for (const auto& [s, t] : e.map)
                        if (t == newPoint) insideParent = false;
                    if (!insideParent) {
                        QqViolation v;
                        v.condition = to_json(*p).dump();
                        v.sequence = seq_string(*seqRep);
                        v.embedding = e.map;
                        rep.violations.push_back(std::move(v));
                    }
                }
            }
        }
    }
    return rep;
}

KernelReport verify_t2_kernel(std::uint32_t m, Vertex universe, std::uint32_t depth,
                              const std::vector<DefinabilityOracle>& oracles,
                              const GenLimits& limits) {
    KernelReport rep;
    rep.m = m;
    rep.universe = universe;
    rep.depth = depth;

    auto seqs = special_sequences(m);
    auto patterns = distinct_patterns(seqs);
    const std::uint32_t jSize = m + 2;

    for (const auto& oracle : oracles) {
        KernelOracleReport orep;
        orep.oracle = oracle.name();

        auto gen = generate_P(depth, universe, oracle, limits);
        orep.truncated = gen.truncated;
        orep.conditions = gen.conditions.size();

        for (const auto& p : gen.conditions) {
            if (validate_condition(p, oracle).valid) ++orep.validated;

            // Cross-pair uniqueness, rechecked directly on amalgams.
            if (p->provenance.kind == Provenance::Kind::Amalgam) {
                const auto& l = p->provenance.left->coloring;
                const auto& r = p->provenance.right->coloring;
                std::map<Color, std::size_t> count;
                const auto& u = p->u();
                for (std::size_t i = 0; i < u.size(); ++i)
                    for (std::size_t j = i + 1; j < u.size(); ++j) {
                        bool in0 = l.position_of(u[i]) && l.position_of(u[j]);
                        bool in1 = r.position_of(u[i]) && r.position_of(u[j]);
                        if (in0 || in1) continue;
                        if (++count[p->coloring.color_at(i, j)] > 1) ++orep.crossPairViolations;
                    }
            }

            SideCondition side{&oracle, m};
            for (const auto& [code, seqRep] : patterns) {
                auto embs = find_embeddings(*p, jSize, code, side);
                orep.embeddingsChecked += embs.size();
                for (const auto& e : embs) {
                    KernelHit hit;
                    hit.condition = to_json(*p).dump();
                    hit.sequence = seq_string(*seqRep);
                    hit.embedding = e.map;
                    hit.provenance = to_json(*p)["provenance"].dump();
                    orep.hits.push_back(std::move(hit));
                }
            }
        }
        rep.perOracle.push_back(std::move(orep));
    }
    return rep;
}

TreeIdmReport verify_tree_idm(std::uint32_t maxSize, std::uint32_t witnessBound,
                              const SearchLimits& limits) {
    TreeIdmReport rep;
    rep.maxSize = maxSize;
    rep.witnessBound = witnessBound;

    ClassCatalog cat = generate_idm(maxSize, witnessBound, 0, false, limits);
    rep.catalogComplete = cat.complete;

    for (std::uint32_t sz = 1; sz <= maxSize; ++sz) {
        for (const Identity& id : enumerate_identities(sz, std::max(sz, kDefaultEnumerationBound))) {
            ++rep.identities;
            bool tree = tree_realizes(id);
            bool idm = cat.contains(id);
            if (tree == idm)
                ++rep.agreements;
            else
                rep.disagreements.push_back(TreeIdmRow{to_json(id).dump(), tree, idm});
        }
    }
    return rep;
}

CoherenceReport verify_duplication_amalgam_coherence(std::size_t cases, std::uint64_t seed) {
    CoherenceReport rep;
    rep.cases = cases;
    rep.seed = seed;
    std::mt19937_64 rng(seed);

    auto oracle = DefinabilityOracle::membership();

    for (std::size_t t = 0; t < cases; ++t) {
        // Random coloring on 2..5 vertices over a small palette, random
        // nonempty tuple.
        std::uniform_int_distribution<std::size_t> sizeDist(2, 5);
        const std::size_t n = sizeDist(rng);
        std::vector<Vertex> field(n);
        for (std::size_t i = 0; i < n; ++i) field[i] = static_cast<Vertex>(i);
        std::uniform_int_distribution<Color> colDist(0, 2);
        std::vector<Color> colors(pair_count(n));
        for (auto& c : colors) c = colDist(rng);
        Coloring f(field, colors);

        std::uniform_int_distribution<std::size_t> kDist(1, n);
        const std::size_t k = kDist(rng);
        std::vector<Vertex> pool(field);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<Vertex> tuple(pool.begin(), pool.begin() + k);

        Identity viaDup = identity_of(duplicate(f, tuple));

        // Amalgam route: spread the field over even labels, park each
        // copy right above its original so the sorted matching is the
        // twin map, and deny the copies through the oracle.
        std::vector<Vertex> u0;
        for (Vertex v : field) u0.push_back(2 * v);
        std::vector<Color> c0(colors);
        auto p0 = std::make_shared<Condition>(Coloring(u0, c0));

        std::vector<Vertex> sortedTuple(tuple);
        std::sort(sortedTuple.begin(), sortedTuple.end());
        std::vector<Vertex> u1;
        for (Vertex v : field)
            u1.push_back(std::binary_search(sortedTuple.begin(), sortedTuple.end(), v)
                             ? 2 * v + 1
                             : 2 * v);
        std::vector<Color> c1(colors);
        auto p1 = std::make_shared<Condition>(Coloring(u1, c1));

        auto res = amalgamate(p0, p1, oracle);
        bool ok = res.status == AmalgamResult::Status::Ok &&
                  equivalent(identity_of(res.condition->coloring), viaDup);
        if (ok)
            ++rep.passed;
        else
            rep.failures.push_back("case " + std::to_string(t));
    }
    return rep;
}

}  // namespace idkit
