#include "idkit/forcing.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace idkit {

DefinabilityOracle DefinabilityOracle::membership() {
    return {"membership", [](Vertex b, const std::vector<Vertex>& a) {
                return std::find(a.begin(), a.end(), b) != a.end();
            }};
}

DefinabilityOracle DefinabilityOracle::interval() {
    return {"interval", [](Vertex b, const std::vector<Vertex>& a) {
                return !a.empty() && b <= *std::max_element(a.begin(), a.end());
            }};
}

DefinabilityOracle DefinabilityOracle::always() {
    return {"always", [](Vertex, const std::vector<Vertex>&) { return true; }};
}

DefinabilityOracle DefinabilityOracle::never() {
    return {"never", [](Vertex, const std::vector<Vertex>&) { return false; }};
}

DefinabilityOracle DefinabilityOracle::table(
    std::vector<std::pair<Vertex, std::vector<Vertex>>> facts) {
    for (auto& [b, over] : facts) std::sort(over.begin(), over.end());
    return {"table", [facts = std::move(facts)](Vertex b, const std::vector<Vertex>& a) {
                if (std::find(a.begin(), a.end(), b) != a.end()) return true;
                for (const auto& [fb, fover] : facts) {
                    if (fb != b) continue;
                    if (std::all_of(fover.begin(), fover.end(), [&](Vertex v) {
                            return std::find(a.begin(), a.end(), v) != a.end();
                        }))
                        return true;
                }
                return false;
            }};
}

std::vector<DefinabilityOracle> DefinabilityOracle::builtin_family(Vertex universe) {
    // The table oracle declares 0 definable over anything.
    std::vector<std::pair<Vertex, std::vector<Vertex>>> facts{{0, {}}};
    (void)universe;
    return {membership(), interval(), table(std::move(facts)), never()};
}

OracleContractReport check_oracle_contract(const DefinabilityOracle& o, Vertex universe) {
    OracleContractReport rep;
    // All parameter sets of size <= 3 over the universe.
    std::vector<std::vector<Vertex>> sets{{}};
    for (Vertex a = 0; a < universe; ++a)
        for (Vertex b = a; b < universe; ++b)
            for (Vertex c = b; c < universe; ++c) {
                std::vector<Vertex> s{a};
                if (b != a) s.push_back(b);
                if (c != b && c != a) s.push_back(c);
                sets.push_back(std::move(s));
            }
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

    for (const auto& s : sets) {
        for (Vertex v : s)
            if (!o.rel(v, s)) {
                rep.reflexive = false;
                rep.detail = "reflexivity fails at b=" + std::to_string(v);
            }
        for (const auto& t : sets) {
            if (!std::includes(t.begin(), t.end(), s.begin(), s.end())) continue;
            for (Vertex b = 0; b < universe; ++b)
                if (o.rel(b, s) && !o.rel(b, t)) {
                    rep.monotone = false;
                    rep.detail = "monotonicity fails at b=" + std::to_string(b);
                }
        }
    }
    return rep;
}

ConditionPtr singleton_condition(Vertex point) {
    auto c = std::make_shared<Condition>(Coloring(point));
    c->level = 0;
    c->provenance.kind = Provenance::Kind::Singleton;
    return c;
}

bool extends(const Condition& p, const Condition& q) {
    for (Vertex v : q.u())
        if (!p.coloring.position_of(v)) return false;
    for (std::size_t i = 0; i < q.u().size(); ++i)
        for (std::size_t j = i + 1; j < q.u().size(); ++j)
            if (p.coloring.color_of(q.u()[i], q.u()[j]) != q.coloring.color_at(i, j))
                return false;
    return true;
}

namespace {

std::string cond_fingerprint(const Condition& c) {
    // Vertex labels verbatim, colors up to renaming.
    std::string k;
    for (Vertex v : c.u()) {
        k.push_back(static_cast<char>(v & 0xff));
        k.push_back(static_cast<char>(v >> 8));
    }
    k.push_back('\xff');
    for (ClassId x : c.coloring.partition_code()) {
        k.push_back(static_cast<char>(x & 0xff));
        k.push_back(static_cast<char>(x >> 8));
    }
    return k;
}

bool colors_fresh_and_distinct(const Coloring& c, const std::vector<std::size_t>& newPairIdx,
                               const std::vector<Color>& oldRange) {
    std::set<Color> seen;
    for (std::size_t idx : newPairIdx) {
        Color col = c.colors()[idx];
        if (std::find(oldRange.begin(), oldRange.end(), col) != oldRange.end()) return false;
        if (!seen.insert(col).second) return false;
    }
    return true;
}

}  // namespace

std::vector<ConditionPtr> one_point_extensions(const ConditionPtr& q, Vertex universe) {
    std::vector<ConditionPtr> out;
    const Vertex top = q->u().back();
    for (Vertex r = top + 1; r < universe; ++r) {
        std::vector<Vertex> field(q->u());
        field.push_back(r);
        const std::size_t n = field.size();
        std::vector<Color> colors(pair_count(n), 0);
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = i + 1; j + 1 < n; ++j)
                colors[pair_index(i, j, n)] = q->coloring.color_at(i, j);
        Color fresh = q->coloring.fresh_color();
        for (std::size_t i = 0; i + 1 < n; ++i)
            colors[pair_index(i, n - 1, n)] = fresh++;

        auto c = std::make_shared<Condition>(Coloring(std::move(field), std::move(colors)));
        c->level = q->level + 1;
        c->provenance.kind = Provenance::Kind::OnePoint;
        c->provenance.parent = q;
        c->provenance.newPoint = r;
        out.push_back(std::move(c));
    }
    return out;
}

AmalgamResult amalgamate(const ConditionPtr& p0, const ConditionPtr& p1,
                         const DefinabilityOracle& oracle) {
    AmalgamResult res;
    const auto& u0 = p0->u();
    const auto& u1 = p1->u();
    if (u0.size() != u1.size()) {
        res.status = AmalgamResult::Status::Structural;
        res.detail = "enumerations have different lengths";
        return res;
    }
    const std::size_t h = u0.size();

    // Clause 3: positionwise i0_t <= i1_t.
    for (std::size_t t = 0; t < h; ++t)
        if (u0[t] > u1[t]) {
            res.status = AmalgamResult::Status::ClauseFailed;
            res.clause = 3;
            res.detail = "position " + std::to_string(t);
            return res;
        }
    // Clause 2: colors agree under the position isomorphism.
    for (std::size_t s = 0; s < h; ++s)
        for (std::size_t t = s + 1; t < h; ++t)
            if (p0->coloring.color_at(s, t) != p1->coloring.color_at(s, t)) {
                res.status = AmalgamResult::Status::ClauseFailed;
                res.clause = 2;
                res.detail = "positions " + std::to_string(s) + "," + std::to_string(t);
                return res;
            }
    // Clause 4: divergent right points escape the oracle over u0.
    for (std::size_t t = 0; t < h; ++t)
        if (u0[t] != u1[t] && oracle.rel(u1[t], u0)) {
            res.status = AmalgamResult::Status::ClauseFailed;
            res.clause = 4;
            res.detail = "point " + std::to_string(u1[t]);
            return res;
        }

    // Union field; shared pairs must agree where both sides color them.
    std::vector<Vertex> field(u0);
    field.insert(field.end(), u1.begin(), u1.end());
    std::sort(field.begin(), field.end());
    field.erase(std::unique(field.begin(), field.end()), field.end());
    const std::size_t n = field.size();

    auto in0 = [&](Vertex v) { return p0->coloring.position_of(v).has_value(); };
    auto in1 = [&](Vertex v) { return p1->coloring.position_of(v).has_value(); };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vertex a = field[i], b = field[j];
            if (in0(a) && in0(b) && in1(a) && in1(b) &&
                p0->coloring.color_of(a, b) != p1->coloring.color_of(a, b)) {
                res.status = AmalgamResult::Status::Structural;
                res.detail = "sides disagree on shared pair {" + std::to_string(a) + "," +
                             std::to_string(b) + "}";
                return res;
            }
        }

    std::vector<Color> colors(pair_count(n), 0);
    Color fresh = std::max(p0->coloring.fresh_color(), p1->coloring.fresh_color());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vertex a = field[i], b = field[j];
            std::size_t idx = pair_index(i, j, n);
            if (in0(a) && in0(b))
                colors[idx] = p0->coloring.color_of(a, b);
            else if (in1(a) && in1(b))
                colors[idx] = p1->coloring.color_of(a, b);
            else
                colors[idx] = fresh++;  // clauses 7-8: unique and off both ranges
        }

    auto c = std::make_shared<Condition>(Coloring(std::move(field), std::move(colors)));
    c->level = std::max(p0->level, p1->level) + 1;
    c->provenance.kind = Provenance::Kind::Amalgam;
    c->provenance.left = p0;
    c->provenance.right = p1;
    for (std::size_t t = 0; t < h; ++t) c->provenance.matching.emplace_back(u0[t], u1[t]);
    res.condition = std::move(c);
    return res;
}

ValidationReport validate_condition(const ConditionPtr& p, const DefinabilityOracle& oracle) {
    ValidationReport rep;
    std::unordered_set<const Condition*> done;

    auto fail = [&](const Condition& c, int clause, const std::string& detail) {
        if (!rep.valid) return;
        rep.valid = false;
        rep.clause = clause;
        rep.detail = detail;
        switch (c.provenance.kind) {
            case Provenance::Kind::Singleton: rep.step = "singleton"; break;
            case Provenance::Kind::OnePoint:
                rep.step = "one-point +" + std::to_string(c.provenance.newPoint);
                break;
            case Provenance::Kind::Amalgam: rep.step = "amalgam"; break;
        }
    };

    auto walk = [&](auto&& self, const ConditionPtr& node) -> void {
        if (!node) {
            rep.valid = false;
            rep.detail = "dangling provenance reference";
            return;
        }
        if (!done.insert(node.get()).second) return;
        ++rep.stepsChecked;
        const Condition& c = *node;
        switch (c.provenance.kind) {
            case Provenance::Kind::Singleton: {
                if (c.u().size() != 1) fail(c, 0, "singleton with |u| != 1");
                if (c.level != 0) fail(c, 0, "singleton level must be 0");
                break;
            }
            case Provenance::Kind::OnePoint: {
                self(self, c.provenance.parent);
                if (!rep.valid) return;
                const Condition& q = *c.provenance.parent;
                Vertex r = c.provenance.newPoint;
                if (r <= q.u().back()) {
                    fail(c, 0, "new point must lie above the parent field");
                    break;
                }
                std::vector<Vertex> expect(q.u());
                expect.push_back(r);
                if (c.u() != expect) {
                    fail(c, 0, "field is not parent plus new point");
                    break;
                }
                // c^p subset of c^q
                for (std::size_t i = 0; i < q.u().size(); ++i)
                    for (std::size_t j = i + 1; j < q.u().size(); ++j)
                        if (q.coloring.color_at(i, j) !=
                            c.coloring.color_of(q.u()[i], q.u()[j]))
                            fail(c, 0, "old colors changed");
                std::vector<Color> oldRange(q.coloring.colors());
                std::vector<std::size_t> newIdx;
                const std::size_t n = c.u().size();
                for (std::size_t i = 0; i + 1 < n; ++i)
                    newIdx.push_back(pair_index(i, n - 1, n));
                // Clause 1: new colors avoid the old range; clause 2: new
                // pairs are pairwise distinctly colored.
                if (!colors_fresh_and_distinct(c.coloring, newIdx, oldRange)) {
                    std::set<Color> seen;
                    bool dup = false;
                    for (std::size_t idx : newIdx)
                        if (!seen.insert(c.coloring.colors()[idx]).second) dup = true;
                    fail(c, dup ? 2 : 1,
                         dup ? "new pairs share a color" : "new pair reuses an old color");
                }
                if (c.level != q.level + 1) fail(c, 0, "level must increase by one");
                break;
            }
            case Provenance::Kind::Amalgam: {
                self(self, c.provenance.left);
                if (!rep.valid) return;
                self(self, c.provenance.right);
                if (!rep.valid) return;
                const Condition& a0 = *c.provenance.left;
                const Condition& a1 = *c.provenance.right;
                const auto& u0 = a0.u();
                const auto& u1 = a1.u();
                if (u0.size() != u1.size()) {
                    fail(c, 1, "enumerations differ in length");
                    break;
                }
                const std::size_t hh = u0.size();
                if (c.provenance.matching.size() != hh) fail(c, 1, "matching length mismatch");
                for (std::size_t t = 0; rep.valid && t < hh; ++t) {
                    if (c.provenance.matching[t] != std::make_pair(u0[t], u1[t]))
                        fail(c, 1, "matching is not the sorted position isomorphism");
                }
                for (std::size_t s = 0; rep.valid && s < hh; ++s)
                    for (std::size_t t = s + 1; t < hh; ++t)
                        if (a0.coloring.color_at(s, t) != a1.coloring.color_at(s, t)) {
                            fail(c, 2, "matched pair colors differ");
                            break;
                        }
                for (std::size_t t = 0; rep.valid && t < hh; ++t) {
                    if (u0[t] > u1[t]) fail(c, 3, "left enumeration must sit below the right");
                    else if (u0[t] != u1[t] && oracle.rel(u1[t], u0))
                        fail(c, 4, "divergent point " + std::to_string(u1[t]) +
                                       " is oracle-definable over the left side");
                }
                if (!rep.valid) break;
                // Clause 5: union field.
                std::vector<Vertex> uni(u0);
                uni.insert(uni.end(), u1.begin(), u1.end());
                std::sort(uni.begin(), uni.end());
                uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
                if (c.u() != uni) {
                    fail(c, 5, "field is not the union of the sides");
                    break;
                }
                // Clause 6: c extends both sides.
                for (const Condition* side : {&a0, &a1}) {
                    const auto& uu = side->u();
                    for (std::size_t i = 0; i < uu.size(); ++i)
                        for (std::size_t j = i + 1; j < uu.size(); ++j)
                            if (side->coloring.color_at(i, j) !=
                                c.coloring.color_of(uu[i], uu[j]))
                                fail(c, 6, "result does not extend a side");
                }
                if (!rep.valid) break;
                // Clauses 7 and 8 on cross pairs.
                std::set<Color> sideRange(a0.coloring.colors().begin(),
                                          a0.coloring.colors().end());
                sideRange.insert(a1.coloring.colors().begin(), a1.coloring.colors().end());
                std::map<Color, std::size_t> crossCount;
                const std::size_t n = c.u().size();
                for (std::size_t i = 0; i < n && rep.valid; ++i)
                    for (std::size_t j = i + 1; j < n; ++j) {
                        Vertex x = c.u()[i], y = c.u()[j];
                        bool inside0 = a0.coloring.position_of(x) && a0.coloring.position_of(y);
                        bool inside1 = a1.coloring.position_of(x) && a1.coloring.position_of(y);
                        if (inside0 || inside1) continue;
                        Color col = c.coloring.color_at(i, j);
                        if (sideRange.count(col)) {
                            fail(c, 7, "cross pair reuses a side color");
                            break;
                        }
                        if (++crossCount[col] > 1) {
                            fail(c, 8, "two cross pairs share a color");
                            break;
                        }
                    }
                if (c.level != std::max(a0.level, a1.level) + 1)
                    fail(c, 0, "level must be max of sides plus one");
                break;
            }
        }
    };
    walk(walk, p);
    return rep;
}

Generation generate_P(std::uint32_t depth, Vertex universe, const DefinabilityOracle& oracle,
                      const GenLimits& limits) {
    Generation gen;
    std::unordered_map<std::string, std::size_t> seen;

    auto add = [&](ConditionPtr c) -> bool {
        std::string key = cond_fingerprint(*c);
        if (seen.count(key)) return false;
        seen.emplace(std::move(key), gen.conditions.size());
        gen.conditions.push_back(std::move(c));
        return true;
    };

    for (Vertex v = 0; v < universe; ++v) add(singleton_condition(v));
    gen.levelSizes.push_back(gen.conditions.size());

    std::mt19937_64 rng(limits.seed.value_or(0));

    for (std::uint32_t lvl = 0; lvl < depth; ++lvl) {
        const std::size_t levelEnd = gen.conditions.size();
        std::vector<ConditionPtr> created;

        for (std::size_t qi = 0; qi < levelEnd; ++qi)
            for (auto& ext : one_point_extensions(gen.conditions[qi], universe))
                created.push_back(std::move(ext));

        // All ordered pairs from the current level; sampled when the
        // budget cannot cover them.
        const std::size_t pairTotal = levelEnd * levelEnd;
        std::vector<std::size_t> pairIdx;
        bool sampling = pairTotal > limits.maxAmalgamPairsPerLevel;
        if (sampling) {
            if (!limits.seed)
                throw InvalidInput("generate_P: sampling requires an explicit seed");
            gen.truncated = true;
            std::unordered_set<std::size_t> picked;
            std::uniform_int_distribution<std::size_t> dist(0, pairTotal - 1);
            while (picked.size() < limits.maxAmalgamPairsPerLevel) picked.insert(dist(rng));
            pairIdx.assign(picked.begin(), picked.end());
            std::sort(pairIdx.begin(), pairIdx.end());
        } else {
            pairIdx.resize(pairTotal);
            for (std::size_t t = 0; t < pairTotal; ++t) pairIdx[t] = t;
        }

        for (std::size_t t : pairIdx) {
            const auto& a = gen.conditions[t / levelEnd];
            const auto& b = gen.conditions[t % levelEnd];
            if (a->u().size() != b->u().size()) continue;
            auto res = amalgamate(a, b, oracle);
            if (res.status == AmalgamResult::Status::Ok) created.push_back(res.condition);
        }

        std::sort(created.begin(), created.end(), [](const ConditionPtr& x, const ConditionPtr& y) {
            if (x->u() != y->u()) return x->u() < y->u();
            return x->coloring.partition_code() < y->coloring.partition_code();
        });

        std::size_t added = 0;
        for (auto& c : created) {
            if (added >= limits.maxConditionsPerLevel) {
                gen.truncated = true;
                break;
            }
            if (add(std::move(c))) ++added;
        }
        gen.levelSizes.push_back(gen.conditions.size());
    }
    return gen;
}

std::vector<Embedding> find_embeddings(const Condition& p, std::uint32_t size, const Code& code,
                                       const std::optional<SideCondition>& side) {
    auto all = find_all_embeddings(p.coloring, size, code, false);
    if (!side) return all;

    std::vector<Embedding> out;
    for (auto& e : all) {
        std::vector<Vertex> params;
        params.reserve(side->m);
        for (std::uint32_t v = 0; v < side->m; ++v) params.push_back(*e.image_of(v));
        std::sort(params.begin(), params.end());
        bool ok = true;
        for (std::uint32_t v = side->m; v <= side->m + 1; ++v)
            if (!side->oracle->rel(*e.image_of(v), params)) ok = false;
        if (ok) out.push_back(std::move(e));
    }
    return out;
}

std::vector<Embedding> find_embeddings(const Condition& p, const Identity& I,
                                       const std::optional<SideCondition>& side) {
    return find_embeddings(p, I.size(), I.code(), side);
}

}  // namespace idkit
