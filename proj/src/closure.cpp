#include "idkit/closure.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "idkit/realize.hpp"

namespace idkit {

Coloring duplicate(const Coloring& f, const std::vector<Vertex>& tuple) {
    if (tuple.empty()) throw InvalidInput("duplicate: empty tuple");
    {
        std::vector<Vertex> t(tuple);
        std::sort(t.begin(), t.end());
        if (std::adjacent_find(t.begin(), t.end()) != t.end())
            throw InvalidInput("duplicate: tuple entries must be distinct");
    }
    std::vector<std::size_t> tuplePos(tuple.size());
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        auto p = f.position_of(tuple[i]);
        if (!p) throw InvalidInput("duplicate: tuple entry outside the field");
        tuplePos[i] = *p;
    }

    const std::size_t n = f.size();
    const std::size_t k = tuple.size();
    const std::size_t m = n + k;
    const Vertex top = f.field().back();

    // New field: old labels plus copies b_i = max+1+i, in tuple order.
    std::vector<Vertex> field(f.field());
    for (std::size_t i = 0; i < k; ++i) field.push_back(top + 1 + static_cast<Vertex>(i));

    std::vector<bool> inTuple(n, false);
    for (std::size_t p : tuplePos) inTuple[p] = true;

    std::vector<Color> colors(pair_count(m), 0);
    Color fresh = f.fresh_color();

    auto originalOf = [&](std::size_t pos) -> std::size_t {
        return pos < n ? pos : tuplePos[pos - n];
    };
    auto isCopy = [&](std::size_t pos) { return pos >= n; };

    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            std::size_t idx = pair_index(i, j, m);
            bool iT = isCopy(i) || inTuple[i];
            bool jT = isCopy(j) || inTuple[j];
            if (iT && jT && (isCopy(i) != isCopy(j))) {
                // original-tuple vs copy pair: fresh, pairwise distinct
                colors[idx] = fresh++;
            } else {
                colors[idx] = f.color_at(originalOf(i), originalOf(j));
            }
        }
    }
    return Coloring(std::move(field), std::move(colors));
}

Coloring end_duplicate(const Coloring& f, std::uint32_t segLen) {
    if (segLen < 1 || segLen > f.size())
        throw InvalidInput("end_duplicate: segment length out of range");
    std::vector<Vertex> tuple(f.field().end() - segLen, f.field().end());
    return duplicate(f, tuple);
}

Coloring eh_amalgam(const std::vector<Coloring>& seq) {
    if (seq.empty()) throw InvalidInput("eh_amalgam: empty sequence");

    std::size_t total = 0;
    for (const auto& g : seq) total += g.size();
    if (total > kMaxVertices) throw InvalidInput("eh_amalgam: result too large");

    std::vector<Vertex> field(total);
    std::iota(field.begin(), field.end(), 0);

    // Blocks occupy consecutive label ranges; each input's colors are
    // renumbered by first appearance and shifted into a private range.
    std::vector<std::size_t> blockStart(seq.size() + 1, 0);
    for (std::size_t b = 0; b < seq.size(); ++b)
        blockStart[b + 1] = blockStart[b] + seq[b].size();

    std::vector<Code> codes;
    codes.reserve(seq.size());
    std::vector<Color> offset(seq.size(), 0);
    Color used = 0;
    for (std::size_t b = 0; b < seq.size(); ++b) {
        codes.push_back(seq[b].partition_code());
        offset[b] = used;
        Color cnt = 0;
        for (ClassId c : codes[b]) cnt = std::max<Color>(cnt, c + 1);
        used += cnt;
    }

    auto blockOf = [&](std::size_t v) {
        std::size_t b = 0;
        while (blockStart[b + 1] <= v) ++b;
        return b;
    };

    std::vector<Color> colors(pair_count(total), 0);
    for (std::size_t i = 0; i < total; ++i) {
        for (std::size_t j = i + 1; j < total; ++j) {
            std::size_t bi = blockOf(i), bj = blockOf(j);
            std::size_t idx = pair_index(i, j, total);
            if (bi == bj) {
                const auto& code = codes[bi];
                std::size_t li = i - blockStart[bi], lj = j - blockStart[bi];
                colors[idx] = offset[bi] + code[pair_index(li, lj, seq[bi].size())];
            } else {
                // Cross color depends only on the smaller block index.
                colors[idx] = used + static_cast<Color>(std::min(bi, bj));
            }
        }
    }
    return Coloring(std::move(field), std::move(colors));
}

Coloring replay_trace(const Trace& trace) {
    Coloring c(0);
    for (const auto& step : trace) {
        if (step.op == TraceStep::Op::Duplicate)
            c = duplicate(c, step.tuple);
        else
            c = end_duplicate(c, step.segLen);
    }
    return c;
}

std::set<Identity> cl_step(const std::set<Identity>& catalog, std::uint32_t maxSeqLen,
                           std::uint32_t maxSize) {
    std::set<Identity> out;
    std::vector<const Identity*> members;
    for (const auto& id : catalog) members.push_back(&id);

    std::vector<const Identity*> seq;
    std::uint32_t seqSize = 0;
    auto rec = [&](auto&& self) -> void {
        if (!seq.empty()) {
            std::vector<Coloring> cols;
            cols.reserve(seq.size());
            for (const Identity* id : seq) cols.push_back(id->as_coloring());
            Identity result = identity_of(eh_amalgam(cols));
            if (result.size() <= maxSize) out.insert(result);
        }
        if (seq.size() == maxSeqLen) return;
        for (const Identity* id : members) {
            if (seqSize + id->size() > maxSize) continue;
            seq.push_back(id);
            seqSize += id->size();
            self(self);
            seqSize -= id->size();
            seq.pop_back();
        }
    };
    rec(rec);
    return out;
}

std::set<Identity> ClassCatalog::identity_set(std::uint32_t upToSize) const {
    std::set<Identity> out;
    for (const auto& [sz, ids] : bySize)
        if (sz <= upToSize) out.insert(ids.begin(), ids.end());
    return out;
}

namespace {

std::string code_bytes(std::size_t n, const Code& code) {
    std::string k;
    k.reserve(code.size() * 2 + 1);
    k.push_back(static_cast<char>(n));
    for (ClassId v : code) {
        k.push_back(static_cast<char>(v & 0xff));
        k.push_back(static_cast<char>(v >> 8));
    }
    return k;
}

std::string v_key(const Coloring& c) { return code_bytes(c.size(), c.partition_code()); }

struct WitnessState {
    Coloring coloring;
    Trace trace;
};

// Shared closure engine. Expands witnesses breadth-first, deduplicating
// by canonical identity (IDM) or order-sensitive pattern (IDE), and
// hands each newly discovered witness to `sink`. sink returns false to
// stop the search early.
template <typename Sink>
bool closure_bfs(ClassTag tag, std::uint32_t witnessBound, std::uint32_t depthBudget,
                 bool onePointOnly, const SearchLimits& limits, bool& complete, Sink sink) {
    std::deque<WitnessState> queue;
    std::unordered_set<std::string> seenRaw;    // order-sensitive pattern
    std::unordered_set<std::string> seenCanon;  // canonical identity (IDM only)

    WitnessState root{Coloring(0), {}};
    seenRaw.insert(v_key(root.coloring));
    if (tag == ClassTag::IDM) {
        Identity id = identity_of(root.coloring);
        seenCanon.insert(code_bytes(id.size(), id.code()));
    }
    if (!sink(root)) return false;
    queue.push_back(std::move(root));

    std::size_t states = 1;
    while (!queue.empty()) {
        WitnessState cur = std::move(queue.front());
        queue.pop_front();
        if (cur.trace.size() >= depthBudget) continue;
        const std::size_t n = cur.coloring.size();
        if (n >= witnessBound) continue;

        auto push_child = [&](WitnessState child) -> bool {
            if (!seenRaw.insert(v_key(child.coloring)).second) return true;
            if (tag == ClassTag::IDM) {
                Identity id = identity_of(child.coloring);
                if (!seenCanon.insert(code_bytes(id.size(), id.code())).second) return true;
            }
            if (states >= limits.maxStates) {
                complete = false;
                return true;
            }
            ++states;
            if (!sink(child)) return false;
            queue.push_back(std::move(child));
            return true;
        };

        if (tag == ClassTag::IDE) {
            for (std::uint32_t seg = 1; seg <= n && n + seg <= witnessBound; ++seg) {
                WitnessState child{end_duplicate(cur.coloring, seg), cur.trace};
                child.trace.push_back({TraceStep::Op::EndDuplicate, {}, seg});
                if (!push_child(std::move(child))) return false;
            }
        } else {
            // Tuples as sorted subsets: tuple order only permutes fresh
            // colors, which identity-level deduplication ignores.
            const std::size_t maxK = onePointOnly ? 1 : witnessBound - n;
            std::vector<Vertex> tuple;
            auto subsets = [&](auto&& self, std::size_t from) -> bool {
                if (!tuple.empty()) {
                    WitnessState child{duplicate(cur.coloring, tuple), cur.trace};
                    child.trace.push_back({TraceStep::Op::Duplicate, tuple, 0});
                    if (!push_child(std::move(child))) return false;
                }
                if (tuple.size() == maxK) return true;
                for (std::size_t p = from; p < n; ++p) {
                    tuple.push_back(cur.coloring.label(p));
                    if (!self(self, p + 1)) return false;
                    tuple.pop_back();
                }
                return true;
            };
            if (!subsets(subsets, 0)) return false;
        }
    }
    return true;
}

}  // namespace

ClassCatalog generate_idm(std::uint32_t maxSize, std::uint32_t witnessBound,
                          std::uint32_t depthBudget, bool onePointOnly,
                          const SearchLimits& limits) {
    if (witnessBound < maxSize)
        throw InvalidInput("generate_idm: witnessBound must cover maxSize");
    if (depthBudget == 0) depthBudget = witnessBound;

    ClassCatalog cat;
    cat.tag = ClassTag::IDM;
    cat.maxSize = maxSize;
    cat.witnessBound = witnessBound;
    cat.depthBudget = depthBudget;
    cat.onePointOnly = onePointOnly;

    closure_bfs(ClassTag::IDM, witnessBound, depthBudget, onePointOnly, limits, cat.complete,
                [&](const WitnessState& w) {
                    auto ids = realized_identities(
                        w.coloring, std::min<std::uint32_t>(
                                        maxSize, static_cast<std::uint32_t>(w.coloring.size())));
                    for (const Identity& id : ids)
                        if (id.size() >= 1)
                            cat.entries.try_emplace(id, CatalogEntry{id, w.coloring, w.trace});
                    return true;
                });

    for (const auto& [id, entry] : cat.entries) cat.bySize[id.size()].push_back(id);
    return cat;
}

ClassCatalog generate_ide(std::uint32_t maxSize, std::uint32_t witnessBound,
                          std::uint32_t depthBudget, const SearchLimits& limits) {
    if (witnessBound < maxSize)
        throw InvalidInput("generate_ide: witnessBound must cover maxSize");
    if (depthBudget == 0) depthBudget = witnessBound;

    ClassCatalog cat;
    cat.tag = ClassTag::IDE;
    cat.maxSize = maxSize;
    cat.witnessBound = witnessBound;
    cat.depthBudget = depthBudget;

    std::set<VIdentity> vids;
    closure_bfs(ClassTag::IDE, witnessBound, depthBudget, false, limits, cat.complete,
                [&](const WitnessState& w) {
                    auto vs = v_realized_identities(
                        w.coloring, std::min<std::uint32_t>(
                                        maxSize, static_cast<std::uint32_t>(w.coloring.size())));
                    for (const VIdentity& vid : vs) {
                        vids.insert(vid);
                        Identity id = vid.forget_order();
                        cat.entries.try_emplace(id, CatalogEntry{id, w.coloring, w.trace});
                    }
                    return true;
                });

    for (const auto& [id, entry] : cat.entries) cat.bySize[id.size()].push_back(id);
    for (const VIdentity& vid : vids) cat.bySizeV[vid.size()].push_back(vid);
    return cat;
}

MembershipResult membership(const Identity& g, ClassTag cls, std::uint32_t witnessBound,
                            std::uint32_t depthBudget, const SearchLimits& limits) {
    if (depthBudget == 0) depthBudget = witnessBound;
    MembershipResult res;
    res.witnessBound = witnessBound;
    res.depthBudget = depthBudget;

    bool complete = true;
    closure_bfs(cls, witnessBound, depthBudget, false, limits, complete,
                [&](const WitnessState& w) {
                    if (w.coloring.size() >= g.size() && realizes(w.coloring, g)) {
                        res.member = true;
                        res.entry = CatalogEntry{g, w.coloring, w.trace};
                        return false;
                    }
                    return true;
                });
    return res;
}

}  // namespace idkit
