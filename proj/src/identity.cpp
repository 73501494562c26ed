#include "idkit/identity.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

namespace idkit {

Code relabel_first_appearance(const Code& raw) {
    Code out(raw.size());
    std::vector<int> label(raw.empty() ? 0 : *std::max_element(raw.begin(), raw.end()) + 1, -1);
    ClassId next = 0;
    for (std::size_t t = 0; t < raw.size(); ++t) {
        int& l = label[raw[t]];
        if (l < 0) l = next++;
        out[t] = static_cast<ClassId>(l);
    }
    return out;
}

namespace detail {

// Exhaustive minimization over all vertex permutations. perm[i] is the
// original vertex placed at position i.
Code canonical_code_exhaustive(std::uint32_t n, const Code& code) {
    const std::size_t pc = pair_count(n);
    std::size_t numClasses = 0;
    for (ClassId c : code) numClasses = std::max<std::size_t>(numClasses, c + 1);

    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    pairs.reserve(pc);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    Code best, cand(pc);
    std::vector<ClassId> label(numClasses, 0);
    std::vector<std::uint32_t> stamp(numClasses, 0);
    std::uint32_t epoch = 0;

    do {
        ++epoch;
        ClassId next = 0;
        bool worse = false, better = false;
        for (std::size_t t = 0; t < pc; ++t) {
            std::uint32_t a = perm[pairs[t].first], b = perm[pairs[t].second];
            if (a > b) std::swap(a, b);
            ClassId cls = code[pair_index(a, b, n)];
            ClassId lab;
            if (stamp[cls] != epoch) {
                stamp[cls] = epoch;
                label[cls] = next;
                lab = next++;
            } else {
                lab = label[cls];
            }
            cand[t] = lab;
            if (!best.empty() && !better) {
                if (lab > best[t]) {
                    worse = true;
                    break;
                }
                if (lab < best[t]) better = true;
            }
        }
        if (!worse && (best.empty() || better)) best = cand;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

namespace {

struct SearchState {
    std::vector<std::vector<std::uint32_t>> cells;  // remaining vertices, position order
    std::vector<int> classLabel;                    // -1 while unassigned
    ClassId nextLabel = 0;
};

std::string state_key(const SearchState& st) {
    std::string k;
    k.reserve(st.cells.size() * 10 + st.classLabel.size() * 2 + 4);
    auto put16 = [&k](std::uint32_t v) {
        k.push_back(static_cast<char>(v & 0xff));
        k.push_back(static_cast<char>((v >> 8) & 0xff));
    };
    for (const auto& cell : st.cells) {
        for (auto v : cell) put16(v + 1);
        put16(0);
    }
    put16(0xffff);
    for (int l : st.classLabel) put16(static_cast<std::uint32_t>(l + 2));
    return k;
}

// Branch-and-bound over position assignments. At each node only plans
// achieving the minimal next row (over candidate vertices and over
// orderings of same-size fresh color groups) are explored; the code is
// compared row-major, so non-minimal rows cannot reach the minimum.
class CanonicalSearch {
public:
    CanonicalSearch(std::uint32_t n, const Code& code) : n_(n), code_(code) {}

    Code run() {
        SearchState root;
        std::vector<std::uint32_t> all(n_);
        std::iota(all.begin(), all.end(), 0);
        root.cells.push_back(std::move(all));
        std::size_t numClasses = 0;
        for (ClassId c : code_) numClasses = std::max<std::size_t>(numClasses, c + 1);
        root.classLabel.assign(numClasses, -1);
        Code prefix;
        prefix.reserve(pair_count(n_));
        dfs(root, prefix);
        return best_;
    }

private:
    struct Plan {
        Code row;
        SearchState next;
    };

    struct Group {
        ClassId cls;
        std::vector<std::uint32_t> members;
    };

    ClassId cls_of(std::uint32_t a, std::uint32_t b) const {
        if (a > b) std::swap(a, b);
        return code_[pair_index(a, b, n_)];
    }

    void charge() {
        if (++nodes_ > kCanonicalSearchBudget)
            throw BoundExceeded("canonical_code: search budget exceeded");
    }

    // Walk the cells left to right placing v's color groups, branching on
    // orderings of tied fresh groups, and emit one Plan per ordering.
    void build_cell(const std::vector<std::vector<std::uint32_t>>& cellsAfter, std::size_t ci,
                    std::uint32_t v, Code& row, SearchState& acc, std::vector<Plan>& plans) {
        charge();
        if (ci == cellsAfter.size()) {
            plans.push_back(Plan{row, acc});
            return;
        }

        std::vector<Group> groups;
        for (auto u : cellsAfter[ci]) {
            ClassId c = cls_of(v, u);
            auto it = std::find_if(groups.begin(), groups.end(),
                                   [c](const Group& g) { return g.cls == c; });
            if (it == groups.end())
                groups.push_back({c, {u}});
            else
                it->members.push_back(u);
        }

        std::vector<std::size_t> labeled, fresh;
        for (std::size_t g = 0; g < groups.size(); ++g)
            (acc.classLabel[groups[g].cls] >= 0 ? labeled : fresh).push_back(g);
        std::sort(labeled.begin(), labeled.end(), [&](std::size_t x, std::size_t y) {
            return acc.classLabel[groups[x].cls] < acc.classLabel[groups[y].cls];
        });
        // Larger fresh groups first; equal-size runs are genuine ties.
        std::stable_sort(fresh.begin(), fresh.end(), [&](std::size_t x, std::size_t y) {
            return groups[x].members.size() > groups[y].members.size();
        });

        const std::size_t rowMark = row.size();
        const std::size_t cellsMark = acc.cells.size();
        const ClassId nextMark = acc.nextLabel;

        auto emit_ordering = [&](const std::vector<std::size_t>& freshOrder) {
            std::vector<ClassId> touched;
            for (std::size_t g : labeled) {
                ClassId lab = static_cast<ClassId>(acc.classLabel[groups[g].cls]);
                row.insert(row.end(), groups[g].members.size(), lab);
                acc.cells.push_back(groups[g].members);
            }
            for (std::size_t g : freshOrder) {
                int& slot = acc.classLabel[groups[g].cls];
                if (slot < 0) {
                    slot = acc.nextLabel++;
                    touched.push_back(groups[g].cls);
                }
                row.insert(row.end(), groups[g].members.size(), static_cast<ClassId>(slot));
                acc.cells.push_back(groups[g].members);
            }
            build_cell(cellsAfter, ci + 1, v, row, acc, plans);
            row.resize(rowMark);
            acc.cells.resize(cellsMark);
            for (ClassId c : touched) acc.classLabel[c] = -1;
            acc.nextLabel = nextMark;
        };

        // Enumerate orderings: permute each equal-size run independently.
        std::vector<std::size_t> order(fresh);
        enumerate_tie_orderings(groups, order, 0, emit_ordering);
    }

    template <typename Emit>
    void enumerate_tie_orderings(const std::vector<Group>& groups,
                                 std::vector<std::size_t>& order, std::size_t start,
                                 Emit& emit) {
        if (start >= order.size()) {
            emit(order);
            return;
        }
        std::size_t end = start + 1;
        while (end < order.size() &&
               groups[order[end]].members.size() == groups[order[start]].members.size())
            ++end;
        if (end - start == 1) {
            enumerate_tie_orderings(groups, order, end, emit);
            return;
        }
        std::vector<std::size_t> block(order.begin() + start, order.begin() + end);
        std::sort(block.begin(), block.end());
        do {
            charge();
            std::copy(block.begin(), block.end(), order.begin() + start);
            enumerate_tie_orderings(groups, order, end, emit);
        } while (std::next_permutation(block.begin(), block.end()));
    }

    void dfs(const SearchState& st, Code& prefix) {
        charge();
        if (st.cells.empty()) {
            if (best_.empty() || prefix < best_) best_ = prefix;
            return;
        }

        std::vector<Plan> plans;
        for (auto v : st.cells.front()) {
            std::vector<std::vector<std::uint32_t>> cellsAfter;
            cellsAfter.reserve(st.cells.size());
            for (const auto& cell : st.cells) {
                std::vector<std::uint32_t> c;
                c.reserve(cell.size());
                for (auto u : cell)
                    if (u != v) c.push_back(u);
                if (!c.empty()) cellsAfter.push_back(std::move(c));
            }
            Code row;
            SearchState acc;
            acc.classLabel = st.classLabel;
            acc.nextLabel = st.nextLabel;
            build_cell(cellsAfter, 0, v, row, acc, plans);
        }

        const Code* minRow = nullptr;
        for (const auto& p : plans)
            if (!minRow || p.row < *minRow) minRow = &p.row;
        if (!minRow) return;

        std::unordered_set<std::string> seen;
        const std::size_t off = prefix.size();
        for (auto& p : plans) {
            if (p.row != *minRow) continue;
            // best_ can shrink between children, so compare fresh.
            if (!best_.empty() && candidate_exceeds_best(prefix, p.row)) continue;
            if (!seen.insert(state_key(p.next)).second) continue;
            prefix.insert(prefix.end(), p.row.begin(), p.row.end());
            dfs(p.next, prefix);
            prefix.resize(off);
        }
    }

    // True iff prefix+row lexicographically exceeds the matching slice of
    // the incumbent, in which case the subtree cannot improve on it.
    bool candidate_exceeds_best(const Code& prefix, const Code& row) const {
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            if (prefix[i] != best_[i]) return prefix[i] > best_[i];
        }
        const std::size_t off = prefix.size();
        for (std::size_t t = 0; t < row.size(); ++t) {
            if (row[t] != best_[off + t]) return row[t] > best_[off + t];
        }
        return false;
    }

    std::uint32_t n_;
    const Code& code_;
    Code best_;
    std::size_t nodes_ = 0;
};

}  // namespace

Code canonical_code_search(std::uint32_t n, const Code& code) {
    return CanonicalSearch(n, code).run();
}

}  // namespace detail

Code canonical_code(std::uint32_t n, const Code& relabeled) {
    if (n > kMaxVertices) throw InvalidInput("canonical_code: too many vertices");
    const std::size_t pc = pair_count(n);
    if (relabeled.size() != pc) throw InvalidInput("canonical_code: wrong code length");
    if (n <= 2) return relabeled;

    std::size_t numClasses = 0;
    for (ClassId c : relabeled) numClasses = std::max<std::size_t>(numClasses, c + 1);
    // Degenerate partitions are permutation-invariant.
    if (numClasses == pc || numClasses == 1) return relabeled;

    if (n <= 8) return detail::canonical_code_exhaustive(n, relabeled);
    return detail::canonical_code_search(n, relabeled);
}

Identity Identity::from_partition(std::uint32_t n, const Code& raw) {
    if (raw.size() != pair_count(n)) throw InvalidInput("Identity: wrong partition length");
    return Identity(n, canonical_code(n, relabel_first_appearance(raw)));
}

namespace {

Code code_from_blocks(std::uint32_t n, const std::vector<std::vector<VertexPair>>& blocks) {
    const std::size_t pc = pair_count(n);
    Code raw(pc, 0);
    std::vector<bool> seen(pc, false);
    ClassId cls = 0;
    for (const auto& block : blocks) {
        if (block.empty()) throw InvalidInput("partition: empty block");
        for (const auto& p : block) {
            if (p.b >= n) throw InvalidInput("partition: pair outside vertex range");
            std::size_t idx = pair_index(p.a, p.b, n);
            if (seen[idx]) throw InvalidInput("partition: overlapping blocks");
            seen[idx] = true;
            raw[idx] = cls;
        }
        ++cls;
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        throw InvalidInput("partition: blocks do not cover all pairs");
    return raw;
}

std::vector<std::vector<VertexPair>> blocks_from_code(std::uint32_t n, const Code& code) {
    std::size_t numClasses = 0;
    for (ClassId c : code) numClasses = std::max<std::size_t>(numClasses, c + 1);
    std::vector<std::vector<VertexPair>> out(numClasses);
    std::size_t t = 0;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) out[code[t++]].push_back(VertexPair(i, j));
    return out;
}

Coloring coloring_from_code(std::uint32_t n, const Code& code) {
    std::vector<Vertex> field(n);
    std::iota(field.begin(), field.end(), 0);
    std::vector<Color> colors(code.begin(), code.end());
    return Coloring(std::move(field), std::move(colors));
}

}  // namespace

Identity Identity::from_classes(std::uint32_t n,
                                const std::vector<std::vector<VertexPair>>& blocks) {
    return from_partition(n, code_from_blocks(n, blocks));
}

std::vector<std::vector<VertexPair>> Identity::classes() const {
    return blocks_from_code(size_, code_);
}

std::size_t Identity::class_count() const {
    std::size_t numClasses = 0;
    for (ClassId c : code_) numClasses = std::max<std::size_t>(numClasses, c + 1);
    return numClasses;
}

std::vector<VertexPair> Identity::singleton_classes() const {
    std::vector<std::size_t> freq(pair_count(size_), 0);
    for (ClassId c : code_) ++freq[c];
    std::vector<VertexPair> out;
    std::size_t t = 0;
    for (std::uint32_t i = 0; i < size_; ++i)
        for (std::uint32_t j = i + 1; j < size_; ++j) {
            if (freq[code_[t]] == 1) out.push_back(VertexPair(i, j));
            ++t;
        }
    return out;
}

Coloring Identity::as_coloring() const { return coloring_from_code(size_, code_); }

VIdentity VIdentity::from_partition(std::uint32_t n, const Code& raw) {
    if (raw.size() != pair_count(n)) throw InvalidInput("VIdentity: wrong partition length");
    if (n > kMaxVertices) throw InvalidInput("VIdentity: too many vertices");
    return VIdentity(n, relabel_first_appearance(raw));
}

VIdentity VIdentity::from_classes(std::uint32_t n,
                                  const std::vector<std::vector<VertexPair>>& blocks) {
    return from_partition(n, code_from_blocks(n, blocks));
}

std::vector<std::vector<VertexPair>> VIdentity::classes() const {
    return blocks_from_code(size_, code_);
}

Coloring VIdentity::as_coloring() const { return coloring_from_code(size_, code_); }

Identity identity_of(const Coloring& c) {
    return Identity::from_partition(static_cast<std::uint32_t>(c.size()), c.partition_code());
}

VIdentity v_identity_of(const Coloring& c) {
    return VIdentity::from_partition(static_cast<std::uint32_t>(c.size()), c.partition_code());
}

bool equivalent(const Identity& lhs, const Identity& rhs) { return lhs == rhs; }

namespace {

template <typename Out, typename Maker>
Out restrict_impl(std::uint32_t size, const Code& code, const std::vector<Vertex>& subset,
                  Maker make) {
    std::vector<Vertex> s(subset);
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw InvalidInput("restrict_to: duplicate vertices in subset");
    for (Vertex v : s)
        if (v >= size) throw InvalidInput("restrict_to: vertex outside identity");
    const std::uint32_t m = static_cast<std::uint32_t>(s.size());
    Code raw(pair_count(m));
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = i + 1; j < m; ++j)
            raw[pair_index(i, j, m)] = code[pair_index(s[i], s[j], size)];
    return make(m, raw);
}

}  // namespace

Identity restrict_to(const Identity& id, const std::vector<Vertex>& subset) {
    return restrict_impl<Identity>(id.size(), id.code(), subset, Identity::from_partition);
}

VIdentity restrict_to(const VIdentity& id, const std::vector<Vertex>& subset) {
    return restrict_impl<VIdentity>(id.size(), id.code(), subset, VIdentity::from_partition);
}

}  // namespace idkit
