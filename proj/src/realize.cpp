#include "idkit/realize.hpp"

#include <algorithm>
#include <numeric>

namespace idkit {

namespace {

// Backtracking search for injections of the partition (size, code) into
// the coloring f such that same-class source pairs land on equal-colored
// target pairs. Collects the first match or all matches.
class EmbedSearch {
public:
    EmbedSearch(const Coloring& f, std::uint32_t size, const Code& code, bool ordered,
                bool collectAll)
        : f_(f), n_(size), code_(code), ordered_(ordered), collectAll_(collectAll) {
        std::size_t numClasses = 0;
        for (ClassId c : code_) numClasses = std::max<std::size_t>(numClasses, c + 1);
        classSize_.assign(numClasses, 0);
        for (ClassId c : code_) ++classSize_[c];
        classColor_.assign(numClasses, -1);

        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        if (!ordered_) {
            // Most-constrained vertices first: count incident pairs lying
            // in non-singleton classes.
            std::vector<std::size_t> degree(n_, 0);
            for (std::uint32_t i = 0; i < n_; ++i)
                for (std::uint32_t j = i + 1; j < n_; ++j)
                    if (classSize_[code_[pair_index(i, j, n_)]] > 1) {
                        ++degree[i];
                        ++degree[j];
                    }
            std::stable_sort(order_.begin(), order_.end(),
                             [&](std::uint32_t x, std::uint32_t y) {
                                 return degree[x] > degree[y];
                             });
        }
        assigned_.assign(n_, SIZE_MAX);
        usedTarget_.assign(f_.size(), false);
    }

    bool run() {
        if (n_ > f_.size()) return false;
        if (n_ == 0) {
            results_.push_back(Embedding{{}, ordered_});
            return true;
        }
        return place(0);
    }

    std::vector<Embedding> results() && { return std::move(results_); }

private:
    bool place(std::size_t depth) {
        if (depth == n_) {
            Embedding e;
            e.orderPreserving = ordered_;
            e.map.reserve(n_);
            for (std::uint32_t v = 0; v < n_; ++v)
                e.map.emplace_back(v, f_.label(assigned_[v]));
            results_.push_back(std::move(e));
            return !collectAll_;
        }
        const std::uint32_t sv = order_[depth];
        for (std::size_t tp = 0; tp < f_.size(); ++tp) {
            if (usedTarget_[tp]) continue;
            if (ordered_) {
                // Source vertices are processed in natural order, so the
                // image sequence must be strictly increasing.
                if (sv > 0 && tp <= assigned_[sv - 1]) continue;
            }
            if (try_assign(sv, tp, depth)) return true;
        }
        return false;
    }

    bool try_assign(std::uint32_t sv, std::size_t tp, std::size_t depth) {
        std::vector<ClassId> pinned;
        bool ok = true;
        for (std::uint32_t u = 0; u < n_ && ok; ++u) {
            if (u == sv || assigned_[u] == SIZE_MAX) continue;
            ClassId cls = code_[pair_index(std::min(sv, u), std::max(sv, u), n_)];
            if (classSize_[cls] == 1) continue;  // unconstrained
            Color col = f_.color_at(tp, assigned_[u]);
            if (classColor_[cls] < 0) {
                classColor_[cls] = static_cast<long long>(col);
                pinned.push_back(cls);
            } else if (classColor_[cls] != static_cast<long long>(col)) {
                ok = false;
            }
        }
        if (ok) {
            assigned_[sv] = tp;
            usedTarget_[tp] = true;
            bool done = place(depth + 1);
            usedTarget_[tp] = false;
            assigned_[sv] = SIZE_MAX;
            if (done) return true;
        }
        for (ClassId cls : pinned) classColor_[cls] = -1;
        return false;
    }

    const Coloring& f_;
    std::uint32_t n_;
    const Code& code_;
    bool ordered_;
    bool collectAll_;
    std::vector<std::uint32_t> order_;
    std::vector<std::size_t> classSize_;
    std::vector<long long> classColor_;
    std::vector<std::size_t> assigned_;
    std::vector<bool> usedTarget_;
    std::vector<Embedding> results_;
};

std::optional<Embedding> first_embedding(const Coloring& f, std::uint32_t size, const Code& code,
                                         bool ordered) {
    EmbedSearch s(f, size, code, ordered, false);
    if (!s.run()) return std::nullopt;
    auto r = std::move(s).results();
    return r.front();
}

// Relabel an embedding found against a relabeled source back onto the
// source coloring's own field labels.
Embedding with_source_labels(Embedding e, const Coloring& g) {
    for (auto& [s, t] : e.map) s = g.label(s);
    return e;
}

}  // namespace

std::optional<Embedding> realizes(const Coloring& f, const Identity& g) {
    return first_embedding(f, g.size(), g.code(), false);
}

std::optional<Embedding> realizes(const Coloring& f, const Coloring& g) {
    auto e = first_embedding(f, static_cast<std::uint32_t>(g.size()), g.partition_code(), false);
    if (!e) return std::nullopt;
    return with_source_labels(std::move(*e), g);
}

std::optional<Embedding> realizes(const Identity& f, const Identity& g) {
    return realizes(f.as_coloring(), g);
}

std::optional<Embedding> v_realizes(const Coloring& f, const VIdentity& g) {
    return first_embedding(f, g.size(), g.code(), true);
}

std::vector<Embedding> find_all_embeddings(const Coloring& f, std::uint32_t size,
                                           const Code& code, bool orderPreserving) {
    EmbedSearch s(f, size, code, orderPreserving, true);
    s.run();
    return std::move(s).results();
}

}  // namespace idkit
