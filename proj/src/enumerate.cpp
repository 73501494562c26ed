#include "idkit/enumerate.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace idkit {

namespace {

std::string code_key(const Code& c) {
    std::string k;
    k.reserve(c.size() * 2);
    for (ClassId v : c) {
        k.push_back(static_cast<char>(v & 0xff));
        k.push_back(static_cast<char>(v >> 8));
    }
    return k;
}

// Extend every canonical identity of size n-1 by a new top vertex: each
// new pair joins an existing class or groups with other new pairs into
// fresh classes. Restricted-growth values make each resulting partition
// appear exactly once per base.
void extend_base(std::uint32_t n, const Code& base, std::unordered_set<std::string>& out) {
    std::size_t baseClasses = 0;
    for (ClassId c : base) baseClasses = std::max<std::size_t>(baseClasses, c + 1);

    Code full(pair_count(n));
    // Old pairs keep their positions under the lexicographic order for n
    // vertices: pair (i,j) with j < n-1.
    for (std::uint32_t i = 0; i + 1 < n; ++i)
        for (std::uint32_t j = i + 1; j + 1 < n; ++j)
            full[pair_index(i, j, n)] = base[pair_index(i, j, n - 1)];

    const std::uint32_t newPairs = n - 1;
    std::vector<ClassId> choice(newPairs, 0);

    auto assign = [&](auto&& self, std::uint32_t t, ClassId growth) -> void {
        if (t == newPairs) {
            for (std::uint32_t i = 0; i < newPairs; ++i)
                full[pair_index(i, n - 1, n)] = choice[i];
            Identity id = Identity::from_partition(n, full);
            out.insert(code_key(id.code()));
            return;
        }
        for (ClassId v = 0; v < baseClasses + growth + 1; ++v) {
            choice[t] = v;
            ClassId g = growth;
            if (v == baseClasses + growth) ++g;  // opened one more fresh class
            self(self, t + 1, g);
        }
    };
    assign(assign, 0, 0);
}

}  // namespace

std::vector<Identity> enumerate_identities(std::uint32_t size, std::uint32_t bound) {
    if (size == 0) throw InvalidInput("enumerate_identities: size must be positive");
    if (size > bound) throw BoundExceeded("enumerate_identities: size beyond configured bound");

    std::unordered_set<std::string> level;
    level.insert(code_key(Code{}));  // the identity of size one
    for (std::uint32_t n = 2; n <= size; ++n) {
        std::unordered_set<std::string> next;
        for (const std::string& key : level) {
            Code base(key.size() / 2);
            for (std::size_t t = 0; t < base.size(); ++t)
                base[t] = static_cast<ClassId>(static_cast<unsigned char>(key[2 * t]) |
                                               (static_cast<unsigned char>(key[2 * t + 1]) << 8));
            extend_base(n, base, next);
        }
        level = std::move(next);
    }

    std::vector<Identity> out;
    out.reserve(level.size());
    for (const std::string& key : level) {
        Code code(key.size() / 2);
        for (std::size_t t = 0; t < code.size(); ++t)
            code[t] = static_cast<ClassId>(static_cast<unsigned char>(key[2 * t]) |
                                           (static_cast<unsigned char>(key[2 * t + 1]) << 8));
        out.push_back(Identity::from_partition(size, code));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Code> refinements_of(const Code& base) {
    std::size_t numClasses = 0;
    for (ClassId c : base) numClasses = std::max<std::size_t>(numClasses, c + 1);
    std::vector<std::vector<std::size_t>> blocks(numClasses);
    for (std::size_t t = 0; t < base.size(); ++t) blocks[base[t]].push_back(t);

    std::vector<Code> acc{Code(base.size(), 0)};
    ClassId used = 0;
    for (const auto& block : blocks) {
        // Set partitions of this block in restricted-growth form.
        std::vector<Code> withBlock;
        std::vector<ClassId> rg(block.size(), 0);
        auto rec = [&](auto&& self, std::size_t t, ClassId maxUsed) -> void {
            if (t == block.size()) {
                for (const Code& prev : acc) {
                    Code next = prev;
                    for (std::size_t s = 0; s < block.size(); ++s)
                        next[block[s]] = static_cast<ClassId>(used + rg[s]);
                    withBlock.push_back(std::move(next));
                }
                return;
            }
            for (ClassId v = 0; v <= maxUsed; ++v) {
                rg[t] = v;
                self(self, t + 1, static_cast<ClassId>(std::max<ClassId>(maxUsed, v + 1)));
            }
        };
        if (block.empty()) continue;
        rec(rec, 0, 0);
        used = static_cast<ClassId>(used + block.size());  // upper bound on ids consumed
        acc = std::move(withBlock);
    }
    return acc;
}

namespace {

template <typename IdType, typename Canon>
std::set<IdType> realized_impl(const Coloring& f, std::uint32_t maxSize, Canon canon) {
    if (maxSize > f.size())
        throw InvalidInput("realized_identities: maxSize exceeds the field");
    std::set<IdType> out;

    // Refinement results per induced order-sensitive pattern.
    std::unordered_map<std::string, std::vector<IdType>> memo;

    const std::size_t n = f.size();
    std::vector<std::size_t> subset;
    auto visit = [&](auto&& self, std::size_t from) -> void {
        if (!subset.empty()) {
            Coloring sub = f.restrict_positions(subset);
            Code induced = sub.partition_code();
            std::string key = code_key(induced);
            key.push_back(static_cast<char>(subset.size()));
            auto it = memo.find(key);
            if (it == memo.end()) {
                std::vector<IdType> ids;
                for (const Code& r : refinements_of(induced))
                    ids.push_back(canon(static_cast<std::uint32_t>(subset.size()), r));
                std::sort(ids.begin(), ids.end());
                ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
                it = memo.emplace(std::move(key), std::move(ids)).first;
            }
            out.insert(it->second.begin(), it->second.end());
        }
        if (subset.size() == maxSize) return;
        for (std::size_t p = from; p < n; ++p) {
            subset.push_back(p);
            self(self, p + 1);
            subset.pop_back();
        }
    };
    visit(visit, 0);
    return out;
}

}  // namespace

std::set<Identity> realized_identities(const Coloring& f, std::uint32_t maxSize) {
    return realized_impl<Identity>(f, maxSize, [](std::uint32_t m, const Code& r) {
        return Identity::from_partition(m, r);
    });
}

std::set<VIdentity> v_realized_identities(const Coloring& f, std::uint32_t maxSize) {
    return realized_impl<VIdentity>(f, maxSize, [](std::uint32_t m, const Code& r) {
        return VIdentity::from_partition(m, r);
    });
}

}  // namespace idkit
