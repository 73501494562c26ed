#include "idkit/catalog_io.hpp"

#include <cstdlib>
#include <fstream>

#include "idkit/json_io.hpp"

namespace idkit {

std::filesystem::path catalog_cache_path(const std::filesystem::path& dir, ClassTag tag,
                                         std::uint32_t maxSize, std::uint32_t witnessBound,
                                         std::uint32_t depthBudget, bool onePointOnly) {
    std::string name = std::string(tag == ClassTag::IDM ? "idm" : "ide") + "-s" +
                       std::to_string(maxSize) + "-w" + std::to_string(witnessBound) + "-d" +
                       std::to_string(depthBudget) + (onePointOnly ? "-p1" : "") + ".jsonl";
    return dir / name;
}

void save_catalog(const ClassCatalog& cat, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    auto path = catalog_cache_path(dir, cat.tag, cat.maxSize, cat.witnessBound, cat.depthBudget,
                                   cat.onePointOnly);
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("save_catalog: cannot open " + tmp.string());
        Json header{{"class", cat.tag == ClassTag::IDM ? "IDM" : "IDE"},
                    {"maxSize", cat.maxSize},
                    {"witnessBound", cat.witnessBound},
                    {"depthBudget", cat.depthBudget},
                    {"onePointOnly", cat.onePointOnly},
                    {"complete", cat.complete},
                    {"entries", cat.entries.size()}};
        out << header.dump() << '\n';
        for (const auto& [id, entry] : cat.entries) out << to_json(entry, cat.tag).dump() << '\n';

        if (cat.tag == ClassTag::IDE) {
            for (const auto& [sz, vids] : cat.bySizeV)
                for (const auto& vid : vids)
                    out << Json{{"ordered", to_json(vid)}}.dump() << '\n';
        }
    }
    std::filesystem::rename(tmp, path);
}

std::optional<ClassCatalog> load_catalog(const std::filesystem::path& dir, ClassTag tag,
                                         std::uint32_t maxSize, std::uint32_t witnessBound,
                                         std::uint32_t depthBudget, bool onePointOnly) {
    auto path = catalog_cache_path(dir, tag, maxSize, witnessBound, depthBudget, onePointOnly);
    std::ifstream in(path);
    if (!in) return std::nullopt;

    try {
        std::string line;
        if (!std::getline(in, line)) return std::nullopt;
        Json header = Json::parse(line);
        ClassCatalog cat;
        cat.tag = tag;
        cat.maxSize = header.at("maxSize").get<std::uint32_t>();
        cat.witnessBound = header.at("witnessBound").get<std::uint32_t>();
        cat.depthBudget = header.at("depthBudget").get<std::uint32_t>();
        cat.onePointOnly = header.at("onePointOnly").get<bool>();
        cat.complete = header.at("complete").get<bool>();
        if (cat.maxSize != maxSize || cat.witnessBound != witnessBound ||
            cat.depthBudget != depthBudget || cat.onePointOnly != onePointOnly)
            return std::nullopt;

        std::set<VIdentity> vids;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            Json j = Json::parse(line);
            if (j.contains("ordered")) {
                vids.insert(v_identity_from_json(j.at("ordered")));
                continue;
            }
            CatalogEntry entry{identity_from_json(j.at("identity")),
                               coloring_from_json(j.at("witness")),
                               trace_from_json(j.at("trace"))};
            Identity key = entry.id;
            cat.entries.emplace(std::move(key), std::move(entry));
        }
        for (const auto& [id, entry] : cat.entries) cat.bySize[id.size()].push_back(id);
        for (const auto& vid : vids) cat.bySizeV[vid.size()].push_back(vid);
        return cat;
    } catch (...) {
        return std::nullopt;
    }
}

std::optional<std::filesystem::path> resolve_cache_dir(const std::string& cliValue) {
    if (!cliValue.empty()) return std::filesystem::path(cliValue);
    if (const char* env = std::getenv("IDKIT_CACHE_DIR"); env && *env)
        return std::filesystem::path(env);
    return std::nullopt;
}

}  // namespace idkit
