#ifndef IDKIT_CATALOG_IO_HPP
#define IDKIT_CATALOG_IO_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "idkit/closure.hpp"

namespace idkit {

/// Cache file name for a catalog configuration.
std::filesystem::path catalog_cache_path(const std::filesystem::path& dir, ClassTag tag,
                                         std::uint32_t maxSize, std::uint32_t witnessBound,
                                         std::uint32_t depthBudget, bool onePointOnly = false);

/// Persist as JSON-lines: a header record followed by one record per
/// identity. The write is atomic (temp file + rename).
void save_catalog(const ClassCatalog& cat, const std::filesystem::path& dir);

/// Load a previously saved catalog; empty when absent or unreadable.
std::optional<ClassCatalog> load_catalog(const std::filesystem::path& dir, ClassTag tag,
                                         std::uint32_t maxSize, std::uint32_t witnessBound,
                                         std::uint32_t depthBudget, bool onePointOnly = false);

/// Cache directory resolution: explicit path, else IDKIT_CACHE_DIR, else
/// none.
std::optional<std::filesystem::path> resolve_cache_dir(const std::string& cliValue);

}  // namespace idkit

#endif
