#ifndef WEIGHTGEOM_CACHE_HPP
#define WEIGHTGEOM_CACHE_HPP

#include <filesystem>
#include <map>
#include <optional>

#include "weightgeom/character.hpp"

namespace wg {

// On-disk store for dominant multiplicity tables, one JSON file per
// (family, rank, highest weight). Files carry a format version and a CRC of
// the payload; anything that fails to parse or verify is treated as absent.
inline constexpr int kCacheFormatVersion = 1;

void set_cache_dir(std::optional<std::filesystem::path> dir);
std::optional<std::filesystem::path> cache_dir();

std::filesystem::path cache_file(const std::filesystem::path& dir, const RootSystemSpec& spec, const Weight& hw);
std::optional<std::map<Weight, BigInt>> cache_load(const RootSystemSpec& spec, const Weight& hw);
void cache_store(const RootSystemSpec& spec, const Weight& hw, const std::map<Weight, BigInt>& table);

}  // namespace wg

#endif
