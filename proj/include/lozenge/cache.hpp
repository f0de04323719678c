#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lozenge/group.hpp"

namespace lozenge {

inline constexpr const char* kCacheEnvVar = "LOZENGE_CACHE_DIR";

// Persistent enumeration cache. One file per (group fingerprint, depth) holds
// the canonical word list; elements are rebuilt from words with the same fold
// as the enumeration, so cached and fresh runs see bit-identical matrices.
// Unreadable or mismatching files count as misses and are rewritten.
class DiskCache {
 public:
  explicit DiskCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path file_for(const GroupSpec& group, int depth) const;

  std::vector<MobiusElement> load_or_build(const GroupSpec& group, int depth, const EnumerationOptions& options);
  ElementCache::Provider provider();

  int hits() const { return hits_; }
  int misses() const { return misses_; }

 private:
  std::optional<std::vector<MobiusElement>> load(const GroupSpec& group, int depth,
                                                 const EnumerationOptions& options) const;
  void store(const GroupSpec& group, int depth, const EnumerationOptions& options,
             const std::vector<MobiusElement>& elements) const;

  std::filesystem::path dir_;
  int hits_ = 0;
  int misses_ = 0;
};

// The directory named by LOZENGE_CACHE_DIR, if set and non-empty.
std::optional<std::string> cache_dir_from_env();

}  // namespace lozenge
