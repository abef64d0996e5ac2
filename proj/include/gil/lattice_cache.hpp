#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "gil/group.hpp"
#include "gil/lattice.hpp"

namespace gil {

/// Persists subgroup lattices as one JSON file per group, keyed by the
/// fingerprint of the group's element table.
class LatticeCache {
 public:
  static constexpr int kFormatVersion = 1;

  explicit LatticeCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  /// $GIL_CACHE_DIR if set, else $XDG_CACHE_HOME/gil, else ~/.cache/gil.
  static std::filesystem::path default_dir();

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path file_for(const Group& g) const;

  /// Nullopt on a missing file, another group's fingerprint, a stale format
  /// version or content that fails to rebuild identically.
  std::optional<SubgroupLattice> load(const Group& g) const;
  void store(const Group& g, const SubgroupLattice& lattice) const;
  SubgroupLattice get_or_build(const Group& g, std::size_t order_cap, bool* hit = nullptr) const;

 private:
  std::filesystem::path dir_;
};

std::string serialize_lattice(const Group& g, const SubgroupLattice& lattice);
std::optional<SubgroupLattice> deserialize_lattice(const Group& g, std::string_view text);

/// Bit-for-bit equality of subgroup lists, normal flags and classes.
bool same_lattice(const SubgroupLattice& a, const SubgroupLattice& b);

}  // namespace gil
