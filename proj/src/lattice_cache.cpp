#include "gil/lattice_cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gil/error.hpp"

namespace gil {

using nlohmann::json;

namespace {

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

std::string to_hex(const ElementSet& s) {
  std::string out;
  for (auto w : s.words()) out += hex64(w);
  return out;
}

std::optional<ElementSet> from_hex(std::string_view hex, std::size_t universe) {
  ElementSet s(universe);
  auto words = s.words();
  if (hex.size() != words.size() * 16) return std::nullopt;
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::uint64_t w = 0;
    for (char c : hex.substr(i * 16, 16)) {
      int v;
      if (c >= '0' && c <= '9') {
        v = c - '0';
      } else if (c >= 'a' && c <= 'f') {
        v = c - 'a' + 10;
      } else {
        return std::nullopt;
      }
      w = (w << 4) | static_cast<std::uint64_t>(v);
    }
    words[i] = w;
  }
  // Bits past the universe would be elements that do not exist.
  if (universe % 64 && !words.empty() && (words.back() >> (universe % 64))) return std::nullopt;
  return s;
}

}  // namespace

std::string serialize_lattice(const Group& g, const SubgroupLattice& lattice) {
  if (lattice.group_id() != g.id()) throw MismatchedParents();
  json subs = json::array();
  json normal = json::array();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    subs.push_back(to_hex(lattice[i].members));
    normal.push_back(lattice.is_normal(i));
  }
  json j = {{"format", "gil-lattice"},
            {"version", LatticeCache::kFormatVersion},
            {"group_name", g.name()},
            {"group_order", g.order()},
            {"group_fingerprint", hex64(g.fingerprint())},
            {"subgroups", subs},
            {"normal", normal},
            {"classes", lattice.conjugacy_classes()}};
  return j.dump() + "\n";
}

std::optional<SubgroupLattice> deserialize_lattice(const Group& g, std::string_view text) {
  try {
    const json j = json::parse(text);
    if (j.at("format") != "gil-lattice") return std::nullopt;
    if (j.at("version").get<int>() != LatticeCache::kFormatVersion) return std::nullopt;
    if (j.at("group_fingerprint").get<std::string>() != hex64(g.fingerprint())) return std::nullopt;
    if (j.at("group_order").get<std::size_t>() != g.order()) return std::nullopt;
    std::vector<ElementSet> sets;
    for (const auto& h : j.at("subgroups")) {
      auto s = from_hex(h.get<std::string>(), g.order());
      if (!s) return std::nullopt;
      sets.push_back(std::move(*s));
    }
    auto lat = SubgroupLattice::from_sets(g, std::move(sets));
    const auto normal = j.at("normal").get<std::vector<bool>>();
    const auto classes = j.at("classes").get<std::vector<std::vector<std::size_t>>>();
    if (normal.size() != lat.size() || classes != lat.conjugacy_classes()) return std::nullopt;
    for (std::size_t i = 0; i < lat.size(); ++i) {
      if (normal[i] != lat.is_normal(i)) return std::nullopt;
    }
    return lat;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

bool same_lattice(const SubgroupLattice& a, const SubgroupLattice& b) {
  if (a.size() != b.size() || a.conjugacy_classes() != b.conjugacy_classes()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].members != b[i].members || a.is_normal(i) != b.is_normal(i)) return false;
  }
  return a.sylow_index() == b.sylow_index();
}

std::filesystem::path LatticeCache::default_dir() {
  if (const char* d = std::getenv("GIL_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "gil";
  if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "gil";
  return std::filesystem::temp_directory_path() / "gil-cache";
}

std::filesystem::path LatticeCache::file_for(const Group& g) const {
  return dir_ / ("lattice-" + hex64(g.fingerprint()) + ".json");
}

std::optional<SubgroupLattice> LatticeCache::load(const Group& g) const {
  std::ifstream in(file_for(g));
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return deserialize_lattice(g, ss.str());
}

void LatticeCache::store(const Group& g, const SubgroupLattice& lattice) const {
  std::filesystem::create_directories(dir_);
  const auto path = file_for(g);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("lattice cache: cannot write " + tmp);
    out << serialize_lattice(g, lattice);
  }
  std::filesystem::rename(tmp, path);
}

SubgroupLattice LatticeCache::get_or_build(const Group& g, std::size_t order_cap, bool* hit) const {
  if (auto lat = load(g)) {
    if (hit) *hit = true;
    return std::move(*lat);
  }
  if (hit) *hit = false;
  auto lat = all_subgroups(g, order_cap);
  store(g, lat);
  return lat;
}

}  // namespace gil
