#pragma once

// On-disk cache for graded component bases.  Plain-text format so diffs and
// corruption are inspectable; a checksum line guards the payload.  Writes go
// through a temp file + rename so readers never see a half-written entry.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "genmat/graded.hpp"

namespace genmat {

// Bump when the payload layout changes; old entries are then recomputed.
inline constexpr const char* kCacheFormat = "genmat-basis v1";
// Term-order fingerprint baked into key + header.  Changing any canonical
// order must change this tag, otherwise stale entries would deserialize into
// a basis that silently disagrees with fresh computations.
inline constexpr const char* kOrderTag = "glex-hij.pos-asc.mon-desc";

// Unreadable entry (bad checksum, truncation, malformed line).  Deliberately
// not a silent miss: corruption should surface, not hide behind a recompute.
struct CacheCorrupt : std::runtime_error {
  explicit CacheCorrupt(const std::string& what) : std::runtime_error(what) {}
};

enum class CacheStatus { Hit, Miss, Stale };  // Stale = readable but old format

std::string cache_stem(const RingId& ring, const MultiDegree& d);
std::filesystem::path cache_file(const std::filesystem::path& dir, const RingId& ring,
                                 const MultiDegree& d);

void save_basis(const std::filesystem::path& dir, const GradedBasis& b);

struct CacheLookup {
  CacheStatus status = CacheStatus::Miss;
  std::optional<GradedBasis> basis;  // set iff status == Hit
};

// Throws CacheCorrupt on checksum/parse failure; Stale on format-tag change.
CacheLookup load_basis(const std::filesystem::path& dir, const RingId& ring,
                       const MultiDegree& d);

// Compute-through-cache.  No dir -> always fresh.  Stale entries are
// recomputed and overwritten.  from_cache reports where the result came from.
GradedBasis cached_component_basis(const std::optional<std::filesystem::path>& dir,
                                   const RingId& ring, const MultiDegree& d,
                                   const Budget& budget = {}, const LinAlgOptions& opts = {},
                                   bool* from_cache = nullptr);

std::uint64_t fnv1a64(const std::string& s);

}  // namespace genmat
