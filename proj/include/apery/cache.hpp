#pragma once

#include <cstddef>
#include <string>

#include "apery/bernoulli.hpp"

namespace apery {

// Text format, line 1 "BERNOULLI-CACHE v1", then "<n> <num>/<den>" ascending
// from 0 with no gaps.

// Loads path when it exists and validates; extends and re-persists when too
// short; rebuilds from scratch (with a warning on stderr) when unreadable or
// invalid. An empty path just builds in memory.
BernoulliTable load_or_build_cache(const std::string& path, std::size_t needed_max_index);

// Atomic: writes a temporary sibling then renames over path.
void save_cache(const std::string& path, const BernoulliTable& table);

// $APERY_CACHE when set, otherwise empty (no persistence).
std::string default_cache_path();

}  // namespace apery
