#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "core/workload.hpp"

namespace ddm {

// Text format, one extent per line:
//
//   kind id low_0 high_0 [low_1 high_1 ...]
//
// kind is S or U, fields are whitespace separated, lines starting with '#'
// are comments. Coordinates are written in the shortest fixed-point form that
// reads back to the same double.
void write_extents(std::ostream& os, const ExtentSet& subscriptions,
                   const ExtentSet& updates);

// Parse errors name the 1-based line. Ids per kind must form 0..n-1 (any
// order). A "# ... dims=<d>" comment sets the dimensionality of a file with
// no extent lines.
Workload read_extents(std::istream& is);

// Writes `path` and a JSON sidecar at metadata_path(path) holding the counts,
// the dimensionality and, when given, the generating config and RNG identity.
void save_extents(const std::filesystem::path& path, const ExtentSet& subscriptions,
                  const ExtentSet& updates,
                  const std::optional<WorkloadConfig>& config = std::nullopt);
Workload load_extents(const std::filesystem::path& path);

std::filesystem::path metadata_path(const std::filesystem::path& path);

}  // namespace ddm
