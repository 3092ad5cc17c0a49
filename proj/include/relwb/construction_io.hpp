#pragma once

#include <filesystem>

#include "relwb/construction.hpp"
#include "relwb/relation_io.hpp"

namespace relwb {

// Bundle document:
// {"space": {...}, "E": [[id,id]...], "F": [[a,b,c]...], "G": [...], "G'": [...],
//  "H": [...], "I": [...], "J": [...]}
Json bundleToJson(const ConstructionBundle& bundle);
/// Throws ParseError for malformed documents and for violated bundle
/// invariants; the message names the violated invariant.
ConstructionBundle bundleFromJson(const Json& j);

void saveBundle(const ConstructionBundle& bundle, const std::filesystem::path& path);
ConstructionBundle loadBundle(const std::filesystem::path& path);

}  // namespace relwb
