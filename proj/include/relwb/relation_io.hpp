#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "relwb/partition.hpp"

namespace relwb {

using Json = nlohmann::ordered_json;

// Ground space: {"X": [ids...], "Y": "auto" | ["j(a,b,c)", ...]}
Json spaceToJson(const GroundSpace& space);
SpacePtr spaceFromJson(const Json& j);

// Relation: {"space": ..., "pairs": [[id,id], ...], "signature": ["X","Y"]?}
Json relationToJson(const Relation& r);
Relation relationFromJson(const Json& j);
/// Pairs only, resolved against an existing space.
Json pairsToJson(const Relation& r);
Relation pairsFromJson(const SpacePtr& space, const Json& pairs);

// Partition: {"carrier": [ids...], "blocks": [[ids...], ...]}
Json partitionToJson(const GroundSpace& space, const Partition& p);
Partition partitionFromJson(const GroundSpace& space, const Json& j);

Json pointSetToJson(const GroundSpace& space, const PointSet& s);
PointSet pointSetFromJson(const GroundSpace& space, const Json& j);

/// Reads a JSON document; throws ParseError with the path on failure.
Json readJsonFile(const std::filesystem::path& path);
void writeJsonFile(const std::filesystem::path& path, const Json& j);

}  // namespace relwb
