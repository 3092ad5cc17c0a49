#include "relwb/relation_io.hpp"

#include <fstream>

namespace relwb {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string stringOf(const Json& j) {
  if (!j.is_string()) throw ParseError("expected a string identifier, got " + j.dump());
  return j.get<std::string>();
}

}  // namespace

Json spaceToJson(const GroundSpace& space) {
  Json x = Json::array();
  for (PointId p = 0; p < space.xCount(); ++p) x.push_back(space.name(p));
  Json out = Json::object();
  out["X"] = std::move(x);
  if (space.hasAllTriples()) {
    out["Y"] = "auto";
  } else {
    Json y = Json::array();
    for (PointId p : space.yPoints()) y.push_back(space.name(p));
    out["Y"] = std::move(y);
  }
  return out;
}

SpacePtr spaceFromJson(const Json& j) {
  const Json& xs = member(j, "X");
  if (!xs.is_array()) throw ParseError("'X' must be an array of identifiers");
  std::vector<std::string> names;
  for (const Json& x : xs) names.push_back(stringOf(x));
  if (!j.contains("Y")) return GroundSpace::plain(std::move(names));
  const Json& ys = j.at("Y");
  if (ys.is_string()) {
    if (ys.get<std::string>() != "auto") throw ParseError("'Y' must be \"auto\" or an array");
    return GroundSpace::withTriples(std::move(names));
  }
  if (!ys.is_array()) throw ParseError("'Y' must be \"auto\" or an array");
  std::unordered_map<std::string, PointId> xIndex;
  for (PointId p = 0; p < names.size(); ++p) xIndex.emplace(names[p], p);
  std::vector<Triple> triples;
  for (const Json& y : ys) {
    const std::string id = stringOf(y);
    auto parts = GroundSpace::splitTripleName(id);
    if (!parts) throw ParseError("Y point '" + id + "' is not of the form j(a,b,c)");
    Triple t{};
    for (int k = 0; k < 3; ++k) {
      auto it = xIndex.find((*parts)[k]);
      if (it == xIndex.end())
        throw ParseError("Y point '" + id + "' references unknown X point '" + (*parts)[k] + "'");
      t[k] = it->second;
    }
    triples.push_back(t);
  }
  return GroundSpace::withTriples(std::move(names), std::move(triples));
}

Json pairsToJson(const Relation& r) {
  Json pairs = Json::array();
  for (const auto& [a, b] : r.pairs())
    pairs.push_back(Json::array({r.space()->name(a), r.space()->name(b)}));
  return pairs;
}

Relation pairsFromJson(const SpacePtr& space, const Json& pairs) {
  if (!pairs.is_array()) throw ParseError("'pairs' must be an array");
  std::vector<Pair> out;
  for (const Json& p : pairs) {
    if (!p.is_array() || p.size() != 2) throw ParseError("pair must be [id, id], got " + p.dump());
    out.emplace_back(space->at(stringOf(p[0])), space->at(stringOf(p[1])));
  }
  return Relation(space, out);
}

Json relationToJson(const Relation& r) {
  Json out = Json::object();
  out["space"] = spaceToJson(*r.space());
  out["pairs"] = pairsToJson(r);
  if (r.signature())
    out["signature"] = Json::array({toString(r.signature()->dom), toString(r.signature()->cod)});
  return out;
}

Relation relationFromJson(const Json& j) {
  SpacePtr space = spaceFromJson(member(j, "space"));
  Relation r = pairsFromJson(space, member(j, "pairs"));
  if (j.contains("signature")) {
    const Json& s = j.at("signature");
    if (!s.is_array() || s.size() != 2) throw ParseError("'signature' must be [dom, cod]");
    r = r.withSignature(Signature{parseSort(stringOf(s[0])), parseSort(stringOf(s[1]))});
  }
  return r;
}

Json pointSetToJson(const GroundSpace& space, const PointSet& s) {
  Json out = Json::array();
  for (PointId p : s) out.push_back(space.name(p));
  return out;
}

PointSet pointSetFromJson(const GroundSpace& space, const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of identifiers");
  PointSet out;
  for (const Json& e : j) {
    // Numeric state ids are accepted and read by their decimal spelling.
    const std::string id = e.is_number_integer() ? e.dump() : stringOf(e);
    out.insert(space.at(id));
  }
  return out;
}

Json partitionToJson(const GroundSpace& space, const Partition& p) {
  Json blocks = Json::array();
  for (const PointSet& b : p.blocks()) blocks.push_back(pointSetToJson(space, b));
  Json out = Json::object();
  out["carrier"] = pointSetToJson(space, p.carrier());
  out["blocks"] = std::move(blocks);
  return out;
}

Partition partitionFromJson(const GroundSpace& space, const Json& j) {
  PointSet carrier = pointSetFromJson(space, member(j, "carrier"));
  const Json& bs = member(j, "blocks");
  if (!bs.is_array()) throw ParseError("'blocks' must be an array");
  std::vector<PointSet> blocks;
  for (const Json& b : bs) blocks.push_back(pointSetFromJson(space, b));
  try {
    return Partition(std::move(carrier), std::move(blocks));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

Json readJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void writeJsonFile(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace relwb
