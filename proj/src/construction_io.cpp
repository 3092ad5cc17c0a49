#include "relwb/construction_io.hpp"

namespace relwb {

Json bundleToJson(const ConstructionBundle& b) {
  Json out = Json::object();
  out["space"] = spaceToJson(*b.space);
  out["E"] = pairsToJson(b.e);
  Json f = Json::array();
  for (const Triple& t : b.f.triples())
    f.push_back(Json::array({b.space->name(t[0]), b.space->name(t[1]), b.space->name(t[2])}));
  out["F"] = std::move(f);
  out["G"] = pairsToJson(b.g);
  out["G'"] = pairsToJson(b.gBar);
  out["H"] = pairsToJson(b.h);
  out["I"] = pairsToJson(b.i);
  out["J"] = pairsToJson(b.j);
  return out;
}

ConstructionBundle bundleFromJson(const Json& j) {
  if (!j.is_object()) throw ParseError("bundle must be a JSON object");
  for (const char* key : {"space", "E", "F", "G", "G'", "H", "I", "J"})
    if (!j.contains(key)) throw ParseError(std::string("bundle is missing '") + key + "'");

  SpacePtr space = spaceFromJson(j.at("space"));
  if (!space->hasAllTriples())
    throw ParseError("invariant violated: Y must carry every triple over X");

  std::set<Triple> triples;
  const Json& fs = j.at("F");
  if (!fs.is_array()) throw ParseError("'F' must be an array of triples");
  for (const Json& t : fs) {
    if (!t.is_array() || t.size() != 3) throw ParseError("witness triple must be [a,b,c]");
    Triple tr{};
    for (int k = 0; k < 3; ++k) {
      if (!t[k].is_string()) throw ParseError("witness entries must be identifiers");
      tr[k] = space->at(t[k].get<std::string>());
      if (space->sortOf(tr[k]) != Sort::X)
        throw ParseError("invariant violated: witness triples range over X");
    }
    triples.insert(tr);
  }

  auto rel = [&](const char* key) { return pairsFromJson(space, j.at(key)); };
  ConstructionBundle b{space,
                       rel("E"),
                       WitnessSet(space, std::move(triples)),
                       rel("G"),
                       rel("G'"),
                       rel("H"),
                       rel("I"),
                       rel("J")};

  std::vector<std::string> violations = bundleViolations(b);
  if (!(b.g == buildG(b.f))) violations.insert(violations.begin(), "G = {(a,j(a,b,c)) : F}");
  if (!(b.h == buildH(space))) violations.insert(violations.begin(), "H = {(j(a,b,c),j(b,a,c))}");
  if (!violations.empty()) throw ParseError("invariant violated: " + violations.front());

  b.e = b.e.withSignature(Signature{Sort::X, Sort::X});
  b.g = b.g.withSignature(Signature{Sort::X, Sort::Y});
  b.gBar = b.gBar.withSignature(Signature{Sort::Y, Sort::X});
  b.h = b.h.withSignature(Signature{Sort::Y, Sort::Y});
  return b;
}

void saveBundle(const ConstructionBundle& bundle, const std::filesystem::path& path) {
  writeJsonFile(path, bundleToJson(bundle));
}

ConstructionBundle loadBundle(const std::filesystem::path& path) {
  return bundleFromJson(readJsonFile(path));
}

}  // namespace relwb
