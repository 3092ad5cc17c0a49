#include "relwb/epistemic.hpp"

#include <algorithm>

#include "relwb/construction.hpp"

namespace relwb::epistemic {

EpistemicModel::EpistemicModel(SpacePtr states, std::vector<std::string> agents,
                               std::vector<Partition> partitions)
    : space_(std::move(states)), agents_(std::move(agents)), partitions_(std::move(partitions)) {
  if (agents_.empty()) throw Error("epistemic model needs at least one agent");
  if (agents_.size() != partitions_.size())
    throw Error("epistemic model needs exactly one partition per agent");
  const PointSet all = space_->allPoints();
  for (std::size_t k = 0; k < agents_.size(); ++k) {
    if (partitions_[k].carrier() != all)
      throw Error("partition of agent '" + agents_[k] + "' does not cover the state set");
    for (std::size_t l = 0; l < k; ++l)
      if (agents_[l] == agents_[k]) throw Error("duplicate agent '" + agents_[k] + "'");
  }
}

const Partition& EpistemicModel::partitionOf(std::string_view agent) const {
  for (std::size_t k = 0; k < agents_.size(); ++k)
    if (agents_[k] == agent) return partitions_[k];
  throw Error("unknown agent '" + std::string(agent) + "'");
}

SpacePtr numberedStates(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t k = 1; k <= n; ++k) names.push_back(std::to_string(k));
  return GroundSpace::plain(std::move(names));
}

Event knows(const Event& a, const Partition& p) {
  Event out;
  for (const PointSet& block : p.blocks())
    if (std::includes(a.begin(), a.end(), block.begin(), block.end()))
      out.insert(block.begin(), block.end());
  return out;
}

Event everyoneKnows(const Event& a, const EpistemicModel& m) {
  Event out = knows(a, m.partitions().front());
  for (std::size_t k = 1; k < m.partitions().size(); ++k) {
    const Event next = knows(a, m.partitions()[k]);
    Event both;
    std::set_intersection(out.begin(), out.end(), next.begin(), next.end(),
                          std::inserter(both, both.end()));
    out = std::move(both);
  }
  return out;
}

Partition meetPartitions(const EpistemicModel& m) {
  Relation joined(m.space());
  for (const Partition& p : m.partitions()) joined = unite(joined, partitionToRelation(m.space(), p));
  return relationToPartition(transitiveClosure(joined).relation, m.states());
}

Event commonKnowledgeMeet(const Event& a, const EpistemicModel& m) {
  return knows(a, meetPartitions(m));
}

Event commonKnowledgeIterated(const Event& a, const EpistemicModel& m) {
  // everyoneKnows(b) ⊆ b, so the iterates decrease and stabilize within
  // |states| + 1 steps; the intersection is the last iterate.
  Event current = everyoneKnows(a, m);
  for (std::size_t step = 0; step <= m.space()->size(); ++step) {
    Event next = everyoneKnows(current, m);
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

SaturationReport saturationDemo(const std::vector<std::string>& carrier, const PointSet& omega0,
                               const PointSet& s, std::mt19937_64& rng,
                               std::size_t randomSubsets) {
  if (carrier.empty()) throw Error("saturation demo: empty carrier");
  if (omega0.size() >= carrier.size()) throw Error("saturation demo: Ω0 must be a proper subset");
  if (s.empty()) throw Error("saturation demo: S must be non-empty");
  for (PointId p : omega0)
    if (p >= carrier.size()) throw Error("saturation demo: Ω0 leaves the carrier");
  if (!std::includes(omega0.begin(), omega0.end(), s.begin(), s.end()))
    throw Error("saturation demo: S must lie inside Ω0");

  SpacePtr space = GroundSpace::withTriples(carrier);
  std::vector<Pair> pairs;
  for (PointId a = 0; a < carrier.size(); ++a)
    for (PointId b = 0; b < carrier.size(); ++b)
      if (a == b || (s.contains(a) && s.contains(b))) pairs.emplace_back(a, b);
  const Relation e(space, pairs);
  const ConstructionBundle bundle = buildDefault(e);
  const Relation closure = transitiveClosure(unite(bundle.i, bundle.j)).relation;

  SaturationReport report;
  auto check = [&](const PointSet& a) {
    ++report.checked;
    PointSet hit;
    for (PointId p : saturate(a, closure))
      if (omega0.contains(p)) hit.insert(p);
    if (hit != s && report.passed) {
      report.passed = false;
      report.failure = "saturation of {";
      for (PointId p : a) report.failure += space->name(p) + (p == *a.rbegin() ? "" : ",");
      report.failure += "} meets Ω0 outside S";
    }
  };
  for (PointId p : s) check({p});
  const std::vector<PointId> members(s.begin(), s.end());
  const std::uint64_t subsets = (std::uint64_t{1} << members.size()) - 1;
  for (std::size_t k = 0; k < randomSubsets; ++k) {
    const std::uint64_t mask = 1 + drawBelow(rng, subsets);
    PointSet a;
    for (std::size_t b = 0; b < members.size(); ++b)
      if (mask >> b & 1u) a.insert(members[b]);
    check(a);
  }
  return report;
}

EpistemicModel pathologyFixture(std::size_t n, const std::set<std::size_t>& paired) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < 2 * n; ++k) names.push_back(std::to_string(k));
  SpacePtr space = GroundSpace::plain(std::move(names));
  const PointSet all = space->allPoints();

  std::vector<PointSet> first;
  for (std::size_t w = 0; w < n; ++w) {
    if (paired.contains(w))
      first.push_back({w, w + n});
    else
      first.push_back({w});
  }
  for (std::size_t w = n; w < 2 * n; ++w)
    if (!paired.contains(w - n)) first.push_back({w});

  std::vector<PointSet> second;
  for (std::size_t w = 0; w < n; ++w) second.push_back({w});
  PointSet top;
  for (std::size_t w = n; w < 2 * n; ++w) top.insert(w);
  if (!top.empty()) second.push_back(top);

  return EpistemicModel(space, {"1", "2"},
                        {Partition(all, std::move(first)), Partition(all, std::move(second))});
}

Json modelToJson(const EpistemicModel& m) {
  Json out = Json::object();
  out["states"] = pointSetToJson(*m.space(), m.states());
  out["agents"] = m.agents();
  Json parts = Json::object();
  for (std::size_t k = 0; k < m.agents().size(); ++k) {
    Json blocks = Json::array();
    for (const PointSet& b : m.partitions()[k].blocks())
      blocks.push_back(pointSetToJson(*m.space(), b));
    parts[m.agents()[k]] = std::move(blocks);
  }
  out["partitions"] = std::move(parts);
  return out;
}

EpistemicModel modelFromJson(const Json& j) {
  if (!j.is_object()) throw ParseError("model must be a JSON object");
  for (const char* key : {"states", "agents", "partitions"})
    if (!j.contains(key)) throw ParseError(std::string("model is missing '") + key + "'");
  std::vector<std::string> names;
  for (const Json& s : j.at("states")) {
    if (s.is_string())
      names.push_back(s.get<std::string>());
    else if (s.is_number_integer())
      names.push_back(s.dump());
    else
      throw ParseError("state ids must be strings or integers");
  }
  SpacePtr space = GroundSpace::plain(std::move(names));
  std::vector<std::string> agents;
  std::vector<Partition> partitions;
  const Json& parts = j.at("partitions");
  for (const Json& a : j.at("agents")) {
    if (!a.is_string()) throw ParseError("agent names must be strings");
    const std::string agent = a.get<std::string>();
    if (!parts.contains(agent)) throw ParseError("no partition for agent '" + agent + "'");
    std::vector<PointSet> blocks;
    for (const Json& b : parts.at(agent)) blocks.push_back(pointSetFromJson(*space, b));
    try {
      partitions.emplace_back(space->allPoints(), std::move(blocks));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError("partition of agent '" + agent + "': " + e.what());
    }
    agents.push_back(agent);
  }
  try {
    return EpistemicModel(space, std::move(agents), std::move(partitions));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

EpistemicModel loadModel(const std::filesystem::path& path) {
  return modelFromJson(readJsonFile(path));
}

EpistemicModel randomModel(std::size_t states, std::size_t agents, std::mt19937_64& rng) {
  SpacePtr space = numberedStates(states);
  const PointSet all = space->allPoints();
  std::vector<std::string> names;
  std::vector<Partition> partitions;
  for (std::size_t k = 0; k < agents; ++k) {
    names.push_back(std::to_string(k + 1));
    std::vector<PointSet> blocks(states);
    for (PointId p = 0; p < states; ++p) blocks[drawBelow(rng, states)].insert(p);
    std::erase_if(blocks, [](const PointSet& b) { return b.empty(); });
    partitions.emplace_back(all, std::move(blocks));
  }
  return EpistemicModel(space, std::move(names), std::move(partitions));
}

}  // namespace relwb::epistemic
