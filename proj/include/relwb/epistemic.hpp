#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "relwb/partition.hpp"
#include "relwb/relation_io.hpp"

namespace relwb::epistemic {

using Event = PointSet;

/// Finite states with one information partition per agent.
class EpistemicModel {
 public:
  EpistemicModel(SpacePtr states, std::vector<std::string> agents,
                 std::vector<Partition> partitions);

  const SpacePtr& space() const { return space_; }
  PointSet states() const { return space_->allPoints(); }
  const std::vector<std::string>& agents() const { return agents_; }
  const std::vector<Partition>& partitions() const { return partitions_; }
  const Partition& partitionOf(std::string_view agent) const;

 private:
  SpacePtr space_;
  std::vector<std::string> agents_;
  std::vector<Partition> partitions_;
};

/// Model on states named "1".."n".
SpacePtr numberedStates(std::size_t n);

/// A minus the saturation of its complement: the union of blocks inside A.
Event knows(const Event& a, const Partition& p);
/// Intersection of knows() over all agents.
Event everyoneKnows(const Event& a, const EpistemicModel& m);
/// Partition induced by the transitive closure of the union of the agents'
/// equivalence relations.
Partition meetPartitions(const EpistemicModel& m);
/// knows(a, meetPartitions(m)).
Event commonKnowledgeMeet(const Event& a, const EpistemicModel& m);
/// Intersection of everyoneKnows^n(a) for n >= 1, iterated until stable.
Event commonKnowledgeIterated(const Event& a, const EpistemicModel& m);

struct SaturationReport {
  bool passed = true;
  std::size_t checked = 0;
  /// Describes the first failing subset.
  std::string failure;
};

/// Builds E with (p,q) in E iff {p,q} ⊆ s or p = q on `carrier`, runs the
/// I/J construction on it, and checks saturate(A, t(I∪J)) ∩ omega0 = s for
/// every singleton A ⊆ s and `randomSubsets` random non-empty A ⊆ s.
SaturationReport saturationDemo(const std::vector<std::string>& carrier, const PointSet& omega0,
                               const PointSet& s, std::mt19937_64& rng,
                               std::size_t randomSubsets = 10);

/// States 0..2n-1. Agent "1" pairs w with w+n for each w in `paired`;
/// agent "2" lumps the top half {n..2n-1} into one block. Every other state
/// is a singleton.
EpistemicModel pathologyFixture(std::size_t n, const std::set<std::size_t>& paired);

// {"states": [...], "agents": [...], "partitions": {agent: [[...]...]}}
Json modelToJson(const EpistemicModel& m);
EpistemicModel modelFromJson(const Json& j);
EpistemicModel loadModel(const std::filesystem::path& path);

/// Random model with `states` states and `agents` agents.
EpistemicModel randomModel(std::size_t states, std::size_t agents, std::mt19937_64& rng);

}  // namespace relwb::epistemic
