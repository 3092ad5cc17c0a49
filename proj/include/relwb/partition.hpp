#pragma once

#include <functional>
#include <vector>

#include "relwb/relation.hpp"

namespace relwb {

/// Pairwise-disjoint non-empty blocks covering a carrier. Blocks are kept
/// sorted by their least element.
class Partition {
 public:
  Partition(PointSet carrier, std::vector<PointSet> blocks);

  static Partition discrete(const PointSet& carrier);
  static Partition single(const PointSet& carrier);

  const PointSet& carrier() const { return carrier_; }
  const std::vector<PointSet>& blocks() const { return blocks_; }
  /// Block containing p; throws if p is outside the carrier.
  const PointSet& blockOf(PointId p) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  PointSet carrier_;
  std::vector<PointSet> blocks_;
};

Relation partitionToRelation(SpacePtr space, const Partition& p);
/// Throws when r is not an equivalence relation on `carrier`.
Partition relationToPartition(const Relation& r, const PointSet& carrier);

/// Calls `visit` once for every partition of `carrier` (restricted growth
/// strings, Bell(|carrier|) calls).
void forEachPartition(const PointSet& carrier, const std::function<void(const Partition&)>& visit);

}  // namespace relwb
