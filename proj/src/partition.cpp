#include "relwb/partition.hpp"

#include <algorithm>

namespace relwb {

Partition::Partition(PointSet carrier, std::vector<PointSet> blocks)
    : carrier_(std::move(carrier)), blocks_(std::move(blocks)) {
  PointSet seen;
  for (const PointSet& block : blocks_) {
    if (block.empty()) throw Error("partition has an empty block");
    for (PointId p : block) {
      if (!carrier_.contains(p)) throw Error("partition block leaves the carrier");
      if (!seen.insert(p).second) throw Error("partition blocks overlap");
    }
  }
  if (seen != carrier_) throw Error("partition blocks do not cover the carrier");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const PointSet& a, const PointSet& b) { return *a.begin() < *b.begin(); });
}

Partition Partition::discrete(const PointSet& carrier) {
  std::vector<PointSet> blocks;
  for (PointId p : carrier) blocks.push_back({p});
  return Partition(carrier, std::move(blocks));
}

Partition Partition::single(const PointSet& carrier) {
  if (carrier.empty()) return Partition(carrier, {});
  return Partition(carrier, {carrier});
}

const PointSet& Partition::blockOf(PointId p) const {
  for (const PointSet& block : blocks_)
    if (block.contains(p)) return block;
  throw Error("point outside the partition's carrier");
}

Relation partitionToRelation(SpacePtr space, const Partition& p) {
  BitMatrix m(space->size());
  for (const PointSet& block : p.blocks())
    for (PointId a : block) {
      if (a >= space->size()) throw Error("partition point outside the ground space");
      for (PointId b : block) m.set(a, b);
    }
  return Relation(std::move(space), std::move(m));
}

Partition relationToPartition(const Relation& r, const PointSet& carrier) {
  if (auto report = isEquivalence(r, carrier); !report)
    throw Error("not an equivalence relation: " + report.violation);
  std::vector<PointSet> blocks;
  PointSet assigned;
  for (PointId a : carrier) {
    if (assigned.contains(a)) continue;
    PointSet block;
    for (PointId b : carrier)
      if (r.contains(a, b)) block.insert(b);
    assigned.insert(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return Partition(carrier, std::move(blocks));
}

void forEachPartition(const PointSet& carrier,
                      const std::function<void(const Partition&)>& visit) {
  const std::vector<PointId> points(carrier.begin(), carrier.end());
  const std::size_t n = points.size();
  if (n == 0) {
    visit(Partition(carrier, {}));
    return;
  }
  // labels[i] <= 1 + max(labels[0..i-1])
  std::vector<std::size_t> labels(n, 0);
  std::vector<std::size_t> prefixMax(n, 0);
  for (;;) {
    std::size_t blockCount = prefixMax[n - 1] + 1;
    std::vector<PointSet> blocks(blockCount);
    for (std::size_t i = 0; i < n; ++i) blocks[labels[i]].insert(points[i]);
    visit(Partition(carrier, std::move(blocks)));

    std::size_t i = n - 1;
    while (i > 0 && labels[i] == prefixMax[i - 1] + 1) --i;
    if (i == 0) return;
    ++labels[i];
    prefixMax[i] = std::max(prefixMax[i - 1], labels[i]);
    for (std::size_t k = i + 1; k < n; ++k) {
      labels[k] = 0;
      prefixMax[k] = prefixMax[i];
    }
  }
}

}  // namespace relwb
