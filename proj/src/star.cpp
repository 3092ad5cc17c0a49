#include "relwb/star.hpp"

#include <algorithm>
#include <bit>

#include "relwb/partition.hpp"

namespace relwb::star {

StarInstance makeStar(std::size_t n, PointId hub) {
  if (n < 2) throw Error("star relation needs at least two points");
  if (hub >= n) throw Error("hub outside the carrier");
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back(std::to_string(k));
  SpacePtr space = GroundSpace::plain(std::move(names));
  std::vector<Pair> pairs;
  for (PointId p = 0; p < n; ++p) {
    pairs.emplace_back(p, p);
    pairs.emplace_back(hub, p);
    pairs.emplace_back(p, hub);
  }
  Relation r(space, pairs);
  return {std::move(space), hub, std::move(r)};
}

std::vector<Relation> canonicalFamily(const StarInstance& s) {
  const Relation d = Relation::diagonal(s.space);
  std::vector<Relation> out;
  for (PointId b = 0; b < s.space->size(); ++b) {
    if (b == s.hub) continue;
    const std::vector<Pair> spoke{{s.hub, b}, {b, s.hub}};
    out.push_back(unite(d, Relation(s.space, spoke)));
  }
  return out;
}

std::vector<Relation> equivSubrelations(const StarInstance& s) {
  std::vector<Relation> out{Relation::diagonal(s.space)};
  for (Relation& r : canonicalFamily(s)) out.push_back(std::move(r));
  return out;
}

std::vector<Relation> equivSubrelationsExhaustive(const StarInstance& s) {
  std::vector<Relation> out;
  forEachPartition(s.space->allPoints(), [&](const Partition& p) {
    Relation r = partitionToRelation(s.space, p);
    if (r.subsetOf(s.relation)) out.push_back(std::move(r));
  });
  return out;
}

CoverCertificate minCoverSize(const StarInstance& s) {
  CoverCertificate cert;
  for (PointId b = 0; b < s.space->size(); ++b)
    if (b != s.hub) cert.spokes.push_back(b);
  cert.size = cert.spokes.size();
  return cert;
}

std::optional<std::size_t> minCoverExhaustive(const StarInstance& s) {
  const std::vector<Relation> parts = equivSubrelationsExhaustive(s);
  if (parts.size() >= 63) throw Error("minCoverExhaustive: too many subrelations to search");
  std::optional<std::size_t> best;
  const std::uint64_t limit = std::uint64_t{1} << parts.size();
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    const auto k = static_cast<std::size_t>(std::popcount(mask));
    if (best && k >= *best) continue;
    Relation acc(s.space);
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (mask >> i & 1u) acc = unite(acc, parts[i]);
    if (acc == s.relation) best = k;
  }
  return best;
}

}  // namespace relwb::star
