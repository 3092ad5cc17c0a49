#pragma once

#include <optional>
#include <vector>

#include "relwb/relation.hpp"

namespace relwb::star {

/// R = D ∪ ({hub} × C) ∪ (C × {hub}) on an n-point carrier C.
struct StarInstance {
  SpacePtr space;
  PointId hub = 0;
  Relation relation;
};

/// Carrier "0".."n-1" with the given hub. Requires n >= 2.
StarInstance makeStar(std::size_t n, PointId hub = 0);

/// { D ∪ {(hub,b),(b,hub)} : b != hub }, ordered by b.
std::vector<Relation> canonicalFamily(const StarInstance& s);

/// Every equivalence relation contained in R: D and the canonical family.
/// Derived from the fact that transitivity forbids two distinct hub spokes.
std::vector<Relation> equivSubrelations(const StarInstance& s);
/// The same set obtained by enumerating all partitions of the carrier.
/// Bell(n) work; intended for n <= 8.
std::vector<Relation> equivSubrelationsExhaustive(const StarInstance& s);

struct CoverCertificate {
  std::size_t size = 0;
  /// spokes[k] is the non-hub point whose spoke forces family member k.
  std::vector<PointId> spokes;
};

/// n - 1: each spoke {hub,b} needs its own member, since no equivalence
/// subrelation contains two spokes.
CoverCertificate minCoverSize(const StarInstance& s);

/// Smallest k such that some k equivalence subrelations union to R, found
/// by searching all subsets of equivSubrelationsExhaustive(). nullopt when
/// no cover exists.
std::optional<std::size_t> minCoverExhaustive(const StarInstance& s);

}  // namespace relwb::star
