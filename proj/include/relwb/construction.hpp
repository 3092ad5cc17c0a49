#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "relwb/relation.hpp"

namespace relwb {

/// Swaps entries i and j (1-based, i < j) of a tuple.
template <typename T, std::size_t K>
std::array<T, K> transposeTuple(std::array<T, K> t, std::size_t i, std::size_t j) {
  if (i < 1 || i >= j || j > K) throw Error("transposeTuple: indices out of range");
  std::swap(t[i - 1], t[j - 1]);
  return t;
}

/// A finite set of triples over X, the witness whose projection is E.
class WitnessSet {
 public:
  WitnessSet(SpacePtr space, std::set<Triple> triples);

  const SpacePtr& space() const { return space_; }
  const std::set<Triple>& triples() const { return triples_; }
  std::size_t size() const { return triples_.size(); }
  /// (a,b,c) in F implies (b,a,c) in F.
  bool isTranspositionInvariant() const;

  friend bool operator==(const WitnessSet& a, const WitnessSet& b) {
    return a.space_->sameAs(*b.space_) && a.triples_ == b.triples_;
  }

 private:
  SpacePtr space_;
  std::set<Triple> triples_;
};

/// F = { (a,b,c) : (a,b) in e, c in X }. Requires e to be an equivalence on X.
WitnessSet makeWitness(const Relation& e);
/// F ∪ τ12(F).
WitnessSet symmetrizeWitness(SpacePtr space, const std::set<Triple>& raw);
/// { (a,b) : some c has (a,b,c) in F }.
Relation projectWitness(const WitnessSet& f);

/// The Y point j(a,b,c). Throws unless a, b, c are X points and the space
/// carries the triple.
PointId jMap(const GroundSpace& space, PointId a, PointId b, PointId c);

/// G = { (a, j(a,b,c)) : (a,b,c) in F }.
Relation buildG(const WitnessSet& f);
/// H = { (j(a,b,c), j(b,a,c)) : (a,b,c) in X^3 }.
Relation buildH(const SpacePtr& space);

/// The relations E, F, G, G', H, I, J on one ground space.
struct ConstructionBundle {
  SpacePtr space;
  Relation e;
  WitnessSet f;
  Relation g;
  Relation gBar;
  Relation h;
  Relation i;
  Relation j;
};

/// Same space and identical pair sets for every member.
bool operator==(const ConstructionBundle& a, const ConstructionBundle& b);

/// Checks that `e` is reflexive and symmetric on X and lies in X × X.
void requireTargetRelation(const Relation& e);

/// Builds G, G', H, I = D ∪ G ∪ G' ∪ G'G and J = D ∪ H. Requires a
/// τ12-invariant witness and a reflexive symmetric e on X; requires the
/// space to carry every triple over X.
ConstructionBundle buildIJ(const Relation& e, const WitnessSet& f);
/// Same as buildIJ without validating e or f. Used to study broken inputs.
ConstructionBundle assembleBundle(const Relation& e, const WitnessSet& f);
/// buildIJ(e, makeWitness(e)).
ConstructionBundle buildDefault(const Relation& e);

struct IdentityCheck {
  std::string name;
  bool holds = false;
  /// A pair in the symmetric difference of the two sides when `holds` is false.
  std::optional<Pair> counterexample;
};

/// Composition identities, each as an exact pair-set equality:
/// G∘G' = D↾X, G'∘G = {(j(a,b,c), j(a,d,e)) : both in F}, H = H', H∘H = D↾Y,
/// G∘H = {(a, j(b,a,c)) : (a,b,c) in F}, G∘H∘G' = E.
std::vector<IdentityCheck> verifyCompositionIdentities(const ConstructionBundle& bundle);

/// Bundle-level invariants: signatures, I and J equivalences on Ω, and the
/// defining equalities for I and J. Returns the names of violated invariants.
std::vector<std::string> bundleViolations(const ConstructionBundle& bundle);

/// A uniformly labelled random equivalence relation on X (labels drawn in
/// [0, |X|) and merged). Deterministic for a given generator state.
Relation randomEquivalence(const SpacePtr& space, std::mt19937_64& rng);
/// Portable bounded draw in [0, bound).
std::uint64_t drawBelow(std::mt19937_64& rng, std::uint64_t bound);

/// Space with X = {x1..xn} and every triple in Y.
SpacePtr numberedSpace(std::size_t n);

}  // namespace relwb
