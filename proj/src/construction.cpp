#include "relwb/construction.hpp"

#include <limits>

namespace relwb {

namespace {

constexpr Signature kXX{Sort::X, Sort::X};
constexpr Signature kXY{Sort::X, Sort::Y};
constexpr Signature kYY{Sort::Y, Sort::Y};

IdentityCheck compare(std::string name, const Relation& lhs, const Relation& rhs) {
  IdentityCheck check{std::move(name), lhs == rhs, std::nullopt};
  if (!check.holds) {
    const std::size_t n = lhs.space()->size();
    for (PointId a = 0; a < n && !check.counterexample; ++a)
      for (PointId b = 0; b < n; ++b)
        if (lhs.contains(a, b) != rhs.contains(a, b)) {
          check.counterexample = Pair{a, b};
          break;
        }
  }
  return check;
}

}  // namespace

WitnessSet::WitnessSet(SpacePtr space, std::set<Triple> triples)
    : space_(std::move(space)), triples_(std::move(triples)) {
  for (const Triple& t : triples_)
    for (PointId c : t)
      if (c >= space_->xCount()) throw Error("witness triple references a point outside X");
}

bool WitnessSet::isTranspositionInvariant() const {
  for (const Triple& t : triples_)
    if (!triples_.contains(transposeTuple(t, 1, 2))) return false;
  return true;
}

WitnessSet makeWitness(const Relation& e) {
  const GroundSpace& space = *e.space();
  if (auto report = isEquivalence(e, space.xPoints()); !report)
    throw Error("makeWitness: target is not an equivalence relation on X (" +
                report.violation + ")");
  std::set<Triple> triples;
  for (const auto& [a, b] : e.pairs())
    for (PointId c = 0; c < space.xCount(); ++c) triples.insert({a, b, c});
  return WitnessSet(e.space(), std::move(triples));
}

WitnessSet symmetrizeWitness(SpacePtr space, const std::set<Triple>& raw) {
  std::set<Triple> triples = raw;
  for (const Triple& t : raw) triples.insert(transposeTuple(t, 1, 2));
  return WitnessSet(std::move(space), std::move(triples));
}

Relation projectWitness(const WitnessSet& f) {
  std::vector<Pair> pairs;
  for (const Triple& t : f.triples()) pairs.emplace_back(t[0], t[1]);
  return Relation(f.space(), pairs, kXX);
}

PointId jMap(const GroundSpace& space, PointId a, PointId b, PointId c) {
  if (a >= space.xCount() || b >= space.xCount() || c >= space.xCount())
    throw Error("jMap: argument is not an X point");
  auto y = space.triplePoint({a, b, c});
  if (!y) throw Error("jMap: ground space does not carry the triple");
  return *y;
}

Relation buildG(const WitnessSet& f) {
  const GroundSpace& space = *f.space();
  std::vector<Pair> pairs;
  for (const Triple& t : f.triples()) pairs.emplace_back(t[0], jMap(space, t[0], t[1], t[2]));
  return Relation(f.space(), pairs, kXY);
}

Relation buildH(const SpacePtr& space) {
  const std::size_t n = space->xCount();
  std::vector<Pair> pairs;
  for (PointId a = 0; a < n; ++a)
    for (PointId b = 0; b < n; ++b)
      for (PointId c = 0; c < n; ++c)
        pairs.emplace_back(jMap(*space, a, b, c), jMap(*space, b, a, c));
  return Relation(space, pairs, kYY);
}

void requireTargetRelation(const Relation& e) {
  const GroundSpace& space = *e.space();
  const PointSet xs = space.xPoints();
  for (const auto& [a, b] : e.pairs())
    if (a >= space.xCount() || b >= space.xCount())
      throw Error("target relation has a pair outside X × X: " + formatPair(space, {a, b}));
  for (PointId p : xs)
    if (!e.contains(p, p))
      throw Error("target relation is not reflexive on X: missing " + formatPair(space, {p, p}));
  for (const auto& [a, b] : e.pairs())
    if (!e.contains(b, a))
      throw Error("target relation is not symmetric: " + formatPair(space, {a, b}));
}

ConstructionBundle assembleBundle(const Relation& e, const WitnessSet& f) {
  requireSameSpace(*e.space(), *f.space(), "assembleBundle");
  const SpacePtr& space = e.space();
  if (!space->hasAllTriples())
    throw Error("construction requires a ground space carrying every triple over X");
  Relation g = buildG(f);
  Relation gBar = converse(g);
  Relation h = buildH(space);
  const Relation d = Relation::diagonal(space);
  Relation i = unite(unite(unite(d, g), gBar), compose(gBar, g)).withSignature(std::nullopt);
  Relation j = unite(d, h).withSignature(std::nullopt);
  return ConstructionBundle{space,
                            e.withSignature(kXX),
                            f,
                            std::move(g),
                            std::move(gBar),
                            std::move(h),
                            std::move(i),
                            std::move(j)};
}

bool operator==(const ConstructionBundle& a, const ConstructionBundle& b) {
  return a.space->sameAs(*b.space) && a.e == b.e && a.f == b.f && a.g == b.g &&
         a.gBar == b.gBar && a.h == b.h && a.i == b.i && a.j == b.j;
}

ConstructionBundle buildIJ(const Relation& e, const WitnessSet& f) {
  requireTargetRelation(e);
  if (!f.isTranspositionInvariant())
    throw Error("buildIJ: witness is not invariant under swapping its first two coordinates");
  return assembleBundle(e, f);
}

ConstructionBundle buildDefault(const Relation& e) {
  requireTargetRelation(e);
  return buildIJ(e, makeWitness(e));
}

std::vector<IdentityCheck> verifyCompositionIdentities(const ConstructionBundle& b) {
  const SpacePtr& space = b.space;
  const Relation diagX = Relation::diagonalOn(space, space->xPoints());
  const Relation diagY = Relation::diagonalOn(space, space->yPoints());

  std::vector<Pair> gBarG;
  std::vector<Pair> gH;
  for (const Triple& s : b.f.triples()) {
    gH.emplace_back(s[0], jMap(*space, s[1], s[0], s[2]));
    for (const Triple& t : b.f.triples())
      if (s[0] == t[0])
        gBarG.emplace_back(jMap(*space, s[0], s[1], s[2]), jMap(*space, t[0], t[1], t[2]));
  }

  std::vector<IdentityCheck> out;
  out.push_back(compare("G∘G' = D↾X", compose(b.g, b.gBar), diagX));
  out.push_back(compare("G'∘G = {(j(a,b,c),j(a,d,e))}", compose(b.gBar, b.g), Relation(space, gBarG)));
  out.push_back(compare("H = converse(H)", b.h, converse(b.h)));
  out.push_back(compare("H∘H = D↾Y", compose(b.h, b.h), diagY));
  out.push_back(compare("G∘H = {(a,j(b,a,c))}", compose(b.g, b.h), Relation(space, gH)));
  out.push_back(compare("G∘H∘G' = E", compose(compose(b.g, b.h), b.gBar), b.e));
  return out;
}

std::vector<std::string> bundleViolations(const ConstructionBundle& b) {
  std::vector<std::string> out;
  const SpacePtr& space = b.space;
  auto within = [&](const Relation& r, Sort dom, Sort cod) {
    for (const auto& [x, y] : r.pairs())
      if (!admits(dom, space->sortOf(x)) || !admits(cod, space->sortOf(y))) return false;
    return true;
  };
  if (!within(b.e, Sort::X, Sort::X)) out.push_back("E ⊆ X×X");
  if (!within(b.g, Sort::X, Sort::Y)) out.push_back("G ⊆ X×Y");
  if (!within(b.h, Sort::Y, Sort::Y)) out.push_back("H ⊆ Y×Y");
  if (!(b.gBar == converse(b.g))) out.push_back("G' = converse(G)");
  const PointSet all = space->allPoints();
  if (!isEquivalence(b.i, all)) out.push_back("isEquivalence(I)");
  if (!isEquivalence(b.j, all)) out.push_back("isEquivalence(J)");
  const Relation d = Relation::diagonal(space);
  if (!(b.i == unite(unite(unite(d, b.g), b.gBar), compose(b.gBar, b.g))))
    out.push_back("I = D ∪ G ∪ G' ∪ G'∘G");
  if (!(b.j == unite(d, b.h))) out.push_back("J = D ∪ H");
  return out;
}

std::uint64_t drawBelow(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw Error("drawBelow: empty range");
  // Rejection sampling; <random> distributions differ between standard libraries.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t v = rng();
    if (v < limit) return v % bound;
  }
}

Relation randomEquivalence(const SpacePtr& space, std::mt19937_64& rng) {
  const std::size_t n = space->xCount();
  std::vector<std::uint64_t> label(n);
  for (auto& l : label) l = drawBelow(rng, n);
  std::vector<Pair> pairs;
  for (PointId a = 0; a < n; ++a)
    for (PointId b = 0; b < n; ++b)
      if (label[a] == label[b]) pairs.emplace_back(a, b);
  return Relation(space, pairs, kXX);
}

SpacePtr numberedSpace(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t k = 1; k <= n; ++k) names.push_back("x" + std::to_string(k));
  return GroundSpace::withTriples(std::move(names));
}

}  // namespace relwb
