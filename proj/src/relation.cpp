#include "relwb/relation.hpp"

#include <bit>

namespace relwb {

std::size_t BitMatrix::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : bits_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool BitMatrix::empty() const {
  for (std::uint64_t w : bits_)
    if (w) return false;
  return true;
}

bool BitMatrix::subsetOf(const BitMatrix& other) const {
  for (std::size_t k = 0; k < bits_.size(); ++k)
    if (bits_[k] & ~other.bits_[k]) return false;
  return true;
}

BitMatrix& BitMatrix::operator|=(const BitMatrix& other) {
  for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] |= other.bits_[k];
  return *this;
}

BitMatrix& BitMatrix::operator&=(const BitMatrix& other) {
  for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] &= other.bits_[k];
  return *this;
}

BitMatrix BitMatrix::compose(const BitMatrix& then) const {
  BitMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    auto src = row(i);
    auto dst = out.row(i);
    for (std::size_t w = 0; w < stride_; ++w) {
      std::uint64_t word = src[w];
      while (word) {
        const std::size_t j = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
        word &= word - 1;
        auto mid = then.row(j);
        for (std::size_t k = 0; k < stride_; ++k) dst[k] |= mid[k];
      }
    }
  }
  return out;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (test(i, j)) out.set(j, i);
  return out;
}

Relation::Relation(SpacePtr space, std::optional<Signature> signature)
    : space_(std::move(space)), bits_(space_->size()), signature_(signature) {}

Relation::Relation(SpacePtr space, std::span<const Pair> pairs,
                   std::optional<Signature> signature)
    : Relation(std::move(space), signature) {
  const std::size_t n = space_->size();
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n) throw Error("pair references a point outside the ground space");
    bits_.set(a, b);
  }
  checkSignature();
}

Relation::Relation(SpacePtr space, BitMatrix bits, std::optional<Signature> signature)
    : space_(std::move(space)), bits_(std::move(bits)), signature_(signature) {
  if (bits_.dim() != space_->size()) throw Error("matrix dimension does not match ground space");
  checkSignature();
}

void Relation::checkSignature() const {
  if (!signature_) return;
  const std::size_t n = space_->size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (bits_.test(a, b) && !(admits(signature_->dom, space_->sortOf(a)) &&
                                admits(signature_->cod, space_->sortOf(b)))) {
        throw Error("pair " + formatPair(*space_, {a, b}) + " violates signature (" +
                    std::string(toString(signature_->dom)) + "," +
                    std::string(toString(signature_->cod)) + ")");
      }
}

Relation Relation::diagonal(SpacePtr space) { return diagonalOn(space, space->allPoints()); }

Relation Relation::diagonalOn(SpacePtr space, const PointSet& carrier) {
  BitMatrix m(space->size());
  for (PointId p : carrier) {
    if (p >= space->size()) throw Error("carrier point outside the ground space");
    m.set(p, p);
  }
  return Relation(std::move(space), std::move(m));
}

Relation Relation::full(SpacePtr space, const PointSet& carrier) {
  BitMatrix m(space->size());
  for (PointId a : carrier) {
    if (a >= space->size()) throw Error("carrier point outside the ground space");
    for (PointId b : carrier) m.set(a, b);
  }
  return Relation(std::move(space), std::move(m));
}

bool Relation::contains(PointId a, PointId b) const {
  return a < bits_.dim() && b < bits_.dim() && bits_.test(a, b);
}

std::vector<Pair> Relation::pairs() const {
  std::vector<Pair> out;
  const std::size_t n = bits_.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (bits_.test(a, b)) out.emplace_back(a, b);
  return out;
}

bool Relation::subsetOf(const Relation& other) const {
  requireSameSpace(*space_, *other.space_, "subset");
  return bits_.subsetOf(other.bits_);
}

Relation Relation::withSignature(std::optional<Signature> signature) const {
  return Relation(space_, bits_, signature);
}

bool operator==(const Relation& a, const Relation& b) {
  return a.space_->sameAs(*b.space_) && a.bits_ == b.bits_;
}

namespace {

Sort joinSort(Sort a, Sort b) { return a == b ? a : Sort::Any; }

std::optional<Signature> joinSignature(const std::optional<Signature>& a,
                                       const std::optional<Signature>& b) {
  if (!a || !b) return std::nullopt;
  return Signature{joinSort(a->dom, b->dom), joinSort(a->cod, b->cod)};
}

}  // namespace

Relation unite(const Relation& a, const Relation& b) {
  requireSameSpace(*a.space(), *b.space(), "union");
  BitMatrix m = a.bits();
  m |= b.bits();
  return Relation(a.space(), std::move(m), joinSignature(a.signature(), b.signature()));
}

Relation intersect(const Relation& a, const Relation& b) {
  requireSameSpace(*a.space(), *b.space(), "intersection");
  BitMatrix m = a.bits();
  m &= b.bits();
  return Relation(a.space(), std::move(m));
}

Relation compose(const Relation& first, const Relation& then) {
  requireSameSpace(*first.space(), *then.space(), "compose");
  std::optional<Signature> sig;
  if (first.signature() && then.signature())
    sig = Signature{first.signature()->dom, then.signature()->cod};
  return Relation(first.space(), first.bits().compose(then.bits()), sig);
}

Relation converse(const Relation& r) {
  std::optional<Signature> sig;
  if (r.signature()) sig = Signature{r.signature()->cod, r.signature()->dom};
  return Relation(r.space(), r.bits().transposed(), sig);
}

Relation restrict(const Relation& r, const PointSet& z) {
  const std::size_t n = r.space()->size();
  for (PointId p : z)
    if (p >= n) throw Error("restriction set contains a point outside the ground space");
  BitMatrix m(n);
  for (PointId a : z)
    for (PointId b : z)
      if (r.bits().test(a, b)) m.set(a, b);
  return Relation(r.space(), std::move(m), r.signature());
}

Relation power(const Relation& r, std::size_t n) {
  if (n == 0) throw Error("power: exponent must be at least 1");
  Relation acc = r;
  for (std::size_t k = 1; k < n; ++k) acc = compose(r, acc);
  return acc;
}

ClosureResult transitiveClosure(const Relation& r) {
  // The union can grow at most |Ω|^2 times, so the loop terminates.
  BitMatrix current = r.bits();
  BitMatrix accumulated = current;
  std::size_t stage = 1;
  for (;;) {
    current = r.bits().compose(current);
    BitMatrix next = accumulated;
    next |= current;
    if (next == accumulated) break;
    accumulated = std::move(next);
    ++stage;
  }
  return {Relation(r.space(), std::move(accumulated)), stage};
}

EquivalenceReport isEquivalence(const Relation& r, const PointSet& carrier) {
  const GroundSpace& space = *r.space();
  auto fail = [&](std::string what) { return EquivalenceReport{false, std::move(what)}; };
  for (PointId p : carrier) {
    if (p >= space.size()) return fail("carrier point outside the ground space");
    if (!r.contains(p, p)) return fail("not reflexive: missing " + formatPair(space, {p, p}));
  }
  const auto pairs = r.pairs();
  for (const auto& [a, b] : pairs) {
    if (!carrier.contains(a) || !carrier.contains(b))
      return fail("pair " + formatPair(space, {a, b}) + " leaves the carrier");
    if (!r.contains(b, a))
      return fail("not symmetric: " + formatPair(space, {a, b}) + " without " +
                  formatPair(space, {b, a}));
  }
  for (const auto& [a, b] : pairs)
    for (PointId c : carrier)
      if (r.contains(b, c) && !r.contains(a, c))
        return fail("not transitive: " + formatPair(space, {a, b}) + ", " +
                    formatPair(space, {b, c}) + " without " + formatPair(space, {a, c}));
  return {};
}

PointSet field(const Relation& r) {
  PointSet out;
  for (const auto& [a, b] : r.pairs()) {
    out.insert(a);
    out.insert(b);
  }
  return out;
}

PointSet saturate(const PointSet& a, const Relation& r) {
  const PointSet carrier = field(r);
  if (auto report = isEquivalence(r, carrier); !report)
    throw Error("saturate: relation is not an equivalence relation (" + report.violation + ")");
  PointSet out;
  for (PointId p : a) {
    if (!carrier.contains(p))
      throw Error("saturate: point " + r.space()->name(p) + " is outside the relation's field");
    for (PointId q : carrier)
      if (r.contains(p, q)) out.insert(q);
  }
  return out;
}

std::string formatPair(const GroundSpace& space, const Pair& p) {
  return "(" + space.name(p.first) + "," + space.name(p.second) + ")";
}

}  // namespace relwb
