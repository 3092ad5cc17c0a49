#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "relwb/ground_space.hpp"

namespace relwb {

using Pair = std::pair<PointId, PointId>;

/// Square boolean matrix stored as packed 64-bit rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), stride_((n + 63) / 64), bits_(n * stride_, 0) {}

  std::size_t dim() const { return n_; }
  bool test(std::size_t i, std::size_t j) const {
    return (bits_[i * stride_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j) { bits_[i * stride_ + j / 64] |= std::uint64_t{1} << (j % 64); }

  std::span<const std::uint64_t> row(std::size_t i) const {
    return {bits_.data() + i * stride_, stride_};
  }
  std::span<std::uint64_t> row(std::size_t i) { return {bits_.data() + i * stride_, stride_}; }

  std::size_t count() const;
  bool empty() const;
  bool subsetOf(const BitMatrix& other) const;
  BitMatrix& operator|=(const BitMatrix& other);
  BitMatrix& operator&=(const BitMatrix& other);

  /// Diagrammatic product: (i,k) set iff some j has (i,j) in *this and (j,k) in `then`.
  BitMatrix compose(const BitMatrix& then) const;
  BitMatrix transposed() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct Signature {
  Sort dom = Sort::Any;
  Sort cod = Sort::Any;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// A finite set of ordered pairs over a ground space. Values are immutable;
/// pairs are kept in canonical (index) order so equality is structural.
class Relation {
 public:
  /// The empty relation on `space`.
  explicit Relation(SpacePtr space, std::optional<Signature> signature = std::nullopt);
  /// Validates that every pair refers to the space and respects the signature.
  Relation(SpacePtr space, std::span<const Pair> pairs,
           std::optional<Signature> signature = std::nullopt);
  /// Adopts a matrix of matching dimension; the signature is checked.
  Relation(SpacePtr space, BitMatrix bits, std::optional<Signature> signature = std::nullopt);

  static Relation diagonal(SpacePtr space);
  static Relation diagonalOn(SpacePtr space, const PointSet& carrier);
  static Relation full(SpacePtr space, const PointSet& carrier);

  const SpacePtr& space() const { return space_; }
  const std::optional<Signature>& signature() const { return signature_; }
  const BitMatrix& bits() const { return bits_; }

  bool contains(PointId a, PointId b) const;
  bool contains(const Pair& p) const { return contains(p.first, p.second); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.empty(); }
  /// Pairs in canonical order.
  std::vector<Pair> pairs() const;
  bool subsetOf(const Relation& other) const;

  /// Same pair set with a different (checked) signature.
  Relation withSignature(std::optional<Signature> signature) const;

  /// Pair-set equality on the same space; signatures are not compared.
  friend bool operator==(const Relation& a, const Relation& b);

 private:
  void checkSignature() const;

  SpacePtr space_;
  BitMatrix bits_;
  std::optional<Signature> signature_;
};

/// Set union; the signature is joined sort-wise (Any where sorts differ).
Relation unite(const Relation& a, const Relation& b);
Relation intersect(const Relation& a, const Relation& b);
/// Diagrammatic composition: (a,c) iff some b has (a,b) in `first` and (b,c) in `then`.
Relation compose(const Relation& first, const Relation& then);
Relation converse(const Relation& r);
/// r ∩ (z × z).
Relation restrict(const Relation& r, const PointSet& z);
/// R^(1) = R, R^(n+1) = R ∘ R^(n). Throws for n = 0.
Relation power(const Relation& r, std::size_t n);

struct ClosureResult {
  Relation relation;
  /// Least n at which the accumulated union of powers stops growing.
  std::size_t stageCount;
};

/// Least transitive superset, computed by accumulating successive powers
/// until the union is stable. For reflexive input the powers form an
/// increasing chain, so the union is the last power.
ClosureResult transitiveClosure(const Relation& r);

struct EquivalenceReport {
  bool holds = true;
  /// Names a violating pair or triple when `holds` is false.
  std::string violation;
  explicit operator bool() const { return holds; }
};

/// Reflexive on `carrier`, symmetric and transitive. Pairs outside
/// carrier × carrier are reported as violations.
EquivalenceReport isEquivalence(const Relation& r, const PointSet& carrier);

/// Union of all r-blocks meeting `a`. Throws when r is not an equivalence
/// relation on its field.
PointSet saturate(const PointSet& a, const Relation& r);

/// Field of r: every point occurring in some pair.
PointSet field(const Relation& r);

std::string formatPair(const GroundSpace& space, const Pair& p);

}  // namespace relwb
