#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace relwb {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text or file input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operands that live on different ground spaces.
class SpaceMismatch : public Error {
 public:
  using Error::Error;
};

enum class Sort { X, Y, Any };

std::string_view toString(Sort s);
Sort parseSort(std::string_view text);

/// True when a point of sort `point` is admissible where `declared` is expected.
inline bool admits(Sort declared, Sort point) {
  return declared == Sort::Any || declared == point;
}

using PointId = std::size_t;
using PointSet = std::set<PointId>;
/// Indices of X points; Y points are formal triples over X.
using Triple = std::array<PointId, 3>;

/// A finite two-sorted universe. X points come first (indices 0..|X|-1),
/// followed by the Y points, each of which names a triple of X points and
/// prints as "j(a,b,c)".
class GroundSpace {
 public:
  /// X points only; Y is empty.
  static std::shared_ptr<const GroundSpace> plain(std::vector<std::string> xNames);
  /// Y is exactly the |X|^3 formal triples, in lexicographic index order.
  static std::shared_ptr<const GroundSpace> withTriples(std::vector<std::string> xNames);
  /// Y is an explicit list of distinct triples.
  static std::shared_ptr<const GroundSpace> withTriples(std::vector<std::string> xNames,
                                                       std::vector<Triple> yTriples);

  std::size_t size() const { return names_.size(); }
  std::size_t xCount() const { return xCount_; }
  std::size_t yCount() const { return triples_.size(); }

  /// True when Y is the complete auto-generated triple set.
  bool hasAllTriples() const { return allTriples_; }

  const std::string& name(PointId p) const { return names_.at(p); }
  Sort sortOf(PointId p) const { return p < xCount_ ? Sort::X : Sort::Y; }

  std::optional<PointId> find(std::string_view id) const;
  /// Like find(), but throws ParseError for unknown identifiers.
  PointId at(std::string_view id) const;

  /// X-index triple named by a Y point.
  const Triple& tripleOf(PointId y) const;
  /// The Y point j(a,b,c), if present in this space.
  std::optional<PointId> triplePoint(const Triple& t) const;

  PointSet xPoints() const;
  PointSet yPoints() const;
  PointSet allPoints() const;

  /// Formats the identifier "j(a,b,c)" for three X names.
  static std::string tripleName(std::string_view a, std::string_view b, std::string_view c);
  /// Splits "j(a,b,c)" into its three names; nullopt when not of that form.
  static std::optional<std::array<std::string, 3>> splitTripleName(std::string_view id);

  bool sameAs(const GroundSpace& other) const;

 private:
  GroundSpace(std::vector<std::string> xNames, std::vector<Triple> yTriples, bool allTriples);

  std::size_t xCount_ = 0;
  bool allTriples_ = false;
  std::vector<std::string> names_;
  std::vector<Triple> triples_;
  std::unordered_map<std::string, PointId> index_;
  // Dense lookup from triple index (a*n*n + b*n + c) to Y point, when auto.
  std::unordered_map<std::size_t, PointId> tripleIndex_;
};

using SpacePtr = std::shared_ptr<const GroundSpace>;

/// Requires both spaces to be the same universe.
void requireSameSpace(const GroundSpace& a, const GroundSpace& b, std::string_view what);

}  // namespace relwb
