#include "relwb/ground_space.hpp"

#include <algorithm>

namespace relwb {

std::string_view toString(Sort s) {
  switch (s) {
    case Sort::X: return "X";
    case Sort::Y: return "Y";
    case Sort::Any: return "Any";
  }
  return "Any";
}

Sort parseSort(std::string_view text) {
  if (text == "X") return Sort::X;
  if (text == "Y") return Sort::Y;
  if (text == "Any") return Sort::Any;
  throw ParseError("unknown sort '" + std::string(text) + "'");
}

namespace {

bool validXName(std::string_view name) {
  if (name.empty()) return false;
  if (name.find_first_of("(),") != std::string_view::npos) return false;
  return name.rfind("j(", 0) != 0;
}

}  // namespace

GroundSpace::GroundSpace(std::vector<std::string> xNames, std::vector<Triple> yTriples,
                         bool allTriples)
    : xCount_(xNames.size()), allTriples_(allTriples), names_(std::move(xNames)),
      triples_(std::move(yTriples)) {
  for (PointId p = 0; p < names_.size(); ++p) {
    if (!validXName(names_[p])) {
      throw ParseError("invalid X point identifier '" + names_[p] + "'");
    }
    if (!index_.emplace(names_[p], p).second) {
      throw ParseError("duplicate point identifier '" + names_[p] + "'");
    }
  }
  const std::size_t n = xCount_;
  for (const Triple& t : triples_) {
    for (PointId c : t) {
      if (c >= n) throw Error("triple references a point outside X");
    }
    const PointId y = names_.size();
    std::string id = tripleName(names_[t[0]], names_[t[1]], names_[t[2]]);
    if (!index_.emplace(id, y).second) {
      throw ParseError("duplicate point identifier '" + id + "'");
    }
    names_.push_back(std::move(id));
    tripleIndex_.emplace((t[0] * n + t[1]) * n + t[2], y);
  }
}

SpacePtr GroundSpace::plain(std::vector<std::string> xNames) {
  return SpacePtr(new GroundSpace(std::move(xNames), {}, false));
}

SpacePtr GroundSpace::withTriples(std::vector<std::string> xNames) {
  const std::size_t n = xNames.size();
  std::vector<Triple> triples;
  triples.reserve(n * n * n);
  for (PointId a = 0; a < n; ++a)
    for (PointId b = 0; b < n; ++b)
      for (PointId c = 0; c < n; ++c) triples.push_back({a, b, c});
  return SpacePtr(new GroundSpace(std::move(xNames), std::move(triples), true));
}

SpacePtr GroundSpace::withTriples(std::vector<std::string> xNames,
                                  std::vector<Triple> yTriples) {
  const std::size_t n = xNames.size();
  bool all = yTriples.size() == n * n * n;
  if (all) {
    for (std::size_t i = 0; i < yTriples.size(); ++i) {
      const Triple& t = yTriples[i];
      if ((t[0] * n + t[1]) * n + t[2] != i) {
        all = false;
        break;
      }
    }
  }
  return SpacePtr(new GroundSpace(std::move(xNames), std::move(yTriples), all));
}

std::optional<PointId> GroundSpace::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PointId GroundSpace::at(std::string_view id) const {
  if (auto p = find(id)) return *p;
  throw ParseError("unknown point '" + std::string(id) + "'");
}

const Triple& GroundSpace::tripleOf(PointId y) const {
  if (y < xCount_ || y >= names_.size()) throw Error("point is not a Y point");
  return triples_[y - xCount_];
}

std::optional<PointId> GroundSpace::triplePoint(const Triple& t) const {
  const std::size_t n = xCount_;
  if (t[0] >= n || t[1] >= n || t[2] >= n) return std::nullopt;
  auto it = tripleIndex_.find((t[0] * n + t[1]) * n + t[2]);
  if (it == tripleIndex_.end()) return std::nullopt;
  return it->second;
}

PointSet GroundSpace::xPoints() const {
  PointSet s;
  for (PointId p = 0; p < xCount_; ++p) s.insert(s.end(), p);
  return s;
}

PointSet GroundSpace::yPoints() const {
  PointSet s;
  for (PointId p = xCount_; p < names_.size(); ++p) s.insert(s.end(), p);
  return s;
}

PointSet GroundSpace::allPoints() const {
  PointSet s;
  for (PointId p = 0; p < names_.size(); ++p) s.insert(s.end(), p);
  return s;
}

std::string GroundSpace::tripleName(std::string_view a, std::string_view b,
                                    std::string_view c) {
  std::string s = "j(";
  s.append(a).append(",").append(b).append(",").append(c).append(")");
  return s;
}

std::optional<std::array<std::string, 3>> GroundSpace::splitTripleName(std::string_view id) {
  if (id.size() < 7 || id.substr(0, 2) != "j(" || id.back() != ')') return std::nullopt;
  std::string_view body = id.substr(2, id.size() - 3);
  std::array<std::string, 3> parts;
  for (int k = 0; k < 3; ++k) {
    auto comma = body.find(',');
    if (k < 2 && comma == std::string_view::npos) return std::nullopt;
    std::string_view piece = k < 2 ? body.substr(0, comma) : body;
    if (!validXName(piece)) return std::nullopt;
    parts[k] = std::string(piece);
    if (k < 2) body.remove_prefix(comma + 1);
  }
  return parts;
}

bool GroundSpace::sameAs(const GroundSpace& other) const {
  return this == &other || (xCount_ == other.xCount_ && names_ == other.names_);
}

void requireSameSpace(const GroundSpace& a, const GroundSpace& b, std::string_view what) {
  if (!a.sameAs(b)) {
    throw SpaceMismatch(std::string(what) + ": operands live on different ground spaces");
  }
}

}  // namespace relwb
