#pragma once

#include "relwb/construction.hpp"

namespace relwb::fixture {

/// |X| = 3, E with blocks {x1,x2} and {x3}.
inline Relation referenceE() {
  const SpacePtr space = numberedSpace(3);
  const std::vector<Pair> pairs{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}};
  return Relation(space, pairs);
}

inline ConstructionBundle referenceBundle() { return buildDefault(referenceE()); }

}  // namespace relwb::fixture
