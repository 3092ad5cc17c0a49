#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relwb/construction.hpp"
#include "relwb/symbolic.hpp"

namespace relwb {

/// Outcome of checking one random target relation.
struct InstanceReport {
  std::string target;  // E as "{(a,b),...}"
  std::size_t xCount = 0;
  std::size_t closureStage = 0;
  bool compositionIdentities = true;
  bool squares = true;        // I∘I = I and J∘J = J
  bool equivalences = true;   // isEquivalence(I), isEquivalence(J)
  bool closureRestricts = true;
  bool stageBound = true;     // closure stage <= 5
  bool soundness = true;      // symbolic stages 1..6 match powers
  bool audit = true;          // every deletion is contained concretely
  /// First failure, empty when everything passed.
  std::string failure;

  bool passed() const {
    return compositionIdentities && squares && equivalences && closureRestricts && stageBound && soundness &&
           audit;
  }
};

/// Runs the full check battery on E. When `auditDeletions` is set, every
/// deletion recorded in `trace` is checked against the bundle.
InstanceReport verifyInstance(const Relation& e, const symbolic::TraceReport& trace,
                              bool auditDeletions);

struct SweepConfig {
  std::size_t size = 4;    // |X|; 0 draws |X| uniformly from 1..maxSize
  std::size_t maxSize = 6;
  std::size_t count = 100;
  std::uint64_t seed = 0;
  bool audit = false;
};

struct SweepReport {
  std::vector<InstanceReport> instances;
  std::size_t failures() const;
};

/// Deterministic for a given config: instance k uses the k-th draw of a
/// generator seeded with `seed`.
SweepReport runSweep(const SweepConfig& config);

}  // namespace relwb
