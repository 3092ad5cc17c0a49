#include "relwb/sweep.hpp"

#include <random>

namespace relwb {

InstanceReport verifyInstance(const Relation& e, const symbolic::TraceReport& trace,
                              bool auditDeletions) {
  const SpacePtr& space = e.space();
  InstanceReport rep;
  rep.xCount = space->xCount();
  rep.target = "{";
  for (const auto& p : e.pairs())
    rep.target += (rep.target.size() > 1 ? "," : "") + formatPair(*space, p);
  rep.target += "}";

  auto fail = [&](bool& flag, const std::string& why) {
    flag = false;
    if (rep.failure.empty()) rep.failure = why;
  };

  const ConstructionBundle b = buildDefault(e);

  for (const IdentityCheck& c : verifyCompositionIdentities(b))
    if (!c.holds)
      fail(rep.compositionIdentities, c.name + " fails" +
                           (c.counterexample ? " at " + formatPair(*space, *c.counterexample) : ""));

  if (!(compose(b.i, b.i) == b.i)) fail(rep.squares, "I∘I != I");
  if (!(compose(b.j, b.j) == b.j)) fail(rep.squares, "J∘J != J");

  const PointSet all = space->allPoints();
  if (auto r = isEquivalence(b.i, all); !r) fail(rep.equivalences, "I: " + r.violation);
  if (auto r = isEquivalence(b.j, all); !r) fail(rep.equivalences, "J: " + r.violation);

  const Relation generator = unite(b.i, b.j);
  const ClosureResult closure = transitiveClosure(generator);
  rep.closureStage = closure.stageCount;
  if (!(restrict(closure.relation, space->xPoints()) == b.e))
    fail(rep.closureRestricts, "t(I∪J)↾X != E");
  if (closure.stageCount > 5)
    fail(rep.stageBound, "closure stage " + std::to_string(closure.stageCount) + " > 5");

  Relation concrete = generator;
  for (std::size_t k = 1; k <= 6; ++k) {
    if (k > 1) concrete = compose(generator, concrete);
    if (!(symbolic::evaluateOnModel(trace.stage(k), b) == concrete)) {
      fail(rep.soundness, "symbolic stage " + std::to_string(k) + " != (I∪J)^(" +
                              std::to_string(k) + ")");
      break;
    }
  }

  if (auditDeletions)
    for (const auto& events : trace.deletions)
      if (auto bad = symbolic::auditDeletions(events, b); !bad.empty()) {
        fail(rep.audit, bad.front());
        break;
      }
  return rep;
}

std::size_t SweepReport::failures() const {
  std::size_t n = 0;
  for (const auto& r : instances) n += r.passed() ? 0 : 1;
  return n;
}

SweepReport runSweep(const SweepConfig& config) {
  std::mt19937_64 rng(config.seed);
  const symbolic::TraceReport trace = symbolic::closureTrace();
  SweepReport out;
  for (std::size_t k = 0; k < config.count; ++k) {
    const std::size_t n = config.size ? config.size : 1 + drawBelow(rng, config.maxSize);
    const Relation e = randomEquivalence(numberedSpace(n), rng);
    out.instances.push_back(verifyInstance(e, trace, config.audit));
  }
  return out;
}

}  // namespace relwb
