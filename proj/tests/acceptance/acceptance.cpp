// End-to-end acceptance run: one PASS/FAIL line per criterion.
// Expected values come from brute-force pair-set oracles, not the library.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>

#include "../support/oracles.hpp"
#include "relwb/construction.hpp"
#include "relwb/epistemic.hpp"
#include "relwb/star.hpp"
#include "relwb/symbolic.hpp"

namespace {

using namespace relwb;
using oracle::PairSet;
using Clock = std::chrono::steady_clock;

// Pinned budgets and sizes.
constexpr double kTraceBudgetSec = 1.0;
constexpr double kSquareBudgetSec = 1.0;
constexpr double kSweepBudgetSec = 30.0;
constexpr double kStarBudgetSec = 60.0;
constexpr double kKnowledgeBudgetSec = 60.0;
constexpr double kSaturationBudgetSec = 10.0;
constexpr double kClosureBudgetSec = 30.0;
constexpr std::size_t kSweepCount = 100;
constexpr std::size_t kSweepMaxX = 6;
constexpr std::size_t kMaxClosureStage = 5;
constexpr std::size_t kExhaustiveStates = 5;
constexpr std::size_t kRandomModels = 500;
constexpr std::size_t kSaturationCount = 50;
constexpr std::size_t kClosureCount = 1000;
constexpr std::size_t kClosureMaxPoints = 30;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

double seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

PairSet unitePairs(PairSet a, const PairSet& b) {
  a.insert(b.begin(), b.end());
  return a;
}

PairSet diagonalOn(const PointSet& points) {
  PairSet out;
  for (PointId p : points) out.emplace(p, p);
  return out;
}

bool isEquivalenceOn(const PairSet& r, const PointSet& carrier) {
  for (PointId p : carrier)
    if (!r.contains({p, p})) return false;
  for (const auto& [a, b] : r) {
    if (!carrier.contains(a) || !carrier.contains(b) || !r.contains({b, a})) return false;
  }
  for (const auto& p : oracle::compose(r, r))
    if (!r.contains(p)) return false;
  return true;
}

// Least k with (r ∪ ... ∪ r^k) equal to the reachability closure.
std::size_t oracleStage(const PairSet& r, std::size_t n) {
  const PairSet closure = oracle::warshall(r, n);
  PairSet power = r, acc = r;
  std::size_t k = 1;
  while (acc != closure) {
    power = oracle::compose(power, r);
    acc = unitePairs(acc, power);
    ++k;
  }
  return k;
}

PairSet restrictPairs(const PairSet& r, const PointSet& keep) {
  PairSet out;
  for (const auto& [a, b] : r)
    if (keep.contains(a) && keep.contains(b)) out.emplace(a, b);
  return out;
}

std::vector<Relation> sweepTargets() {
  std::mt19937_64 rng(20240601);
  std::vector<Relation> out;
  for (std::size_t k = 0; k < kSweepCount; ++k) {
    const std::size_t n = 1 + drawBelow(rng, kSweepMaxX);
    out.push_back(randomEquivalence(numberedSpace(n), rng));
  }
  return out;
}

Outcome goldenTrace() {
  Outcome o;
  const auto start = Clock::now();
  const symbolic::TraceReport t = symbolic::closureTrace();
  const double elapsed = seconds(start);
  std::ifstream in(RELWB_GOLDEN_TRACE);
  const std::string golden{std::istreambuf_iterator<char>(in), {}};
  std::string text = t.text();
  if (golden.empty()) o.fail("golden file missing");
  auto trim = [](std::string s) {
    while (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
  };
  if (trim(text) != trim(golden)) o.fail("trace differs from golden file");
  if (t.fixpointStage != 5) o.fail("fixpoint stage " + std::to_string(t.fixpointStage));
  if (elapsed > kTraceBudgetSec) o.fail("took " + std::to_string(elapsed) + " s");
  return o;
}

Outcome squareIdempotence() {
  Outcome o;
  const auto start = Clock::now();
  for (const char* text : {"D+G+G'+G'G", "D+H"})
    if (!symbolic::verifySquareIdempotent(symbolic::parseExpr(text)))
      o.fail(std::string(text) + " squared is not itself");
  const double elapsed = seconds(start);
  if (elapsed > kSquareBudgetSec) o.fail("took " + std::to_string(elapsed) + " s");
  return o;
}

Outcome closureRecoversTarget(const std::vector<Relation>& targets) {
  Outcome o;
  const auto start = Clock::now();
  for (const Relation& e : targets) {
    const ConstructionBundle b = buildDefault(e);
    const PairSet gen = unitePairs(oracle::pairsOf(b.i), oracle::pairsOf(b.j));
    const std::size_t n = b.space->size();
    const PairSet closure = oracle::warshall(gen, n);
    if (restrictPairs(closure, b.space->xPoints()) != oracle::pairsOf(e))
      o.fail("restriction differs for |X|=" + std::to_string(e.space()->xPoints().size()));
    const std::size_t stage = oracleStage(gen, n);
    if (stage > kMaxClosureStage) o.fail("closure needs stage " + std::to_string(stage));
    const ClosureResult lib = transitiveClosure(unite(b.i, b.j));
    if (oracle::pairsOf(lib.relation) != closure) o.fail("library closure differs");
  }
  const double elapsed = seconds(start);
  if (elapsed > kSweepBudgetSec) o.fail("took " + std::to_string(elapsed) + " s");
  return o;
}

Outcome constructionIdentities(const std::vector<Relation>& targets) {
  Outcome o;
  for (const Relation& e : targets) {
    const ConstructionBundle b = buildDefault(e);
    const PointSet xs = b.space->xPoints(), ys = b.space->yPoints();
    const PairSet g = oracle::pairsOf(b.g), gb = oracle::pairsOf(b.gBar),
                  h = oracle::pairsOf(b.h), i = oracle::pairsOf(b.i), j = oracle::pairsOf(b.j);
    PairSet gConverse;
    for (const auto& [a, c] : g) gConverse.emplace(c, a);
    PairSet hConverse;
    for (const auto& [a, c] : h) hConverse.emplace(c, a);
    if (gb != gConverse) o.fail("G' is not the converse of G");
    if (oracle::compose(g, gb) != diagonalOn(xs)) o.fail("G∘G' is not the diagonal on X");
    if (h != hConverse) o.fail("H is not symmetric");
    if (oracle::compose(h, h) != diagonalOn(ys)) o.fail("H∘H is not the diagonal on Y");
    if (oracle::compose(oracle::compose(g, h), gb) != oracle::pairsOf(e))
      o.fail("G∘H∘G' differs from E");
    for (const auto& check : verifyCompositionIdentities(b))
      if (!check.holds) o.fail(check.name);
    if (oracle::compose(i, i) != i) o.fail("I∘I differs from I");
    if (oracle::compose(j, j) != j) o.fail("J∘J differs from J");
    const PointSet all = b.space->allPoints();
    if (!isEquivalenceOn(i, all) || !isEquivalence(b.i, all)) o.fail("I is not an equivalence");
    if (!isEquivalenceOn(j, all) || !isEquivalence(b.j, all)) o.fail("J is not an equivalence");
  }
  return o;
}

Outcome symbolicSoundness(const std::vector<Relation>& targets) {
  Outcome o;
  const symbolic::TraceReport t = symbolic::closureTrace();
  for (const Relation& e : targets) {
    const ConstructionBundle b = buildDefault(e);
    const PairSet gen = unitePairs(oracle::pairsOf(b.i), oracle::pairsOf(b.j));
    PairSet power = gen;
    for (std::size_t k = 1; k <= 6; ++k) {
      if (k > 1) power = oracle::compose(power, gen);
      if (oracle::pairsOf(symbolic::evaluateOnModel(t.stage(k), b)) != power)
        o.fail("stage " + std::to_string(k) + " differs from the concrete power");
    }
    for (const auto& events : t.deletions)
      for (const std::string& bad : symbolic::auditDeletions(events, b)) o.fail(bad);
  }
  return o;
}

// States whose whole reachable component under the agents' relations is in A.
PointSet oracleCommonKnowledge(const PointSet& a, const epistemic::EpistemicModel& m) {
  PairSet joined;
  for (const Partition& p : m.partitions())
    for (const PointSet& block : p.blocks())
      for (PointId x : block)
        for (PointId y : block) joined.emplace(x, y);
  const PairSet reach = oracle::warshall(joined, m.space()->size());
  PointSet out;
  for (PointId w : m.states()) {
    bool inside = true;
    for (const auto& [x, y] : reach)
      if (x == w && !a.contains(y)) inside = false;
    if (inside) out.insert(w);
  }
  return out;
}

Outcome commonKnowledge() {
  Outcome o;
  const auto start = Clock::now();
  auto check = [&](const PointSet& a, const epistemic::EpistemicModel& m) {
    const PointSet expected = oracleCommonKnowledge(a, m);
    if (epistemic::commonKnowledgeMeet(a, m) != expected) o.fail("meet differs from oracle");
    if (epistemic::commonKnowledgeIterated(a, m) != expected)
      o.fail("iteration differs from oracle");
  };
  for (std::size_t n = 1; n <= kExhaustiveStates; ++n) {
    const SpacePtr s = epistemic::numberedStates(n);
    std::vector<Partition> all;
    forEachPartition(s->allPoints(), [&](const Partition& p) { all.push_back(p); });
    for (const Partition& p1 : all)
      for (const Partition& p2 : all) {
        const epistemic::EpistemicModel m(s, {"1", "2"}, {p1, p2});
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
          PointSet a;
          for (PointId q = 0; q < n; ++q)
            if (mask >> q & 1) a.insert(q);
          check(a, m);
        }
      }
  }
  std::mt19937_64 rng(77);
  for (std::size_t k = 0; k < kRandomModels; ++k) {
    const epistemic::EpistemicModel m =
        epistemic::randomModel(1 + drawBelow(rng, 8), 1 + drawBelow(rng, 3), rng);
    PointSet a;
    for (PointId q : m.states())
      if (drawBelow(rng, 4) != 0) a.insert(q);
    check(a, m);
  }
  const double elapsed = seconds(start);
  if (elapsed > kKnowledgeBudgetSec) o.fail("took " + std::to_string(elapsed) + " s");
  return o;
}

// All equivalence relations inside the star, by brute force over spoke subsets.
std::vector<PairSet> oracleStarSubrelations(const star::StarInstance& s) {
  const std::size_t n = s.space->size();
  const PointSet carrier = s.space->allPoints();
  std::vector<std::pair<PointId, PointId>> spokes;
  for (PointId b = 0; b < n; ++b)
    if (b != s.hub) {
      spokes.emplace_back(s.hub, b);
      spokes.emplace_back(b, s.hub);
    }
  std::vector<PairSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << spokes.size()); ++mask) {
    PairSet r = diagonalOn(carrier);
    for (std::size_t k = 0; k < spokes.size(); ++k)
      if (mask >> k & 1) r.insert(spokes[k]);
    if (isEquivalenceOn(r, carrier)) out.push_back(r);
  }
  return out;
}

std::size_t oracleMinCover(const std::vector<PairSet>& members, const PairSet& target) {
  std::size_t best = members.size() + 1;
  for (std::size_t mask = 1; mask < (std::size_t{1} << members.size()); ++mask) {
    PairSet u;
    std::size_t count = 0;
    for (std::size_t k = 0; k < members.size(); ++k)
      if (mask >> k & 1) {
        u = unitePairs(u, members[k]);
        ++count;
      }
    if (u == target) best = std::min(best, count);
  }
  return best;
}

Outcome starCover() {
  Outcome o;
  const auto start = Clock::now();
  for (std::size_t n = 2; n <= 7; ++n) {
    const star::StarInstance s = star::makeStar(n);
    const std::string tag = "n=" + std::to_string(n) + ": ";
    const std::vector<PairSet> expected = oracleStarSubrelations(s);
    std::set<PairSet> got;
    for (const Relation& r : star::equivSubrelations(s)) got.insert(oracle::pairsOf(r));
    if (got != std::set<PairSet>(expected.begin(), expected.end()))
      o.fail(tag + "equivalence subrelations differ from oracle");
    std::set<PairSet> canonical{oracle::pairsOf(Relation::diagonal(s.space))};
    for (const Relation& r : star::canonicalFamily(s)) canonical.insert(oracle::pairsOf(r));
    if (got != canonical) o.fail(tag + "subrelations are not D plus the canonical family");
    if (oracleMinCover(expected, oracle::pairsOf(s.relation)) != n - 1)
      o.fail(tag + "oracle cover is not n-1");
    if (star::minCoverSize(s).size != n - 1) o.fail(tag + "minCoverSize is not n-1");
    if (n <= 5) {
      const auto found = star::minCoverExhaustive(s);
      if (!found || *found != n - 1) o.fail(tag + "exhaustive cover is not n-1");
    }
  }
  const double elapsed = seconds(start);
  if (elapsed > kStarBudgetSec) o.fail("took " + std::to_string(elapsed) + " s");
  return o;
}

Outcome saturationDemo() {
  Outcome o;
  const auto start = Clock::now();
  std::mt19937_64 rng(4242);
  for (std::size_t k = 0; k < kSaturationCount; ++k) {
    const std::size_t n = 2 + drawBelow(rng, 5);
    std::vector<std::string> carrier;
    for (std::size_t c = 0; c < n; ++c) carrier.push_back("w" + std::to_string(c));
    PointSet omega0{0};
    for (PointId q = 1; q < n - 1; ++q)
      if (drawBelow(rng, 2)) omega0.insert(q);
    std::vector<PointId> pool(omega0.begin(), omega0.end());
    PointSet s{pool[drawBelow(rng, pool.size())]};
    for (PointId q : pool)
      if (drawBelow(rng, 2)) s.insert(q);

    const epistemic::SaturationReport rep = epistemic::saturationDemo(carrier, omega0, s, rng);
    if (!rep.passed) o.fail(rep.failure);

    // Independent check: E from s, closure by Warshall, saturate each A.
    const SpacePtr space = GroundSpace::withTriples(carrier);
    std::vector<Pair> pairs;
    for (PointId p = 0; p < n; ++p)
      for (PointId q = 0; q < n; ++q)
        if (p == q || (s.contains(p) && s.contains(q))) pairs.emplace_back(p, q);
    const ConstructionBundle b = buildDefault(Relation(space, pairs));
    const PairSet reach = oracle::warshall(
        unitePairs(oracle::pairsOf(b.i), oracle::pairsOf(b.j)), space->size());
    const std::vector<PointId> sv(s.begin(), s.end());
    for (std::size_t mask = 1; mask < (std::size_t{1} << sv.size()); ++mask) {
      PointSet a;
      for (std::size_t k = 0; k < sv.size(); ++k)
        if (mask >> k & 1) a.insert(sv[k]);
      PointSet hit;
      for (const auto& [x, y] : reach)
        if (a.contains(x) && omega0.contains(y)) hit.insert(y);
      if (hit != s) o.fail("oracle saturation differs from s");
    }
  }
  const double elapsed = seconds(start);
  if (elapsed > kSaturationBudgetSec) o.fail("took " + std::to_string(elapsed) + " s");
  return o;
}

Outcome closureOracle() {
  Outcome o;
  const auto start = Clock::now();
  std::mt19937_64 rng(999);
  std::uniform_real_distribution<double> density(0.0, 0.2);
  for (std::size_t k = 0; k < kClosureCount; ++k) {
    const std::size_t n = 1 + drawBelow(rng, kClosureMaxPoints);
    std::vector<std::string> names;
    for (std::size_t c = 0; c < n; ++c) names.push_back("p" + std::to_string(c));
    const SpacePtr space = GroundSpace::plain(names);
    const Relation r = oracle::randomRelation(space, density(rng), rng);
    const PairSet expected = oracle::warshall(oracle::pairsOf(r), n);
    const ClosureResult got = transitiveClosure(r);
    if (oracle::pairsOf(got.relation) != expected) {
      o.fail("closure differs on " + std::to_string(n) + " points");
      continue;
    }
    if (!r.empty() && got.stageCount != oracleStage(oracle::pairsOf(r), n))
      o.fail("stage count differs on " + std::to_string(n) + " points");
  }
  const double elapsed = seconds(start);
  if (elapsed > kClosureBudgetSec) o.fail("took " + std::to_string(elapsed) + " s");
  return o;
}

}  // namespace

int main() {
  const std::vector<Relation> targets = sweepTargets();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"closure trace matches golden file, fixpoint at stage 5", goldenTrace},
      {"generator halves are square-idempotent", squareIdempotence},
      {"closure of I∪J restricts to E on 100 random targets", [&] { return closureRecoversTarget(targets); }},
      {"construction identities and equivalences hold", [&] { return constructionIdentities(targets); }},
      {"symbolic stages 1..6 and deletions are sound", [&] { return symbolicSoundness(targets); }},
      {"meet and iterated common knowledge agree", commonKnowledge},
      {"star relation needs n-1 equivalence subrelations", starCover},
      {"saturation through t(I∪J) recovers s", saturationDemo},
      {"transitive closure matches Warshall", closureOracle},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& ex) {
      o.fail(std::string("exception: ") + ex.what());
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << k + 1 << "] " << criteria[k].first;
    if (!o.ok) std::cout << " -- " << o.detail;
    std::cout << '\n';
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
