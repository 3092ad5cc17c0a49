#include "relwb/dispatch.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "relwb/construction_io.hpp"
#include "relwb/epistemic.hpp"
#include "relwb/star.hpp"
#include "relwb/sweep.hpp"
#include "relwb/symbolic.hpp"

namespace relwb::cli {

namespace {

constexpr std::size_t kMaxVerifySize = 8;
constexpr std::size_t kMaxStarSize = 12;
constexpr std::size_t kExhaustiveStarSize = 5;

std::string eventText(const GroundSpace& space, const PointSet& s) {
  std::string out = "{";
  for (PointId p : s) out += (out.size() > 1 ? "," : "") + space.name(p);
  return out + "}";
}

std::string partitionText(const GroundSpace& space, const Partition& p) {
  std::string out;
  for (const PointSet& b : p.blocks()) out += (out.empty() ? "" : " ") + eventText(space, b);
  return out.empty() ? "{}" : out;
}

RunResult runTrace(const RunConfig&) {
  const symbolic::TraceReport trace = symbolic::closureTrace();
  RunResult r;
  r.text = trace.text();
  Json stages = Json::array();
  for (const auto& s : trace.stages) stages.push_back(symbolic::formatExpr(s));
  r.report["stages"] = std::move(stages);
  r.report["wordCounts"] = trace.wordCounts;
  r.report["fixpointStage"] = trace.fixpointStage;
  return r;
}

RunResult runVerify(const RunConfig& c) {
  if (!c.seed) throw ParseError("verify requires --seed");
  if (c.size > kMaxVerifySize)
    throw ParseError("--size must be at most " + std::to_string(kMaxVerifySize));
  if (c.count == 0) throw ParseError("--count must be positive");

  SweepConfig sc;
  sc.size = c.size;
  sc.count = c.count;
  sc.seed = *c.seed;
  sc.audit = c.audit;
  const SweepReport sweep = runSweep(sc);

  RunResult r;
  std::ostringstream text;
  Json instances = Json::array();
  for (std::size_t k = 0; k < sweep.instances.size(); ++k) {
    const InstanceReport& inst = sweep.instances[k];
    text << "instance " << k + 1 << " |X|=" << inst.xCount << " stage=" << inst.closureStage
         << ' ' << (inst.passed() ? "ok" : "FAIL: " + inst.failure) << '\n';
    Json j;
    j["target"] = inst.target;
    j["size"] = inst.xCount;
    j["closureStage"] = inst.closureStage;
    j["compositionIdentities"] = inst.compositionIdentities;
    j["squares"] = inst.squares;
    j["equivalences"] = inst.equivalences;
    j["closureRestricts"] = inst.closureRestricts;
    j["stageBound"] = inst.stageBound;
    j["soundness"] = inst.soundness;
    if (c.audit) j["audit"] = inst.audit;
    j["passed"] = inst.passed();
    if (!inst.passed()) j["failure"] = inst.failure;
    instances.push_back(std::move(j));
  }
  const std::size_t failures = sweep.failures();
  text << "checked " << sweep.instances.size() << " instances, " << failures << " failed\n";
  r.text = text.str();
  r.report["seed"] = *c.seed;
  r.report["size"] = c.size;
  r.report["count"] = c.count;
  r.report["audit"] = c.audit;
  r.report["failures"] = failures;
  r.report["instances"] = std::move(instances);
  r.exitCode = failures == 0 ? kExitOk : kExitCheckFailed;
  return r;
}

RunResult runCk(const RunConfig& c) {
  if (!c.input) throw ParseError("ck requires --input <model.json>");
  if (!c.event) throw ParseError("ck requires --event <event.json>");
  const epistemic::EpistemicModel m = epistemic::loadModel(*c.input);
  const GroundSpace& space = *m.space();
  const epistemic::Event a = pointSetFromJson(space, readJsonFile(*c.event));

  RunResult r;
  std::ostringstream text;
  text << "event " << eventText(space, a) << '\n';
  Json knows = Json::object();
  for (std::size_t k = 0; k < m.agents().size(); ++k) {
    const auto known = epistemic::knows(a, m.partitions()[k]);
    text << "knows[" << m.agents()[k] << "] " << eventText(space, known) << '\n';
    knows[m.agents()[k]] = pointSetToJson(space, known);
  }
  const auto everyone = epistemic::everyoneKnows(a, m);
  const Partition meet = epistemic::meetPartitions(m);
  const auto viaMeet = epistemic::commonKnowledgeMeet(a, m);
  const auto viaIteration = epistemic::commonKnowledgeIterated(a, m);
  text << "everyone " << eventText(space, everyone) << '\n';
  text << "meet " << partitionText(space, meet) << '\n';
  text << "common[meet] " << eventText(space, viaMeet) << '\n';
  text << "common[iterated] " << eventText(space, viaIteration) << '\n';
  const bool agree = viaMeet == viaIteration;
  if (!agree) text << "FAIL: common knowledge via meet and via iteration differ\n";
  r.text = text.str();
  r.report["event"] = pointSetToJson(space, a);
  r.report["knows"] = std::move(knows);
  r.report["everyoneKnows"] = pointSetToJson(space, everyone);
  r.report["meet"] = partitionToJson(space, meet);
  r.report["commonKnowledgeMeet"] = pointSetToJson(space, viaMeet);
  r.report["commonKnowledgeIterated"] = pointSetToJson(space, viaIteration);
  r.report["agree"] = agree;
  r.exitCode = agree ? kExitOk : kExitCheckFailed;
  return r;
}

RunResult runStar(const RunConfig& c) {
  if (c.n < 2 || c.n > kMaxStarSize)
    throw ParseError("--n must lie in 2.." + std::to_string(kMaxStarSize));
  const star::StarInstance s = star::makeStar(c.n);
  const auto family = star::canonicalFamily(s);
  const auto cover = star::minCoverSize(s);

  RunResult r;
  std::ostringstream text;
  bool ok = true;
  Relation joined(s.space);
  for (const Relation& e : family) {
    joined = unite(joined, e);
    ok = ok && isEquivalence(e, s.space->allPoints()).holds;
  }
  ok = ok && joined == s.relation;
  text << "n=" << c.n << " minCover=" << cover.size << " familySize=" << family.size() << '\n';
  if (c.n <= kExhaustiveStarSize) {
    const auto exhaustive = star::minCoverExhaustive(s);
    const bool agrees = exhaustive && *exhaustive == cover.size &&
                        star::equivSubrelationsExhaustive(s).size() ==
                            star::equivSubrelations(s).size();
    text << "exhaustive minCover=" << (exhaustive ? std::to_string(*exhaustive) : "none")
         << (agrees ? " (agrees)" : " (DISAGREES)") << '\n';
    r.report["exhaustiveMinCover"] = exhaustive ? Json(*exhaustive) : Json(nullptr);
    ok = ok && agrees;
  }
  r.text = text.str();
  r.report["n"] = c.n;
  r.report["minCover"] = cover.size;
  r.report["familySize"] = family.size();
  r.report["uniquenessNote"] =
      "the family is the unique cover by non-identity equivalence subrelations; adding the "
      "diagonal gives another cover with the same union";
  r.exitCode = ok ? kExitOk : kExitCheckFailed;
  return r;
}

RunResult runEval(const RunConfig& c) {
  if (!c.input) throw ParseError("eval requires --input <bundle.json>");
  if (c.expression.empty()) throw ParseError("eval requires an expression");
  const ConstructionBundle b = loadBundle(*c.input);
  const symbolic::Expr e = symbolic::parseExpr(c.expression);
  const Relation value = symbolic::evaluateOnModel(e, b);

  RunResult r;
  std::ostringstream text;
  text << "expr " << symbolic::formatExpr(e) << '\n';
  text << "pairs " << value.size() << '\n';
  for (const auto& p : value.pairs()) text << formatPair(*b.space, p) << '\n';
  r.text = text.str();
  r.report["expr"] = symbolic::formatExpr(e);
  r.report["relation"] = relationToJson(value);
  return r;
}

RunResult runBundle(const RunConfig& c) {
  Relation e(numberedSpace(0));
  if (c.input) {
    e = relationFromJson(readJsonFile(*c.input));
    if (!e.space()->hasAllTriples()) {
      std::vector<std::string> names;
      for (PointId p = 0; p < e.space()->xCount(); ++p) names.push_back(e.space()->name(p));
      SpacePtr space = GroundSpace::withTriples(std::move(names));
      std::vector<Pair> pairs = e.pairs();
      e = Relation(space, pairs);
    }
  } else {
    if (!c.seed) throw ParseError("bundle requires --input or --seed");
    if (c.size > kMaxVerifySize)
      throw ParseError("--size must be at most " + std::to_string(kMaxVerifySize));
    std::mt19937_64 rng(*c.seed);
    e = randomEquivalence(numberedSpace(c.size), rng);
  }
  ConstructionBundle b = [&] {
    try {
      return buildDefault(e);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& err) {
      throw ParseError(err.what());
    }
  }();
  RunResult r;
  r.report = bundleToJson(b);
  std::ostringstream text;
  text << "|X|=" << b.space->xCount() << " |Y|=" << b.space->yCount() << " |E|=" << b.e.size()
       << " |F|=" << b.f.size() << " |G|=" << b.g.size() << " |H|=" << b.h.size()
       << " |I|=" << b.i.size() << " |J|=" << b.j.size() << '\n';
  r.text = text.str();
  return r;
}

}  // namespace

RunResult dispatch(const RunConfig& config) {
  if (config.subcommand == "trace") return runTrace(config);
  if (config.subcommand == "verify") return runVerify(config);
  if (config.subcommand == "ck") return runCk(config);
  if (config.subcommand == "star") return runStar(config);
  if (config.subcommand == "eval") return runEval(config);
  if (config.subcommand == "bundle") return runBundle(config);
  throw ParseError("unknown subcommand '" + config.subcommand + "'");
}

int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relation-algebra workbench: closure traces, construction sweeps, "
               "common knowledge and star covers"};
  app.require_subcommand(1);
  RunConfig config;

  auto addOutput = [&](CLI::App* sub) {
    sub->add_option("--output", config.output, "Write the text report here");
    sub->add_option("--json", config.json, "Write the JSON report here");
  };

  auto* trace = app.add_subcommand("trace", "Print the symbolic closure trace of I ∪ J");
  addOutput(trace);

  auto* verify = app.add_subcommand("verify", "Check random targets against the construction");
  verify->add_option("--size", config.size, "|X| (0 draws 1..6 per instance)");
  verify->add_option("--count", config.count, "Number of random targets");
  verify->add_option("--seed", config.seed, "Random seed (required)");
  verify->add_flag("--audit", config.audit, "Check every symbolic deletion concretely");
  addOutput(verify);

  auto* ck = app.add_subcommand("ck", "Knowledge and common knowledge of an event");
  ck->add_option("--input", config.input, "Model JSON file")->required();
  ck->add_option("--event", config.event, "Event JSON file (list of state ids)")->required();
  addOutput(ck);

  auto* starCmd = app.add_subcommand("star", "Cover analysis of the star relation");
  starCmd->add_option("--n", config.n, "Carrier size")->required();
  addOutput(starCmd);

  auto* eval = app.add_subcommand("eval", "Evaluate an expression on a bundle");
  eval->add_option("--input", config.input, "Bundle JSON file")->required();
  eval->add_option("expression", config.expression, "Expression, e.g. \"GHG'\"")->required();
  addOutput(eval);

  auto* bundle = app.add_subcommand("bundle", "Build and export a construction bundle");
  bundle->add_option("--input", config.input, "Target relation JSON file");
  bundle->add_option("--size", config.size, "|X| for a random target");
  bundle->add_option("--seed", config.seed, "Seed for a random target");
  addOutput(bundle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  config.subcommand = app.get_subcommands().front()->get_name();

  RunResult result;
  try {
    result = dispatch(config);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }

  const std::string jsonText = result.report.dump(2) + '\n';
  std::optional<std::filesystem::path> jsonPath = config.json;
  if (!jsonPath && config.output) jsonPath = std::filesystem::path(config.output->string() + ".json");
  if (config.output) {
    std::ofstream f(*config.output, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << config.output->string() << '\n';
      return kExitInputError;
    }
    f << result.text;
  } else {
    out << result.text;
  }
  if (jsonPath) {
    std::ofstream f(*jsonPath, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << jsonPath->string() << '\n';
      return kExitInputError;
    }
    f << jsonText;
  } else {
    out << jsonText;
  }
  if (result.exitCode == kExitCheckFailed) err << "check failed\n";
  return result.exitCode;
}

}  // namespace relwb::cli
