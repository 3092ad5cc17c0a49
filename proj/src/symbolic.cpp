#include "relwb/symbolic.hpp"

#include <algorithm>
#include <cctype>

namespace relwb::symbolic {

Signature atomSignature(Atom a) {
  switch (a) {
    case Atom::D: return {Sort::Any, Sort::Any};
    case Atom::P: return {Sort::X, Sort::X};
    case Atom::Q: return {Sort::Y, Sort::Y};
    case Atom::E: return {Sort::X, Sort::X};
    case Atom::G: return {Sort::X, Sort::Y};
    case Atom::GBar: return {Sort::Y, Sort::X};
    case Atom::H: return {Sort::Y, Sort::Y};
  }
  return {};
}

std::string_view atomText(Atom a) {
  switch (a) {
    case Atom::D: return "D";
    case Atom::P: return "P";
    case Atom::Q: return "Q";
    case Atom::E: return "E";
    case Atom::G: return "G";
    case Atom::GBar: return "G'";
    case Atom::H: return "H";
  }
  return "?";
}

namespace {

bool opposed(Sort a, Sort b) { return a != Sort::Any && b != Sort::Any && a != b; }

}  // namespace

bool sortCompatible(const std::vector<Atom>& atoms) {
  for (std::size_t k = 0; k + 1 < atoms.size(); ++k)
    if (opposed(atomSignature(atoms[k]).cod, atomSignature(atoms[k + 1]).dom)) return false;
  return true;
}

Word::Word(std::initializer_list<Atom> atoms) : Word(std::vector<Atom>(atoms)) {}

Word::Word(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (!sortCompatible(atoms_)) atoms_.clear();
}

Word Word::then(const Word& next) const {
  if (isEmpty() || next.isEmpty()) return {};
  std::vector<Atom> joined = atoms_;
  joined.insert(joined.end(), next.atoms_.begin(), next.atoms_.end());
  return Word(std::move(joined));
}

Expr::Expr(std::vector<Word> words) : words_(std::move(words)) {
  std::erase_if(words_, [](const Word& w) { return w.isEmpty(); });
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool Expr::contains(const Word& w) const {
  return std::binary_search(words_.begin(), words_.end(), w);
}

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skipSpace();
    return pos_ >= text_.size();
  }
  char peek() {
    skipSpace();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool atAtom() {
    const char c = peek();
    return std::string_view("DPQEGH").find(c) != std::string_view::npos && c != '\0';
  }
  Atom atom() {
    const char c = peek();
    const std::size_t at = pos_;
    ++pos_;
    switch (c) {
      case 'D': return Atom::D;
      case 'P': return Atom::P;
      case 'Q': return Atom::Q;
      case 'E': return Atom::E;
      case 'H': return Atom::H;
      case 'G':
        if (accept('\'')) return Atom::GBar;
        return Atom::G;
      default: break;
    }
    throw ParseError(unexpected(at));
  }
  std::string unexpected(std::size_t at) const {
    if (at >= text_.size()) return "unexpected end of expression";
    return "unknown token '" + std::string(1, text_[at]) + "' at offset " + std::to_string(at);
  }
  std::size_t pos() {
    skipSpace();
    return pos_;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<Atom> lexWord(Lexer& lex) {
  std::vector<Atom> atoms;
  while (lex.atAtom()) atoms.push_back(lex.atom());
  if (atoms.empty()) throw ParseError(lex.unexpected(lex.pos()));
  return atoms;
}

}  // namespace

Expr parseExpr(std::string_view text) {
  Lexer lex(text);
  if (lex.done()) throw ParseError("empty expression");
  if (lex.accept('0')) {
    if (!lex.done()) throw ParseError(lex.unexpected(lex.pos()));
    return Expr();
  }
  std::vector<Word> words;
  words.emplace_back(lexWord(lex));
  while (lex.accept('+')) words.emplace_back(lexWord(lex));
  if (!lex.done()) throw ParseError(lex.unexpected(lex.pos()));
  return Expr(std::move(words));
}

Word parseWord(std::string_view text) {
  Lexer lex(text);
  if (lex.done()) throw ParseError("empty word");
  Word w(lexWord(lex));
  if (!lex.done()) throw ParseError(lex.unexpected(lex.pos()));
  return w;
}

std::string formatWord(const Word& w) {
  if (w.isEmpty()) return "0";
  std::string out;
  for (Atom a : w.atoms()) out += atomText(a);
  return out;
}

std::string formatExpr(const Expr& e) {
  if (e.empty()) return "0";
  std::string out;
  for (const Word& w : e.words()) {
    if (!out.empty()) out += '+';
    out += formatWord(w);
  }
  return out;
}

RewriteSystem::RewriteSystem(std::vector<RewriteRule> rules) : rules_(std::move(rules)) {
  for (const RewriteRule& r : rules_) {
    if (r.pattern.isEmpty() || r.replacement.isEmpty())
      throw Error("rewrite rule sides must be non-empty, sort-compatible words");
    if (r.replacement.length() >= r.pattern.length())
      throw Error("rewrite rule " + formatWord(r.pattern) + " -> " + formatWord(r.replacement) +
                  " does not shorten words");
  }
}

const RewriteSystem& RewriteSystem::standard() {
  using enum Atom;
  static const RewriteSystem system({
      {{D, D}, {D}},       {{D, E}, {E}},       {{D, G}, {G}},       {{D, GBar}, {GBar}},
      {{D, H}, {H}},       {{D, P}, {P}},       {{D, Q}, {Q}},       {{E, D}, {E}},
      {{E, E}, {E}},       {{E, P}, {E}},       {{G, D}, {G}},       {{G, GBar}, {P}},
      {{G, H, GBar}, {E}}, {{G, Q}, {G}},       {{GBar, D}, {GBar}}, {{GBar, P}, {GBar}},
      {{H, D}, {H}},       {{H, H}, {Q}},       {{H, Q}, {H}},       {{P, D}, {P}},
      {{P, E}, {E}},       {{P, G}, {G}},       {{P, P}, {P}},       {{Q, D}, {Q}},
      {{Q, GBar}, {GBar}}, {{Q, H}, {H}},       {{Q, Q}, {Q}},
  });
  return system;
}

std::vector<Atom> RewriteSystem::rewrite(std::vector<Atom> atoms) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const RewriteRule& rule : rules_) {
      const auto& pat = rule.pattern.atoms();
      const auto& rep = rule.replacement.atoms();
      std::size_t i = 0;
      while (i + pat.size() <= atoms.size()) {
        if (std::equal(pat.begin(), pat.end(), atoms.begin() + static_cast<std::ptrdiff_t>(i))) {
          auto at = atoms.begin() + static_cast<std::ptrdiff_t>(i);
          atoms.erase(at, at + static_cast<std::ptrdiff_t>(pat.size()));
          atoms.insert(atoms.begin() + static_cast<std::ptrdiff_t>(i), rep.begin(), rep.end());
          changed = true;
          // Stay at i: the replacement may start a new match.
        } else {
          ++i;
        }
      }
    }
  }
  return atoms;
}

namespace {

const Word kD{Atom::D};
const Word kP{Atom::P};
const Word kQ{Atom::Q};
const Word kE{Atom::E};

// K·G'·L is contained in K·G'·E·L, and K·G·L in K·E·G·L, because E is
// reflexive on X.
std::optional<Word> subsumingWord(const Word& w, const std::vector<Word>& present) {
  const auto& atoms = w.atoms();
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    std::vector<Atom> wider = atoms;
    if (atoms[k] == Atom::GBar)
      wider.insert(wider.begin() + static_cast<std::ptrdiff_t>(k + 1), Atom::E);
    else if (atoms[k] == Atom::G)
      wider.insert(wider.begin() + static_cast<std::ptrdiff_t>(k), Atom::E);
    else
      continue;
    Word candidate(std::move(wider));
    if (std::binary_search(present.begin(), present.end(), candidate)) return candidate;
  }
  return std::nullopt;
}

}  // namespace

Expr normalize(const Expr& e, std::vector<DeletionEvent>* audit, const RewriteSystem& system) {
  auto record = [&](const Word& removed, std::vector<Word> by, std::string reason) {
    if (audit) audit->push_back({removed, std::move(by), std::move(reason)});
  };

  // Rewrite; words whose rewritten form has a sort clash are Empty.
  std::vector<Word> words;
  words.reserve(e.size());
  for (const Word& w : e.words()) words.emplace_back(system.rewrite(w.atoms()));
  std::vector<Word> present = Expr(std::move(words)).words();
  auto has = [&](const Word& w) { return std::binary_search(present.begin(), present.end(), w); };

  if (has(kP)) {
    if (has(kD))
      record(kP, {kD}, "P ⊆ D");
    else if (has(kE))
      record(kP, {kE}, "P ⊆ E");
    if (has(kD) || has(kE)) std::erase(present, kP);
  }

  // Subsumption is decided against the surviving union before any of this
  // step's removals, so all removals are simultaneous.
  std::vector<Word> kept;
  for (const Word& w : present) {
    if (auto wider = subsumingWord(w, present)) {
      record(w, {*wider}, "subsumed by E insertion");
      continue;
    }
    if (w == kD && has(kQ) && has(kE)) {
      record(w, {kQ, kE}, "D ⊆ Q ∪ E");
      continue;
    }
    kept.push_back(w);
  }
  return Expr(std::move(kept));
}

Expr concatenate(const Expr& first, const Expr& then) {
  std::vector<Word> words;
  words.reserve(first.size() * then.size());
  for (const Word& a : first.words())
    for (const Word& b : then.words()) words.push_back(a.then(b));
  return Expr(std::move(words));
}

const Expr& generatorExpr() {
  static const Expr gen = parseExpr("D+G+G'+G'G+H");
  return gen;
}

Expr expandStep(const Expr& current) { return concatenate(generatorExpr(), current); }

Expr absorbSubrelations(const Expr& e) {
  if (!e.contains(kD)) return e;
  std::vector<Word> words = e.words();
  std::erase(words, kP);
  std::erase(words, kQ);
  return Expr(std::move(words));
}

bool verifySquareIdempotent(const Expr& e) {
  return absorbSubrelations(normalize(concatenate(e, e))) == absorbSubrelations(normalize(e));
}

std::string TraceReport::text() const {
  std::string out;
  for (const Expr& s : stages) out += formatExpr(s) + '\n';
  return out;
}

const Expr& TraceReport::stage(std::size_t k) const {
  if (k == 0 || stages.empty()) throw Error("trace stages are numbered from 1");
  return stages[std::min(k, stages.size()) - 1];
}

TraceReport closureTrace(std::size_t maxStages) {
  TraceReport report;
  std::vector<DeletionEvent> events;
  Expr current = normalize(generatorExpr(), &events);
  report.stages.push_back(current);
  report.wordCounts.push_back(current.size());
  report.deletions.push_back(std::move(events));
  for (std::size_t n = 1; n < maxStages; ++n) {
    events.clear();
    Expr next = normalize(expandStep(current), &events);
    report.stages.push_back(next);
    report.wordCounts.push_back(next.size());
    report.deletions.push_back(std::move(events));
    if (next == current) {
      report.fixpointStage = n;
      return report;
    }
    current = std::move(next);
  }
  throw Error("closure trace did not reach a fixpoint within " + std::to_string(maxStages) +
              " stages");
}

Relation atomValue(Atom a, const ConstructionBundle& b) {
  switch (a) {
    case Atom::D: return Relation::diagonal(b.space);
    case Atom::P: return Relation::diagonalOn(b.space, b.space->xPoints());
    case Atom::Q: return Relation::diagonalOn(b.space, b.space->yPoints());
    case Atom::E: return b.e;
    case Atom::G: return b.g;
    case Atom::GBar: return b.gBar;
    case Atom::H: return b.h;
  }
  throw Error("unknown atom");
}

Relation evaluateWord(const Word& w, const ConstructionBundle& b) {
  if (w.isEmpty()) return Relation(b.space);
  Relation acc = atomValue(w.atoms().front(), b);
  for (std::size_t k = 1; k < w.length(); ++k) acc = compose(acc, atomValue(w.atoms()[k], b));
  return acc.withSignature(std::nullopt);
}

Relation evaluateOnModel(const Expr& e, const ConstructionBundle& b) {
  Relation acc(b.space);
  for (const Word& w : e.words()) acc = unite(acc, evaluateWord(w, b));
  return acc;
}

std::vector<std::string> auditDeletions(const std::vector<DeletionEvent>& events,
                                        const ConstructionBundle& b) {
  std::vector<std::string> failures;
  for (const DeletionEvent& ev : events) {
    Relation cover(b.space);
    for (const Word& w : ev.justifiedBy) cover = unite(cover, evaluateWord(w, b));
    if (!evaluateWord(ev.removed, b).subsetOf(cover)) {
      std::string by;
      for (const Word& w : ev.justifiedBy) by += (by.empty() ? "" : "+") + formatWord(w);
      failures.push_back("deletion of " + formatWord(ev.removed) + " (" + ev.reason +
                         ") not contained in " + by);
    }
  }
  return failures;
}

}  // namespace relwb::symbolic
