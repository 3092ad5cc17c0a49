#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "relwb/construction.hpp"

namespace relwb::symbolic {

/// The seven relation symbols. Declaration order is the canonical
/// lexicographic order used for sorting words.
enum class Atom : std::uint8_t { D, P, Q, E, G, GBar, H };

inline constexpr Atom kAllAtoms[] = {Atom::D, Atom::P,    Atom::Q, Atom::E,
                                     Atom::G, Atom::GBar, Atom::H};

/// D:(Any,Any) P:(X,X) Q:(Y,Y) E:(X,X) G:(X,Y) G':(Y,X) H:(Y,Y)
Signature atomSignature(Atom a);
/// "D", "P", "Q", "E", "G", "G'", "H".
std::string_view atomText(Atom a);

/// True unless some adjacent pair (K,L) has cod(K) and dom(L) opposed as X/Y.
bool sortCompatible(const std::vector<Atom>& atoms);

/// A composition word, read diagrammatically (leftmost relation first).
/// A default-constructed word, or one built from a sort-incompatible atom
/// sequence, is the distinguished Empty word.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Atom> atoms);
  explicit Word(std::vector<Atom> atoms);

  bool isEmpty() const { return atoms_.empty(); }
  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t length() const { return atoms_.size(); }

  /// Concatenation; Empty if either side is Empty or the junction clashes.
  Word then(const Word& next) const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Atom> atoms_;
};

/// A finite union of non-Empty words, kept sorted and duplicate-free.
class Expr {
 public:
  Expr() = default;
  /// Drops Empty words, sorts and deduplicates.
  explicit Expr(std::vector<Word> words);

  const std::vector<Word>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  bool contains(const Word& w) const;

  friend bool operator==(const Expr&, const Expr&) = default;

 private:
  std::vector<Word> words_;
};

/// Expr := Word ("+" Word)*; Word := Atom+; Atom := D|P|Q|E|G|G'|H.
/// Whitespace is ignored. Throws ParseError on unknown tokens or empty input.
Expr parseExpr(std::string_view text);
Word parseWord(std::string_view text);
std::string formatWord(const Word& w);
/// Canonical text, words joined by "+"; the empty union prints as "0".
std::string formatExpr(const Expr& e);

struct RewriteRule {
  Word pattern;
  Word replacement;
};

/// An ordered list of strictly length-reducing rules.
class RewriteSystem {
 public:
  explicit RewriteSystem(std::vector<RewriteRule> rules);

  /// The 27 identities in their prescribed application order.
  static const RewriteSystem& standard();

  const std::vector<RewriteRule>& rules() const { return rules_; }

  /// One rule pass per identity, each scanning left to right and rewriting
  /// wherever the pattern matches; passes repeat until nothing changes.
  std::vector<Atom> rewrite(std::vector<Atom> atoms) const;

 private:
  std::vector<RewriteRule> rules_;
};

/// A word removed by a containment argument, with the words whose union
/// is claimed to contain it.
struct DeletionEvent {
  Word removed;
  std::vector<Word> justifiedBy;
  std::string reason;
};

/// Rewrite every word, drop Empty words, apply the guarded deletions and
/// sort. Deletions are recorded in `audit` when it is non-null.
Expr normalize(const Expr& e, std::vector<DeletionEvent>* audit = nullptr,
               const RewriteSystem& system = RewriteSystem::standard());

/// Word-wise concatenation distributed over both unions (no normalization).
Expr concatenate(const Expr& first, const Expr& then);

/// The generator D+G+G'+G'G+H, i.e. I ∪ J.
const Expr& generatorExpr();

/// (I ∪ J) ∘ current, with the generator on the left; not normalized.
Expr expandStep(const Expr& current);

/// Drops standalone P and Q when standalone D is present.
Expr absorbSubrelations(const Expr& e);

/// normalize(e∘e) and normalize(e) agree after absorbing sub-relations of D.
bool verifySquareIdempotent(const Expr& e);

struct TraceReport {
  /// stages[k] is the canonical form of (I ∪ J)^(k+1); the last entry
  /// repeats the fixpoint stage.
  std::vector<Expr> stages;
  std::vector<std::size_t> wordCounts;
  /// 1-based stage index n with stage n = stage n+1.
  std::size_t fixpointStage = 0;
  /// Deletions recorded while normalizing each stage.
  std::vector<std::vector<DeletionEvent>> deletions;

  /// One canonical expression per line.
  std::string text() const;
  /// Stage k (1-based); stages past the fixpoint return the fixpoint.
  const Expr& stage(std::size_t k) const;
};

/// Iterates expandStep then normalize from the generator until two
/// consecutive stages agree. Throws Error if `maxStages` is exceeded.
TraceReport closureTrace(std::size_t maxStages = 64);

/// Concrete value of an atom on a bundle (D is the diagonal on Ω).
Relation atomValue(Atom a, const ConstructionBundle& bundle);
Relation evaluateWord(const Word& w, const ConstructionBundle& bundle);
/// Union of the word values; the empty union is ∅.
Relation evaluateOnModel(const Expr& e, const ConstructionBundle& bundle);

/// Checks every recorded deletion concretely: the removed word's value must
/// lie inside the union of its justifying words. Returns one message per
/// unjustified deletion.
std::vector<std::string> auditDeletions(const std::vector<DeletionEvent>& events,
                                        const ConstructionBundle& bundle);

}  // namespace relwb::symbolic
