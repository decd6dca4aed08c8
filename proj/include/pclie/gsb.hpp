#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "pclie/special.hpp"

namespace pclie {

enum class AmbiguityKind { inclusion, intersection };

/// A word w on which two rules overlap.
///
/// inclusion:    w = f̄ = a ḡ b
/// intersection: w = f̄ b = a ḡ, with |f̄| + |ḡ| > |w| and a, b nonempty
struct Ambiguity {
  AmbiguityKind kind{};
  std::size_t left_index = 0;   // f
  std::size_t right_index = 0;  // g
  Rule left;
  Rule right;
  Word w;
  Word a;
  Word b;
};

/// All ambiguities with |w| <= max_deg, ordered by w (deg-lex), then rule
/// indices, then placement.
std::vector<Ambiguity> find_ambiguities(std::span<const Rule> rules, std::size_t max_deg);

/// (f,g)_w. Its leading word is below w unless it vanishes.
LiePoly composition(const Ambiguity& amb);
AssocPoly composition_expanded(const Ambiguity& amb);

struct ReductionStep {
  std::shared_ptr<const Rule> rule;
  std::optional<std::size_t> rule_index;  // set when the rule came from a list
  Word a;
  Word b;
  Rational coefficient;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  LiePoly remainder;
};

/// A located leading word of some rule inside a word.
struct RuleMatch {
  std::shared_ptr<const Rule> rule;
  std::optional<std::size_t> rule_index;
  std::size_t position = 0;
};

/// Finds the rule to apply to a given ALSW, if any.
using RuleFinder = std::function<std::optional<RuleMatch>(const Word&)>;

/// Lowest-index rule first, leftmost occurrence of its leading word.
RuleFinder list_finder(std::span<const Rule> rules);

/// Rewrites leading words with normal S-words until no term of the
/// remainder contains a rule's leading word. With `bound`, every step word
/// must be below it (std::invalid_argument otherwise).
ReductionTrace reduce(const LiePoly& h, std::span<const Rule> rules,
                      const std::optional<Word>& bound = std::nullopt);
ReductionTrace reduce(const AssocPoly& h, const RuleFinder& finder,
                      const std::optional<Word>& bound = std::nullopt);

struct GsbFailure {
  Ambiguity ambiguity;
  LiePoly remainder;
};

struct GsbReport {
  bool ok = true;
  std::size_t max_deg = 0;  // verification only covers |w| <= max_deg
  std::size_t ambiguities_checked = 0;
  std::vector<GsbFailure> failures;
};

GsbReport is_gsb(std::span<const Rule> rules, std::size_t max_deg);

/// Adds monic irreducible compositions until every ambiguity with
/// |w| <= max_deg is trivial.
std::vector<Rule> complete(std::vector<Rule> rules, std::size_t max_deg);

}  // namespace pclie
