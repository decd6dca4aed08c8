#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pclie/gsb.hpp"

namespace pclie {

/// Commutation graph: a symmetric irreflexive relation on the alphabet.
class CommGraph {
 public:
  explicit CommGraph(Alphabet alphabet);
  CommGraph(Alphabet alphabet, const std::vector<std::pair<Letter, Letter>>& edges);

  /// Throws std::invalid_argument on loops or letters outside the alphabet.
  void add_edge(Letter a, Letter b);
  bool adjacent(Letter a, Letter b) const;

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return alphabet_.size(); }
  /// Unordered edges as (larger, smaller) pairs, sorted.
  std::vector<std::pair<Letter, Letter>> edges() const;

  /// First line the alphabet declaration, then one "a b" edge per line.
  /// Blank lines and '#' comments are ignored.
  static CommGraph parse(std::string_view text);
  std::string serialize() const;

  static CommGraph complete(Alphabet alphabet);

 private:
  Alphabet alphabet_;
  std::vector<std::vector<bool>> adjacency_;
};

/// a ⊳ b: a > b and {a, b} is an edge.
bool rhd(Letter a, Letter b, const CommGraph& g);

/// True when u has a factor x w y with x ⊳ y and y ⊳ every letter of w.
/// Reports the deg-lex smallest such factor, leftmost among equals.
struct ForbiddenFactor {
  std::size_t position = 0;
  std::size_t length = 0;
};
std::optional<ForbiddenFactor> find_forbidden_factor(const Word& u, const CommGraph& g);

/// The relations [x u y], x ⊳ y ⊳ supp(u), |xuy| <= max_deg, in deg-lex
/// order of their leading words.
std::vector<Rule> generate_relations(const CommGraph& g, std::size_t max_deg);

/// Rule finder over the infinite relation set, generating only the rules
/// whose leading words occur. Agrees with list_finder(generate_relations(..)).
RuleFinder relation_finder(const CommGraph& g);

struct GradedBasis {
  std::size_t max_deg = 0;
  /// words[n-1] and trees[n-1] hold degree n, ascending deg-lex.
  std::vector<std::vector<Word>> words;
  std::vector<std::vector<LieTree>> trees;
  std::vector<std::size_t> dims;
  /// Tally by multidegree (counts indexed by letter rank).
  std::map<std::vector<std::size_t>, std::size_t> multidegree_dims;
};

/// NLSWs [u], |u| <= max_deg, whose word avoids every relation leading word.
GradedBasis irr_basis(const CommGraph& g, std::size_t max_deg);

std::vector<std::size_t> graded_dimensions(const CommGraph& g, std::size_t max_deg);

/// Normal form modulo the partial commutation relations, supported on
/// Irr words.
LiePoly pc_normal_form(const LiePoly& p, const CommGraph& g);
LiePoly pc_normal_form(const LieTree& t, const CommGraph& g);
ReductionTrace pc_reduce(const LiePoly& p, const CommGraph& g);

/// Coefficients 0..max_deg of 1 / Σ_C (-1)^|C| t^|C| over all cliques C.
std::vector<mpz_class> clique_hilbert_series(const CommGraph& g, std::size_t max_deg);

/// Graded Lie dimensions recovered from the clique series by inverting
/// Π_n (1 - t^n)^(-d_n). Throws std::logic_error on a non-integer result.
std::vector<std::size_t> clique_series_dims(const CommGraph& g, std::size_t max_deg);

}  // namespace pclie
