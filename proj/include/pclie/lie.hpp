#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "pclie/polynomial.hpp"
#include "pclie/words.hpp"

namespace pclie {

/// Thrown when a polynomial does not lie in the span of expanded NLSWs.
class NotLieElement : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A fully bracketed non-associative word. Immutable; copies share nodes.
class LieTree {
 public:
  static LieTree leaf(Letter x);
  static LieTree pair(LieTree left, LieTree right);

  bool is_leaf() const;
  Letter letter() const;  // leaves only
  const LieTree& left() const;
  const LieTree& right() const;

  /// Number of leaves.
  std::size_t degree() const;
  /// Leaf sequence, left to right.
  Word word() const;

  bool operator==(const LieTree& other) const;

 private:
  struct Node;
  explicit LieTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// The NLSW [u] of an ALSW u, built recursively from standard splits.
LieTree bracket(const Word& u);

bool is_nlsw(const LieTree& t);

/// Expansion into the free associative algebra with (ab) = ab - ba.
AssocPoly expand(const LieTree& t);

/// Expansion of a Lie polynomial given in NLSW coordinates.
AssocPoly expand(const LiePoly& p);

/// expand(bracket(u)), memoized per thread.
const AssocPoly& expand_nlsw(const Word& u);

struct LeadingTerm {
  Word word;
  Rational coefficient;
};

/// Deg-lex maximal monomial. Throws std::domain_error on zero.
LeadingTerm leading_word(const AssocPoly& p);

/// NLSW coordinates of a Lie element by triangular extraction.
/// Throws NotLieElement if some leading word is not an ALSW.
LiePoly nlsw_decompose(const AssocPoly& p);

/// nlsw_decompose(expand(t))
LiePoly to_lie_poly(const LieTree& t);

LiePoly lie_bracket(const LiePoly& p, const LiePoly& q);

struct WeightedTree {
  Rational coefficient;
  LieTree tree;
};

/// Rewrites (x [u]) for an ALSW u with x > supp(u) as a combination of
/// trees of the shape (((x y) ...) ...), by induction on the standard split
/// of u. Each tree's word is a rearrangement of xu beginning with x.
std::vector<WeightedTree> left_pair_expansion(Letter x, const Word& u);

/// Fully parenthesized rendering, e.g. "((x y) z)".
std::string render(const Alphabet& alphabet, const LieTree& t);

}  // namespace pclie
