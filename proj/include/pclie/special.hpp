#pragma once

#include <vector>

#include "pclie/lie.hpp"

namespace pclie {

/// A monic Lie polynomial used as a rewriting rule: its leading ALSW
/// rewrites to the remaining (smaller) terms.
class Rule {
 public:
  /// Requires the leading coefficient to be exactly 1.
  static Rule monic(LiePoly body);
  /// Divides by the leading coefficient. Throws on the zero polynomial.
  static Rule normalized(const LiePoly& body);
  /// The rule [u] for an ALSW u.
  static Rule nlsw(const Word& u);

  const LiePoly& body() const { return body_; }
  const Word& leading() const { return leading_; }
  const AssocPoly& expanded() const { return expanded_; }

  bool operator==(const Rule& other) const { return body_ == other.body_; }

 private:
  explicit Rule(LiePoly body);
  LiePoly body_;
  Word leading_;
  AssocPoly expanded_;
};

/// An occurrence u = a v b of the ALSW v inside the ALSW u.
struct Occurrence {
  Word host;
  Word sub;
  std::size_t position = 0;
};

enum class Side : unsigned char { left, right };

/// [u]_v: a bracketing of u whose subtree at `slot` is exactly [v].
struct SpecialBracketing {
  LieTree tree;
  std::vector<Side> slot;
};

/// Throws std::invalid_argument when u or v is not an ALSW or v does not
/// occur at the given position.
SpecialBracketing special_bracket(const Occurrence& occ);

const LieTree& subtree(const LieTree& t, const std::vector<Side>& path);

/// Expands `tree` with the subtree at `path` replaced by `replacement`.
AssocPoly expand_substituted(const LieTree& tree, const std::vector<Side>& path,
                             const AssocPoly& replacement);

/// The normal s-word [a s b], obtained from [a s̄ b]_s̄ by substituting s for
/// [s̄]. Throws std::invalid_argument unless a s̄ b is an ALSW.
LiePoly normal_s_word(const Word& a, const Rule& s, const Word& b);

/// The same element in the free associative algebra.
AssocPoly normal_s_word_expanded(const Word& a, const Rule& s, const Word& b);

}  // namespace pclie
