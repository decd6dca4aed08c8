#include "pclie/lie.hpp"

#include <optional>
#include <unordered_map>

namespace pclie {

struct LieTree::Node {
  Letter letter{};
  std::size_t degree = 1;
  // Both empty for a leaf.
  std::optional<LieTree> left;
  std::optional<LieTree> right;
};

LieTree LieTree::leaf(Letter x) {
  auto node = std::make_shared<Node>();
  node->letter = x;
  return LieTree(std::move(node));
}

LieTree LieTree::pair(LieTree left, LieTree right) {
  auto node = std::make_shared<Node>();
  node->degree = left.degree() + right.degree();
  node->left = std::move(left);
  node->right = std::move(right);
  return LieTree(std::move(node));
}

bool LieTree::is_leaf() const { return !node_->left.has_value(); }

Letter LieTree::letter() const {
  if (!is_leaf()) throw std::logic_error("LieTree::letter on an inner node");
  return node_->letter;
}

const LieTree& LieTree::left() const {
  if (is_leaf()) throw std::logic_error("LieTree::left on a leaf");
  return *node_->left;
}

const LieTree& LieTree::right() const {
  if (is_leaf()) throw std::logic_error("LieTree::right on a leaf");
  return *node_->right;
}

std::size_t LieTree::degree() const { return node_->degree; }

namespace {

void collect_leaves(const LieTree& t, Word& out) {
  if (t.is_leaf()) {
    out.push_back(t.letter());
    return;
  }
  collect_leaves(t.left(), out);
  collect_leaves(t.right(), out);
}

}  // namespace

Word LieTree::word() const {
  Word out;
  collect_leaves(*this, out);
  return out;
}

bool LieTree::operator==(const LieTree& other) const {
  if (node_ == other.node_) return true;
  if (is_leaf() || other.is_leaf()) {
    return is_leaf() && other.is_leaf() && letter() == other.letter();
  }
  return degree() == other.degree() && left() == other.left() && right() == other.right();
}

LieTree bracket(const Word& u) {
  if (!is_alsw(u)) throw std::invalid_argument("bracket: word is not an ALSW");
  if (u.size() == 1) return LieTree::leaf(u[0]);
  auto [v, w] = standard_split(u);
  return LieTree::pair(bracket(v), bracket(w));
}

bool is_nlsw(const LieTree& t) {
  if (t.is_leaf()) return true;
  if (!is_alsw(t.word())) return false;
  const LieTree& v = t.left();
  const LieTree& w = t.right();
  if (!is_nlsw(v) || !is_nlsw(w)) return false;
  if (!v.is_leaf() && compare_lex(v.right().word(), w.word()) > 0) return false;
  return true;
}

AssocPoly expand(const LieTree& t) {
  if (t.is_leaf()) return AssocPoly::monomial(Word{t.letter()});
  return commutator(expand(t.left()), expand(t.right()));
}

const AssocPoly& expand_nlsw(const Word& u) {
  thread_local std::unordered_map<Word, AssocPoly, WordHash> cache;
  auto it = cache.find(u);
  if (it != cache.end()) return it->second;
  AssocPoly p;
  if (u.size() == 1) {
    if (!is_alsw(u)) throw std::invalid_argument("expand_nlsw: not an ALSW");
    p = AssocPoly::monomial(u);
  } else {
    auto [v, w] = standard_split(u);
    p = commutator(expand_nlsw(v), expand_nlsw(w));
  }
  return cache.emplace(u, std::move(p)).first->second;
}

AssocPoly expand(const LiePoly& p) {
  AssocPoly out;
  for (const auto& [u, c] : p) out.add_scaled(expand_nlsw(u), c);
  return out;
}

LeadingTerm leading_word(const AssocPoly& p) {
  auto [w, c] = p.leading();
  return {w, c};
}

LiePoly nlsw_decompose(const AssocPoly& p) {
  LiePoly out;
  AssocPoly rest = p;
  while (!rest.is_zero()) {
    auto [u, c] = leading_word(rest);
    if (u.empty() || !is_alsw(u)) {
      throw NotLieElement("not a Lie element: leading word is not an ALSW");
    }
    out.add_term(u, c);
    rest.add_scaled(expand_nlsw(u), -c);
    if (!rest.is_zero() && compare_deglex(rest.leading().first, u) >= 0) {
      throw std::logic_error("nlsw_decompose: leading word did not decrease");
    }
  }
  return out;
}

LiePoly to_lie_poly(const LieTree& t) { return nlsw_decompose(expand(t)); }

LiePoly lie_bracket(const LiePoly& p, const LiePoly& q) {
  return nlsw_decompose(commutator(expand(p), expand(q)));
}

std::vector<WeightedTree> left_pair_expansion(Letter x, const Word& u) {
  if (u.empty() || !is_alsw(u)) throw std::invalid_argument("left_pair_expansion: u is not an ALSW");
  for (Letter y : u) {
    if (!(x > y)) throw std::invalid_argument("left_pair_expansion: x must exceed every letter of u");
  }
  if (u.size() == 1) return {{Rational(1), LieTree::pair(LieTree::leaf(x), LieTree::leaf(u[0]))}};

  // (x [u1 u2]) = ((x [u1]) [u2]) - ((x [u2]) [u1])
  auto [u1, u2] = standard_split(u);
  LieTree b1 = bracket(u1);
  LieTree b2 = bracket(u2);
  std::vector<WeightedTree> out;
  for (auto& [c, t] : left_pair_expansion(x, u1)) out.push_back({c, LieTree::pair(t, b2)});
  for (auto& [c, t] : left_pair_expansion(x, u2)) out.push_back({-c, LieTree::pair(t, b1)});
  return out;
}

std::string render(const Alphabet& alphabet, const LieTree& t) {
  if (t.is_leaf()) return alphabet.symbol(t.letter());
  return "(" + render(alphabet, t.left()) + " " + render(alphabet, t.right()) + ")";
}

}  // namespace pclie
