#include "pclie/special.hpp"

#include <stdexcept>

namespace pclie {

Rule::Rule(LiePoly body) : body_(std::move(body)) {
  if (body_.is_zero()) throw std::invalid_argument("rule body is zero");
  auto [w, c] = body_.leading();
  if (c != 1) throw std::invalid_argument("rule is not monic");
  leading_ = w;
  expanded_ = expand(body_);
}

Rule Rule::monic(LiePoly body) { return Rule(std::move(body)); }

Rule Rule::normalized(const LiePoly& body) {
  if (body.is_zero()) throw std::invalid_argument("cannot normalize the zero polynomial");
  Rational inverse = 1 / body.leading().second;
  return Rule(inverse * body);
}

Rule Rule::nlsw(const Word& u) { return Rule(LiePoly::monomial(u)); }

namespace {

struct Located {
  std::vector<Side> path;
  std::size_t start = 0;
  std::size_t end = 0;
};

// Minimal subtree of t (spanning [start, start + degree)) covering [p, q).
Located locate_cover(const LieTree& t, std::size_t start, std::size_t p, std::size_t q) {
  Located at;
  at.start = start;
  const LieTree* node = &t;
  while (!node->is_leaf()) {
    std::size_t mid = at.start + node->left().degree();
    if (q <= mid) {
      at.path.push_back(Side::left);
      node = &node->left();
    } else if (p >= mid) {
      at.path.push_back(Side::right);
      at.start = mid;
      node = &node->right();
    } else {
      break;
    }
  }
  at.end = at.start + node->degree();
  return at;
}

LieTree replace_at(const LieTree& t, const std::vector<Side>& path, std::size_t depth,
                   const LieTree& replacement) {
  if (depth == path.size()) return replacement;
  if (path[depth] == Side::left) {
    return LieTree::pair(replace_at(t.left(), path, depth + 1, replacement), t.right());
  }
  return LieTree::pair(t.left(), replace_at(t.right(), path, depth + 1, replacement));
}

AssocPoly expand_substituted_from(const LieTree& t, const std::vector<Side>& path, std::size_t depth,
                                  const AssocPoly& replacement) {
  if (depth == path.size()) return replacement;
  if (path[depth] == Side::left) {
    return commutator(expand_substituted_from(t.left(), path, depth + 1, replacement),
                      expand(t.right()));
  }
  return commutator(expand(t.left()),
                    expand_substituted_from(t.right(), path, depth + 1, replacement));
}

}  // namespace

SpecialBracketing special_bracket(const Occurrence& occ) {
  const Word& u = occ.host;
  const Word& v = occ.sub;
  if (u.empty() || !is_alsw(u)) throw std::invalid_argument("special_bracket: host is not an ALSW");
  if (v.empty() || !is_alsw(v)) throw std::invalid_argument("special_bracket: subword is not an ALSW");
  if (occ.position + v.size() > u.size() || u.subword(occ.position, v.size()) != v) {
    throw std::invalid_argument("special_bracket: subword does not occur at the given position");
  }

  LieTree whole = bracket(u);
  Located vc = locate_cover(whole, 0, occ.position, occ.position + v.size());
  if (vc.start != occ.position) {
    throw std::logic_error("special_bracket: no subtree of [u] starts at the occurrence");
  }

  LieTree replacement = bracket(v);
  std::vector<Side> slot = vc.path;
  std::size_t overhang = vc.end - (occ.position + v.size());
  if (overhang > 0) {
    for (const Word& c : lyndon_factorize(u.subword(occ.position + v.size(), overhang))) {
      replacement = LieTree::pair(replacement, bracket(c));
      slot.push_back(Side::left);
    }
  }
  // The factors were wrapped around [v] from the inside out, so the slot
  // path descends through every new left child after reaching [vc].
  return {replace_at(whole, vc.path, 0, replacement), std::move(slot)};
}

const LieTree& subtree(const LieTree& t, const std::vector<Side>& path) {
  const LieTree* node = &t;
  for (Side s : path) node = s == Side::left ? &node->left() : &node->right();
  return *node;
}

AssocPoly expand_substituted(const LieTree& tree, const std::vector<Side>& path,
                             const AssocPoly& replacement) {
  return expand_substituted_from(tree, path, 0, replacement);
}

AssocPoly normal_s_word_expanded(const Word& a, const Rule& s, const Word& b) {
  Word w = a + s.leading() + b;
  if (!is_alsw(w)) throw std::invalid_argument("normal_s_word: a s b is not an ALSW");
  SpecialBracketing sb = special_bracket({w, s.leading(), a.size()});
  return expand_substituted(sb.tree, sb.slot, s.expanded());
}

LiePoly normal_s_word(const Word& a, const Rule& s, const Word& b) {
  return nlsw_decompose(normal_s_word_expanded(a, s, b));
}

}  // namespace pclie
