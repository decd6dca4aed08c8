#include "pclie/pc_lie.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace pclie {

CommGraph::CommGraph(Alphabet alphabet)
    : alphabet_(std::move(alphabet)),
      adjacency_(alphabet_.size(), std::vector<bool>(alphabet_.size(), false)) {}

CommGraph::CommGraph(Alphabet alphabet, const std::vector<std::pair<Letter, Letter>>& edges)
    : CommGraph(std::move(alphabet)) {
  for (auto [a, b] : edges) add_edge(a, b);
}

void CommGraph::add_edge(Letter a, Letter b) {
  if (!alphabet_.contains(a) || !alphabet_.contains(b)) {
    throw std::invalid_argument("edge letter outside the alphabet");
  }
  if (a == b) throw std::invalid_argument("commutation graph must be irreflexive");
  adjacency_[rank(a)][rank(b)] = true;
  adjacency_[rank(b)][rank(a)] = true;
}

bool CommGraph::adjacent(Letter a, Letter b) const {
  if (!alphabet_.contains(a) || !alphabet_.contains(b)) {
    throw std::invalid_argument("letter outside the alphabet");
  }
  return adjacency_[rank(a)][rank(b)];
}

std::vector<std::pair<Letter, Letter>> CommGraph::edges() const {
  std::vector<std::pair<Letter, Letter>> out;
  for (std::size_t i = size(); i-- > 0;) {
    for (std::size_t j = i; j-- > 0;) {
      if (adjacency_[i][j]) out.emplace_back(letter(i), letter(j));
    }
  }
  return out;
}

CommGraph CommGraph::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<CommGraph> graph;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    if (!graph) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      graph.emplace(Alphabet::parse(line));
      continue;
    }
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected two symbols per edge");
    }
    try {
      graph->add_edge(graph->alphabet().find(tokens[0]), graph->alphabet().find(tokens[1]));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!graph) throw std::invalid_argument("missing alphabet declaration");
  return std::move(*graph);
}

std::string CommGraph::serialize() const {
  std::string out = alphabet_.declaration() + "\n";
  for (auto [a, b] : edges()) out += alphabet_.symbol(a) + " " + alphabet_.symbol(b) + "\n";
  return out;
}

CommGraph CommGraph::complete(Alphabet alphabet) {
  CommGraph g(std::move(alphabet));
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) g.add_edge(letter(i), letter(j));
  }
  return g;
}

bool rhd(Letter a, Letter b, const CommGraph& g) { return a > b && g.adjacent(a, b); }

std::optional<ForbiddenFactor> find_forbidden_factor(const Word& u, const CommGraph& g) {
  std::optional<ForbiddenFactor> best;
  auto better = [&](std::size_t pos, std::size_t len) {
    if (!best) return true;
    if (len != best->length) return len < best->length;
    auto c = compare_lex(u.subword(pos, len), u.subword(best->position, best->length));
    return c < 0 || (c == 0 && pos < best->position);
  };
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      Letter y = u[j];
      if (!rhd(u[i], y, g)) continue;
      bool middle_ok = true;
      for (std::size_t k = i + 1; k < j && middle_ok; ++k) middle_ok = rhd(y, u[k], g);
      if (middle_ok && better(i, j - i + 1)) best = ForbiddenFactor{i, j - i + 1};
    }
  }
  return best;
}

std::vector<Rule> generate_relations(const CommGraph& g, std::size_t max_deg) {
  if (max_deg < 2) throw std::invalid_argument("generate_relations: max_deg must be at least 2");
  std::vector<Word> leading;
  for (std::size_t xi = 0; xi < g.size(); ++xi) {
    for (std::size_t yi = 0; yi < xi; ++yi) {
      Letter x = letter(xi);
      Letter y = letter(yi);
      if (!rhd(x, y, g)) continue;
      std::vector<Letter> middle;
      for (std::size_t wi = 0; wi < yi; ++wi) {
        if (rhd(y, letter(wi), g)) middle.push_back(letter(wi));
      }
      // Every u over `middle` with |u| <= max_deg - 2.
      std::function<void(Word&)> extend = [&](Word& u) {
        leading.push_back(Word{x} + u + Word{y});
        if (u.size() + 2 == max_deg) return;
        for (Letter w : middle) {
          u.push_back(w);
          extend(u);
          u = u.subword(0, u.size() - 1);
        }
      };
      Word u;
      extend(u);
    }
  }
  std::sort(leading.begin(), leading.end(), DegLexLess{});
  std::vector<Rule> out;
  out.reserve(leading.size());
  for (const Word& w : leading) out.push_back(Rule::nlsw(w));
  return out;
}

RuleFinder relation_finder(const CommGraph& g) {
  return [&g](const Word& u) -> std::optional<RuleMatch> {
    auto factor = find_forbidden_factor(u, g);
    if (!factor) return std::nullopt;
    auto rule = std::make_shared<const Rule>(Rule::nlsw(u.subword(factor->position, factor->length)));
    return RuleMatch{std::move(rule), std::nullopt, factor->position};
  };
}

GradedBasis irr_basis(const CommGraph& g, std::size_t max_deg) {
  if (max_deg == 0) throw std::invalid_argument("irr_basis: max_deg must be positive");
  GradedBasis basis;
  basis.max_deg = max_deg;
  basis.words.resize(max_deg);
  basis.trees.resize(max_deg);
  basis.dims.assign(max_deg, 0);
  for (Word& u : enumerate_alsw(g.size(), max_deg)) {
    if (find_forbidden_factor(u, g)) continue;
    std::size_t n = u.size();
    ++basis.dims[n - 1];
    ++basis.multidegree_dims[multidegree(u, g.size())];
    basis.trees[n - 1].push_back(bracket(u));
    basis.words[n - 1].push_back(std::move(u));
  }
  return basis;
}

std::vector<std::size_t> graded_dimensions(const CommGraph& g, std::size_t max_deg) {
  return irr_basis(g, max_deg).dims;
}

ReductionTrace pc_reduce(const LiePoly& p, const CommGraph& g) {
  return reduce(expand(p), relation_finder(g));
}

LiePoly pc_normal_form(const LiePoly& p, const CommGraph& g) { return pc_reduce(p, g).remainder; }

LiePoly pc_normal_form(const LieTree& t, const CommGraph& g) {
  return pc_normal_form(to_lie_poly(t), g);
}

namespace {

// Number of cliques of each size, the empty clique included.
std::vector<std::size_t> clique_counts(const CommGraph& g) {
  std::vector<std::size_t> counts(g.size() + 1, 0);
  std::vector<std::size_t> clique;
  std::function<void(std::size_t)> grow = [&](std::size_t next) {
    ++counts[clique.size()];
    for (std::size_t v = next; v < g.size(); ++v) {
      bool joins = std::all_of(clique.begin(), clique.end(),
                               [&](std::size_t c) { return g.adjacent(letter(c), letter(v)); });
      if (!joins) continue;
      clique.push_back(v);
      grow(v + 1);
      clique.pop_back();
    }
  };
  grow(0);
  return counts;
}

int mobius(std::size_t n) {
  int mu = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

}  // namespace

std::vector<mpz_class> clique_hilbert_series(const CommGraph& g, std::size_t max_deg) {
  std::vector<std::size_t> counts = clique_counts(g);
  auto clique_coeff = [&](std::size_t k) -> mpz_class {
    if (k >= counts.size()) return 0;
    mpz_class c = static_cast<unsigned long>(counts[k]);
    return k % 2 == 0 ? c : mpz_class(-c);
  };
  std::vector<mpz_class> h(max_deg + 1, 0);
  h[0] = 1;
  for (std::size_t n = 1; n <= max_deg; ++n) {
    for (std::size_t k = 1; k <= n; ++k) h[n] -= clique_coeff(k) * h[n - k];
  }
  return h;
}

std::vector<std::size_t> clique_series_dims(const CommGraph& g, std::size_t max_deg) {
  if (max_deg == 0) throw std::invalid_argument("clique_series_dims: max_deg must be positive");
  std::vector<mpz_class> h = clique_hilbert_series(g, max_deg);
  std::vector<std::size_t> counts = clique_counts(g);
  // b_m = m [t^m] log H = [t^m] (-t C'(t) H(t))
  std::vector<mpz_class> b(max_deg + 1, 0);
  for (std::size_t m = 1; m <= max_deg; ++m) {
    for (std::size_t k = 1; k <= m && k < counts.size(); ++k) {
      mpz_class kc = static_cast<unsigned long>(k * counts[k]);
      if (k % 2 == 1) kc = -kc;
      b[m] -= kc * h[m - k];
    }
  }
  std::vector<std::size_t> dims(max_deg, 0);
  for (std::size_t n = 1; n <= max_deg; ++n) {
    mpz_class sum = 0;
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d == 0) sum += mobius(n / d) * b[d];
    }
    if (sum % static_cast<unsigned long>(n) != 0) {
      throw std::logic_error("clique_series_dims: non-integer dimension in degree " +
                             std::to_string(n));
    }
    mpz_class d = sum / static_cast<unsigned long>(n);
    if (sgn(d) < 0 || !d.fits_ulong_p()) {
      throw std::logic_error("clique_series_dims: dimension out of range in degree " +
                             std::to_string(n));
    }
    dims[n - 1] = d.get_ui();
  }
  return dims;
}

}  // namespace pclie
