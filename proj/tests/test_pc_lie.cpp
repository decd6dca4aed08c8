#include <doctest.h>

#include <random>

#include "identities.hpp"
#include "oracles.hpp"
#include "pclie/expr.hpp"
#include "pclie/pc_lie.hpp"

using namespace pclie;

namespace {

const Alphabet xy = Alphabet::parse("x > y");
const Alphabet xyz = Alphabet::parse("x > y > z");

Word W(const Alphabet& a, std::string_view s) { return parse_word(a, s); }
LiePoly B(const Alphabet& a, std::string_view s) { return LiePoly::monomial(W(a, s)); }

CommGraph graph(const Alphabet& a, std::initializer_list<std::pair<const char*, const char*>> edges) {
  CommGraph g(a);
  for (auto [l, r] : edges) g.add_edge(a.find(l), a.find(r));
  return g;
}

std::vector<std::string> leading_words(const Alphabet& a, const std::vector<Rule>& rules) {
  std::vector<std::string> out;
  for (const Rule& r : rules) out.push_back(render(a, r.leading()));
  return out;
}

// The defining ideal is generated by the commutators of the edges.
std::vector<Rule> edge_commutators(const CommGraph& g) {
  std::vector<Rule> out;
  for (auto [a, b] : g.edges()) out.push_back(Rule::nlsw(Word{a, b}));
  return out;
}

}  // namespace

TEST_CASE("rhd") {
  CommGraph g = graph(xy, {{"x", "y"}});
  CHECK(rhd(xy.find("x"), xy.find("y"), g));
  CHECK_FALSE(rhd(xy.find("y"), xy.find("x"), g));
  CHECK_FALSE(rhd(xy.find("x"), xy.find("y"), CommGraph(xy)));
  CHECK_THROWS_AS(rhd(letter(7), xy.find("y"), g), std::invalid_argument);
}

TEST_CASE("CommGraph") {
  CommGraph g = CommGraph::parse("x > y > z\n# star\nx y\n\nz x  # trailing\n");
  CHECK(g.adjacent(xyz.find("y"), xyz.find("x")));
  CHECK(g.adjacent(xyz.find("x"), xyz.find("z")));
  CHECK_FALSE(g.adjacent(xyz.find("y"), xyz.find("z")));
  CHECK(g.edges().size() == 2);
  CHECK(CommGraph::parse(g.serialize()).edges() == g.edges());
  CHECK_THROWS_AS(g.add_edge(xyz.find("x"), xyz.find("x")), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(xyz.find("x"), letter(3)), std::invalid_argument);
  CHECK_THROWS_AS(CommGraph::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(CommGraph::parse("x > y\nx w\n"), std::invalid_argument);
  CHECK_THROWS_AS(CommGraph::parse("x > y\nx\n"), std::invalid_argument);
  CHECK_THROWS_AS(CommGraph::parse("x > y\nx y y\n"), std::invalid_argument);
  CHECK_THROWS_AS(CommGraph::parse("x > y\nx x\n"), std::invalid_argument);
}

TEST_CASE("generate_relations") {
  CHECK(leading_words(xy, generate_relations(CommGraph::complete(xy), 5)) ==
        std::vector<std::string>{"xy"});
  CHECK(leading_words(xyz, generate_relations(CommGraph::complete(xyz), 3)) ==
        std::vector<std::string>{"yz", "xz", "xy", "xzy"});
  CHECK(generate_relations(CommGraph(xyz), 6).empty());
  CHECK_THROWS_AS(generate_relations(CommGraph(xyz), 1), std::invalid_argument);
  for (const Rule& r : generate_relations(CommGraph::complete(xyz), 6)) {
    CHECK(r.body() == LiePoly::monomial(r.leading()));
  }
}

TEST_CASE("generated relations match the defining pattern") {
  for (const CommGraph& g : oracle::all_graphs(4)) {
    std::vector<Word> words;
    for (std::size_t n = 2; n <= 5; ++n) {
      for (const Word& w : oracle::all_words(4, n)) {
        bool ok = rhd(w.front(), w.back(), g);
        for (std::size_t i = 1; ok && i + 1 < w.size(); ++i) ok = rhd(w.back(), w[i], g);
        if (ok) words.push_back(w);
      }
    }
    std::sort(words.begin(), words.end(), DegLexLess{});
    std::vector<Word> got;
    for (const Rule& r : generate_relations(g, 5)) got.push_back(r.leading());
    REQUIRE(got == words);
  }
}

TEST_CASE("irr_basis examples") {
  CHECK(irr_basis(CommGraph::complete(xy), 5).dims == std::vector<std::size_t>{2, 0, 0, 0, 0});
  GradedBasis star = irr_basis(graph(xyz, {{"x", "y"}, {"x", "z"}}), 3);
  CHECK(star.dims == std::vector<std::size_t>{3, 1, 2});
  CHECK(render(xyz, star.words[1][0]) == "yz");
  CHECK(irr_basis(CommGraph(xy), 5).dims == std::vector<std::size_t>{2, 1, 2, 3, 6});
  for (const auto& level : star.trees) {
    for (const LieTree& t : level) CHECK(is_nlsw(t));
  }
  // multidegree tallies sum to the graded ones
  std::vector<std::size_t> by_degree(3, 0);
  for (const auto& [md, count] : star.multidegree_dims) {
    std::size_t n = 0;
    for (std::size_t d : md) n += d;
    by_degree[n - 1] += count;
  }
  CHECK(by_degree == star.dims);
  CHECK(star.multidegree_dims.at({2, 1, 0}) == 1);  // [yzz]
}

TEST_CASE("graded_dimensions") {
  CHECK(graded_dimensions(CommGraph::complete(xyz), 5) == std::vector<std::size_t>{3, 0, 0, 0, 0});
  CHECK(graded_dimensions(graph(xyz, {{"x", "y"}, {"x", "z"}}), 5) ==
        std::vector<std::size_t>{3, 1, 2, 3, 6});
  auto free3 = graded_dimensions(CommGraph(xyz), 6);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(free3[n - 1] == oracle::witt(3, n));
}

TEST_CASE("clique series") {
  CommGraph star = graph(xyz, {{"x", "y"}, {"x", "z"}});
  auto series = clique_hilbert_series(star, 3);
  CHECK(series == std::vector<mpz_class>{1, 3, 7, 15});
  CHECK(clique_series_dims(star, 5) == std::vector<std::size_t>{3, 1, 2, 3, 6});
  CHECK(clique_series_dims(CommGraph::complete(xy), 4) == std::vector<std::size_t>{2, 0, 0, 0});
  auto free = clique_series_dims(CommGraph(xyz), 8);
  for (std::size_t n = 1; n <= 8; ++n) CHECK(free[n - 1] == oracle::witt(3, n));
}

TEST_CASE("dimensions agree with the quotient by the edge commutators") {
  for (const CommGraph& g : oracle::all_graphs(3)) {
    auto dims = graded_dimensions(g, 5);
    for (std::size_t n = 1; n <= 5; ++n) {
      REQUIRE(dims[n - 1] + oracle::ideal_dimension(edge_commutators(g), 3, n) ==
              oracle::witt(3, n));
    }
  }
}

TEST_CASE("pc_normal_form examples") {
  auto nf = [](const CommGraph& g, std::string_view text) {
    return pc_normal_form(parse_lie_poly(text, g.alphabet()), g);
  };
  CHECK(nf(graph(xy, {{"x", "y"}}), "(x y)").is_zero());
  CHECK(nf(graph(xyz, {{"x", "z"}}), "((x y) z)") == B(xyz, "xyz"));
  CHECK(nf(graph(xyz, {{"x", "y"}, {"y", "z"}}), "((x z) y)").is_zero());
  CHECK(nf(CommGraph(xyz), "((x y) z)") == B(xyz, "xyz") + B(xyz, "xzy"));
  CommGraph g = graph(xyz, {{"x", "z"}});
  CHECK(pc_normal_form(bracket(W(xyz, "xzy")), g).is_zero());
}

TEST_CASE("relation_finder agrees with the materialized relations") {
  std::mt19937 rng(29);
  for (const CommGraph& g : oracle::all_graphs(3)) {
    std::vector<Rule> rules = generate_relations(g, 6);
    RuleFinder lazy = relation_finder(g);
    RuleFinder eager = list_finder(rules);
    for (const Word& u : enumerate_alsw(3, 6)) {
      auto a = lazy(u);
      auto b = eager(u);
      REQUIRE(a.has_value() == b.has_value());
      if (a) {
        REQUIRE(a->rule->leading() == b->rule->leading());
        REQUIRE(a->position == b->position);
      }
    }
    for (int trial = 0; trial < 5; ++trial) {
      LiePoly p = oracle::random_lie_poly(3, 6, rng, 4);
      REQUIRE(pc_reduce(p, g).remainder == reduce(p, std::span<const Rule>(rules)).remainder);
    }
  }
}

TEST_CASE("normal forms are supported on Irr words") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    CommGraph g = oracle::random_graph(3, rng);
    LiePoly p = oracle::random_lie_poly(3, 5, rng, 4);
    LiePoly nf = pc_normal_form(p, g);
    for (const auto& [w, c] : nf) REQUIRE_FALSE(find_forbidden_factor(w, g).has_value());
  }
}

TEST_CASE("normal forms are idempotent, linear and integral") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    CommGraph g = oracle::random_graph(3, rng);
    LiePoly p = oracle::random_lie_poly(3, 5, rng, 4);
    LiePoly q = oracle::random_lie_poly(3, 5, rng, 4);
    LiePoly np = pc_normal_form(p, g), nq = pc_normal_form(q, g);
    REQUIRE(pc_normal_form(np, g) == np);
    Rational a(-2, 5), b(7);
    REQUIRE(pc_normal_form(a * p + b * q, g) == a * np + b * nq);
    REQUIRE(np.is_integral());
  }
}

TEST_CASE("elements of the defining ideal normalize to zero") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    CommGraph g = oracle::random_graph(3, rng);
    auto gens = edge_commutators(g);
    if (gens.empty()) continue;
    LiePoly h;
    for (const Rule& s : gens) {
      LiePoly m = oracle::random_lie_poly(3, 3, rng, 2);
      h += lie_bracket(lie_bracket(s.body(), m), oracle::random_lie_poly(3, 1, rng, 2));
    }
    REQUIRE(pc_normal_form(h, g).is_zero());
  }
}

TEST_CASE("commutation relations are closed on three letters to degree 5") {
  for (const CommGraph& g : oracle::all_graphs(3)) {
    GsbReport report = is_gsb(generate_relations(g, 5), 5);
    REQUIRE(report.ok);
  }
}

TEST_CASE("single-factor bracket identity") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    auto in = identities::random_instance(6, 1, rng);
    auto [lhs, rhs] = identities::single_factor(in);
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("multi-factor bracket identity") {
  std::mt19937 rng(47);
  for (std::size_t n : {2u, 3u}) {
    for (int trial = 0; trial < 100; ++trial) {
      auto in = identities::random_instance(6, n, rng);
      auto [lhs, rhs] = identities::multi_factor(in);
      REQUIRE(lhs == rhs);
    }
  }
}
