#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pclie/cli.hpp"
#include "pclie/expr.hpp"
#include "pclie/gsb.hpp"
#include "pclie/pc_lie.hpp"

namespace py = pybind11;
using namespace pclie;

namespace {

// Everything crosses the boundary as text: alphabet declarations, words,
// graph files, rules files and Lie expressions.

std::vector<std::string> render_all(const Alphabet& a, const std::vector<Word>& words) {
  std::vector<std::string> out;
  for (const Word& w : words) out.push_back(render(a, w));
  return out;
}

Word nonempty_word(const Alphabet& a, const std::string& text) {
  Word w = parse_word(a, text);
  if (w.empty()) throw std::invalid_argument("empty word");
  return w;
}

py::dict report_dict(const Alphabet& a, const GsbReport& r, std::size_t rules) {
  py::list failures;
  for (const GsbFailure& f : r.failures) {
    py::dict d;
    d["kind"] = f.ambiguity.kind == AmbiguityKind::inclusion ? "inclusion" : "intersection";
    d["w"] = render(a, f.ambiguity.w);
    d["left"] = render(a, f.ambiguity.left.body());
    d["right"] = render(a, f.ambiguity.right.body());
    d["remainder"] = render(a, f.remainder);
    failures.append(d);
  }
  py::dict d;
  d["ok"] = r.ok;
  d["max_deg"] = r.max_deg;
  d["rules"] = rules;
  d["ambiguities"] = r.ambiguities_checked;
  d["failures"] = failures;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lyndon-Shirshov words and partially commutative Lie algebras";

  m.def("alsw", [](const std::string& alphabet, std::size_t max_deg) {
    Alphabet a = Alphabet::parse(alphabet);
    return render_all(a, enumerate_alsw(a, max_deg));
  }, py::arg("alphabet"), py::arg("max_deg"), "ALSWs up to max_deg in deg-lex order.");

  m.def("is_alsw", [](const std::string& alphabet, const std::string& word) {
    Alphabet a = Alphabet::parse(alphabet);
    return is_alsw(nonempty_word(a, word));
  }, py::arg("alphabet"), py::arg("word"));

  m.def("factorize", [](const std::string& alphabet, const std::string& word) {
    Alphabet a = Alphabet::parse(alphabet);
    return render_all(a, lyndon_factorize(nonempty_word(a, word)));
  }, py::arg("alphabet"), py::arg("word"), "Non-decreasing ALSW factorization.");

  m.def("bracket", [](const std::string& alphabet, const std::string& word) {
    Alphabet a = Alphabet::parse(alphabet);
    return render(a, bracket(nonempty_word(a, word)));
  }, py::arg("alphabet"), py::arg("word"), "NLSW bracketing of an ALSW.");

  m.def("expand", [](const std::string& alphabet, const std::string& expr) {
    Alphabet a = Alphabet::parse(alphabet);
    return render(a, expand(parse_lie_poly(expr, a)));
  }, py::arg("alphabet"), py::arg("expr"), "Associative expansion of a Lie expression.");

  m.def("lie_poly", [](const std::string& alphabet, const std::string& expr) {
    Alphabet a = Alphabet::parse(alphabet);
    return render(a, parse_lie_poly(expr, a));
  }, py::arg("alphabet"), py::arg("expr"), "A Lie expression in NLSW coordinates.");

  m.def("normal_form", [](const std::string& theta, const std::string& expr) {
    CommGraph g = CommGraph::parse(theta);
    return render(g.alphabet(), pc_normal_form(parse_lie_poly(expr, g.alphabet()), g));
  }, py::arg("theta"), py::arg("expr"),
        "Normal form of a Lie expression modulo the commutation graph (file text).");

  m.def("relations", [](const std::string& theta, std::size_t max_deg) {
    CommGraph g = CommGraph::parse(theta);
    std::vector<std::string> out;
    for (const Rule& r : generate_relations(g, max_deg)) out.push_back(render(g.alphabet(), r.body()));
    return out;
  }, py::arg("theta"), py::arg("max_deg"));

  m.def("verify_theta", [](const std::string& theta, std::size_t max_deg) {
    CommGraph g = CommGraph::parse(theta);
    auto rules = generate_relations(g, std::max<std::size_t>(max_deg, 2));
    return report_dict(g.alphabet(), is_gsb(rules, max_deg), rules.size());
  }, py::arg("theta"), py::arg("max_deg"), "Bounded GSB check of the commutation relations.");

  m.def("verify_rules", [](const std::string& rules, std::size_t max_deg) {
    RuleSet set = parse_rules(rules);
    return report_dict(set.alphabet, is_gsb(set.rules, max_deg), set.rules.size());
  }, py::arg("rules"), py::arg("max_deg"), "Bounded GSB check of a rules file (text).");

  m.def("complete", [](const std::string& rules, std::size_t max_deg) {
    RuleSet set = parse_rules(rules);
    std::vector<std::string> out;
    for (const Rule& r : complete(set.rules, max_deg)) out.push_back(render(set.alphabet, r.body()));
    return out;
  }, py::arg("rules"), py::arg("max_deg"));

  m.def("irr_basis", [](const std::string& theta, std::size_t max_deg) {
    CommGraph g = CommGraph::parse(theta);
    std::vector<std::vector<std::string>> out;
    for (const auto& level : irr_basis(g, max_deg).words) out.push_back(render_all(g.alphabet(), level));
    return out;
  }, py::arg("theta"), py::arg("max_deg"), "Irr words per degree, ascending deg-lex.");

  m.def("graded_dimensions", [](const std::string& theta, std::size_t max_deg) {
    return graded_dimensions(CommGraph::parse(theta), max_deg);
  }, py::arg("theta"), py::arg("max_deg"));

  m.def("clique_series_dims", [](const std::string& theta, std::size_t max_deg) {
    return clique_series_dims(CommGraph::parse(theta), max_deg);
  }, py::arg("theta"), py::arg("max_deg"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run a command-line subcommand; returns (exit code, stdout, stderr).");
}
