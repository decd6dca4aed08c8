#include "pclie/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pclie/expr.hpp"
#include "pclie/gsb.hpp"
#include "pclie/pc_lie.hpp"

namespace pclie::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string dims_line(const std::vector<std::size_t>& dims) {
  std::vector<std::string> parts;
  for (std::size_t n = 0; n < dims.size(); ++n) {
    parts.push_back(std::to_string(n + 1) + ":" + std::to_string(dims[n]));
  }
  return join(parts, " ");
}

const char* kind_name(AmbiguityKind kind) {
  return kind == AmbiguityKind::inclusion ? "inclusion" : "intersection";
}

struct Options {
  std::string format = "text";
  std::string alphabet;
  std::string word;
  std::string theta;
  std::string rules;
  std::string expr;
  std::size_t max_deg = 0;
  bool dims_only = false;
  bool cross_check = false;
};

bool json_output(const Options& o) { return o.format == "json"; }

int cmd_alsw(const Options& o, std::ostream& out) {
  Alphabet alphabet = Alphabet::parse(o.alphabet);
  std::vector<Word> words = enumerate_alsw(alphabet, o.max_deg);
  if (json_output(o)) {
    json j{{"alphabet", alphabet.declaration()}, {"max_deg", o.max_deg}, {"words", json::array()}};
    for (const Word& w : words) j["words"].push_back(render(alphabet, w));
    out << j.dump(2) << "\n";
    return success;
  }
  for (const Word& w : words) out << render(alphabet, w) << "\n";
  return success;
}

int cmd_factorize(const Options& o, std::ostream& out) {
  Alphabet alphabet = Alphabet::parse(o.alphabet);
  Word u = parse_word(alphabet, o.word);
  if (u.empty()) throw UsageError("empty word");
  std::vector<std::string> factors;
  for (const Word& f : lyndon_factorize(u)) factors.push_back(render(alphabet, f));
  if (json_output(o)) {
    out << json{{"word", render(alphabet, u)}, {"factors", factors}}.dump(2) << "\n";
  } else {
    out << join(factors, " | ") << "\n";
  }
  return success;
}

int cmd_bracket(const Options& o, std::ostream& out) {
  Alphabet alphabet = Alphabet::parse(o.alphabet);
  Word u = parse_word(alphabet, o.word);
  if (u.empty()) throw UsageError("empty word");
  if (!is_alsw(u)) throw UsageError("'" + render(alphabet, u) + "' is not an ALSW");
  std::string tree = render(alphabet, bracket(u));
  if (json_output(o)) {
    out << json{{"word", render(alphabet, u)}, {"bracket", tree}}.dump(2) << "\n";
  } else {
    out << tree << "\n";
  }
  return success;
}

int cmd_nf(const Options& o, std::ostream& out) {
  CommGraph g = CommGraph::parse(read_file(o.theta));
  LiePoly p = parse_lie_poly(o.expr, g.alphabet());
  ReductionTrace trace = pc_reduce(p, g);
  std::string nf = render(g.alphabet(), trace.remainder);
  if (json_output(o)) {
    out << json{{"input", render(g.alphabet(), p)},
                {"normal_form", nf},
                {"steps", trace.steps.size()}}
               .dump(2)
        << "\n";
  } else {
    out << nf << "\n";
  }
  return success;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::optional<Alphabet> alphabet;
  std::vector<Rule> rules;
  if (!o.theta.empty()) {
    CommGraph g = CommGraph::parse(read_file(o.theta));
    alphabet = g.alphabet();
    rules = generate_relations(g, std::max<std::size_t>(o.max_deg, 2));
  } else {
    RuleSet set = parse_rules(read_file(o.rules));
    alphabet = set.alphabet;
    rules = std::move(set.rules);
  }
  GsbReport report = is_gsb(rules, o.max_deg);
  if (json_output(o)) {
    json j{{"ok", report.ok},
           {"bounded", true},
           {"max_deg", report.max_deg},
           {"rules", rules.size()},
           {"ambiguities", report.ambiguities_checked},
           {"failures", json::array()}};
    for (const GsbFailure& f : report.failures) {
      j["failures"].push_back({{"kind", kind_name(f.ambiguity.kind)},
                               {"w", render(*alphabet, f.ambiguity.w)},
                               {"left", render(*alphabet, f.ambiguity.left.body())},
                               {"right", render(*alphabet, f.ambiguity.right.body())},
                               {"remainder", render(*alphabet, f.remainder)}});
    }
    out << j.dump(2) << "\n";
  } else {
    out << (report.ok ? "ok" : "FAIL") << "\n";
    for (const GsbFailure& f : report.failures) {
      out << kind_name(f.ambiguity.kind) << " w=" << render(*alphabet, f.ambiguity.w)
          << " f=" << render(*alphabet, f.ambiguity.left.body())
          << " g=" << render(*alphabet, f.ambiguity.right.body())
          << " remainder=" << render(*alphabet, f.remainder) << "\n";
    }
    out << "bounded check: " << report.ambiguities_checked << " ambiguities, " << rules.size()
        << " rules, |w| <= " << report.max_deg << "\n";
  }
  return report.ok ? success : math_failure;
}

int cmd_basis(const Options& o, std::ostream& out) {
  CommGraph g = CommGraph::parse(read_file(o.theta));
  GradedBasis basis = irr_basis(g, o.max_deg);
  std::optional<std::vector<std::size_t>> oracle;
  if (o.cross_check) oracle = clique_series_dims(g, o.max_deg);
  bool agree = !oracle || *oracle == basis.dims;

  if (json_output(o)) {
    json j{{"max_deg", o.max_deg}, {"dims", basis.dims}};
    if (!o.dims_only) {
      json degrees = json::array();
      for (const auto& words : basis.words) {
        json row = json::array();
        for (const Word& w : words) row.push_back("[" + render(g.alphabet(), w) + "]");
        degrees.push_back(row);
      }
      j["basis"] = degrees;
    }
    if (oracle) j["cross_check"] = {{"ok", agree}, {"clique_series_dims", *oracle}};
    out << j.dump(2) << "\n";
  } else {
    if (!o.dims_only) {
      for (std::size_t n = 0; n < basis.words.size(); ++n) {
        out << n + 1 << ":";
        for (const Word& w : basis.words[n]) out << " [" << render(g.alphabet(), w) << "]";
        out << "\n";
      }
    }
    out << dims_line(basis.dims) << "\n";
    if (oracle) {
      out << "cross-check: " << (agree ? "ok" : "MISMATCH clique series gives " + dims_line(*oracle))
          << "\n";
    }
  }
  return agree ? success : math_failure;
}

int cmd_complete(const Options& o, std::ostream& out) {
  RuleSet set = parse_rules(read_file(o.rules));
  std::size_t before = set.rules.size();
  std::vector<Rule> completed = complete(set.rules, o.max_deg);
  if (json_output(o)) {
    json j{{"alphabet", set.alphabet.declaration()},
           {"max_deg", o.max_deg},
           {"added", completed.size() - before},
           {"rules", json::array()}};
    for (const Rule& r : completed) j["rules"].push_back(render(set.alphabet, r.body()));
    out << j.dump(2) << "\n";
  } else {
    // Output is itself a rules file.
    out << set.alphabet.declaration() << "\n";
    out << "# " << completed.size() - before << " rules added, closed for |w| <= " << o.max_deg
        << "\n";
    for (const Rule& r : completed) out << render(set.alphabet, r.body()) << "\n";
  }
  return success;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lyndon-Shirshov words, Gröbner-Shirshov bases and partially commutative Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto positive = CLI::Range(std::size_t{1}, std::size_t{64});

  auto* alsw = app.add_subcommand("alsw", "List ALSWs up to a degree in deg-lex order");
  alsw->add_option("--alphabet", o.alphabet, "Alphabet, e.g. \"x > y > z\"")->required();
  alsw->add_option("--max-deg", o.max_deg)->required()->check(positive);

  auto* factorize = app.add_subcommand("factorize", "Non-decreasing ALSW factorization of a word");
  factorize->add_option("--alphabet", o.alphabet)->required();
  factorize->add_option("word", o.word)->required();

  auto* bracket_cmd = app.add_subcommand("bracket", "NLSW bracketing of an ALSW");
  bracket_cmd->add_option("--alphabet", o.alphabet)->required();
  bracket_cmd->add_option("word", o.word)->required();

  auto* nf = app.add_subcommand(
      "nf", "Normal form modulo partial commutation. Rules are applied to the leftmost "
            "occurrence of the smallest matching relation.");
  nf->add_option("--theta", o.theta, "Commutation graph file")->required()->check(CLI::ExistingFile);
  nf->add_option("--expr", o.expr, "Lie expression, e.g. \"3/2*(x y) - ((x y) z)\"")->required();

  auto* verify = app.add_subcommand("verify", "Check every composition up to a degree (bounded check)");
  auto* theta_opt = verify->add_option("--theta", o.theta, "Check the partial commutation relations")
                        ->check(CLI::ExistingFile);
  auto* rules_opt =
      verify->add_option("--rules", o.rules, "Check a rules file")->check(CLI::ExistingFile);
  theta_opt->excludes(rules_opt);
  verify->add_option("--max-deg", o.max_deg)->required()->check(positive);

  auto* basis = app.add_subcommand("basis", "Normal-form basis of the partially commutative Lie algebra");
  basis->add_option("--theta", o.theta)->required()->check(CLI::ExistingFile);
  basis->add_option("--max-deg", o.max_deg)->required()->check(positive);
  basis->add_flag("--dims-only", o.dims_only, "Only print graded dimensions");
  basis->add_flag("--cross-check", o.cross_check, "Compare against the clique-series dimensions");

  auto* complete_cmd = app.add_subcommand("complete", "Bounded completion of a rules file");
  complete_cmd->add_option("--rules", o.rules)->required()->check(CLI::ExistingFile);
  complete_cmd->add_option("--max-deg", o.max_deg)->required()->check(positive);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? success : usage_error;
  }
  if (verify->parsed() && o.theta.empty() == o.rules.empty()) {
    err << "error: verify needs exactly one of --theta or --rules\n";
    return usage_error;
  }

  try {
    if (alsw->parsed()) return cmd_alsw(o, out);
    if (factorize->parsed()) return cmd_factorize(o, out);
    if (bracket_cmd->parsed()) return cmd_bracket(o, out);
    if (nf->parsed()) return cmd_nf(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (basis->parsed()) return cmd_basis(o, out);
    if (complete_cmd->parsed()) return cmd_complete(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }
  return usage_error;
}

}  // namespace pclie::cli
