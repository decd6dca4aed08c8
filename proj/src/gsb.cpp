#include "pclie/gsb.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace pclie {

namespace {

bool ambiguity_less(const Ambiguity& x, const Ambiguity& y) {
  auto c = compare_deglex(x.w, y.w);
  if (c != 0) return c < 0;
  return std::tuple(x.left_index, x.right_index, x.kind, x.a.size()) <
         std::tuple(y.left_index, y.right_index, y.kind, y.a.size());
}

}  // namespace

std::vector<Ambiguity> find_ambiguities(std::span<const Rule> rules, std::size_t max_deg) {
  std::vector<Ambiguity> out;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Word& f = rules[i].leading();
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& g = rules[j].leading();

      if (i != j && f.size() <= max_deg) {
        for (std::size_t p = f.find(g); p != Word::npos; p = f.find(g, p + 1)) {
          out.push_back({AmbiguityKind::inclusion, i, j, rules[i], rules[j], f, f.subword(0, p),
                         f.subword(p + g.size())});
        }
      }

      const std::size_t longest = std::min(f.size(), g.size());
      for (std::size_t overlap = 1; overlap < longest; ++overlap) {
        std::size_t length = f.size() + g.size() - overlap;
        if (length > max_deg) continue;
        if (f.subword(f.size() - overlap) != g.subword(0, overlap)) continue;
        Word b = g.subword(overlap);
        Word w = f + b;
        if (!is_alsw(w)) {
          throw std::logic_error("find_ambiguities: overlap of two ALSWs is not an ALSW");
        }
        Word a = w.subword(0, w.size() - g.size());
        out.push_back({AmbiguityKind::intersection, i, j, rules[i], rules[j], std::move(w),
                       std::move(a), std::move(b)});
      }
    }
  }
  std::sort(out.begin(), out.end(), ambiguity_less);
  return out;
}

AssocPoly composition_expanded(const Ambiguity& amb) {
  if (amb.kind == AmbiguityKind::inclusion) {
    if (amb.a + amb.right.leading() + amb.b != amb.left.leading() || amb.w != amb.left.leading()) {
      throw std::invalid_argument("composition: malformed inclusion ambiguity");
    }
    AssocPoly out = amb.left.expanded();
    out -= normal_s_word_expanded(amb.a, amb.right, amb.b);
    return out;
  }
  if (amb.a.empty() || amb.b.empty() || amb.left.leading() + amb.b != amb.w ||
      amb.a + amb.right.leading() != amb.w) {
    throw std::invalid_argument("composition: malformed intersection ambiguity");
  }
  AssocPoly out = normal_s_word_expanded(Word{}, amb.left, amb.b);
  out -= normal_s_word_expanded(amb.a, amb.right, Word{});
  return out;
}

LiePoly composition(const Ambiguity& amb) { return nlsw_decompose(composition_expanded(amb)); }

RuleFinder list_finder(std::span<const Rule> rules) {
  return [rules](const Word& u) -> std::optional<RuleMatch> {
    for (std::size_t i = 0; i < rules.size(); ++i) {
      std::size_t pos = u.find(rules[i].leading());
      if (pos != Word::npos) {
        // Non-owning: the caller keeps the rule list alive for the reduction.
        return RuleMatch{std::shared_ptr<const Rule>(std::shared_ptr<const Rule>(), &rules[i]), i,
                         pos};
      }
    }
    return std::nullopt;
  };
}

ReductionTrace reduce(const AssocPoly& h, const RuleFinder& finder, const std::optional<Word>& bound) {
  ReductionTrace trace;
  AssocPoly rest = h;
  while (!rest.is_zero()) {
    auto [lead, lead_coeff] = rest.leading();
    Word u = lead;
    Rational c = lead_coeff;
    if (u.empty() || !is_alsw(u)) throw NotLieElement("reduce: input is not a Lie element");

    std::optional<RuleMatch> match = finder(u);
    if (!match) {
      trace.remainder.add_term(u, c);
      rest.add_scaled(expand_nlsw(u), -c);
      continue;
    }
    if (bound && compare_deglex(u, *bound) >= 0) {
      throw std::invalid_argument("reduce: step word is not below the bound");
    }
    const Rule& s = *match->rule;
    Word a = u.subword(0, match->position);
    Word b = u.subword(match->position + s.leading().size());
    rest.add_scaled(normal_s_word_expanded(a, s, b), -c);
    trace.steps.push_back({match->rule, match->rule_index, std::move(a), std::move(b), c});
  }
  return trace;
}

ReductionTrace reduce(const LiePoly& h, std::span<const Rule> rules, const std::optional<Word>& bound) {
  return reduce(expand(h), list_finder(rules), bound);
}

GsbReport is_gsb(std::span<const Rule> rules, std::size_t max_deg) {
  GsbReport report;
  report.max_deg = max_deg;
  RuleFinder finder = list_finder(rules);
  for (Ambiguity& amb : find_ambiguities(rules, max_deg)) {
    ++report.ambiguities_checked;
    ReductionTrace trace = reduce(composition_expanded(amb), finder, amb.w);
    if (!trace.remainder.is_zero()) {
      report.ok = false;
      report.failures.push_back({std::move(amb), std::move(trace.remainder)});
    }
  }
  return report;
}

std::vector<Rule> complete(std::vector<Rule> rules, std::size_t max_deg) {
  while (true) {
    GsbReport report = is_gsb(rules, max_deg);
    if (report.ok) return rules;
    for (const GsbFailure& failure : report.failures) {
      LiePoly r = reduce(failure.remainder, rules).remainder;
      if (!r.is_zero()) rules.push_back(Rule::normalized(r));
    }
  }
}

}  // namespace pclie
