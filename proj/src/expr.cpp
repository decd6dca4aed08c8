#include "pclie/expr.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace pclie {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  ExprAst parse() {
    ExprAst ast;
    skip_space();
    if (at_end()) fail("empty expression");
    if (peek() == '0' && is_lone_zero()) {
      pos_ = text_.size();
      return ast;
    }
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      ExprTerm term = parse_term();
      if (negative) term.coefficient = -term.coefficient;
      ast.terms.push_back(std::move(term));
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
    return ast;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool is_lone_zero() const {
    std::size_t i = pos_ + 1;
    while (i < text_.size() && std::isspace(static_cast<unsigned char>(text_[i]))) ++i;
    return i == text_.size();
  }

  std::optional<std::string> digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) return std::nullopt;
    return std::string(text_.substr(start, pos_ - start));
  }

  ExprTerm parse_term() {
    skip_space();
    Rational coefficient = 1;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      coefficient = mpz_class(*digits());
      skip_space();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_space();
        auto den = digits();
        if (!den) fail("malformed rational: missing denominator");
        mpz_class d(*den);
        if (d == 0) throw ParseError("malformed rational: zero denominator", start);
        coefficient /= d;
        skip_space();
      }
      if (!at_end() && peek() == '*') ++pos_;
    }
    return {coefficient, parse_factor()};
  }

  Letter parse_symbol() {
    std::size_t best = 0;
    for (std::size_t len = 1; pos_ + len <= text_.size(); ++len) {
      char c = text_[pos_ + len - 1];
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') break;
      if (alphabet_.contains(text_.substr(pos_, len))) best = len;
    }
    if (best == 0) fail("unknown symbol");
    Letter x = alphabet_.find(text_.substr(pos_, best));
    pos_ += best;
    return x;
  }

  LieTree parse_factor() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    if (peek() == '(') {
      ++pos_;
      LieTree left = parse_factor();
      LieTree right = parse_factor();
      skip_space();
      if (at_end()) fail("unbalanced parentheses: expected ')' before end of input");
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return LieTree::pair(std::move(left), std::move(right));
    }
    if (peek() == '[') {
      std::size_t open = pos_++;
      Word w;
      while (true) {
        skip_space();
        if (at_end()) fail("unbalanced brackets: expected ']' before end of input");
        if (peek() == ']') break;
        w.push_back(parse_symbol());
      }
      ++pos_;
      if (w.empty() || !is_alsw(w)) throw ParseError("bracketed word is not an ALSW", open);
      return bracket(w);
    }
    if (peek() == ')') fail("unbalanced parentheses: unexpected ')'");
    return LieTree::leaf(parse_symbol());
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

LiePoly ExprAst::evaluate() const {
  AssocPoly sum;
  for (const auto& [c, tree] : terms) sum.add_scaled(expand(tree), c);
  return nlsw_decompose(sum);
}

ExprAst parse_expr(std::string_view text, const Alphabet& alphabet) {
  return Parser(text, alphabet).parse();
}

LiePoly parse_lie_poly(std::string_view text, const Alphabet& alphabet) {
  return parse_expr(text, alphabet).evaluate();
}

RuleSet parse_rules(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<Alphabet> alphabet;
  std::vector<Rule> rules;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      if (!alphabet) {
        alphabet = Alphabet::parse(line);
        continue;
      }
      LiePoly body = parse_lie_poly(line, *alphabet);
      if (body.is_zero()) throw std::invalid_argument("rule is zero");
      rules.push_back(Rule::normalized(body));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!alphabet) throw std::invalid_argument("missing alphabet declaration");
  return {std::move(*alphabet), std::move(rules)};
}

}  // namespace pclie
