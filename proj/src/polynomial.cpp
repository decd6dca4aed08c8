#include "pclie/polynomial.hpp"

#include <functional>

namespace pclie {

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Rational& q) { return q.get_str(); }

AssocPoly operator*(const AssocPoly& p, const AssocPoly& q) {
  AssocPoly out;
  for (const auto& [u, a] : p) {
    for (const auto& [v, b] : q) out.add_term(u + v, a * b);
  }
  return out;
}

AssocPoly commutator(const AssocPoly& p, const AssocPoly& q) {
  AssocPoly out;
  for (const auto& [u, a] : p) {
    for (const auto& [v, b] : q) {
      Rational c = a * b;
      out.add_term(u + v, c);
      out.add_term(v + u, -c);
    }
  }
  return out;
}

namespace {

// Highest term first, matching how leading words are read.
template <class Poly>
std::string render_sum(const Poly& p, const std::function<std::string(const Word&)>& show) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [w, c] = *it;
    Rational magnitude = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (magnitude != 1) out += to_string(magnitude) + " ";
    out += show(w);
    first = false;
  }
  return out;
}

}  // namespace

std::string render(const Alphabet& alphabet, const AssocPoly& p) {
  return render_sum(p, [&](const Word& w) { return w.empty() ? std::string("1") : render(alphabet, w); });
}

std::string render(const Alphabet& alphabet, const LiePoly& p) {
  return render_sum(p, [&](const Word& w) { return "[" + render(alphabet, w) + "]"; });
}

}  // namespace pclie
