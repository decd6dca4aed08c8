#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "pclie/words.hpp"

namespace pclie {

using Rational = mpq_class;

bool is_integer(const Rational& q);
std::string to_string(const Rational& q);

struct AssocTag {
  static constexpr bool alsw_keys = false;
};
struct LieTag {
  static constexpr bool alsw_keys = true;
};

/// Sparse polynomial: a finite map from words to nonzero rationals, kept in
/// deg-lex order so the last entry is the leading word.
///
/// AssocPoly lives in the free associative algebra. LiePoly stores
/// coordinates in the NLSW basis, keyed by the underlying ALSW.
template <class Tag>
class Polynomial {
 public:
  using Terms = std::map<Word, Rational, DegLexLess>;

  Polynomial() = default;

  static Polynomial monomial(const Word& w, const Rational& c = 1) {
    Polynomial p;
    p.add_term(w, c);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Rational coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Word& w, const Rational& c) {
    if constexpr (Tag::alsw_keys) {
      if (!is_alsw(w)) throw std::invalid_argument("LiePoly key is not an ALSW");
    }
    accumulate(w, c);
  }

  /// Deg-lex maximal term. Throws std::domain_error on the zero polynomial.
  std::pair<const Word&, const Rational&> leading() const {
    if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
    const auto& [w, c] = *terms_.rbegin();
    return {w, c};
  }

  std::size_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

  bool is_integral() const {
    for (const auto& [w, c] : terms_) {
      if (!is_integer(c)) return false;
    }
    return true;
  }

  /// this += c * other
  void add_scaled(const Polynomial& other, const Rational& c) {
    if (sgn(c) == 0) return;
    for (const auto& [w, d] : other.terms_) accumulate(w, c * d);
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    for (const auto& [w, c] : rhs.terms_) accumulate(w, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& rhs) {
    for (const auto& [w, c] : rhs.terms_) accumulate(w, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& c) {
    if (sgn(c) == 0) {
      terms_.clear();
    } else {
      Rational k = c;
      k.canonicalize();
      for (auto& [w, d] : terms_) d *= k;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }

  bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }

 private:
  // GMP only keeps results reduced when the operands are.
  void accumulate(const Word& w, Rational c) {
    if (sgn(c) == 0) return;
    c.canonicalize();
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

using AssocPoly = Polynomial<AssocTag>;
using LiePoly = Polynomial<LieTag>;

/// Concatenation product in the free associative algebra.
AssocPoly operator*(const AssocPoly& p, const AssocPoly& q);

/// pq - qp
AssocPoly commutator(const AssocPoly& p, const AssocPoly& q);

/// Signed monomial sum, e.g. "xyy - 2 yxy + yyx"; "0" for zero.
std::string render(const Alphabet& alphabet, const AssocPoly& p);

/// Signed sum of bracketed ALSWs, e.g. "[xyz] + [xzy]"; "0" for zero.
std::string render(const Alphabet& alphabet, const LiePoly& p);

}  // namespace pclie
