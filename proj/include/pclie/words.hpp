#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pclie {

// A generator, identified by its rank in the alphabet (0 is the smallest).
enum class Letter : std::uint8_t {};

constexpr std::size_t rank(Letter x) { return static_cast<std::size_t>(x); }
constexpr Letter letter(std::size_t rank) { return static_cast<Letter>(rank); }

/// A finite, totally ordered generator set.
///
/// Symbols are stored in ascending order. The textual declaration lists them
/// in descending order, e.g. "x > y > z".
class Alphabet {
 public:
  static constexpr std::size_t max_size = 256;

  explicit Alphabet(std::vector<std::string> ascending);

  /// Parses "x > y > z". Throws std::invalid_argument on empty, duplicate
  /// or malformed symbols.
  static Alphabet parse(std::string_view declaration);

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbol(Letter x) const;
  const std::vector<std::string>& symbols() const { return symbols_; }

  /// Throws std::invalid_argument for unknown symbols.
  Letter find(std::string_view symbol) const;
  bool contains(std::string_view symbol) const;
  bool contains(Letter x) const { return rank(x) < size(); }

  /// True when every symbol is one character, so words can be juxtaposed.
  bool compact() const { return compact_; }

  std::string declaration() const;

  bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, Letter> index_;
  bool compact_ = true;
};

/// A finite sequence of letters. The empty word is representable but is
/// rejected by every Lyndon-Shirshov operation.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  explicit Word(std::span<const Letter> letters) : letters_(letters.begin(), letters.end()) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  std::span<const Letter> letters() const { return letters_; }

  Word subword(std::size_t pos, std::size_t count = std::size_t(-1)) const;
  void push_back(Letter x) { letters_.push_back(x); }
  Word& operator+=(const Word& rhs);
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  /// Position of the leftmost occurrence of `factor` at or after `from`,
  /// or npos.
  std::size_t find(const Word& factor, std::size_t from = 0) const;
  bool contains(const Word& factor) const { return find(factor) != npos; }

  bool operator==(const Word&) const = default;

  static constexpr std::size_t npos = std::size_t(-1);

 private:
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Lexicographic order induced by the letter order. A proper prefix is
/// greater than its extensions.
std::strong_ordering compare_lex(const Word& u, const Word& v);

/// Shorter words are smaller; equal lengths fall back to compare_lex.
std::strong_ordering compare_deglex(const Word& u, const Word& v);

/// Checked variants: throw std::invalid_argument if a letter lies outside
/// the alphabet.
std::strong_ordering compare_lex(const Alphabet& alphabet, const Word& u, const Word& v);
std::strong_ordering compare_deglex(const Alphabet& alphabet, const Word& u, const Word& v);

struct DegLexLess {
  bool operator()(const Word& u, const Word& v) const { return compare_deglex(u, v) < 0; }
};

/// u is an ALSW iff vw > wv (lex) for every split u = vw into nonempty parts.
/// Throws std::invalid_argument on the empty word.
bool is_alsw(const Word& u);

/// Unique factorization u = u1 u2 ... uk into ALSWs with u1 <= ... <= uk.
std::vector<Word> lyndon_factorize(const Word& u);

struct StandardSplit {
  Word left;
  Word right;
};

/// Splits an ALSW of length >= 2 at its longest proper ALSW suffix.
StandardSplit standard_split(const Word& u);

/// All ALSWs of length 1..max_deg over the alphabet, sorted by deg-lex.
std::vector<Word> enumerate_alsw(const Alphabet& alphabet, std::size_t max_deg);
std::vector<Word> enumerate_alsw(std::size_t alphabet_size, std::size_t max_deg);

/// Distinct letters of u, ascending.
std::vector<Letter> supp(const Word& u);

/// Number of occurrences of x in u.
std::size_t partial_degree(const Word& u, Letter x);

/// Occurrence counts indexed by letter rank.
std::vector<std::size_t> multidegree(const Word& u, std::size_t alphabet_size);

/// Letters juxtaposed when the alphabet is compact, space separated
/// otherwise.
std::string render(const Alphabet& alphabet, const Word& u);

/// Greedy longest-match tokenization; whitespace between symbols is
/// optional. Throws std::invalid_argument on unknown symbols.
Word parse_word(const Alphabet& alphabet, std::string_view text);

}  // namespace pclie
