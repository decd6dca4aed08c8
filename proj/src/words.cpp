#include "pclie/words.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace pclie {

namespace {

bool is_symbol_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_symbol_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void check_letters(const Alphabet& alphabet, const Word& u) {
  for (Letter x : u) {
    if (!alphabet.contains(x)) {
      throw std::invalid_argument("word contains letter rank " + std::to_string(rank(x)) +
                                  " outside an alphabet of size " +
                                  std::to_string(alphabet.size()));
    }
  }
}

void require_nonempty(const Word& u, const char* what) {
  if (u.empty()) throw std::invalid_argument(std::string(what) + ": empty word");
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> ascending) : symbols_(std::move(ascending)) {
  if (symbols_.empty()) throw std::invalid_argument("alphabet must be nonempty");
  if (symbols_.size() > max_size) throw std::invalid_argument("alphabet too large");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const std::string& s = symbols_[i];
    if (s.empty() || !is_symbol_start(s.front()) ||
        !std::all_of(s.begin(), s.end(), is_symbol_char)) {
      throw std::invalid_argument("invalid symbol '" + s + "'");
    }
    if (!index_.emplace(s, letter(i)).second) {
      throw std::invalid_argument("duplicate symbol '" + s + "'");
    }
    if (s.size() != 1) compact_ = false;
  }
}

Alphabet Alphabet::parse(std::string_view declaration) {
  std::vector<std::string> descending;
  std::size_t start = 0;
  while (true) {
    std::size_t gt = declaration.find('>', start);
    std::string_view part = trim(declaration.substr(start, gt == std::string_view::npos
                                                               ? std::string_view::npos
                                                               : gt - start));
    if (part.empty()) throw std::invalid_argument("malformed alphabet declaration");
    descending.emplace_back(part);
    if (gt == std::string_view::npos) break;
    start = gt + 1;
  }
  std::reverse(descending.begin(), descending.end());
  return Alphabet(std::move(descending));
}

const std::string& Alphabet::symbol(Letter x) const {
  if (!contains(x)) throw std::invalid_argument("letter outside alphabet");
  return symbols_[rank(x)];
}

Letter Alphabet::find(std::string_view symbol) const {
  auto it = index_.find(std::string(symbol));
  if (it == index_.end()) throw std::invalid_argument("unknown symbol '" + std::string(symbol) + "'");
  return it->second;
}

bool Alphabet::contains(std::string_view symbol) const {
  return index_.count(std::string(symbol)) != 0;
}

std::string Alphabet::declaration() const {
  std::string out;
  for (auto it = symbols_.rbegin(); it != symbols_.rend(); ++it) {
    if (!out.empty()) out += " > ";
    out += *it;
  }
  return out;
}

Word Word::subword(std::size_t pos, std::size_t count) const {
  if (pos > size()) throw std::out_of_range("subword position");
  count = std::min(count, size() - pos);
  return Word(std::span<const Letter>(letters_).subspan(pos, count));
}

Word& Word::operator+=(const Word& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

std::size_t Word::find(const Word& factor, std::size_t from) const {
  if (factor.size() > size()) return npos;
  auto it = std::search(letters_.begin() + static_cast<std::ptrdiff_t>(std::min(from, size())),
                        letters_.end(), factor.letters_.begin(), factor.letters_.end());
  if (it == letters_.end() && !factor.empty()) return npos;
  return static_cast<std::size_t>(it - letters_.begin());
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Letter x : w) {
    h ^= rank(x) + 1;
    h *= 0x100000001b3ull;
  }
  return h ^ w.size();
}

std::strong_ordering compare_lex(const Word& u, const Word& v) {
  std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] != v[i]) return u[i] <=> v[i];
  }
  // prefix is greater
  return v.size() <=> u.size();
}

std::strong_ordering compare_deglex(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() <=> v.size();
  return compare_lex(u, v);
}

std::strong_ordering compare_lex(const Alphabet& alphabet, const Word& u, const Word& v) {
  check_letters(alphabet, u);
  check_letters(alphabet, v);
  return compare_lex(u, v);
}

std::strong_ordering compare_deglex(const Alphabet& alphabet, const Word& u, const Word& v) {
  check_letters(alphabet, u);
  check_letters(alphabet, v);
  return compare_deglex(u, v);
}

bool is_alsw(const Word& u) {
  require_nonempty(u, "is_alsw");
  const std::size_t n = u.size();
  // u = vw with |v| = k; compare u against the rotation wv letter by letter.
  for (std::size_t k = 1; k < n; ++k) {
    bool greater = false;  // stays false for a periodic word
    for (std::size_t i = 0; i < n; ++i) {
      Letter r = u[(i + k) % n];
      if (u[i] != r) {
        greater = u[i] > r;
        break;
      }
    }
    if (!greater) return false;
  }
  return true;
}

std::vector<Word> lyndon_factorize(const Word& u) {
  require_nonempty(u, "lyndon_factorize");
  // Duval's algorithm with the letter comparison reversed. Our order on
  // words mirrors the classical one, so the factors come out non-decreasing.
  std::vector<Word> factors;
  const std::size_t n = u.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    std::size_t k = i;
    while (j < n && u[k] >= u[j]) {
      if (u[k] > u[j]) {
        k = i;
      } else {
        ++k;
      }
      ++j;
    }
    while (i <= k) {
      factors.push_back(u.subword(i, j - k));
      i += j - k;
    }
  }
  return factors;
}

StandardSplit standard_split(const Word& u) {
  if (u.size() < 2) throw std::invalid_argument("standard_split: word has no proper end");
  if (!is_alsw(u)) throw std::invalid_argument("standard_split: word is not an ALSW");
  for (std::size_t i = 1; i < u.size(); ++i) {
    Word right = u.subword(i);
    if (is_alsw(right)) return {u.subword(0, i), std::move(right)};
  }
  // The last letter is always an ALSW.
  throw std::logic_error("standard_split: unreachable");
}

std::vector<Word> enumerate_alsw(std::size_t alphabet_size, std::size_t max_deg) {
  if (max_deg == 0) throw std::invalid_argument("enumerate_alsw: max_deg must be positive");
  if (alphabet_size == 0) return {};
  // Duval's generator over classical ranks r = size-1-rank(letter).
  std::vector<Word> out;
  const int top = static_cast<int>(alphabet_size) - 1;
  std::vector<int> w{-1};
  while (!w.empty()) {
    ++w.back();
    Word word;
    for (int r : w) word.push_back(letter(static_cast<std::size_t>(top - r)));
    out.push_back(std::move(word));
    const std::size_t m = w.size();
    while (w.size() < max_deg) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == top) w.pop_back();
  }
  std::sort(out.begin(), out.end(), DegLexLess{});
  return out;
}

std::vector<Word> enumerate_alsw(const Alphabet& alphabet, std::size_t max_deg) {
  return enumerate_alsw(alphabet.size(), max_deg);
}

std::vector<Letter> supp(const Word& u) {
  std::vector<Letter> out(u.begin(), u.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t partial_degree(const Word& u, Letter x) {
  return static_cast<std::size_t>(std::count(u.begin(), u.end(), x));
}

std::vector<std::size_t> multidegree(const Word& u, std::size_t alphabet_size) {
  std::vector<std::size_t> out(alphabet_size, 0);
  for (Letter x : u) {
    if (rank(x) >= alphabet_size) throw std::invalid_argument("multidegree: letter outside alphabet");
    ++out[rank(x)];
  }
  return out;
}

std::string render(const Alphabet& alphabet, const Word& u) {
  std::string out;
  for (Letter x : u) {
    if (!alphabet.compact() && !out.empty()) out += ' ';
    out += alphabet.symbol(x);
  }
  return out;
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t best = 0;
    for (std::size_t len = 1; i + len <= text.size() && is_symbol_char(text[i + len - 1]); ++len) {
      if (alphabet.contains(text.substr(i, len))) best = len;
    }
    if (best == 0) {
      throw std::invalid_argument("unknown symbol at position " + std::to_string(i) + " in '" +
                                  std::string(text) + "'");
    }
    out.push_back(alphabet.find(text.substr(i, best)));
    i += best;
  }
  return out;
}

}  // namespace pclie
