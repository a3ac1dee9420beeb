#include "twistbaker/word.hpp"

#include <algorithm>

#include "twistbaker/errors.hpp"

namespace twistbaker {

char to_char(Symbol s) { return s == Symbol::L ? 'L' : 'R'; }

Word Word::parse(std::string_view text) {
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == 'L') {
      out.push_back(Symbol::L);
    } else if (c == 'R') {
      out.push_back(Symbol::R);
    } else {
      throw DomainError("word may only contain L and R: " + std::string(text));
    }
  }
  return Word(std::move(out));
}

Word Word::from_index(std::uint64_t index, std::size_t n) {
  std::vector<Symbol> out(n, Symbol::L);
  for (std::size_t k = 0; k < n; ++k) {
    if ((index >> (n - 1 - k)) & 1U) out[k] = Symbol::R;
  }
  return Word(std::move(out));
}

Word Word::repeat(Symbol s, std::size_t n) { return Word(std::vector<Symbol>(n, s)); }

Word Word::prefix(std::size_t n) const {
  n = std::min(n, symbols_.size());
  return Word(std::vector<Symbol>(symbols_.begin(), symbols_.begin() + n));
}

Word Word::suffix_from(std::size_t start) const {
  start = std::min(start, symbols_.size());
  return Word(std::vector<Symbol>(symbols_.begin() + start, symbols_.end()));
}

Word Word::concat(const Word& other) const {
  std::vector<Symbol> out = symbols_;
  out.insert(out.end(), other.symbols_.begin(), other.symbols_.end());
  return Word(std::move(out));
}

std::size_t Word::count_r() const {
  return static_cast<std::size_t>(std::count(symbols_.begin(), symbols_.end(), Symbol::R));
}

std::string Word::str() const {
  std::string s;
  s.reserve(symbols_.size());
  for (Symbol c : symbols_) s.push_back(to_char(c));
  return s;
}

std::vector<Word> all_words(std::size_t n) {
  std::vector<Word> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) out.push_back(Word::from_index(i, n));
  return out;
}

}  // namespace twistbaker
