#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace twistbaker {

// Which half of the phase space a point lies in. L < R is the canonical order.
enum class Symbol : std::uint8_t { L = 0, R = 1 };

char to_char(Symbol s);

// A finite itinerary over {L, R}.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

  // Parses "LRRL"; throws DomainError on any other character.
  static Word parse(std::string_view text);
  // The word of length n whose k-th symbol is bit (n-1-k) of index, so that
  // index order is lexicographic order with L < R.
  static Word from_index(std::uint64_t index, std::size_t n);
  static Word repeat(Symbol s, std::size_t n);

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<Symbol>& symbols() const { return symbols_; }

  auto begin() const { return symbols_.begin(); }
  auto end() const { return symbols_.end(); }

  void push_back(Symbol s) { symbols_.push_back(s); }
  Word prefix(std::size_t n) const;
  Word suffix_from(std::size_t start) const;
  Word concat(const Word& other) const;

  // Number of R symbols.
  std::size_t count_r() const;
  bool all_l() const { return count_r() == 0; }

  std::string str() const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Symbol> symbols_;
};

// All 2^n words of length n in lexicographic order.
std::vector<Word> all_words(std::size_t n);

}  // namespace twistbaker
