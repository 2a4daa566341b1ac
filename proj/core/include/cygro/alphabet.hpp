#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cygro {

/// A letter is an index into an Alphabet. Letter values double as shortlex
/// ranks: the alphabet interns symbols in the user-declared total order.
using Letter = std::uint8_t;

/// A word over an alphabet; empty vector = identity.
using Word = std::vector<Letter>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    // FNV-1a
    std::uint64_t h = 1469598103934665603ull;
    for (Letter l : w) {
      h ^= l;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Finite symmetric alphabet with involution x <-> x^-1 and a total order.
/// Symbols may be multi-character tokens; self-inverse letters are allowed.
class Alphabet {
 public:
  /// `symbols` lists the letters in shortlex order; `inverses` pairs symbols
  /// (a symbol absent from all pairs must be paired with itself explicitly).
  /// Throws InputError when the involution is not a self-inverse bijection.
  static Alphabet make(std::vector<std::string> symbols,
                       const std::vector<std::pair<std::string, std::string>>& inverses);

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbol(Letter l) const { return symbols_.at(l); }
  Letter inverse(Letter l) const { return inverse_.at(l); }
  std::optional<Letter> find(std::string_view symbol) const;

  /// Parses a whitespace-separated sequence of symbols; "" is the empty word.
  Word parse_word(std::string_view text) const;

  /// Inverse of parse_word. Single-character alphabets print compactly.
  std::string format_word(const Word& w) const;

  /// Throws InputError if a letter is out of range for this alphabet.
  void validate(const Word& w) const;

  bool operator==(const Alphabet& other) const = default;

 private:
  std::vector<std::string> symbols_;
  std::vector<Letter> inverse_;
  bool all_single_char_ = true;
};

enum class Ordering { less, equal, greater };

/// Shortlex: length first, then lexicographic by letter rank.
/// Both words must be over `a` (checked; mixed alphabets -> InputError).
Ordering shortlex_compare(const Alphabet& a, const Word& lhs, const Word& rhs);

inline bool shortlex_less(const Alphabet& a, const Word& lhs, const Word& rhs) {
  return shortlex_compare(a, lhs, rhs) == Ordering::less;
}

/// x_1...x_n -> x_n^-1 ... x_1^-1. An involution; preserves length.
Word invert_word(const Alphabet& a, const Word& w);

inline Word concat(const Word& u, const Word& v) {
  Word r = u;
  r.insert(r.end(), v.begin(), v.end());
  return r;
}

}  // namespace cygro
