#include "cygro/alphabet.hpp"

#include <algorithm>
#include <sstream>

#include "cygro/errors.hpp"

namespace cygro {

Alphabet Alphabet::make(std::vector<std::string> symbols,
                        const std::vector<std::pair<std::string, std::string>>& inverses) {
  if (symbols.empty()) throw InputError("alphabet must have at least one letter");
  if (symbols.size() > 255) throw InputError("alphabet too large (max 255 letters)");

  Alphabet a;
  a.symbols_ = std::move(symbols);
  for (std::size_t i = 0; i < a.symbols_.size(); ++i) {
    if (a.symbols_[i].empty()) throw InputError("empty letter symbol");
    for (std::size_t j = i + 1; j < a.symbols_.size(); ++j)
      if (a.symbols_[i] == a.symbols_[j])
        throw InputError("duplicate letter '" + a.symbols_[i] + "' in alphabet");
    if (a.symbols_[i].size() > 1) a.all_single_char_ = false;
  }

  constexpr Letter kUnset = 255;
  a.inverse_.assign(a.symbols_.size(), kUnset);
  auto must_find = [&](const std::string& s) -> Letter {
    auto l = a.find(s);
    if (!l) throw InputError("inverse pairing mentions unknown letter '" + s + "'");
    return *l;
  };
  for (const auto& [x, y] : inverses) {
    Letter lx = must_find(x), ly = must_find(y);
    if ((a.inverse_[lx] != kUnset && a.inverse_[lx] != ly) ||
        (a.inverse_[ly] != kUnset && a.inverse_[ly] != lx))
      throw InputError("conflicting inverse pairing for '" + x + "'");
    a.inverse_[lx] = ly;
    a.inverse_[ly] = lx;
  }
  for (std::size_t i = 0; i < a.inverse_.size(); ++i)
    if (a.inverse_[i] == kUnset)
      throw InputError("letter '" + a.symbols_[i] + "' has no declared inverse");
  return a;
}

std::optional<Letter> Alphabet::find(std::string_view symbol) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i] == symbol) return static_cast<Letter>(i);
  return std::nullopt;
}

Word Alphabet::parse_word(std::string_view text) const {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) {
      auto l = find(text.substr(i, j - i));
      if (!l)
        throw InputError("unknown letter '" + std::string(text.substr(i, j - i)) + "'");
      w.push_back(*l);
    }
    i = j;
  }
  return w;
}

std::string Alphabet::format_word(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!all_single_char_ && i > 0) out += ' ';
    out += symbol(w[i]);
  }
  return out;
}

void Alphabet::validate(const Word& w) const {
  for (Letter l : w)
    if (l >= symbols_.size())
      throw InputError("word contains letter id " + std::to_string(l) +
                       " outside alphabet of size " + std::to_string(symbols_.size()));
}

Ordering shortlex_compare(const Alphabet& a, const Word& lhs, const Word& rhs) {
  a.validate(lhs);
  a.validate(rhs);
  if (lhs.size() != rhs.size()) return lhs.size() < rhs.size() ? Ordering::less : Ordering::greater;
  for (std::size_t i = 0; i < lhs.size(); ++i)
    if (lhs[i] != rhs[i]) return lhs[i] < rhs[i] ? Ordering::less : Ordering::greater;
  return Ordering::equal;
}

Word invert_word(const Alphabet& a, const Word& w) {
  a.validate(w);
  Word r(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) r[w.size() - 1 - i] = a.inverse(w[i]);
  return r;
}

}  // namespace cygro
