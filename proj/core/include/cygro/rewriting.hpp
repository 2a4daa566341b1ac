#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cygro/alphabet.hpp"

namespace cygro {

struct Rule {
  Word lhs;
  Word rhs;
};

/// A string rewriting system whose rules are strictly shortlex-reducing.
/// On a confluent system, normalize() yields the shortlex-least word of each
/// congruence class, so normal-form length equals graph distance from the
/// identity in the Cayley graph the system presents.
class RewritingSystem {
 public:
  RewritingSystem(Alphabet alphabet, std::vector<Rule> rules);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Rule>& rules() const { return rules_; }

  bool is_irreducible(const Word& w) const;

  /// Leftmost-innermost exhaustive rewriting. Terminates because every rule
  /// strictly decreases the word in shortlex order.
  Word normalize(const Word& w) const;

  /// normalize(inverse of each generator), used when multiplying on the left.
  Word normalize_product(const Word& u, const Word& v) const { return normalize(concat(u, v)); }

 private:
  Alphabet alphabet_;
  std::vector<Rule> rules_;
  // rule indices grouped by the final letter of the lhs (suffix matching)
  std::vector<std::vector<std::uint32_t>> by_last_;
  std::size_t max_lhs_ = 0;

  std::optional<std::uint32_t> match_suffix(const Word& stack) const;
};

struct CriticalPair {
  Word superposition;  // the overlap word
  Word nf_left;        // normal form after rewriting one way
  Word nf_right;       // ... the other way
};

struct ConfluenceReport {
  bool confluent = true;
  std::optional<CriticalPair> counterexample;
  std::uint64_t pairs_checked = 0;
};

/// Tests all critical pairs (factor and suffix/prefix overlaps of two lhs's)
/// for joinability. A failing report carries the offending word and its two
/// distinct normal forms; replaying them through normalize() reproduces the
/// divergence.
ConfluenceReport check_confluence(const RewritingSystem& rs);

struct Incomplete {
  RewritingSystem partial;
  std::string reason;
};

using CompletionResult = std::variant<RewritingSystem, Incomplete>;

/// Bounded Knuth-Bendix completion with shortlex as the reduction order.
/// Orients each unresolved critical pair, interreduces, and repeats until
/// confluent or a budget (total rules, lhs length) is exceeded.
CompletionResult complete(const RewritingSystem& rs, std::size_t max_rules, std::size_t max_len);

}  // namespace cygro
