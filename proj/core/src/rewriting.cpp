#include "cygro/rewriting.hpp"

#include <algorithm>
#include <deque>

#include "cygro/errors.hpp"

namespace cygro {

RewritingSystem::RewritingSystem(Alphabet alphabet, std::vector<Rule> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
  by_last_.resize(alphabet_.size());
  for (std::uint32_t i = 0; i < rules_.size(); ++i) {
    const Rule& r = rules_[i];
    alphabet_.validate(r.lhs);
    alphabet_.validate(r.rhs);
    if (r.lhs.empty()) throw InputError("rule with empty lhs");
    if (shortlex_compare(alphabet_, r.rhs, r.lhs) != Ordering::less)
      throw InputError("non-reducing rule: '" + alphabet_.format_word(r.lhs) + " -> " +
                       alphabet_.format_word(r.rhs) + "' (rhs must be shortlex-smaller)");
    by_last_[r.lhs.back()].push_back(i);
    max_lhs_ = std::max(max_lhs_, r.lhs.size());
  }
}

std::optional<std::uint32_t> RewritingSystem::match_suffix(const Word& stack) const {
  if (stack.empty()) return std::nullopt;
  for (std::uint32_t i : by_last_[stack.back()]) {
    const Word& l = rules_[i].lhs;
    if (l.size() > stack.size()) continue;
    if (std::equal(l.begin(), l.end(), stack.end() - l.size())) return i;
  }
  return std::nullopt;
}

bool RewritingSystem::is_irreducible(const Word& w) const {
  Word prefix;
  prefix.reserve(w.size());
  for (Letter x : w) {
    prefix.push_back(x);
    if (match_suffix(prefix)) return false;
  }
  return true;
}

Word RewritingSystem::normalize(const Word& w) const {
  alphabet_.validate(w);
  Word stack;
  stack.reserve(w.size());
  std::deque<Letter> pending(w.begin(), w.end());
  while (!pending.empty()) {
    stack.push_back(pending.front());
    pending.pop_front();
    if (auto hit = match_suffix(stack)) {
      const Rule& r = rules_[*hit];
      stack.resize(stack.size() - r.lhs.size());
      // replay the rhs through the scanner so earlier redexes are seen
      pending.insert(pending.begin(), r.rhs.begin(), r.rhs.end());
    }
  }
  return stack;
}

namespace {

// Normal forms of the two one-step reducts of an overlap word.
CriticalPair resolve_overlap(const RewritingSystem& rs, const Word& word, const Rule& a,
                             std::size_t pos_a, const Rule& b, std::size_t pos_b) {
  auto apply_at = [&](const Rule& r, std::size_t pos) {
    Word out(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(pos));
    out.insert(out.end(), r.rhs.begin(), r.rhs.end());
    out.insert(out.end(), word.begin() + static_cast<std::ptrdiff_t>(pos + r.lhs.size()),
               word.end());
    return rs.normalize(out);
  };
  return CriticalPair{word, apply_at(a, pos_a), apply_at(b, pos_b)};
}

}  // namespace

ConfluenceReport check_confluence(const RewritingSystem& rs) {
  ConfluenceReport report;
  const auto& rules = rs.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& li = rules[i].lhs;
      const Word& lj = rules[j].lhs;
      // lj occurring as a factor of li (proper containment, or i != j at offset 0)
      if (lj.size() < li.size() || (i != j && lj.size() == li.size())) {
        for (std::size_t pos = 0; pos + lj.size() <= li.size(); ++pos) {
          if (!std::equal(lj.begin(), lj.end(), li.begin() + static_cast<std::ptrdiff_t>(pos)))
            continue;
          ++report.pairs_checked;
          CriticalPair cp = resolve_overlap(rs, li, rules[i], 0, rules[j], pos);
          if (cp.nf_left != cp.nf_right) {
            report.confluent = false;
            report.counterexample = cp;
            return report;
          }
        }
      }
      // proper suffix of li equal to a proper prefix of lj
      for (std::size_t k = 1; k < std::min(li.size(), lj.size()); ++k) {
        if (!std::equal(li.end() - static_cast<std::ptrdiff_t>(k), li.end(), lj.begin())) continue;
        Word word = li;
        word.insert(word.end(), lj.begin() + static_cast<std::ptrdiff_t>(k), lj.end());
        ++report.pairs_checked;
        CriticalPair cp = resolve_overlap(rs, word, rules[i], 0, rules[j], li.size() - k);
        if (cp.nf_left != cp.nf_right) {
          report.confluent = false;
          report.counterexample = cp;
          return report;
        }
      }
    }
  }
  return report;
}

namespace {

// Drop rules whose lhs is reducible by the others; renormalize every rhs.
// Returns re-oriented, deduplicated rules.
std::vector<Rule> interreduce(const Alphabet& alphabet, std::vector<Rule> rules) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      std::vector<Rule> others;
      others.reserve(rules.size() - 1);
      for (std::size_t j = 0; j < rules.size(); ++j)
        if (j != i) others.push_back(rules[j]);
      RewritingSystem sub(alphabet, others);
      Word l = sub.normalize(rules[i].lhs);
      Word r = sub.normalize(rules[i].rhs);
      if (l == rules[i].lhs && r == rules[i].rhs) continue;
      changed = true;
      rules.erase(rules.begin() + static_cast<std::ptrdiff_t>(i));
      if (l != r) {
        if (shortlex_less(alphabet, l, r)) std::swap(l, r);
        rules.push_back(Rule{std::move(l), std::move(r)});
      }
      break;
    }
  }
  std::sort(rules.begin(), rules.end(), [&](const Rule& a, const Rule& b) {
    if (a.lhs != b.lhs) return shortlex_less(alphabet, a.lhs, b.lhs);
    return shortlex_less(alphabet, a.rhs, b.rhs);
  });
  rules.erase(std::unique(rules.begin(), rules.end(),
                          [](const Rule& a, const Rule& b) {
                            return a.lhs == b.lhs && a.rhs == b.rhs;
                          }),
              rules.end());
  return rules;
}

}  // namespace

CompletionResult complete(const RewritingSystem& rs, std::size_t max_rules, std::size_t max_len) {
  std::vector<Rule> rules = rs.rules();
  const Alphabet& alphabet = rs.alphabet();
  const std::size_t max_iterations = 64 * (max_rules + 1);
  for (std::size_t iter = 0; iter < max_iterations; ++iter) {
    RewritingSystem current(alphabet, rules);
    ConfluenceReport rep = check_confluence(current);
    if (rep.confluent) return current;

    const CriticalPair& cp = *rep.counterexample;
    Word l = cp.nf_left, r = cp.nf_right;
    if (shortlex_less(alphabet, l, r)) std::swap(l, r);
    if (l.size() > max_len)
      return Incomplete{current, "rule lhs length " + std::to_string(l.size()) +
                                     " exceeds max_len " + std::to_string(max_len)};
    if (rules.size() + 1 > max_rules)
      return Incomplete{current, "rule count would exceed max_rules " + std::to_string(max_rules)};
    rules.push_back(Rule{std::move(l), std::move(r)});
    rules = interreduce(alphabet, std::move(rules));
  }
  return Incomplete{RewritingSystem(alphabet, rules), "iteration budget exhausted"};
}

}  // namespace cygro
