#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cygro/alphabet.hpp"
#include "cygro/automaton.hpp"

namespace cygro {

/// A deterministic, total finite automaton over a shared alphabet.
/// States are numbered so that BFS from the initial state in letter order
/// discovers them in increasing order (canonical numbering; enforced by
/// renumber_canonical, which every constructor here applies).
struct Dfa {
  std::uint32_t num_states = 0;
  std::uint32_t initial = 0;
  std::size_t degree = 0;
  std::vector<std::uint32_t> delta;  // state * degree + letter
  std::vector<bool> accepting;

  std::uint32_t next(std::uint32_t s, Letter x) const { return delta[std::size_t(s) * degree + x]; }
  bool accepts(const Word& w) const;
};

/// One-state machine accepting everything (identity for intersection).
Dfa all_words_dfa(std::size_t degree);

/// View of an fftp automaton with the given accept set as a plain DFA.
Dfa to_dfa(const FftpAutomaton& aut, const std::vector<StateId>& accept);

/// Product automaton on the reachable part; accepts iff both accept.
/// Alphabet sizes must agree.
Dfa intersect(const Dfa& a, const Dfa& b);

/// Language-preserving minimization (Moore partition refinement on the
/// reachable part), canonical numbering.
Dfa minimize(const Dfa& d);

/// States both reachable and co-reachable (can still reach an accepting
/// state). For a minimized geodesic acceptor this is the number of cone
/// types reachable from the basepoint.
std::uint32_t live_state_count(const Dfa& d);

/// Number of accepted words per length 0..n_max (64-bit DP).
std::vector<std::uint64_t> count_accepted_by_length(const Dfa& d, std::uint32_t n_max);

bool isomorphic(const Dfa& a, const Dfa& b);

/// Text format: `states N initial I`, `accept i1 i2 ...`, then one line
/// `state letter state` per transition, states in canonical order.
void write_dfa(std::ostream& os, const Dfa& d, const Alphabet& alphabet);
Dfa read_dfa(std::istream& is, const Alphabet& alphabet);

/// Canonicalizes state numbering by BFS in letter order; unreachable states
/// are dropped (the result is total iff every letter stays within reach,
/// which holds for total inputs).
Dfa renumber_canonical(const Dfa& d);

struct TransversalStats {
  std::uint64_t competitor_escapes = 0;  // word-differences that left the ft ball
  std::uint32_t states = 0;
};

/// Acceptor of the shortlex-least representative word of each left coset wH,
/// built from the coset-geodesic acceptor by tracking lexicographically
/// smaller same-length competitor words as (automaton state, word-difference)
/// pairs inside the ft_const-ball. Competitors whose difference escapes that
/// ball are pruned: under the verified fellow-traveling hypothesis a genuine
/// competitor never escapes; escape counts are reported so callers can see
/// when the pruning was exercised (results stay subject to the oracle
/// cross-checks downstream).
Dfa shortlex_transversal_acceptor(const FftpAutomaton& aut, const Ball& ball,
                                  const SubgroupOracle& subgroup, std::uint32_t ft_const,
                                  TransversalStats* stats = nullptr);

}  // namespace cygro
