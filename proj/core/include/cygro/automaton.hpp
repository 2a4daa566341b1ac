#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cygro/ball.hpp"
#include "cygro/subgroup.hpp"

namespace cygro {

using StateId = std::uint32_t;

/// An automaton state: the pattern of distance differences
/// u -> d(1, wu) - d(1, w) over the K-ball, for the paths w reaching it.
/// The fail state is represented separately (empty offsets).
struct TypeState {
  std::vector<std::int16_t> offsets;  // indexed by K-ball vertex id
  bool operator==(const TypeState&) const = default;
};

/// Shared tables for computing transitions: in-ball restricted distances at
/// radius K and the left-multiplication map x^-1 * u for K-ball vertices.
/// d^x(a, b) of the transition formula equals d_B(x^-1 a, b) by
/// left-translation invariance, so one table serves every letter.
class TransitionTables {
 public:
  TransitionTables(const Ball& ball, std::uint32_t K);

  const Ball& ball() const { return *ball_; }
  std::uint32_t K() const { return k_; }
  VertexId k_end() const { return k_end_; }
  const RestrictedDistanceTable& restricted() const { return dtab_; }
  /// Vertex of x^-1 * u within the K-ball, or kNoVertex.
  VertexId left_inverse_mul(Letter x, VertexId u) const {
    return linv_[std::size_t(x) * k_end_ + u];
  }
  /// Vertex reached by the single-letter word x.
  VertexId letter_vertex(Letter x) const { return letter_vertex_[x]; }

 private:
  const Ball* ball_;
  std::uint32_t k_;
  VertexId k_end_;
  RestrictedDistanceTable dtab_;
  std::vector<VertexId> linv_;
  std::vector<VertexId> letter_vertex_;
};

/// The state phi0 with phi0(u) = d(1, u).
TypeState initial_state(const Ball& ball, std::uint32_t K);

/// One transition step. Fail maps to Fail; phi(x) != 1 maps to Fail; otherwise
/// psi(b) = min over K-ball vertices a with x^-1 a in the K-ball of
/// phi(a) + d_B(x^-1 a, b) - 1, skipping disconnected d_B entries.
/// A value outside [-K, K] means K is too small for the fftp hypothesis at
/// this state and raises ParameterError.
TypeState transition(const TypeState& phi, Letter x, const TransitionTables& tables);

inline bool is_fail(const TypeState& s) { return s.offsets.empty(); }

/// Deterministic, total automaton over interned TypeStates. States are
/// numbered in discovery order under a shortlex worklist (letters scanned in
/// alphabet order), which makes every numbering in exports reproducible.
class FftpAutomaton {
 public:
  std::uint32_t K() const { return K_; }
  VertexId k_end() const { return k_end_; }
  StateId initial() const { return 0; }
  StateId fail_state() const { return fail_; }
  StateId num_states() const { return static_cast<StateId>(states_.size()); }
  std::size_t degree() const { return degree_; }
  const TypeState& state(StateId s) const { return states_[s]; }
  StateId next(StateId s, Letter x) const { return delta_[std::size_t(s) * degree_ + x]; }
  StateId run(const Word& w) const;
  /// K-ball vertex named by the one-letter word x.
  VertexId letter_vertex(Letter x) const { return letter_vertex_[x]; }

  const std::map<std::string, std::vector<StateId>>& accept_sets() const { return accept_; }
  const std::vector<StateId>& accept_set(const std::string& name) const;
  void set_accept_set(const std::string& name, std::vector<StateId> states);

  std::uint64_t validated_words = 0;   // eq-(3) build-time sample size
  std::uint32_t validated_length = 0;  // sample covered words up to this length

 private:
  friend FftpAutomaton build_automaton(const Ball&, std::uint32_t, std::uint32_t);
  std::uint32_t K_ = 0;
  VertexId k_end_ = 0;
  std::size_t degree_ = 0;
  StateId fail_ = 0;
  std::vector<TypeState> states_;
  std::vector<StateId> delta_;
  std::vector<VertexId> letter_vertex_;
  std::map<std::string, std::vector<StateId>> accept_;
};

/// Builds the automaton with parameter K by closing {initial} under
/// transitions, then validates state semantics (non-fail states carry exact
/// distance differences; non-geodesic words fail) on all words up to
/// `validate_len` (0 = choose from the ball margin). Requires
/// ball.radius >= 2K + 2 unless the ball is saturated.
FftpAutomaton build_automaton(const Ball& ball, std::uint32_t K, std::uint32_t validate_len = 0);

/// Exhaustive eq-(3) semantics check over all words of length <= max_len:
/// geodesic words reach non-fail states whose offsets equal BFS distance
/// differences; non-geodesic words reach Fail. Returns the number of words
/// checked; throws VerificationError on any mismatch.
std::uint64_t validate_state_semantics(const FftpAutomaton& aut, const Ball& ball,
                                       std::uint32_t max_len);

/// All non-fail states (accepts exactly the geodesic words).
std::vector<StateId> accept_geodesics(const FftpAutomaton& aut);

/// Non-fail states phi with phi(u) >= 0 for every K-ball member u of H:
/// accepts exactly the words w with |w| = d(1, wH) (coset geodesics).
std::vector<StateId> accept_coset(const FftpAutomaton& aut, const Ball& ball,
                                  const SubgroupOracle& subgroup);

}  // namespace cygro
