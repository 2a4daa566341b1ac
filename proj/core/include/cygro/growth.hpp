#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cygro/automaton.hpp"
#include "cygro/ball.hpp"
#include "cygro/series.hpp"
#include "cygro/subgroup.hpp"

namespace cygro {

/// Number of letters x with phi(x) = -1: the number of geodesic in-edges of
/// any vertex reached in this state. Fail is not a valid input.
std::uint32_t parent_count(const FftpAutomaton& aut, StateId s);

/// Transition matrices over the non-fail states. The count matrix M holds
/// transition multiplicities; the weighted matrix A divides each column by
/// the parent count of its target, making total geodesic weight into vertex
/// counts (the Markov combing). Entries are kept sparse as edge lists.
struct TransitionMatrices {
  std::uint32_t n = 0;  // non-fail states
  std::uint32_t initial = 0;
  std::vector<StateId> idx_to_state;
  std::vector<std::uint32_t> state_to_idx;  // UINT32_MAX for fail
  struct Edge {
    std::uint32_t from, to, count;
    Rational weight;  // count / parents(to)
  };
  std::vector<Edge> edges;
  std::vector<std::uint32_t> parents;

  /// s(n) = weight . A^n . e_initial for n = 0..count-1.
  std::vector<Rational> weighted_terms(std::span<const Rational> weight, std::size_t count) const;
  /// Same with the integer count matrix and all-ones weight: geodesic counts.
  std::vector<Integer> count_terms(std::size_t count) const;
  /// Occupancy vectors x_n = A^n e_initial for n = 0..count-1.
  std::vector<std::vector<Rational>> occupancy(std::size_t count) const;
};

TransitionMatrices build_matrices(const FftpAutomaton& aut);

struct CombingReport {
  bool ok = false;
  std::uint64_t vertices_checked = 0;
  std::uint64_t geodesics_checked = 0;
  std::optional<Word> worst_vertex;
  Rational worst_sum;
};

/// Enumerates every geodesic word to every vertex of the R-ball and checks
/// that the products of 1/parent_count along the automaton path sum to
/// exactly 1 per vertex (Markov random geodesic combing), in rational
/// arithmetic.
CombingReport validate_combing(const FftpAutomaton& aut, const Ball& ball, std::uint32_t R);

enum class SeriesKind { sphere, ball };

/// v^T (Id - At)^-1 u as an exact rational function, recovered from
/// 2*states+2 terms by minimal linear recurrence and verified against
/// `oracle_prefix` coefficient by coefficient (hard error on mismatch).
/// kind == ball divides by (1 - t).
RationalSeries weighted_series(const TransitionMatrices& m, std::span<const Rational> weight,
                               SeriesKind kind, std::span<const Integer> oracle_prefix);

/// Sphere or ball growth series with weight 1 on every non-fail state.
RationalSeries sphere_or_ball_series(const TransitionMatrices& m, SeriesKind kind,
                                     std::span<const Integer> oracle_prefix);

struct GeodesicSeries {
  RationalSeries exact_length;  // geodesic words of length exactly n
  RationalSeries cumulative;    // length <= n
};

GeodesicSeries geodesic_series(const TransitionMatrices& m, std::span<const Integer> oracle_prefix);

struct CosetSeries {
  RationalSeries sphere;  // cosets at distance exactly n (Schreier spheres)
  RationalSeries ball;    // distance <= n
  std::vector<std::uint32_t> weight_denominators;  // D(phi) per accept state index
};

/// Schreier coset growth: weight 1/D(phi) on the coset accept set, where
/// D(phi) counts the K-ball members of H at offset 0 (the closest points of
/// the coset; C is 0/1 for subgroups since vH is the only translate through
/// v). Bounded projections with constant <= K are the caller's obligation.
CosetSeries coset_growth_series(const FftpAutomaton& aut, const Ball& ball,
                                const SubgroupOracle& subgroup, const TransitionMatrices& m,
                                std::span<const Integer> oracle_prefix);

/// Embedding growth of a finite subgraph Z: |O| * e(n) counts vertices v with
/// d(v) + c(phi_v) <= n where c(phi) = max over z in Z of phi(z); assembled
/// exactly from per-state occupancy and divided by the orbit size (checked to
/// stay integral). Z must contain the identity and have diameter <= K.
RationalSeries embedding_series(const FftpAutomaton& aut, const FiniteSubgraph& z,
                                const TransitionMatrices& m,
                                std::span<const Integer> oracle_prefix);

struct RateResult {
  Rational lower, upper;  // exact bracket of the rate, width <= 1e-9 or exact
  double approx = 1.0;
  bool exact = false;
};

/// Growth rate 1/r with r the smallest positive real root of the denominator
/// in (0, 1], or 1 when there is none; bracketed by exact sign evaluations.
RateResult growth_rate(const RationalSeries& series);

/// Spectral-radius estimate of the weighted (or count) matrix by power
/// iteration in doubles; the cross-check partner of growth_rate.
double power_iteration_rate(const TransitionMatrices& m, bool weighted);

// ---- brute-force oracles (BFS / enumeration; no automaton involved) ----

std::vector<Integer> brute_sphere_counts(const Ball& ball, std::uint32_t n_max);
std::vector<Integer> brute_ball_counts(const Ball& ball, std::uint32_t n_max);
/// Words w with |w| = d(1, w), counted by length.
std::vector<Integer> brute_geodesic_counts(const Ball& ball, std::uint32_t n_max);
/// Left cosets gH with d(1, gH) = n (equivalently Schreier-graph spheres).
std::vector<Integer> brute_coset_counts(const Ball& ball, const SubgroupOracle& subgroup,
                                        std::uint32_t n_max);
/// Set-translates of Z inside the n-ball, orbit-counted (divided by |O|).
std::vector<Integer> brute_embedding_counts(const Ball& ball, const FiniteSubgraph& z,
                                            std::uint32_t n_max);

enum class CountKind { sphere, ball, geodesic, coset, embedding };

std::vector<Integer> brute_force_counts(const Ball& ball, CountKind kind, std::uint32_t n_max,
                                        const SubgroupOracle* subgroup = nullptr,
                                        const FiniteSubgraph* z = nullptr);

/// Least common multiple of the denominators, normalized to constant term 1,
/// with the clearing certificate checked exactly (each series times the lcm
/// must reduce to a polynomial).
Polynomial common_denominator(std::span<const RationalSeries> series);

}  // namespace cygro
