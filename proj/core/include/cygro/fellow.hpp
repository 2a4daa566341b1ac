#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cygro/ball.hpp"
#include "cygro/subgroup.hpp"

namespace cygro {

/// A monotone staircase through the index grid of two paths: the cells
/// (i, j) visited, using steps (+1,0), (0,+1), (+1,+1).
using Staircase = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

struct FellowResult {
  bool ok = false;
  Staircase witness;  // empty when !ok
};

/// Asynchronous M-fellow travel of two in-ball paths (vertex-id sequences):
/// true iff a monotone staircase from (0,0) to (len p, len q) exists whose
/// every visited cell satisfies d(p(i), q(j)) <= M. Equivalent to the
/// reparametrization-pair formulation.
FellowResult async_fellow_travel(const Ball& ball, std::span<const VertexId> p,
                                 std::span<const VertexId> q, std::uint32_t M);

struct FftpCounterexample {
  Word path_word;  // the non-geodesic one-edge continuation w*x
  std::string note;
};

struct FftpReport {
  std::uint32_t M = 0;
  std::uint32_t R = 0;
  bool pass = false;
  std::optional<FftpCounterexample> counterexample;
  std::uint64_t geodesics_checked = 0;
  std::uint64_t probes_checked = 0;
  std::string note;
};

/// Certifies the falsification by fellow traveler property at scale (M, R):
/// for every geodesic word w with |w| <= R and letter x making wx non-geodesic,
/// a strictly shorter path with the same endpoints must asynchronously
/// M-fellow travel with p_{wx}. Checking one-edge continuations suffices for
/// all paths of length <= R+1: a shortest counterexample path has a geodesic
/// prefix, and splicing the fellow traveler of its first non-geodesic prefix
/// reduces the length (the report repeats this note).
/// Requires ball.radius >= R + M + 1 (or a saturated ball).
FftpReport check_fftp(const Ball& ball, std::uint32_t M, std::uint32_t R);

enum class ProjectionMode { fellow, bounded };

struct ProjectionCounterexample {
  Word u, v;  // the edge where the condition fails
  std::string note;
};

struct ProjectionReport {
  ProjectionMode mode = ProjectionMode::fellow;
  std::uint32_t M = 0;
  std::uint32_t R = 0;
  bool pass = false;
  std::optional<ProjectionCounterexample> counterexample;
  std::uint64_t edges_checked = 0;
  /// Set when mode == bounded and the run passed: the fellow-mode meta-check
  /// (a bounded pass must imply a fellow pass).
  std::optional<bool> fellow_meta_check;
  std::string note;
};

/// Checks M-fellow (per-witness) or M-bounded (diameter) projections of the
/// subgroup across every edge of the R-ball. Requires radius >= 2R + M (or a
/// saturated ball) so projections and member distances are certified.
ProjectionReport check_projections(const Ball& ball, const SubgroupOracle& subgroup,
                                   std::uint32_t M, std::uint32_t R, ProjectionMode mode);

/// Replays a counterexample from a failed fftp report; true when it still
/// fails (reports are self-certifying).
bool replay_fftp_counterexample(const Ball& ball, std::uint32_t M, const Word& path_word);

}  // namespace cygro
