#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cygro/rewriting.hpp"

namespace cygro {

using VertexId = std::uint32_t;
constexpr VertexId kOutside = std::numeric_limits<VertexId>::max();
constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

/// A materialized ball of the Cayley graph presented by a confluent rewriting
/// system. Vertices are canonical normal-form words; ids are dense and
/// assigned in BFS order, so the sub-ball of radius r is exactly the id
/// prefix [0, ball_end(r)). Immutable once built; safe to share across threads.
class Ball {
 public:
  const RewritingSystem& system() const { return rs_; }
  const Alphabet& alphabet() const { return rs_.alphabet(); }
  std::uint32_t radius() const { return radius_; }
  /// True when the whole (finite) graph fit inside the requested radius;
  /// then every distance in the table is exact with no margin caveats.
  bool saturated() const { return saturated_; }

  VertexId num_vertices() const { return static_cast<VertexId>(words_.size()); }
  const Word& word(VertexId v) const { return words_[v]; }
  std::uint32_t dist(VertexId v) const { return dist_[v]; }
  /// Neighbor of v by right multiplication with letter x, or kOutside.
  VertexId neighbor(VertexId v, Letter x) const { return adj_[std::size_t(v) * degree_ + x]; }

  std::optional<VertexId> find(const Word& normal_form) const;
  /// find(normalize(w)) for arbitrary words.
  std::optional<VertexId> find_word(const Word& w) const { return find(rs_.normalize(w)); }

  /// First id with dist > r  (ids are BFS-ordered).
  VertexId ball_end(std::uint32_t r) const;
  std::uint64_t ball_size(std::uint32_t r) const { return ball_end(r); }
  std::uint64_t sphere_size(std::uint32_t r) const;

  /// Vertex of normalize(x . word(v)), i.e. left multiplication by a letter.
  std::optional<VertexId> left_multiply(Letter x, VertexId v) const;

 private:
  Ball(RewritingSystem rs, std::uint32_t radius) : rs_(std::move(rs)), radius_(radius) {}
  void finish();  // builds index_, sphere_start_, checks invariants

  friend Ball build_ball(const RewritingSystem&, std::uint32_t, std::uint64_t);
  friend Ball read_ball_cache(std::istream&, const RewritingSystem&);

  RewritingSystem rs_;
  std::uint32_t radius_;
  std::size_t degree_ = 0;
  bool saturated_ = true;
  std::vector<Word> words_;
  std::vector<std::uint32_t> dist_;
  std::vector<VertexId> adj_;
  std::vector<VertexId> sphere_start_;  // sphere r = [sphere_start_[r], sphere_start_[r+1])
  std::unordered_map<Word, VertexId, WordHash> index_;
};

/// BFS realization of the ball of radius R. Requires a confluent system
/// (checked by the caller or via check_confluence); normal-form length is
/// then the graph distance, which build_ball verifies as it goes.
/// Exceeding max_vertices raises ResourceError with partial statistics.
Ball build_ball(const RewritingSystem& rs, std::uint32_t radius,
                std::uint64_t max_vertices = 8'000'000);

/// All-pairs shortest paths in the subgraph induced on the K-ball.
/// Entries are kInfDist where the induced subgraph disconnects.
class RestrictedDistanceTable {
 public:
  static constexpr std::uint16_t kInfDist = std::numeric_limits<std::uint16_t>::max();

  RestrictedDistanceTable(std::uint32_t k, VertexId n)
      : k_(k), n_(n), d_(std::size_t(n) * n, kInfDist) {}

  std::uint32_t k_radius() const { return k_; }
  VertexId size() const { return n_; }
  std::uint16_t operator()(VertexId u, VertexId v) const { return d_[std::size_t(u) * n_ + v]; }
  std::uint16_t& at(VertexId u, VertexId v) { return d_[std::size_t(u) * n_ + v]; }

 private:
  std::uint32_t k_;
  VertexId n_;
  std::vector<std::uint16_t> d_;
};

RestrictedDistanceTable restricted_distances(const Ball& ball, std::uint32_t k);

/// Exact distances from src to everything within `depth`, as a sparse map.
/// Exact because a geodesic from src to a vertex at distance <= depth stays
/// inside the ball of radius dist(src)+depth; raises ResourceError when the
/// ball cannot certify that (dist(src)+depth > radius and not saturated).
std::unordered_map<VertexId, std::uint32_t> bounded_distances_from(const Ball& ball, VertexId src,
                                                                   std::uint32_t depth);

/// Writes/reads the canonical text cache: `radius R`, then `id<TAB>word<TAB>dist`
/// lines, then `id<TAB>letter<TAB>id|*` adjacency lines.
void write_ball_cache(std::ostream& os, const Ball& ball);
Ball read_ball_cache(std::istream& is, const RewritingSystem& rs);

}  // namespace cygro
