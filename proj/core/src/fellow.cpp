#include "cygro/fellow.hpp"

#include <algorithm>
#include <deque>

#include "cygro/errors.hpp"

namespace cygro {

namespace {

void validate_path(const Ball& ball, std::span<const VertexId> p) {
  if (p.empty()) throw InputError("path must contain at least its start vertex");
  for (VertexId v : p)
    if (v >= ball.num_vertices()) throw InputError("path vertex outside the ball");
  for (std::size_t i = 1; i < p.size(); ++i) {
    bool adjacent = false;
    for (Letter x = 0; x < ball.alphabet().size() && !adjacent; ++x)
      adjacent = ball.neighbor(p[i - 1], x) == p[i];
    if (!adjacent) throw InputError("consecutive path vertices are not adjacent");
  }
}

// d(src, *) up to depth M, memoized per source across one check run.
class LocalDistances {
 public:
  LocalDistances(const Ball& ball, std::uint32_t depth) : ball_(ball), depth_(depth) {}

  bool within(VertexId a, VertexId b) {
    auto& map = cache(a);
    return map.count(b) != 0;
  }

 private:
  const Ball& ball_;
  std::uint32_t depth_;
  std::unordered_map<VertexId, std::unordered_map<VertexId, std::uint32_t>> cache_;

  const std::unordered_map<VertexId, std::uint32_t>& cache(VertexId src) {
    auto it = cache_.find(src);
    if (it == cache_.end()) it = cache_.emplace(src, bounded_distances_from(ball_, src, depth_)).first;
    return it->second;
  }
};

}  // namespace

FellowResult async_fellow_travel(const Ball& ball, std::span<const VertexId> p,
                                 std::span<const VertexId> q, std::uint32_t M) {
  validate_path(ball, p);
  validate_path(ball, q);
  const std::uint32_t np = static_cast<std::uint32_t>(p.size()) - 1;
  const std::uint32_t nq = static_cast<std::uint32_t>(q.size()) - 1;
  LocalDistances local(ball, M);

  // reachable[i][j] with steps (+1,0),(0,+1),(+1,+1) over feasible cells
  std::vector<std::vector<std::int8_t>> reach(np + 1, std::vector<std::int8_t>(nq + 1, -1));
  auto feasible = [&](std::uint32_t i, std::uint32_t j) { return local.within(p[i], q[j]); };
  if (!feasible(0, 0)) return {};
  reach[0][0] = 0;  // step code: 0 start, 1 from left, 2 from below, 3 diagonal
  for (std::uint32_t i = 0; i <= np; ++i)
    for (std::uint32_t j = 0; j <= nq; ++j) {
      if (reach[i][j] >= 0 || (i == 0 && j == 0)) continue;
      if (!feasible(i, j)) continue;
      if (i > 0 && reach[i - 1][j] >= 0)
        reach[i][j] = 1;
      else if (j > 0 && reach[i][j - 1] >= 0)
        reach[i][j] = 2;
      else if (i > 0 && j > 0 && reach[i - 1][j - 1] >= 0)
        reach[i][j] = 3;
    }
  if (reach[np][nq] < 0) return {};
  FellowResult result;
  result.ok = true;
  std::uint32_t i = np, j = nq;
  while (true) {
    result.witness.emplace_back(i, j);
    if (reach[i][j] == 0) break;
    if (reach[i][j] == 1)
      --i;
    else if (reach[i][j] == 2)
      --j;
    else {
      --i;
      --j;
    }
  }
  std::reverse(result.witness.begin(), result.witness.end());
  return result;
}

namespace {

// Path of a word as vertex ids; requires every prefix inside the ball.
std::vector<VertexId> path_of_word(const Ball& ball, const Word& w) {
  std::vector<VertexId> p{0};
  for (Letter x : w) {
    VertexId next = ball.neighbor(p.back(), x);
    if (next == kOutside) throw ResourceError("word leaves the ball");
    p.push_back(next);
  }
  return p;
}

// Is there a path q from v0 to p.back() with len(q) < len(p) that
// asynchronously M-fellow travels with p?  0-1 BFS over (index on p, vertex),
// minimizing the length of q; candidate vertices stay in the M-neighborhood
// of p, where any fellow traveler must lie.
bool shorter_fellow_exists(const Ball& ball, const std::vector<VertexId>& p, std::uint32_t M,
                           LocalDistances& local) {
  const std::uint32_t np = static_cast<std::uint32_t>(p.size()) - 1;
  const std::uint32_t budget = np - 1;  // strictly shorter
  struct Key {
    std::uint32_t i;
    VertexId v;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<std::uint64_t>()((std::uint64_t(k.i) << 32) | k.v);
    }
  };
  std::unordered_map<Key, std::uint32_t, KeyHash> best;
  std::deque<std::pair<Key, std::uint32_t>> queue;
  Key start{0, 0};
  best[start] = 0;
  queue.emplace_back(start, 0);
  while (!queue.empty()) {
    auto [key, cost] = queue.front();
    queue.pop_front();
    if (best[key] < cost) continue;
    if (key.i == np && key.v == p[np] && cost <= budget) return true;
    // advance along p for free
    if (key.i < np && local.within(p[key.i + 1], key.v)) {
      Key nk{key.i + 1, key.v};
      auto it = best.find(nk);
      if (it == best.end() || it->second > cost) {
        best[nk] = cost;
        queue.emplace_front(nk, cost);
      }
    }
    if (cost == budget) continue;
    // extend q by one edge, with or without advancing along p
    for (Letter x = 0; x < ball.alphabet().size(); ++x) {
      VertexId w = ball.neighbor(key.v, x);
      if (w == kOutside) continue;
      for (std::uint32_t di = 0; di <= 1; ++di) {
        std::uint32_t ni = key.i + di;
        if (ni > np || !local.within(p[ni], w)) continue;
        Key nk{ni, w};
        auto it = best.find(nk);
        if (it == best.end() || it->second > cost + 1) {
          best[nk] = cost + 1;
          queue.emplace_back(nk, cost + 1);
        }
      }
    }
  }
  return false;
}

}  // namespace

bool replay_fftp_counterexample(const Ball& ball, std::uint32_t M, const Word& path_word) {
  std::vector<VertexId> p = path_of_word(ball, path_word);
  LocalDistances local(ball, M);
  return !shorter_fellow_exists(ball, p, M, local);
}

FftpReport check_fftp(const Ball& ball, std::uint32_t M, std::uint32_t R) {
  if (!ball.saturated() && ball.radius() < R + M + 1)
    throw ResourceError("check_fftp needs ball radius >= R+M+1 = " + std::to_string(R + M + 1) +
                        ", have " + std::to_string(ball.radius()));
  FftpReport report;
  report.M = M;
  report.R = R;
  report.note =
      "checked one-edge continuations of geodesics up to length " + std::to_string(R) +
      "; by induction on the geodesic prefix this certifies fftp for all paths of length <= " +
      std::to_string(R + 1);
  LocalDistances local(ball, M);

  // DFS over geodesic words in shortlex order, probing every non-geodesic
  // one-edge continuation.
  std::vector<VertexId> path{0};
  Word word;
  auto dfs = [&](auto&& self) -> bool {
    ++report.geodesics_checked;
    VertexId v = path.back();
    const std::uint32_t len = static_cast<std::uint32_t>(word.size());
    if (len >= R) return true;
    for (Letter x = 0; x < ball.alphabet().size(); ++x) {
      VertexId u = ball.neighbor(v, x);
      if (u == kOutside) continue;
      word.push_back(x);
      path.push_back(u);
      if (ball.dist(u) == len + 1) {
        if (!self(self)) return false;
      } else {
        ++report.probes_checked;
        if (!shorter_fellow_exists(ball, path, M, local)) {
          report.counterexample = FftpCounterexample{
              word, "no strictly shorter path with the same endpoints asynchronously " +
                        std::to_string(M) + "-fellow travels with it"};
          return false;
        }
      }
      word.pop_back();
      path.pop_back();
    }
    return true;
  };
  report.pass = dfs(dfs);
  return report;
}

ProjectionReport check_projections(const Ball& ball, const SubgroupOracle& subgroup,
                                   std::uint32_t M, std::uint32_t R, ProjectionMode mode) {
  if (!ball.saturated() && ball.radius() < 2 * R + M)
    throw ResourceError("check_projections needs ball radius >= 2R+M = " +
                        std::to_string(2 * R + M) + ", have " + std::to_string(ball.radius()));
  ProjectionReport report;
  report.mode = mode;
  report.M = M;
  report.R = R;

  const VertexId end = ball.ball_end(R);
  std::vector<Projection> proj(end);
  for (VertexId v = 0; v < end; ++v) proj[v] = projection_set(ball, subgroup, v);

  LocalDistances local(ball, M);
  auto fellow_ok = [&](const Projection& from, const Projection& to) {
    for (VertexId zv : from.points) {
      bool found = false;
      for (VertexId zu : to.points)
        if (local.within(zv, zu)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
    return true;
  };
  auto bounded_ok = [&](const Projection& a, const Projection& b) {
    std::vector<VertexId> all(a.points);
    all.insert(all.end(), b.points.begin(), b.points.end());
    for (VertexId x : all)
      for (VertexId y : all)
        if (!local.within(x, y)) return false;
    return true;
  };

  auto run = [&](ProjectionMode m) -> std::optional<ProjectionCounterexample> {
    for (VertexId v = 0; v < end; ++v) {
      for (Letter x = 0; x < ball.alphabet().size(); ++x) {
        VertexId u = ball.neighbor(v, x);
        if (u == kOutside || u >= end || u < v) continue;
        ++report.edges_checked;
        bool ok = m == ProjectionMode::bounded
                      ? bounded_ok(proj[v], proj[u])
                      : fellow_ok(proj[v], proj[u]) && fellow_ok(proj[u], proj[v]);
        if (!ok)
          return ProjectionCounterexample{
              ball.word(v), ball.word(u),
              m == ProjectionMode::bounded
                  ? "diameter of the union of the two projection sets exceeds M"
                  : "some closest point has no counterpart within M across this edge"};
      }
    }
    return std::nullopt;
  };

  report.counterexample = run(mode);
  report.pass = !report.counterexample.has_value();
  if (mode == ProjectionMode::bounded && report.pass) {
    report.fellow_meta_check = !run(ProjectionMode::fellow).has_value();
    if (!*report.fellow_meta_check)
      report.note = "meta-check violation: bounded projections passed but fellow projections failed";
  }
  return report;
}

}  // namespace cygro
