#include "cygro/ball.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>

#include "cygro/errors.hpp"

namespace cygro {

std::optional<VertexId> Ball::find(const Word& normal_form) const {
  auto it = index_.find(normal_form);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId Ball::ball_end(std::uint32_t r) const {
  if (r + 1 >= sphere_start_.size()) return num_vertices();
  return sphere_start_[r + 1];
}

std::uint64_t Ball::sphere_size(std::uint32_t r) const {
  if (r >= sphere_start_.size()) return 0;
  VertexId lo = sphere_start_[r];
  VertexId hi = (r + 1 < sphere_start_.size()) ? sphere_start_[r + 1] : num_vertices();
  return hi - lo;
}

std::optional<VertexId> Ball::left_multiply(Letter x, VertexId v) const {
  Word w;
  w.reserve(words_[v].size() + 1);
  w.push_back(x);
  w.insert(w.end(), words_[v].begin(), words_[v].end());
  return find(rs_.normalize(w));
}

void Ball::finish() {
  index_.reserve(words_.size() * 2);
  for (VertexId v = 0; v < words_.size(); ++v) index_.emplace(words_[v], v);
  sphere_start_.assign(1, 0);
  for (VertexId v = 0; v < words_.size(); ++v) {
    if (v > 0 && dist_[v] < dist_[v - 1])
      throw InputError("ball vertices not in BFS order");
    while (sphere_start_.size() <= dist_[v]) sphere_start_.push_back(v);
  }
  sphere_start_.push_back(num_vertices());
  // adjacency must be involutive: v --x--> u implies u --x^-1--> v
  const Alphabet& a = rs_.alphabet();
  for (VertexId v = 0; v < num_vertices(); ++v) {
    for (Letter x = 0; x < degree_; ++x) {
      VertexId u = neighbor(v, x);
      if (u == kOutside) continue;
      if (neighbor(u, a.inverse(x)) != v)
        throw InputError("ball adjacency is not involutive at vertex " + std::to_string(v));
    }
  }
}

Ball build_ball(const RewritingSystem& rs, std::uint32_t radius, std::uint64_t max_vertices) {
  Ball ball(rs, radius);
  const Alphabet& alphabet = rs.alphabet();
  const std::size_t degree = alphabet.size();
  ball.degree_ = degree;

  ball.words_.push_back(Word{});
  ball.dist_.push_back(0);
  std::unordered_map<Word, VertexId, WordHash> seen;
  seen.emplace(Word{}, 0);

  for (VertexId v = 0; v < ball.words_.size(); ++v) {
    const std::uint32_t d = ball.dist_[v];
    const Word base = ball.words_[v];  // copy: words_ may reallocate below
    for (Letter x = 0; x < degree; ++x) {
      Word next = base;
      next.push_back(x);
      next = rs.normalize(next);
      auto it = seen.find(next);
      if (it != seen.end()) {
        ball.adj_.push_back(it->second);
        continue;
      }
      if (next.size() != d + 1)
        throw InputError(
            "normal-form length does not extend BFS distance; the rewriting system is not "
            "confluent (witness '" +
            alphabet.format_word(base) + "' * '" + alphabet.symbol(x) + "')");
      if (d + 1 > radius) {
        ball.adj_.push_back(kOutside);
        ball.saturated_ = false;
        continue;
      }
      if (ball.words_.size() >= max_vertices)
        throw ResourceError("ball vertex budget exceeded: " + std::to_string(max_vertices) +
                            " vertices reached at radius " + std::to_string(d + 1) + " of " +
                            std::to_string(radius));
      VertexId id = static_cast<VertexId>(ball.words_.size());
      seen.emplace(next, id);
      ball.words_.push_back(std::move(next));
      ball.dist_.push_back(d + 1);
      ball.adj_.push_back(id);
    }
  }
  ball.finish();
  return ball;
}

RestrictedDistanceTable restricted_distances(const Ball& ball, std::uint32_t k) {
  if (k > ball.radius() && !ball.saturated())
    throw InputError("restricted_distances: K exceeds ball radius");
  const VertexId n = ball.ball_end(k);
  RestrictedDistanceTable table(k, n);
  std::vector<VertexId> queue;
  queue.reserve(n);
  for (VertexId s = 0; s < n; ++s) {
    queue.clear();
    queue.push_back(s);
    table.at(s, s) = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexId u = queue[head];
      std::uint16_t du = table(s, u);
      for (Letter x = 0; x < ball.alphabet().size(); ++x) {
        VertexId v = ball.neighbor(u, x);
        if (v == kOutside || v >= n) continue;  // stay inside the K-ball
        if (table(s, v) != RestrictedDistanceTable::kInfDist) continue;
        table.at(s, v) = static_cast<std::uint16_t>(du + 1);
        queue.push_back(v);
      }
    }
  }
  return table;
}

std::unordered_map<VertexId, std::uint32_t> bounded_distances_from(const Ball& ball, VertexId src,
                                                                   std::uint32_t depth) {
  if (!ball.saturated() && ball.dist(src) + depth > ball.radius())
    throw ResourceError("bounded_distances_from: need ball radius >= " +
                        std::to_string(ball.dist(src) + depth) + ", have " +
                        std::to_string(ball.radius()));
  std::unordered_map<VertexId, std::uint32_t> dist;
  dist.emplace(src, 0);
  std::deque<VertexId> queue{src};
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    std::uint32_t du = dist[u];
    if (du == depth) continue;
    for (Letter x = 0; x < ball.alphabet().size(); ++x) {
      VertexId v = ball.neighbor(u, x);
      if (v == kOutside || dist.count(v)) continue;
      dist.emplace(v, du + 1);
      queue.push_back(v);
    }
  }
  return dist;
}

void write_ball_cache(std::ostream& os, const Ball& ball) {
  os << "radius " << ball.radius() << "\n";
  const Alphabet& a = ball.alphabet();
  for (VertexId v = 0; v < ball.num_vertices(); ++v)
    os << v << '\t' << a.format_word(ball.word(v)) << '\t' << ball.dist(v) << "\n";
  for (VertexId v = 0; v < ball.num_vertices(); ++v) {
    for (Letter x = 0; x < a.size(); ++x) {
      VertexId u = ball.neighbor(v, x);
      os << v << '\t' << a.symbol(x) << '\t';
      if (u == kOutside)
        os << "*\n";
      else
        os << u << "\n";
    }
  }
}

Ball read_ball_cache(std::istream& is, const RewritingSystem& rs) {
  std::string tag;
  std::uint32_t radius = 0;
  if (!(is >> tag >> radius) || tag != "radius") throw IoError("ball cache: bad header");
  Ball ball(rs, radius);
  const Alphabet& a = rs.alphabet();
  ball.degree_ = a.size();
  std::string line;
  std::getline(is, line);
  std::vector<std::string> pending;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    pending.push_back(line);
  }
  // Vertex line r carries id == r; the adjacency section restarts at id 0,
  // which is how we detect the boundary between the two sections.
  std::size_t row = 0;
  for (; row < pending.size(); ++row) {
    std::istringstream ls(pending[row]);
    std::string id_s, mid, last;
    if (!std::getline(ls, id_s, '\t') || !std::getline(ls, mid, '\t') || !std::getline(ls, last))
      throw IoError("ball cache: bad line '" + pending[row] + "'");
    if (std::stoull(id_s) != row) break;
    ball.words_.push_back(a.parse_word(mid));
    ball.dist_.push_back(static_cast<std::uint32_t>(std::stoul(last)));
  }
  ball.adj_.assign(ball.words_.size() * a.size(), kOutside);
  ball.saturated_ = true;
  for (; row < pending.size(); ++row) {
    std::istringstream ls(pending[row]);
    std::string id_s, mid, last;
    if (!std::getline(ls, id_s, '\t') || !std::getline(ls, mid, '\t') || !std::getline(ls, last))
      throw IoError("ball cache: bad adjacency line '" + pending[row] + "'");
    auto x = a.find(mid);
    if (!x) throw IoError("ball cache: unknown letter '" + mid + "'");
    VertexId v = static_cast<VertexId>(std::stoul(id_s));
    if (v >= ball.words_.size()) throw IoError("ball cache: vertex id out of range");
    if (last == "*") {
      ball.saturated_ = false;
      continue;
    }
    ball.adj_[std::size_t(v) * a.size() + *x] = static_cast<VertexId>(std::stoul(last));
  }
  ball.finish();
  return ball;
}

}  // namespace cygro
