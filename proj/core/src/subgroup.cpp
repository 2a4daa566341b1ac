#include "cygro/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "cygro/errors.hpp"

namespace cygro {

namespace {

std::vector<Word> closure_up_to(const RewritingSystem& rs, const std::vector<Word>& generators,
                                std::uint32_t max_len, std::uint64_t budget) {
  std::set<Word> members;
  members.insert(Word{});
  std::deque<Word> frontier{Word{}};
  std::vector<Word> steps;
  for (const Word& g : generators) {
    Word nf = rs.normalize(g);
    steps.push_back(nf);
    steps.push_back(rs.normalize(invert_word(rs.alphabet(), nf)));
  }
  while (!frontier.empty()) {
    Word w = std::move(frontier.front());
    frontier.pop_front();
    for (const Word& s : steps) {
      Word next = rs.normalize(concat(w, s));
      if (next.size() > max_len || members.count(next)) continue;
      if (members.size() >= budget)
        throw ResourceError("subgroup closure budget exceeded (" + std::to_string(budget) +
                            " members)");
      members.insert(next);
      frontier.push_back(next);
    }
  }
  return {members.begin(), members.end()};
}

}  // namespace

SubgroupOracle::SubgroupOracle(const RewritingSystem& rs, SubgroupSpec spec)
    : rs_(&rs), spec_(std::move(spec)) {
  const Alphabet& a = rs.alphabet();
  for (const Word& g : spec_.generators) a.validate(g);
  if (spec_.strategy == MembershipStrategy::parabolic) {
    if (spec_.parabolic_letters.empty())
      throw InputError("parabolic subgroup '" + spec_.name + "' declares no letters");
    // the letter subset must be closed under the involution
    for (Letter l : spec_.parabolic_letters) {
      Letter inv = a.inverse(l);
      if (std::find(spec_.parabolic_letters.begin(), spec_.parabolic_letters.end(), inv) ==
          spec_.parabolic_letters.end())
        throw InputError("parabolic letter set of '" + spec_.name +
                         "' is not closed under inverses");
    }
    // validation by sampling: products of generators up to a small depth must
    // normalize to words over the declared letters
    for (const Word& seed : closure_up_to(rs, spec_.generators, 8, 20'000))
      if (!is_parabolic_word(seed))
        throw InputError("subgroup '" + spec_.name + "' is not parabolic on the declared letters: member '" +
                         a.format_word(seed) + "' uses others");
  } else {
    enumerated_ = closure_up_to(rs, spec_.generators, spec_.enumerate_depth, 4'000'000);
    std::sort(enumerated_.begin(), enumerated_.end());
  }
}

bool SubgroupOracle::is_parabolic_word(const Word& w) const {
  for (Letter l : w)
    if (std::find(spec_.parabolic_letters.begin(), spec_.parabolic_letters.end(), l) ==
        spec_.parabolic_letters.end())
      return false;
  return true;
}

bool SubgroupOracle::contains(const Word& normal_form) const {
  if (spec_.strategy == MembershipStrategy::parabolic) return is_parabolic_word(normal_form);
  if (spec_.generators.empty()) return normal_form.empty();
  if (normal_form.size() > spec_.enumerate_depth)
    throw ResourceError("subgroup '" + spec_.name + "': membership of a word of length " +
                        std::to_string(normal_form.size()) + " needs enumerate depth >= " +
                        std::to_string(normal_form.size()));
  return std::binary_search(enumerated_.begin(), enumerated_.end(), normal_form);
}

std::vector<Word> SubgroupOracle::members_up_to(std::uint32_t max_len, std::uint64_t budget) const {
  std::vector<Word> out;
  if (spec_.generators.empty() && spec_.strategy == MembershipStrategy::enumerate) {
    out.push_back(Word{});
  } else if (spec_.strategy == MembershipStrategy::parabolic) {
    // parabolic letters generate every letters-only normal form
    std::vector<Word> letter_gens;
    for (Letter l : spec_.parabolic_letters) letter_gens.push_back(Word{l});
    out = closure_up_to(*rs_, letter_gens, max_len, budget);
  } else {
    if (max_len > spec_.enumerate_depth)
      throw ResourceError("subgroup '" + spec_.name + "': members up to length " +
                          std::to_string(max_len) + " need enumerate depth >= " +
                          std::to_string(max_len) + ", have " +
                          std::to_string(spec_.enumerate_depth));
    for (const Word& w : enumerated_)
      if (w.size() <= max_len) out.push_back(w);
  }
  std::sort(out.begin(), out.end(), [&](const Word& x, const Word& y) {
    return shortlex_less(rs_->alphabet(), x, y);
  });
  return out;
}

std::vector<VertexId> SubgroupOracle::members_in_ball(const Ball& ball,
                                                      std::uint32_t within_radius) const {
  // The trivial subgroup (no generators) enumerates exactly at any depth.
  if (spec_.strategy == MembershipStrategy::enumerate && !spec_.generators.empty() &&
      !ball.saturated() && spec_.enumerate_depth < 2 * std::min(within_radius, ball.radius()))
    throw ResourceError("subgroup '" + spec_.name + "': enumerate depth " +
                        std::to_string(spec_.enumerate_depth) + " too small for ball radius " +
                        std::to_string(std::min(within_radius, ball.radius())) + "; depth >= " +
                        std::to_string(2 * std::min(within_radius, ball.radius())) + " required");
  std::vector<VertexId> out;
  VertexId end = ball.ball_end(within_radius);
  for (VertexId v = 0; v < end; ++v)
    if (contains(ball.word(v))) out.push_back(v);
  return out;
}

Projection projection_set(const Ball& ball, const SubgroupOracle& subgroup, VertexId v) {
  // Level-synchronized BFS from v inside the ball. In-ball distances agree
  // with true distances out to depth d whenever dist(v)+d <= radius (geodesics
  // from v to such targets stay inside the ball), which is the certification
  // condition checked below.
  std::unordered_map<VertexId, std::uint32_t> dist;
  std::vector<VertexId> level{v};
  dist.emplace(v, 0);
  std::uint32_t depth = 0;
  Projection proj;
  while (true) {
    std::vector<VertexId> hits;
    for (VertexId u : level)
      if (subgroup.contains(ball.word(u))) hits.push_back(u);
    if (!hits.empty()) {
      if (!ball.saturated() && ball.dist(v) + depth > ball.radius())
        throw ResourceError("projection_set: certification needs ball radius >= " +
                            std::to_string(ball.dist(v) + depth) + ", have " +
                            std::to_string(ball.radius()));
      std::sort(hits.begin(), hits.end());
      proj.distance = depth;
      proj.points = std::move(hits);
      return proj;
    }
    std::vector<VertexId> next;
    for (VertexId u : level) {
      for (Letter x = 0; x < ball.alphabet().size(); ++x) {
        VertexId w = ball.neighbor(u, x);
        if (w == kOutside || dist.count(w)) continue;
        dist.emplace(w, depth + 1);
        next.push_back(w);
      }
    }
    if (next.empty())
      throw ResourceError("projection_set: no member reachable inside the ball from vertex " +
                          std::to_string(v));
    level = std::move(next);
    ++depth;
  }
}

FiniteSubgraph load_subgraph(const Ball& ball, const std::string& name,
                             const std::vector<Word>& vertex_words) {
  const RewritingSystem& rs = ball.system();
  FiniteSubgraph z;
  z.name = name;
  std::set<Word> verts;
  for (const Word& w : vertex_words) verts.insert(rs.normalize(w));
  z.vertices.assign(verts.begin(), verts.end());
  std::sort(z.vertices.begin(), z.vertices.end(),
            [&](const Word& x, const Word& y) { return shortlex_less(rs.alphabet(), x, y); });
  if (verts.find(Word{}) == verts.end())
    throw InputError("subgraph '" + name + "' must contain the identity");
  for (const Word& w : z.vertices) {
    auto id = ball.find(w);
    if (!id)
      throw InputError("subgraph '" + name + "' vertex '" + rs.alphabet().format_word(w) +
                       "' is outside the ball");
    z.ids.push_back(*id);
  }
  // diameter via normal forms: d(u, w) = |nf(u^-1 w)|
  for (const Word& u : z.vertices)
    for (const Word& w : z.vertices) {
      Word d = rs.normalize(concat(invert_word(rs.alphabet(), u), w));
      z.diameter = std::max<std::uint32_t>(z.diameter, static_cast<std::uint32_t>(d.size()));
    }
  // orbit of the identity under the setwise stabilizer: any g with gZ = Z
  // satisfies g in Z, so testing the vertices of Z is exhaustive
  std::uint32_t orbit = 0;
  for (const Word& g : z.vertices) {
    std::set<Word> translated;
    for (const Word& w : z.vertices) translated.insert(rs.normalize(concat(g, w)));
    if (translated == verts) ++orbit;
  }
  z.orbit_size = orbit;
  return z;
}

}  // namespace cygro
