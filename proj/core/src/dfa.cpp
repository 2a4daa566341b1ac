#include "cygro/dfa.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "cygro/errors.hpp"

namespace cygro {

bool Dfa::accepts(const Word& w) const {
  std::uint32_t s = initial;
  for (Letter x : w) s = next(s, x);
  return accepting[s];
}

Dfa renumber_canonical(const Dfa& d) {
  std::vector<std::uint32_t> order(d.num_states, UINT32_MAX);
  std::vector<std::uint32_t> bfs{d.initial};
  order[d.initial] = 0;
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    std::uint32_t s = bfs[head];
    for (Letter x = 0; x < d.degree; ++x) {
      std::uint32_t t = d.next(s, x);
      if (order[t] == UINT32_MAX) {
        order[t] = static_cast<std::uint32_t>(bfs.size());
        bfs.push_back(t);
      }
    }
  }
  Dfa out;
  out.num_states = static_cast<std::uint32_t>(bfs.size());
  out.initial = 0;
  out.degree = d.degree;
  out.delta.resize(std::size_t(out.num_states) * d.degree);
  out.accepting.resize(out.num_states);
  for (std::uint32_t s = 0; s < out.num_states; ++s) {
    out.accepting[s] = d.accepting[bfs[s]];
    for (Letter x = 0; x < d.degree; ++x)
      out.delta[std::size_t(s) * d.degree + x] = order[d.next(bfs[s], x)];
  }
  return out;
}

Dfa all_words_dfa(std::size_t degree) {
  Dfa d;
  d.num_states = 1;
  d.initial = 0;
  d.degree = degree;
  d.delta.assign(degree, 0);
  d.accepting = {true};
  return d;
}

Dfa to_dfa(const FftpAutomaton& aut, const std::vector<StateId>& accept) {
  Dfa d;
  d.num_states = aut.num_states();
  d.initial = aut.initial();
  d.degree = aut.degree();
  d.delta.resize(std::size_t(d.num_states) * d.degree);
  d.accepting.assign(d.num_states, false);
  for (StateId s : accept) d.accepting[s] = true;
  for (StateId s = 0; s < d.num_states; ++s)
    for (Letter x = 0; x < d.degree; ++x) d.delta[std::size_t(s) * d.degree + x] = aut.next(s, x);
  return renumber_canonical(d);
}

Dfa intersect(const Dfa& a, const Dfa& b) {
  if (a.degree != b.degree) throw InputError("intersect: alphabet sizes differ");
  std::unordered_map<std::uint64_t, std::uint32_t> seen;
  auto key = [](std::uint32_t x, std::uint32_t y) { return (std::uint64_t(x) << 32) | y; };
  std::vector<std::pair<std::uint32_t, std::uint32_t>> states{{a.initial, b.initial}};
  seen[key(a.initial, b.initial)] = 0;
  Dfa d;
  d.degree = a.degree;
  for (std::size_t head = 0; head < states.size(); ++head) {
    auto [sa, sb] = states[head];
    for (Letter x = 0; x < d.degree; ++x) {
      std::uint32_t ta = a.next(sa, x), tb = b.next(sb, x);
      auto [it, fresh] = seen.emplace(key(ta, tb), static_cast<std::uint32_t>(states.size()));
      if (fresh) states.emplace_back(ta, tb);
      d.delta.push_back(it->second);
    }
  }
  d.num_states = static_cast<std::uint32_t>(states.size());
  d.initial = 0;
  d.accepting.resize(d.num_states);
  for (std::uint32_t s = 0; s < d.num_states; ++s)
    d.accepting[s] = a.accepting[states[s].first] && b.accepting[states[s].second];
  return renumber_canonical(d);
}

Dfa minimize(const Dfa& input) {
  Dfa d = renumber_canonical(input);  // restrict to the reachable part
  // Moore refinement: split classes by (accepting, class of each successor).
  std::vector<std::uint32_t> cls(d.num_states);
  for (std::uint32_t s = 0; s < d.num_states; ++s) cls[s] = d.accepting[s] ? 1 : 0;
  std::uint32_t num_classes = 2;
  while (true) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> signature_to_class;
    std::vector<std::uint32_t> next_cls(d.num_states);
    for (std::uint32_t s = 0; s < d.num_states; ++s) {
      std::vector<std::uint32_t> sig{cls[s]};
      for (Letter x = 0; x < d.degree; ++x) sig.push_back(cls[d.next(s, x)]);
      auto [it, fresh] =
          signature_to_class.emplace(std::move(sig), static_cast<std::uint32_t>(signature_to_class.size()));
      next_cls[s] = it->second;
    }
    std::uint32_t n = static_cast<std::uint32_t>(signature_to_class.size());
    cls.swap(next_cls);
    if (n == num_classes) break;
    num_classes = n;
  }
  Dfa out;
  out.num_states = num_classes;
  out.initial = cls[d.initial];
  out.degree = d.degree;
  out.delta.assign(std::size_t(num_classes) * d.degree, 0);
  out.accepting.assign(num_classes, false);
  for (std::uint32_t s = 0; s < d.num_states; ++s) {
    out.accepting[cls[s]] = d.accepting[s];
    for (Letter x = 0; x < d.degree; ++x)
      out.delta[std::size_t(cls[s]) * d.degree + x] = cls[d.next(s, x)];
  }
  return renumber_canonical(out);
}

std::uint32_t live_state_count(const Dfa& input) {
  Dfa d = renumber_canonical(input);
  // co-reachable: can reach an accepting state
  std::vector<std::vector<std::uint32_t>> rev(d.num_states);
  for (std::uint32_t s = 0; s < d.num_states; ++s)
    for (Letter x = 0; x < d.degree; ++x) rev[d.next(s, x)].push_back(s);
  std::vector<bool> live(d.num_states, false);
  std::deque<std::uint32_t> queue;
  for (std::uint32_t s = 0; s < d.num_states; ++s)
    if (d.accepting[s]) {
      live[s] = true;
      queue.push_back(s);
    }
  while (!queue.empty()) {
    std::uint32_t s = queue.front();
    queue.pop_front();
    for (std::uint32_t p : rev[s])
      if (!live[p]) {
        live[p] = true;
        queue.push_back(p);
      }
  }
  return static_cast<std::uint32_t>(std::count(live.begin(), live.end(), true));
}

std::vector<std::uint64_t> count_accepted_by_length(const Dfa& d, std::uint32_t n_max) {
  std::vector<std::uint64_t> counts;
  std::vector<std::uint64_t> at(d.num_states, 0);
  at[d.initial] = 1;
  for (std::uint32_t n = 0;; ++n) {
    std::uint64_t total = 0;
    for (std::uint32_t s = 0; s < d.num_states; ++s)
      if (d.accepting[s]) total += at[s];
    counts.push_back(total);
    if (n == n_max) break;
    std::vector<std::uint64_t> next(d.num_states, 0);
    for (std::uint32_t s = 0; s < d.num_states; ++s) {
      if (!at[s]) continue;
      for (Letter x = 0; x < d.degree; ++x) next[d.next(s, x)] += at[s];
    }
    at.swap(next);
  }
  return counts;
}

bool isomorphic(const Dfa& a, const Dfa& b) {
  Dfa ca = renumber_canonical(a), cb = renumber_canonical(b);
  return ca.num_states == cb.num_states && ca.degree == cb.degree && ca.delta == cb.delta &&
         ca.accepting == cb.accepting;
}

void write_dfa(std::ostream& os, const Dfa& d, const Alphabet& alphabet) {
  os << "states " << d.num_states << " initial " << d.initial << "\n";
  os << "accept";
  for (std::uint32_t s = 0; s < d.num_states; ++s)
    if (d.accepting[s]) os << ' ' << s;
  os << "\n";
  for (std::uint32_t s = 0; s < d.num_states; ++s)
    for (Letter x = 0; x < d.degree; ++x)
      os << s << ' ' << alphabet.symbol(x) << ' ' << d.next(s, x) << "\n";
}

Dfa read_dfa(std::istream& is, const Alphabet& alphabet) {
  std::string tok;
  Dfa d;
  d.degree = alphabet.size();
  std::uint32_t n = 0, initial = 0;
  if (!(is >> tok >> n) || tok != "states") throw IoError("dfa: bad header");
  if (!(is >> tok >> initial) || tok != "initial") throw IoError("dfa: bad header");
  d.num_states = n;
  d.initial = initial;
  d.accepting.assign(n, false);
  d.delta.assign(std::size_t(n) * d.degree, UINT32_MAX);
  std::string line;
  std::getline(is, line);
  if (!std::getline(is, line) || line.rfind("accept", 0) != 0) throw IoError("dfa: bad accept line");
  {
    std::istringstream ls(line.substr(6));
    std::uint32_t s;
    while (ls >> s) {
      if (s >= n) throw IoError("dfa: accept state out of range");
      d.accepting[s] = true;
    }
  }
  std::uint32_t from, to;
  std::string sym;
  while (is >> from >> sym >> to) {
    auto x = alphabet.find(sym);
    if (!x) throw IoError("dfa: unknown letter '" + sym + "'");
    if (from >= n || to >= n) throw IoError("dfa: state out of range");
    d.delta[std::size_t(from) * d.degree + *x] = to;
  }
  for (std::uint32_t v : d.delta)
    if (v == UINT32_MAX) throw IoError("dfa: transition table incomplete");
  return d;
}

Dfa shortlex_transversal_acceptor(const FftpAutomaton& aut, const Ball& ball,
                                  const SubgroupOracle& subgroup, std::uint32_t ft_const,
                                  TransversalStats* stats) {
  if (!ball.saturated() && ball.radius() < ft_const + 2)
    throw ResourceError("shortlex transversal needs ball radius >= ft_const+2 = " +
                        std::to_string(ft_const + 2));
  const std::vector<StateId>& coset_accept = aut.accept_set("coset:" + subgroup.name());
  std::vector<bool> coset_ok(aut.num_states(), false);
  for (StateId s : coset_accept) coset_ok[s] = true;

  const Alphabet& alphabet = ball.alphabet();
  const std::size_t degree = alphabet.size();
  const VertexId ft_end = ball.ball_end(ft_const);

  // A competitor is a lexicographically smaller word w' of the same length,
  // tracked as (state of w' in the fftp automaton, vertex of w'^-1 w).
  using Competitor = std::pair<StateId, VertexId>;
  struct NodeKey {
    StateId main;
    std::vector<Competitor> competitors;  // sorted
    bool operator==(const NodeKey&) const = default;
  };
  struct NodeHash {
    std::size_t operator()(const NodeKey& k) const noexcept {
      std::uint64_t h = 1469598103934665603ull ^ k.main;
      for (auto [s, v] : k.competitors) {
        h = (h ^ s) * 1099511628211ull;
        h = (h ^ v) * 1099511628211ull;
      }
      return static_cast<std::size_t>(h);
    }
  };

  TransversalStats local_stats;
  // difference update: delta' = y^-1 * delta * x, as ball vertices
  auto step_difference = [&](Letter y, VertexId delta, Letter x) -> VertexId {
    Word w;
    const Word& dw = ball.word(delta);
    w.reserve(dw.size() + 2);
    w.push_back(alphabet.inverse(y));
    w.insert(w.end(), dw.begin(), dw.end());
    w.push_back(x);
    auto v = ball.find_word(w);
    if (!v || *v >= ft_end) {
      ++local_stats.competitor_escapes;
      return kNoVertex;
    }
    return *v;
  };

  std::unordered_map<NodeKey, std::uint32_t, NodeHash> intern;
  std::vector<NodeKey> nodes;
  auto intern_node = [&](NodeKey k) {
    auto it = intern.find(k);
    if (it != intern.end()) return it->second;
    std::uint32_t id = static_cast<std::uint32_t>(nodes.size());
    intern.emplace(k, id);
    nodes.push_back(std::move(k));
    return id;
  };

  intern_node(NodeKey{aut.initial(), {}});
  Dfa d;
  d.degree = degree;
  for (std::uint32_t id = 0; id < nodes.size(); ++id) {
    NodeKey node = nodes[id];  // copy: nodes may reallocate
    for (Letter x = 0; x < degree; ++x) {
      StateId main = aut.next(node.main, x);
      NodeKey next;
      next.main = main;
      if (main != aut.fail_state()) {
        std::set<Competitor> comps;
        // existing competitors extend by any letter
        for (auto [cs, cd] : node.competitors) {
          for (Letter y = 0; y < degree; ++y) {
            StateId ns = aut.next(cs, y);
            if (ns == aut.fail_state()) continue;  // genuine competitors stay geodesic
            VertexId nd = step_difference(y, cd, x);
            if (nd == kNoVertex) continue;
            comps.emplace(ns, nd);
          }
        }
        // new competitors branch off the main word with a smaller letter
        for (Letter y = 0; y < x; ++y) {
          StateId ns = aut.next(node.main, y);
          if (ns == aut.fail_state()) continue;
          VertexId nd = step_difference(y, 0, x);
          if (nd == kNoVertex) continue;
          comps.emplace(ns, nd);
        }
        next.competitors.assign(comps.begin(), comps.end());
      }
      d.delta.push_back(intern_node(std::move(next)));
    }
  }
  d.num_states = static_cast<std::uint32_t>(nodes.size());
  d.initial = 0;
  d.accepting.assign(d.num_states, false);
  for (std::uint32_t id = 0; id < d.num_states; ++id) {
    const NodeKey& node = nodes[id];
    if (!coset_ok[node.main]) continue;
    bool smaller_equivalent = false;
    for (auto [cs, cd] : node.competitors)
      if (subgroup.contains(ball.word(cd))) {
        smaller_equivalent = true;
        break;
      }
    d.accepting[id] = !smaller_equivalent;
  }
  local_stats.states = d.num_states;
  if (stats) *stats = local_stats;
  return renumber_canonical(d);
}

}  // namespace cygro
