#include "cygro/automaton.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "cygro/errors.hpp"

namespace cygro {

TransitionTables::TransitionTables(const Ball& ball, std::uint32_t K)
    : ball_(&ball), k_(K), k_end_(ball.ball_end(K)), dtab_(restricted_distances(ball, K)) {
  if (!ball.saturated() && ball.radius() < K + 1)
    throw ResourceError("transition tables need ball radius >= K+1 = " + std::to_string(K + 1));
  const Alphabet& a = ball.alphabet();
  linv_.assign(a.size() * std::size_t(k_end_), kNoVertex);
  letter_vertex_.assign(a.size(), kNoVertex);
  for (Letter x = 0; x < a.size(); ++x) {
    auto lx = ball.find_word(Word{x});
    if (!lx) throw InputError("letter does not name a ball vertex");
    letter_vertex_[x] = *lx;
    Letter xi = a.inverse(x);
    for (VertexId u = 0; u < k_end_; ++u) {
      auto v = ball.left_multiply(xi, u);
      if (v && *v < k_end_) linv_[std::size_t(x) * k_end_ + u] = *v;
    }
  }
}

TypeState initial_state(const Ball& ball, std::uint32_t K) {
  if (!ball.saturated() && ball.radius() < K)
    throw ResourceError("initial_state needs ball radius >= K");
  VertexId end = ball.ball_end(K);
  TypeState s;
  s.offsets.resize(end);
  for (VertexId u = 0; u < end; ++u) s.offsets[u] = static_cast<std::int16_t>(ball.dist(u));
  return s;
}

TypeState transition(const TypeState& phi, Letter x, const TransitionTables& tables) {
  if (is_fail(phi)) return phi;
  const VertexId n = tables.k_end();
  if (phi.offsets.size() != n) throw InputError("state size does not match the K-ball");
  if (phi.offsets[tables.letter_vertex(x)] != 1) return TypeState{};  // Fail

  const auto& dtab = tables.restricted();
  const std::int32_t K = static_cast<std::int32_t>(tables.K());
  TypeState psi;
  psi.offsets.resize(n);
  for (VertexId b = 0; b < n; ++b) {
    std::int32_t best = INT32_MAX;
    for (VertexId a = 0; a < n; ++a) {
      VertexId ta = tables.left_inverse_mul(x, a);
      if (ta == kNoVertex) continue;
      std::uint16_t d = dtab(ta, b);
      if (d == RestrictedDistanceTable::kInfDist) continue;
      best = std::min(best, static_cast<std::int32_t>(phi.offsets[a]) + d - 1);
    }
    if (best < -K || best > K)
      throw ParameterError(
          "transition value " + std::to_string(best) + " escapes [-K, K] with K = " +
          std::to_string(K) +
          "; the automaton parameter is too small for the fftp hypothesis at this state");
    psi.offsets[b] = static_cast<std::int16_t>(best);
  }
  return psi;
}

StateId FftpAutomaton::run(const Word& w) const {
  StateId s = initial();
  for (Letter x : w) s = next(s, x);
  return s;
}

const std::vector<StateId>& FftpAutomaton::accept_set(const std::string& name) const {
  auto it = accept_.find(name);
  if (it == accept_.end()) throw InputError("unknown accept set '" + name + "'");
  return it->second;
}

void FftpAutomaton::set_accept_set(const std::string& name, std::vector<StateId> states) {
  std::sort(states.begin(), states.end());
  accept_[name] = std::move(states);
}

namespace {

struct StateHash {
  std::size_t operator()(const TypeState& s) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int16_t v : s.offsets) {
      h ^= static_cast<std::uint16_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

FftpAutomaton build_automaton(const Ball& ball, std::uint32_t K, std::uint32_t validate_len) {
  if (!ball.saturated() && ball.radius() < 2 * K + 2)
    throw ResourceError("build_automaton needs ball radius >= 2K+2 = " + std::to_string(2 * K + 2) +
                        ", have " + std::to_string(ball.radius()));
  TransitionTables tables(ball, K);
  FftpAutomaton aut;
  aut.K_ = K;
  aut.k_end_ = tables.k_end();
  aut.degree_ = ball.alphabet().size();
  aut.letter_vertex_.resize(aut.degree_);
  for (Letter x = 0; x < aut.degree_; ++x) aut.letter_vertex_[x] = tables.letter_vertex(x);

  std::unordered_map<TypeState, StateId, StateHash> intern;
  auto intern_state = [&](TypeState s) -> StateId {
    auto it = intern.find(s);
    if (it != intern.end()) return it->second;
    StateId id = static_cast<StateId>(aut.states_.size());
    intern.emplace(s, id);
    aut.states_.push_back(std::move(s));
    return id;
  };

  intern_state(initial_state(ball, K));
  for (StateId s = 0; s < aut.states_.size(); ++s) {
    TypeState current = aut.states_[s];  // copy: states_ may reallocate
    for (Letter x = 0; x < aut.degree_; ++x) {
      StateId t = intern_state(transition(current, x, tables));
      aut.delta_.push_back(t);
    }
  }
  TypeState fail;
  auto it = intern.find(fail);
  if (it != intern.end()) {
    aut.fail_ = it->second;
  } else {
    // totality requires a fail state even if no transition reaches it
    aut.fail_ = intern_state(fail);
    for (Letter x = 0; x < aut.degree_; ++x) aut.delta_.push_back(aut.fail_);
  }

  std::uint32_t margin = ball.saturated() ? ball.radius() : ball.radius() - K;
  std::uint32_t len = validate_len ? validate_len : std::min(K + 2, margin);
  aut.validated_length = std::min(len, margin);
  aut.validated_words = validate_state_semantics(aut, ball, aut.validated_length);
  return aut;
}

std::uint64_t validate_state_semantics(const FftpAutomaton& aut, const Ball& ball,
                                       std::uint32_t max_len) {
  if (!ball.saturated() && ball.radius() < max_len + aut.K())
    throw ResourceError("state-semantics validation to length " + std::to_string(max_len) +
                        " needs ball radius >= " + std::to_string(max_len + aut.K()));
  const Alphabet& a = ball.alphabet();
  std::uint64_t checked = 0;
  Word word;
  std::vector<VertexId> path{0};
  std::vector<StateId> states{aut.initial()};

  auto check_current = [&]() {
    VertexId v = path.back();
    StateId s = states.back();
    bool geodesic = ball.dist(v) == word.size();
    if (!geodesic) {
      if (s != aut.fail_state())
        throw VerificationError("non-geodesic word '" + a.format_word(word) +
                                "' does not reach the fail state");
      return;
    }
    if (s == aut.fail_state())
      throw VerificationError("geodesic word '" + a.format_word(word) + "' reaches the fail state");
    const TypeState& st = aut.state(s);
    for (VertexId u = 0; u < aut.k_end(); ++u) {
      Word wu = concat(ball.word(v), ball.word(u));
      auto vu = ball.find_word(wu);
      if (!vu)
        throw ResourceError("state validation left the ball at word '" + a.format_word(wu) + "'");
      std::int32_t expect = static_cast<std::int32_t>(ball.dist(*vu)) -
                            static_cast<std::int32_t>(ball.dist(v));
      if (st.offsets[u] != expect)
        throw VerificationError(
            "state offsets disagree with BFS distance differences at word '" +
            a.format_word(word) + "', K-ball vertex '" + a.format_word(ball.word(u)) +
            "': state says " + std::to_string(st.offsets[u]) + ", oracle says " +
            std::to_string(expect));
    }
  };

  auto dfs = [&](auto&& self) -> void {
    check_current();
    ++checked;
    if (word.size() >= max_len) return;
    for (Letter x = 0; x < a.size(); ++x) {
      VertexId u = ball.neighbor(path.back(), x);
      if (u == kOutside) continue;  // beyond the ball: cannot classify, skip
      word.push_back(x);
      path.push_back(u);
      states.push_back(aut.next(states.back(), x));
      self(self);
      word.pop_back();
      path.pop_back();
      states.pop_back();
    }
  };
  dfs(dfs);
  return checked;
}

std::vector<StateId> accept_geodesics(const FftpAutomaton& aut) {
  std::vector<StateId> out;
  for (StateId s = 0; s < aut.num_states(); ++s)
    if (s != aut.fail_state()) out.push_back(s);
  return out;
}

std::vector<StateId> accept_coset(const FftpAutomaton& aut, const Ball& ball,
                                  const SubgroupOracle& subgroup) {
  std::vector<VertexId> members = subgroup.members_in_ball(ball, aut.K());
  std::vector<StateId> out;
  for (StateId s = 0; s < aut.num_states(); ++s) {
    if (s == aut.fail_state()) continue;
    const TypeState& st = aut.state(s);
    bool ok = true;
    for (VertexId m : members)
      if (st.offsets[m] < 0) {
        ok = false;
        break;
      }
    if (ok) out.push_back(s);
  }
  return out;
}

}  // namespace cygro
