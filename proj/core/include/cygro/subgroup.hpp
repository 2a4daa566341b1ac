#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cygro/ball.hpp"

namespace cygro {

enum class MembershipStrategy {
  parabolic,  // member iff the normal form uses only the declared letters
  enumerate,  // member iff found by closing generator products to a depth
};

struct SubgroupSpec {
  std::string name;
  std::vector<Word> generators;
  MembershipStrategy strategy = MembershipStrategy::enumerate;
  std::vector<Letter> parabolic_letters;
  std::uint32_t enumerate_depth = 0;
};

/// Membership oracle for a finitely generated subgroup H.
///
/// The parabolic strategy answers from the normal form alone and is validated
/// by sampling generator products. The enumerate strategy is exact on a ball
/// of radius R provided depth >= 2R: any two ball vertices in the same coset
/// differ by a member of length at most 2R.
class SubgroupOracle {
 public:
  SubgroupOracle(const RewritingSystem& rs, SubgroupSpec spec);

  const SubgroupSpec& spec() const { return spec_; }
  const std::string& name() const { return spec_.name; }

  /// Membership of a *normal form*. For enumerate, certifiable only when
  /// |nf| <= depth (longer words raise ResourceError naming the needed depth).
  bool contains(const Word& normal_form) const;

  /// All members with normal-form length <= max_len, as normal forms, found
  /// by closing generator multiplications. Sorted shortlex.
  std::vector<Word> members_up_to(std::uint32_t max_len, std::uint64_t budget = 4'000'000) const;

  /// Ids of ball vertices lying in H, within dist <= within_radius. Sorted.
  /// For enumerate the ball radius must not exceed depth/2.
  std::vector<VertexId> members_in_ball(const Ball& ball, std::uint32_t within_radius) const;

 private:
  const RewritingSystem* rs_;
  SubgroupSpec spec_;
  std::vector<Word> enumerated_;  // sorted member set for the enumerate strategy
  bool is_parabolic_word(const Word& w) const;
};

/// Distance from v to H and the full set of closest members (ids).
struct Projection {
  std::uint32_t distance = 0;
  std::vector<VertexId> points;  // sorted
};

/// Closest-point projection of a ball vertex onto H, certified: raises
/// ResourceError (naming the required radius) when the ball cannot exclude
/// closer members outside it.
Projection projection_set(const Ball& ball, const SubgroupOracle& subgroup, VertexId v);

/// A finite subgraph Z containing the identity, given by vertex normal forms.
struct FiniteSubgraph {
  std::string name;
  std::vector<Word> vertices;     // normal forms, identity included, sorted shortlex
  std::vector<VertexId> ids;      // ids in the ball used to load it
  std::uint32_t diameter = 0;     // max pairwise graph distance
  std::uint32_t orbit_size = 1;   // |O|, orbit of the identity under the setwise stabilizer
};

/// Normalizes the vertex words, checks the identity is present, and computes
/// the diameter and |O| by brute force over in-Z translates (g in Z with
/// gZ = Z as vertex sets suffices, since g = g*1 must itself lie in Z).
FiniteSubgraph load_subgraph(const Ball& ball, const std::string& name,
                             const std::vector<Word>& vertex_words);

}  // namespace cygro
