#pragma once

// Catalogue dessins and generative families.

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "dessin/dessin.hpp"
#include "dessin/perm.hpp"

namespace dessin {

// Default ceiling on the degree (n!/24)^2 of the S_n x S_n dessins; admits n = 8.
inline constexpr std::size_t kDefaultMaxConstructDegree = 3000000;

/// sigma0 = sigma1 = (1,2): the only dessin of degree 2 and type (2,2,1).
Dessin degree2_dessin();

/// The two genus-2 dessins of degree 8 with passport (4^2; 4^2; 4^2):
/// `plain` is not Z-orientable, `orientable` is obtained from it by taking
/// sigma_inf as the new sigma0 and keeping sigma1.
struct GenusTwoPair {
  Dessin plain;
  Dessin orientable;
};
GenusTwoPair genus_two_pair();

/// The degree-16 genus-3 double cover of genus_two_pair().plain. Edge e' of
/// the printed labelling is edge e + 8 here.
Dessin genus_three_cover();

/// Cycle notation where a trailing apostrophe adds `half` to a label:
/// "(1,2')" with half = 8 is "(1,10)".
Permutation parse_primed_cycles(std::string_view text, std::size_t half);

/// Path of odd length n >= 3 on the sphere: sigma0(i) = -i, sigma1(i) = 1 - i
/// on Z/n (labels i + 1), so sigma_inf is an n-cycle. Monodromy group is
/// dihedral of order 2n with edge stabilizer of order 2.
Dessin dihedral_path(std::size_t n);

/// Symmetry groups of a cube acting on its faces 1..6, with opposite faces
/// (1,6), (2,5), (3,4). `rotations` is the rotation group, `tetrahedral`
/// preserves the two inscribed tetrahedra, `isometries` is the full group.
struct CubeGroups {
  std::vector<Permutation> rotations;
  std::vector<Permutation> tetrahedral;
  std::vector<Permutation> isometries;
};
/// Self-checked at construction; throws Internal if an invariant fails.
const CubeGroups& cube_groups();

/// All elements of <gens>, sorted. Throws GuardExceeded above `limit` elements.
std::vector<Permutation> closure(std::span<const Permutation> gens, std::size_t limit = 1000000);

/// Elements g of S_k (k = degree of the subgroup) with g^-1 X g = X, by exhaustive scan.
std::vector<Permutation> normalizer_in_symmetric(const std::vector<Permutation>& subgroup);

/// p in S_6 extended to S_n by fixing 7..n.
Permutation extend_to_degree(const Permutation& p, std::size_t n);

/// x = (1,2,...,n), y = (1,2), z = (xy)^-1 in S_n.
struct StandardTriple {
  Permutation x, y, z;
};
StandardTriple standard_triple(std::size_t n);

/// m0 = (y,z), m1 = (z,x), m_inf = (x,y) in S_n x S_n, on 2n points:
/// the first factor acts on 1..n and the second on n+1..2n.
std::array<Permutation, 3> pair_action_generators(std::size_t n);

/// Orders of m0, m1, m_inf.
std::array<BigInt, 3> generator_orders(std::size_t n);

/// Right-multiplication action of S_n on the right cosets of a subgroup X.
/// Cosets are named by the least image sequence of their elements and
/// numbered in lexicographic order of those names; coset 0 is X itself.
struct CosetAction {
  std::size_t count = 0;
  Permutation x, y, z;  // actions of the standard triple
};
CosetAction coset_action(std::size_t n, const std::vector<Permutation>& subgroup);

struct SnxSnDessin {
  Dessin dessin;
  std::size_t n = 0;
  int index = 0;
  std::size_t coset_count = 0;         // n!/24 per factor
  std::vector<Permutation> first;      // X
  std::vector<Permutation> second;     // Y
};

/// The dessin of S_n x S_n acting on the cosets of X x Y with
/// (X, Y) = (B,B), (B,A), (A,B), (A,A) for index 0..3, where A and B act as
/// the tetrahedral and rotation groups on points 1..6. Point (u, v) of the
/// product is edge u * (n!/24) + v + 1.
SnxSnDessin snxsn_dessin(std::size_t n, int index, std::size_t max_degree = kDefaultMaxConstructDegree);

/// The embedded subgroups A (tetrahedral) and B (rotations) of S_n.
std::vector<Permutation> subgroup_a(std::size_t n);
std::vector<Permutation> subgroup_b(std::size_t n);

/// Fixed points of m = (g, h) acting on the cosets of X x Y in S_n x S_n,
/// counted as |m^M cap H| |C_M(m)| / |H|.
BigInt fixed_points_class_formula(const Permutation& g, const Permutation& h, const std::vector<Permutation>& first,
                                  const std::vector<Permutation>& second);

/// Calls `visit` for every ordered pair (sigma0, sigma1) in S_n x S_n acting
/// transitively, sigma0 in lexicographic order of images, then sigma1.
/// Returns the number visited. Throws GuardExceeded for n > 6.
std::size_t enumerate_transitive_pairs(std::size_t n, const std::function<void(const Dessin&)>& visit);

}  // namespace dessin
