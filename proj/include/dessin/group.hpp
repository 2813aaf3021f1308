#pragma once

// Permutation groups via a base and strong generating set (Schreier-Sims),
// and the monodromy-group questions asked of a dessin: order, point
// stabilizer, which sign homomorphisms M -> {+1,-1} exist, and whether the
// edge stabilizer lies in their kernels.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dessin/dessin.hpp"
#include "dessin/perm.hpp"

namespace dessin {

struct GroupOptions {
  std::size_t max_degree = kDefaultMaxDegree;
  // Up to this degree the chain is completed by sifting every Schreier
  // generator, which makes the result exact. Above it only the randomized
  // phase runs.
  std::size_t deterministic_limit = 10000;
  // Consecutive random elements that must sift to the identity before the
  // randomized phase stops.
  std::size_t random_confidence = 48;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

class GroupHandle {
 public:
  /// Throws InvalidArgument on an empty list, DegreeMismatch, GuardExceeded.
  static GroupHandle build(std::span<const Permutation> generators, const GroupOptions& options = {});

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const BigInt& order() const noexcept { return order_; }
  /// False when only the randomized phase ran; the order is then a lower
  /// bound that is exact with high probability.
  bool exact() const noexcept { return exact_; }

  /// Base points, 0-based. The first base point is always 0.
  std::vector<Point> base() const;
  std::vector<std::size_t> orbit_lengths() const;
  std::size_t strong_generator_count() const noexcept { return strong_.size(); }

  /// Throws DegreeMismatch.
  bool contains(const Permutation& p) const;

  /// Strong generators fixing point 0; they generate its stabilizer.
  std::vector<Permutation> point_stabilizer_generators() const;

 private:
  struct Level {
    Point base = 0;
    std::vector<std::size_t> labels;  // indices into strong_
    std::vector<std::int32_t> tree;   // per point: -1 outside orbit, -2 base, else index into labels
    std::vector<Point> orbit;
  };

  GroupHandle() = default;
  void add_level(Point base_point);
  void rebuild_orbit(std::size_t level);
  std::size_t add_strong_generator(Permutation g, std::size_t through_level);
  // Sifts `g` from `from_level`; returns the level where it stopped (levels_.size() when it passed all).
  std::size_t sift(Permutation& g, std::size_t from_level, Permutation& scratch) const;
  Permutation transversal(std::size_t level, Point target) const;
  void randomized_phase(const GroupOptions& options);
  void deterministic_phase();
  void finish();

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> strong_;
  std::vector<Permutation> strong_inv_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
  bool exact_ = true;
};

inline bool membership(const GroupHandle& g, const Permutation& p) { return g.contains(p); }

/// Generators of Stab_M(edge 1) for the monodromy group M = <sigma0, sigma1>,
/// with duplicates and identities removed.
std::vector<Permutation> stabilizer_generators(const Dessin& d, const GroupOptions& options = {});

/// |M| == degree.
bool is_regular(const Dessin& d, const GroupOptions& options = {});

/// A candidate homomorphism rho: M -> {+1,-1} given by its values on sigma0, sigma1.
struct SignMap {
  int on_sigma0;
  int on_sigma1;
  friend bool operator==(const SignMap&, const SignMap&) = default;
};

/// The sign map whose kernel condition governs Z-orientability of the
/// j-th twist: j = 0 flips both generators, j = 1 flips only sigma1
/// (kernel contains sigma0), j = 2 flips only sigma0 (kernel contains sigma1).
SignMap sign_map_for_twist(int j);
inline constexpr std::array<SignMap, 3> kSignMaps = {SignMap{-1, -1}, SignMap{+1, -1}, SignMap{-1, +1}};
std::string to_string(const SignMap& m);

enum class QuotientType { Trivial, Z2, Z2xZ2 };
std::string to_string(QuotientType q);

struct MSquaredClass {
  std::vector<SignMap> existing_sign_maps;  // in kSignMaps order
  QuotientType quotient_type = QuotientType::Trivial;
  bool has(const SignMap& m) const;
};

/// Generators on 2n points (i, s) -> (sigma(i), rho(sigma) s); the pair
/// (i, +) is point i and (i, -) is point i + n.
std::array<Permutation, 2> sign_doubled_pair(const Dessin& d, const SignMap& m);
/// h acting identically on both sheets.
Permutation lift_to_both_sheets(const Permutation& h);

MSquaredClass m_squared_class(const Dessin& d, const GroupOptions& options = {});

/// Throws InvalidArgument when `m` does not extend to a homomorphism on M.
bool stabilizer_in_kernel(const Dessin& d, const SignMap& m, const GroupOptions& options = {});

/// Everything the sign-map questions need, computed once.
struct SignMapAnalysis {
  BigInt monodromy_order;
  MSquaredClass m_squared;
  std::vector<Permutation> stabilizer;
  // Per kSignMaps entry: empty when the map does not exist on M.
  std::array<std::optional<bool>, 3> stabilizer_in_kernel;
};
SignMapAnalysis analyze_sign_maps(const Dessin& d, const GroupOptions& options = {});

/// Z-orientability of (D, D', D'') predicted from M/M^2 and the position of
/// the edge stabilizer, case by case on the quotient type.
std::array<bool, 3> classify_by_monodromy(const Dessin& d, const GroupOptions& options = {});
std::array<bool, 3> classify_by_monodromy(const SignMapAnalysis& analysis);

struct RegularCover {
  Dessin dessin;
  // Edge of the cover (an element m of M) -> edge of D, namely m(1).
  std::vector<Point> projection;
};

/// Action of M on itself by right multiplication. Throws GuardExceeded when |M| > bound.
RegularCover minimal_regular_cover(const Dessin& d, std::size_t bound = 1000000,
                                   const GroupOptions& options = {});

}  // namespace dessin
