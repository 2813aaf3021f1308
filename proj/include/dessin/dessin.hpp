#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "dessin/perm.hpp"

namespace dessin {

inline constexpr std::size_t kDefaultMaxDegree = 100000;

/// A transitive pair (sigma0, sigma1) of edge permutations. sigma0 rotates
/// edges around white vertices, sigma1 around black vertices; faces are the
/// cycles of sigma_infinity = (sigma0 sigma1)^-1.
class Dessin {
 public:
  /// Throws DegreeMismatch or NotTransitiveError.
  static Dessin from_pair(Permutation sigma0, Permutation sigma1);

  std::size_t degree() const noexcept { return sigma0_.degree(); }
  const Permutation& sigma0() const noexcept { return sigma0_; }
  const Permutation& sigma1() const noexcept { return sigma1_; }
  const Permutation& sigma_infinity() const noexcept { return sigma_inf_; }

  friend bool operator==(const Dessin& a, const Dessin& b) {
    return a.sigma0_ == b.sigma0_ && a.sigma1_ == b.sigma1_;
  }

 private:
  Dessin(Permutation s0, Permutation s1, Permutation sinf)
      : sigma0_(std::move(s0)), sigma1_(std::move(s1)), sigma_inf_(std::move(sinf)) {}
  friend Dessin twist(const Dessin&);
  friend Dessin color_transpose(const Dessin&);

  Permutation sigma0_;
  Permutation sigma1_;
  Permutation sigma_inf_;
};

struct Passport {
  CycleType white;
  CycleType black;
  CycleType face;
  std::int64_t genus = 0;
  std::array<BigInt, 3> type_triple;

  friend bool operator==(const Passport&, const Passport&) = default;
};

inline Permutation sigma_infinity(const Dessin& d) { return d.sigma_infinity(); }

Passport passport(const Dessin& d);
/// Genus from the vertex and face counts; throws Internal on a half-integer result.
std::int64_t genus_from_counts(std::size_t degree, std::size_t white, std::size_t black, std::size_t faces);

/// (sigma0, sigma1, sigma_inf) -> (sigma1, sigma_inf, sigma0).
Dessin twist(const Dessin& d);
/// twist applied `times` times (taken mod 3).
Dessin twisted(const Dessin& d, int times);
/// Swaps the vertex colours: (sigma0, sigma1) -> (sigma1, sigma0).
Dessin color_transpose(const Dessin& d);

/// Cycles of sigma_infinity, 0-based, canonical rotation, ordered by least element.
/// Fixed points of sigma_infinity are faces of degree one and are included.
std::vector<std::vector<Point>> faces(const Dessin& d);

/// Edges whose two incident faces coincide. Edge i borders the face containing
/// i and the face containing sigma1(i). Returned 0-based and ascending.
std::vector<Point> monofacial_edges(const Dessin& d);

/// Number of edge bijections commuting with sigma0 and sigma1.
std::size_t automorphism_order(const Dessin& d, std::size_t max_degree = kDefaultMaxDegree);

/// True when the automorphism group acts transitively on edges, i.e. the
/// dessin is regular. Runs at most two extension searches.
bool has_transitive_automorphisms(const Dessin& d);

/// True when `projection` (edge of `cover` -> edge of `base`) intertwines both
/// generator pairs and every fibre has size cover.degree() / base.degree().
bool is_covering_map(const Dessin& cover, const Dessin& base, std::span<const Point> projection);

bool is_uniform(const Passport& p);
inline bool is_uniform(const Dessin& d) { return is_uniform(passport(d)); }

}  // namespace dessin
