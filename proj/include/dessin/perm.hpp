#pragma once

// Permutations of {1..n}. Labels are 1-based in every external format
// (cycle text, files, reports) and 0-based inside Permutation.
//
// Products are composed left to right: compose(p, q) maps i to q(p(i)).

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dessin {

using Point = std::uint32_t;
using BigInt = boost::multiprecision::cpp_int;
using CycleType = std::vector<std::size_t>;  // ascending cycle lengths, fixed points included

class Permutation {
 public:
  Permutation() = default;
  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree);

  /// Takes 0-based images; throws InvalidArgument unless they form a bijection.
  static Permutation from_images(std::vector<Point> images);
  /// Takes 1-based images as written in external formats.
  static Permutation from_one_based(std::span<const std::int64_t> images);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const;
  std::size_t fixed_point_count() const;

  /// Disjoint cycles (0-based) of length >= 2, each rotated to start at its
  /// least element, ordered by least element.
  std::vector<std::vector<Point>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}
  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
  friend void compose_into(const Permutation&, const Permutation&, Permutation&);
  friend Permutation unchecked_from_images(std::vector<Point> images);

  std::vector<Point> images_;
};

/// Cycle notation, e.g. "(1,2,3)(4,5)". Empty text or "()" is the identity.
Permutation parse_cycles(std::string_view text, std::size_t degree);
/// Canonical cycle notation with fixed points omitted; identity prints as "()".
std::string to_cycle_string(const Permutation& p);

Permutation compose(const Permutation& p, const Permutation& q);
// out = compose(p, q); `out` is resized and must not be `p`.
void compose_into(const Permutation& p, const Permutation& q, Permutation& out);
Permutation inverse(const Permutation& p);
Permutation power(const Permutation& p, std::int64_t exponent);
CycleType cycle_type(const Permutation& p);
BigInt order(const Permutation& p);
bool is_even(const Permutation& p);

// Skips the bijection check; the caller guarantees `images` is a permutation.
Permutation unchecked_from_images(std::vector<Point> images);

BigInt lcm_of(const CycleType& lengths);
/// Size of the centralizer in S_n of a permutation with this cycle type:
/// the product over lengths l occurring k times of l^k * k!.
BigInt centralizer_order(const CycleType& lengths);

/// Orbits of the group generated by `gens` on {0..n-1}, each sorted, ordered by least element.
std::vector<std::vector<Point>> orbits(std::span<const Permutation> gens, std::size_t degree);

}  // namespace dessin
