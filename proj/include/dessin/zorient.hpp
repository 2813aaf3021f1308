#pragma once

// Z-orientability: a dessin is Z-orientable when its edges can be signed +/-
// so that sigma0 and sigma1 both reverse every sign. The check is a parity
// union-find over the relations i ~ sigma0(i), i ~ sigma1(i).

#include <array>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "dessin/dessin.hpp"
#include "dessin/group.hpp"

namespace dessin {

struct SignAssignment {
  std::vector<std::int8_t> signs;  // per edge (0-based), +1 or -1; signs[0] == +1

  std::vector<Point> positive() const;
  std::vector<Point> negative() const;
};

struct WalkStep {
  int generator = 0;  // 0 for sigma0, 1 for sigma1
  bool inverse = false;
  friend bool operator==(const WalkStep&, const WalkStep&) = default;
};

/// A closed walk of odd length in the parity graph: no sign assignment can exist.
struct OddWalk {
  Point start = 0;
  std::vector<WalkStep> steps;
};

struct OrientabilityReport {
  bool verdict = false;
  std::optional<SignAssignment> witness;
  std::optional<OddWalk> obstruction;
};

struct TotResult {
  std::array<bool, 3> verdicts{};  // D, D', D''
  int tot = 0;
};

/// The doubled action along a twist index that is already orientable falls
/// apart into two orbits.
struct Split {};
using DoubleCoverResult = std::variant<Dessin, Split>;

OrientabilityReport z_orientable(const Dessin& d);
/// Verdict only; no witness or obstruction is materialized.
bool is_z_orientable(const Dessin& d);

bool is_valid_witness(const Dessin& d, const SignAssignment& s);
bool is_valid_obstruction(const Dessin& d, const OddWalk& w);

TotResult tot(const Dessin& d);

/// Degree-2n dessin on edge x sign pairs where the generators of the j-th
/// twist flip the sign, written in the untwisted frame; edge (i, +) is i and
/// (i, -) is i + n. Forgetting the sign covers D.
DoubleCoverResult sign_double_cover(const Dessin& d, int j);

/// Doubles along every twist index whose sign homomorphism exists on M but
/// whose parity check fails, until none remain.
Dessin cover_to_max_tot(const Dessin& d, const GroupOptions& options = {});

/// Edge -> 1 (sign +) or 2 (sign -), a covering of the degree-2 dessin;
/// empty when D is not Z-orientable.
std::optional<std::vector<std::uint8_t>> covering_to_degree2(const Dessin& d);

}  // namespace dessin
