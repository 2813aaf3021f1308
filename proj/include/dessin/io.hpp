#pragma once

// Dessin files, analysis reports and invariant comparison.
//
// Text file:
//   n=<degree>
//   sigma0=<cycles>
//   sigma1=<cycles>
// with optional lines starting with '#'. A file whose first byte is '{' is
// read as a JSON object {"n": .., "sigma0": [..], "sigma1": [..]} holding
// 1-based image arrays.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dessin/construct.hpp"
#include "dessin/dessin.hpp"
#include "dessin/group.hpp"

namespace dessin {

/// Throws ParseError (offset into `text`), GuardExceeded when n > max_degree,
/// DegreeMismatch or NotTransitiveError.
Dessin parse_dessin(std::string_view text, std::size_t max_degree = kDefaultMaxConstructDegree);

std::string format_dessin(const Dessin& d);
std::string format_dessin_json(const Dessin& d);

struct AnalysisOptions {
  bool group = false;     // monodromy order and M/M^2 class
  bool aut = false;       // automorphism group order
  bool tot_only = false;  // degree, z_triple and tot only
  GroupOptions group_options;
  std::size_t max_aut_degree = kDefaultMaxDegree;
};

/// Edge labels are 1-based throughout.
struct AnalysisReport {
  std::size_t degree = 0;
  bool tot_only = false;
  CycleType white, black, face;
  std::int64_t genus = 0;
  std::array<BigInt, 3> type_triple;
  bool uniform = false;
  bool regular = false;
  std::vector<std::size_t> monofacial_edges;
  std::array<bool, 3> z_triple{};
  int tot = 0;
  // Positive and negative edges of the witness when D is Z-orientable.
  std::optional<std::array<std::vector<std::size_t>, 2>> sign_classes;
  std::optional<BigInt> group_order;
  std::optional<bool> group_order_exact;
  std::optional<std::string> m_squared_class;
  std::optional<std::size_t> aut_order;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

AnalysisReport analyze(const Dessin& d, const AnalysisOptions& options = {});

/// Human-readable report, one "key: value" line per field.
std::string to_text(const AnalysisReport& r);
/// JSON object with a fixed field order.
std::string to_json(const AnalysisReport& r);
/// Inverse of to_json. Throws ParseError.
AnalysisReport report_from_json(std::string_view text);

/// Run-length form of a multiset, e.g. "10^18 15^24 30^12".
std::string exponent_notation(const CycleType& lengths);

struct InvariantDiff {
  std::string name;
  std::string left;
  std::string right;
};

struct Comparison {
  std::vector<InvariantDiff> rows;  // every compared invariant, in fixed order
  std::vector<std::string> separated_by;
};

/// Compares Galois invariants only; with options.group also the monodromy
/// order, M/M^2 class and automorphism order.
Comparison compare(const Dessin& a, const Dessin& b, const AnalysisOptions& options = {});
std::string to_text(const Comparison& c);

}  // namespace dessin
