#pragma once

// Slow, independent reference computations used only by tests.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "dessin/dessin.hpp"
#include "dessin/perm.hpp"

namespace oracle {

using dessin::Dessin;
using dessin::Permutation;
using dessin::Point;

inline std::vector<Point> apply_after(const std::vector<Point>& p, const std::vector<Point>& q) {
  // i -> q(p(i))
  std::vector<Point> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

inline std::vector<Point> images_of(const Permutation& p) { return {p.images().begin(), p.images().end()}; }

/// Exhaustive search over all sign vectors with the first edge positive.
inline bool orientable_by_search(const Dessin& d) {
  const std::size_t n = d.degree();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    auto sign = [&](Point i) { return i == 0 ? 0 : static_cast<int>((mask >> (i - 1)) & 1); };
    bool ok = true;
    for (Point i = 0; i < n && ok; ++i)
      ok = sign(d.sigma0()(i)) != sign(i) && sign(d.sigma1()(i)) != sign(i);
    if (ok) return true;
  }
  return false;
}

/// All group elements by breadth-first closure.
inline std::set<std::vector<Point>> group_elements(const std::vector<Permutation>& gens) {
  const std::size_t n = gens.front().degree();
  std::vector<Point> id(n);
  std::iota(id.begin(), id.end(), Point{0});
  std::set<std::vector<Point>> seen{id};
  std::vector<std::vector<Point>> queue{id};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : gens) {
      auto next = apply_after(queue[head], images_of(g));
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return seen;
}

/// Whether sigma0 -> s0, sigma1 -> s1 extends to a homomorphism M -> {+1,-1}:
/// walk the Cayley graph carrying signs and look for a clash.
inline bool sign_map_exists(const Dessin& d, int s0, int s1) {
  const std::size_t n = d.degree();
  std::vector<Point> id(n);
  std::iota(id.begin(), id.end(), Point{0});
  std::map<std::vector<Point>, int> sign{{id, 1}};
  std::vector<std::vector<Point>> queue{id};
  const std::vector<Point> g[2] = {images_of(d.sigma0()), images_of(d.sigma1())};
  const int gs[2] = {s0, s1};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int here = sign[queue[head]];
    for (int k = 0; k < 2; ++k) {
      auto next = apply_after(queue[head], g[k]);
      auto [it, inserted] = sign.emplace(next, here * gs[k]);
      if (inserted) {
        queue.push_back(std::move(next));
      } else if (it->second != here * gs[k]) {
        return false;
      }
    }
  }
  return true;
}

/// Bijections of the edge set commuting with sigma0 and sigma1, by full scan (n <= 7).
inline std::size_t automorphisms_by_scan(const Dessin& d) {
  const std::size_t n = d.degree();
  std::vector<Point> f(n);
  std::iota(f.begin(), f.end(), Point{0});
  std::size_t count = 0;
  do {
    bool ok = true;
    for (Point i = 0; i < n && ok; ++i)
      ok = f[d.sigma0()(i)] == d.sigma0()(f[i]) && f[d.sigma1()(i)] == d.sigma1()(f[i]);
    count += ok;
  } while (std::next_permutation(f.begin(), f.end()));
  return count;
}

/// Cycles of sigma_inf computed from sigma0, sigma1 directly: i -> (sigma0 sigma1)^-1(i).
inline std::vector<int> face_index(const Dessin& d) {
  const std::size_t n = d.degree();
  std::vector<Point> prod(n);
  for (Point i = 0; i < n; ++i) prod[i] = d.sigma1()(d.sigma0()(i));
  std::vector<Point> inv(n);
  for (Point i = 0; i < n; ++i) inv[prod[i]] = i;
  std::vector<int> face(n, -1);
  int next = 0;
  for (Point i = 0; i < n; ++i) {
    if (face[i] >= 0) continue;
    for (Point j = i; face[j] < 0; j = inv[j]) face[j] = next;
    ++next;
  }
  return face;
}

}  // namespace oracle
