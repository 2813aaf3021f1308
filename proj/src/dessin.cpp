#include "dessin/dessin.hpp"

#include <algorithm>

#include "dessin/error.hpp"

namespace dessin {

namespace {

std::string describe_orbits(const std::vector<std::vector<std::size_t>>& orbits) {
  std::string out = "generators are not transitive; orbits:";
  for (const auto& orbit : orbits) {
    out += " {";
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(orbit[k]);
    }
    out += '}';
  }
  return out;
}

// Length of the cycle through each point.
std::vector<std::uint32_t> cycle_length_of_point(const Permutation& p) {
  std::vector<std::uint32_t> len(p.degree(), 0);
  std::vector<Point> cycle;
  for (Point start = 0; start < p.degree(); ++start) {
    if (len[start]) continue;
    cycle.clear();
    Point i = start;
    do {
      cycle.push_back(i);
      i = p(i);
    } while (i != start);
    for (Point i : cycle) len[i] = static_cast<std::uint32_t>(cycle.size());
  }
  return len;
}

// Tries to extend 0 -> target to a bijection commuting with both generators.
bool extends_to_automorphism(const Dessin& d, Point target, std::vector<Point>& image, std::vector<Point>& queue) {
  constexpr Point kUnset = ~Point{0};
  std::fill(image.begin(), image.end(), kUnset);
  image[0] = target;
  queue.assign(1, 0);
  const Permutation* gens[2] = {&d.sigma0(), &d.sigma1()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Point x = queue[head];
    for (const Permutation* g : gens) {
      const Point gx = (*g)(x);
      const Point want = (*g)(image[x]);
      if (image[gx] == kUnset) {
        image[gx] = want;
        queue.push_back(gx);
      } else if (image[gx] != want) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

NotTransitiveError::NotTransitiveError(std::vector<std::vector<std::size_t>> orbits)
    : Error(ErrorKind::NotTransitive, describe_orbits(orbits)), orbits_(std::move(orbits)) {}

Dessin Dessin::from_pair(Permutation sigma0, Permutation sigma1) {
  if (sigma0.degree() != sigma1.degree())
    throw Error(ErrorKind::DegreeMismatch, "sigma0 has degree " + std::to_string(sigma0.degree()) +
                                               " but sigma1 has degree " + std::to_string(sigma1.degree()));
  if (sigma0.degree() == 0) throw Error(ErrorKind::InvalidArgument, "a dessin needs at least one edge");
  const Permutation gens[2] = {sigma0, sigma1};
  const auto orbs = orbits(gens, sigma0.degree());
  if (orbs.size() != 1) {
    std::vector<std::vector<std::size_t>> one_based;
    for (const auto& orbit : orbs) {
      std::vector<std::size_t> o;
      for (Point p : orbit) o.push_back(p + 1);
      one_based.push_back(std::move(o));
    }
    throw NotTransitiveError(std::move(one_based));
  }
  Permutation sinf = inverse(compose(sigma0, sigma1));
  return Dessin(std::move(sigma0), std::move(sigma1), std::move(sinf));
}

std::int64_t genus_from_counts(std::size_t degree, std::size_t white, std::size_t black, std::size_t faces) {
  const std::int64_t excess = static_cast<std::int64_t>(degree) - static_cast<std::int64_t>(white) -
                              static_cast<std::int64_t>(black) - static_cast<std::int64_t>(faces);
  if (excess % 2 != 0 || excess < -2)
    throw Error(ErrorKind::Internal, "Euler characteristic inconsistency: n - alpha - beta - gamma = " +
                                         std::to_string(excess));
  return 1 + excess / 2;
}

Passport passport(const Dessin& d) {
  Passport p;
  p.white = cycle_type(d.sigma0());
  p.black = cycle_type(d.sigma1());
  p.face = cycle_type(d.sigma_infinity());
  p.genus = genus_from_counts(d.degree(), p.white.size(), p.black.size(), p.face.size());
  p.type_triple = {lcm_of(p.white), lcm_of(p.black), lcm_of(p.face)};
  return p;
}

Dessin twist(const Dessin& d) { return Dessin(d.sigma1_, d.sigma_inf_, d.sigma0_); }

Dessin twisted(const Dessin& d, int times) {
  Dessin out = d;
  for (int k = 0; k < ((times % 3) + 3) % 3; ++k) out = twist(out);
  return out;
}

Dessin color_transpose(const Dessin& d) {
  return Dessin(d.sigma1_, d.sigma0_, inverse(compose(d.sigma1_, d.sigma0_)));
}

std::vector<std::vector<Point>> faces(const Dessin& d) {
  const Permutation& f = d.sigma_infinity();
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(f.degree(), false);
  for (Point start = 0; start < f.degree(); ++start) {
    if (seen[start]) continue;
    std::vector<Point> cycle;
    for (Point i = start; !seen[i]; i = f(i)) {
      seen[i] = true;
      cycle.push_back(i);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<Point> monofacial_edges(const Dessin& d) {
  const Permutation& f = d.sigma_infinity();
  std::vector<std::uint32_t> face_of(f.degree());
  std::vector<bool> seen(f.degree(), false);
  std::uint32_t face_id = 0;
  for (Point start = 0; start < f.degree(); ++start) {
    if (seen[start]) continue;
    for (Point i = start; !seen[i]; i = f(i)) {
      seen[i] = true;
      face_of[i] = face_id;
    }
    ++face_id;
  }
  std::vector<Point> out;
  for (Point i = 0; i < d.degree(); ++i)
    if (face_of[i] == face_of[d.sigma1()(i)]) out.push_back(i);
  return out;
}

std::size_t automorphism_order(const Dessin& d, std::size_t max_degree) {
  check_guard("automorphism search degree", d.degree(), max_degree);
  const auto l0 = cycle_length_of_point(d.sigma0());
  const auto l1 = cycle_length_of_point(d.sigma1());
  const auto linf = cycle_length_of_point(d.sigma_infinity());
  std::vector<Point> image(d.degree());
  std::vector<Point> queue;
  std::size_t count = 0;
  for (Point e = 0; e < d.degree(); ++e) {
    if (l0[e] != l0[0] || l1[e] != l1[0] || linf[e] != linf[0]) continue;
    if (extends_to_automorphism(d, e, image, queue)) ++count;
  }
  return count;
}

bool has_transitive_automorphisms(const Dessin& d) {
  // The automorphism orbit of edge 0 is closed under both generators once
  // 0 -> sigma0(0) and 0 -> sigma1(0) extend, so it is everything.
  std::vector<Point> image(d.degree());
  std::vector<Point> queue;
  return extends_to_automorphism(d, d.sigma0()(0), image, queue) &&
         extends_to_automorphism(d, d.sigma1()(0), image, queue);
}

bool is_covering_map(const Dessin& cover, const Dessin& base, std::span<const Point> projection) {
  if (projection.size() != cover.degree() || cover.degree() % base.degree() != 0) return false;
  std::vector<std::size_t> fibre(base.degree(), 0);
  for (Point x = 0; x < cover.degree(); ++x) {
    const Point px = projection[x];
    if (px >= base.degree()) return false;
    ++fibre[px];
    if (projection[cover.sigma0()(x)] != base.sigma0()(px)) return false;
    if (projection[cover.sigma1()(x)] != base.sigma1()(px)) return false;
  }
  const std::size_t sheets = cover.degree() / base.degree();
  return std::all_of(fibre.begin(), fibre.end(), [sheets](std::size_t f) { return f == sheets; });
}

bool is_uniform(const Passport& p) {
  auto constant = [](const CycleType& c) { return std::adjacent_find(c.begin(), c.end(), std::not_equal_to<>()) == c.end(); };
  return constant(p.white) && constant(p.black) && constant(p.face);
}

}  // namespace dessin
