#include "dessin/zorient.hpp"

#include <algorithm>

#include "dessin/error.hpp"

namespace dessin {

namespace {

class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n) : parent_(n), rank_(n, 0), parity_(n, 0) {
    for (Point i = 0; i < n; ++i) parent_[i] = i;
  }

  // Root of x, with the parity of x relative to it.
  std::pair<Point, std::uint8_t> find(Point x) {
    std::uint8_t acc = 0;
    Point root = x;
    while (parent_[root] != root) {
      acc ^= parity_[root];
      root = parent_[root];
    }
    // Compress: every node on the path points at root with its own parity.
    std::uint8_t remaining = acc;
    while (parent_[x] != x) {
      const Point next = parent_[x];
      const std::uint8_t own = parity_[x];
      parent_[x] = root;
      parity_[x] = remaining;
      remaining ^= own;
      x = next;
    }
    return {root, acc};
  }

  // Records parity(a) != parity(b); false on contradiction.
  bool unite_opposite(Point a, Point b) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == 1;
    if (rank_[ra] < rank_[rb]) {
      std::swap(ra, rb);
      std::swap(pa, pb);
    }
    parent_[rb] = ra;
    parity_[rb] = static_cast<std::uint8_t>(pa ^ pb ^ 1);
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
    return true;
  }

 private:
  std::vector<Point> parent_;
  std::vector<std::uint8_t> rank_;
  std::vector<std::uint8_t> parity_;
};

std::optional<SignAssignment> parity_signs(const Dessin& d) {
  const std::size_t n = d.degree();
  ParityUnionFind uf(n);
  for (Point i = 0; i < n; ++i) {
    if (!uf.unite_opposite(i, d.sigma0()(i))) return std::nullopt;
    if (!uf.unite_opposite(i, d.sigma1()(i))) return std::nullopt;
  }
  SignAssignment s;
  s.signs.resize(n);
  const std::uint8_t ref = uf.find(0).second;
  for (Point i = 0; i < n; ++i) s.signs[i] = (uf.find(i).second ^ ref) ? std::int8_t{-1} : std::int8_t{+1};
  return s;
}

OddWalk find_odd_walk(const Dessin& d) {
  const std::size_t n = d.degree();
  const Permutation inv0 = inverse(d.sigma0());
  const Permutation inv1 = inverse(d.sigma1());
  constexpr std::uint32_t kUnseen = ~std::uint32_t{0};
  std::vector<std::uint32_t> depth(n, kUnseen);
  std::vector<Point> parent(n, 0);
  std::vector<WalkStep> via(n);
  std::vector<Point> queue{0};
  depth[0] = 0;

  auto path_from_root = [&](Point x) {
    std::vector<WalkStep> steps;
    for (; x != 0; x = parent[x]) steps.push_back(via[x]);
    std::reverse(steps.begin(), steps.end());
    return steps;
  };

  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Point x = queue[head];
    const std::array<std::pair<Point, WalkStep>, 4> moves = {{
        {d.sigma0()(x), WalkStep{0, false}},
        {inv0(x), WalkStep{0, true}},
        {d.sigma1()(x), WalkStep{1, false}},
        {inv1(x), WalkStep{1, true}},
    }};
    for (const auto& [y, step] : moves) {
      if (depth[y] == kUnseen) {
        depth[y] = depth[x] + 1;
        parent[y] = x;
        via[y] = step;
        queue.push_back(y);
      } else if ((depth[y] & 1) == (depth[x] & 1)) {
        OddWalk walk;
        walk.start = 0;
        walk.steps = path_from_root(x);
        walk.steps.push_back(step);
        auto back = path_from_root(y);
        for (auto it = back.rbegin(); it != back.rend(); ++it) walk.steps.push_back(WalkStep{it->generator, !it->inverse});
        return walk;
      }
    }
  }
  throw Error(ErrorKind::Internal, "parity check failed but no odd closed walk was found");
}

}  // namespace

std::vector<Point> SignAssignment::positive() const {
  std::vector<Point> out;
  for (Point i = 0; i < signs.size(); ++i)
    if (signs[i] > 0) out.push_back(i);
  return out;
}

std::vector<Point> SignAssignment::negative() const {
  std::vector<Point> out;
  for (Point i = 0; i < signs.size(); ++i)
    if (signs[i] < 0) out.push_back(i);
  return out;
}

OrientabilityReport z_orientable(const Dessin& d) {
  OrientabilityReport report;
  report.witness = parity_signs(d);
  report.verdict = report.witness.has_value();
  if (!report.verdict) report.obstruction = find_odd_walk(d);
  return report;
}

bool is_z_orientable(const Dessin& d) { return parity_signs(d).has_value(); }

bool is_valid_witness(const Dessin& d, const SignAssignment& s) {
  if (s.signs.size() != d.degree()) return false;
  for (Point i = 0; i < d.degree(); ++i) {
    if (s.signs[i] != 1 && s.signs[i] != -1) return false;
    if (s.signs[d.sigma0()(i)] != -s.signs[i]) return false;
    if (s.signs[d.sigma1()(i)] != -s.signs[i]) return false;
  }
  return true;
}

bool is_valid_obstruction(const Dessin& d, const OddWalk& w) {
  if (w.start >= d.degree() || w.steps.size() % 2 == 0) return false;
  const Permutation inv0 = inverse(d.sigma0());
  const Permutation inv1 = inverse(d.sigma1());
  Point x = w.start;
  for (const auto& s : w.steps) {
    if (s.generator == 0) {
      x = s.inverse ? inv0(x) : d.sigma0()(x);
    } else if (s.generator == 1) {
      x = s.inverse ? inv1(x) : d.sigma1()(x);
    } else {
      return false;
    }
  }
  return x == w.start;
}

TotResult tot(const Dessin& d) {
  TotResult out;
  Dessin current = d;
  for (std::size_t j = 0; j < 3; ++j) {
    out.verdicts[j] = is_z_orientable(current);
    out.tot += out.verdicts[j] ? 1 : 0;
    current = twist(current);
  }
  return out;
}

DoubleCoverResult sign_double_cover(const Dessin& d, int j) {
  auto pair = sign_doubled_pair(d, sign_map_for_twist(j));
  if (orbits(pair, 2 * d.degree()).size() != 1) return Split{};
  return Dessin::from_pair(std::move(pair[0]), std::move(pair[1]));
}

Dessin cover_to_max_tot(const Dessin& d, const GroupOptions& options) {
  const MSquaredClass cls = m_squared_class(d, options);
  Dessin current = d;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 0; j < 3; ++j) {
      if (!cls.has(sign_map_for_twist(j)) || is_z_orientable(twisted(current, j))) continue;
      auto next = sign_double_cover(current, j);
      if (!std::holds_alternative<Dessin>(next))
        throw Error(ErrorKind::Internal, "doubled action split although the parity check failed");
      current = std::get<Dessin>(std::move(next));
      changed = true;
    }
  }
  return current;
}

std::optional<std::vector<std::uint8_t>> covering_to_degree2(const Dessin& d) {
  const auto signs = parity_signs(d);
  if (!signs) return std::nullopt;
  std::vector<std::uint8_t> map(d.degree());
  for (Point i = 0; i < d.degree(); ++i) map[i] = signs->signs[i] > 0 ? 1 : 2;
  return map;
}

}  // namespace dessin
