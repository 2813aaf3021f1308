#include "dessin/construct.hpp"

#include <algorithm>
#include <boost/container_hash/hash.hpp>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

#include "dessin/error.hpp"
#include "dessin/kernels.hpp"

namespace dessin {

Dessin degree2_dessin() { return Dessin::from_pair(parse_cycles("(1,2)", 2), parse_cycles("(1,2)", 2)); }

GenusTwoPair genus_two_pair() {
  Dessin plain = Dessin::from_pair(parse_cycles("(1,2,3,4)(5,6,7,8)", 8), parse_cycles("(1,5,2,6)(3,7,4,8)", 8));
  Dessin orientable = Dessin::from_pair(plain.sigma_infinity(), plain.sigma1());
  return {std::move(plain), std::move(orientable)};
}

Permutation parse_primed_cycles(std::string_view text, std::size_t half) {
  std::string plain;
  std::string digits;
  auto flush = [&](bool primed) {
    if (digits.empty()) return;
    plain += primed ? std::to_string(std::stoul(digits) + half) : digits;
    digits.clear();
  };
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      digits += c;
    } else if (c == '\'') {
      flush(true);
    } else {
      flush(false);
      plain += c;
    }
  }
  flush(false);
  return parse_cycles(plain, 2 * half);
}

Dessin genus_three_cover() {
  return Dessin::from_pair(parse_primed_cycles("(1,2',3,4')(1',2,3',4)(5,6',7,8')(5',6,7',8)", 8),
                           parse_primed_cycles("(1,5',2,6')(1',5,2',6)(3,7',4,8')(3',7,4',8)", 8));
}

Dessin dihedral_path(std::size_t n) {
  if (n < 3 || n % 2 == 0)
    throw Error(ErrorKind::InvalidArgument, "dihedral path needs odd n >= 3, got " + std::to_string(n));
  std::vector<Point> s0(n), s1(n);
  for (std::size_t i = 0; i < n; ++i) {
    s0[i] = static_cast<Point>((n - i) % n);
    s1[i] = static_cast<Point>((n + 1 - i) % n);
  }
  return Dessin::from_pair(Permutation::from_images(std::move(s0)), Permutation::from_images(std::move(s1)));
}

std::vector<Permutation> closure(std::span<const Permutation> gens, std::size_t limit) {
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "closure needs at least one generator");
  std::set<Permutation> seen;
  std::vector<Permutation> queue{Permutation(gens.front().degree())};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : gens) {
      Permutation next = compose(queue[head], g);
      if (seen.insert(next).second) {
        check_guard("closure size", seen.size(), limit);
        queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

bool contains_sorted(const std::vector<Permutation>& sorted, const Permutation& p) {
  return std::binary_search(sorted.begin(), sorted.end(), p);
}

CubeGroups make_cube_groups() {
  // Quarter turns about the axes through faces 1/6 and 2/5, and the antipodal map.
  const Permutation turn_a = parse_cycles("(2,3,5,4)", 6);
  const Permutation turn_b = parse_cycles("(1,3,6,4)", 6);
  const Permutation antipode = parse_cycles("(1,6)(2,5)(3,4)", 6);

  CubeGroups g;
  const Permutation rot_gens[] = {turn_a, turn_b};
  g.rotations = closure(rot_gens);
  const Permutation iso_gens[] = {turn_a, turn_b, antipode};
  g.isometries = closure(iso_gens);
  // Even rotations (the commutator subgroup) together with odd rotations times the antipode.
  for (const auto& r : g.rotations) g.tetrahedral.push_back(is_even(r) ? r : compose(r, antipode));
  std::sort(g.tetrahedral.begin(), g.tetrahedral.end());

  auto require = [](bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::Internal, std::string("cube group invariant failed: ") + what);
  };
  require(g.rotations.size() == 24, "|Q| = 24");
  require(g.tetrahedral.size() == 24, "|P| = 24");
  require(g.isometries.size() == 48, "|G| = 48");
  require(orbits(g.rotations, 6).size() == 1, "Q transitive");
  require(orbits(g.tetrahedral, 6).size() == 1, "P transitive");
  std::size_t common = 0;
  for (const auto& p : g.tetrahedral) common += contains_sorted(g.rotations, p);
  require(common == 12, "|P cap Q| = 12");
  for (const auto& q : g.rotations)
    if (order(q) == 4) require(cycle_type(q) == CycleType{1, 1, 4}, "order-4 rotations have type 1,1,4");
  for (const auto& p : g.tetrahedral)
    if (order(p) == 4) require(cycle_type(p) == CycleType{2, 4}, "order-4 tetrahedral elements have type 2,4");
  for (const auto& p : g.tetrahedral) require(contains_sorted(g.isometries, p), "P inside G");
  return g;
}

}  // namespace

const CubeGroups& cube_groups() {
  static const CubeGroups groups = make_cube_groups();
  return groups;
}

std::vector<Permutation> normalizer_in_symmetric(const std::vector<Permutation>& subgroup) {
  if (subgroup.empty()) throw Error(ErrorKind::InvalidArgument, "empty subgroup");
  const std::size_t k = subgroup.front().degree();
  check_guard("normalizer scan degree", k, 8);
  std::vector<Permutation> sorted = subgroup;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Point> images(k);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<Permutation> out;
  do {
    const Permutation g = unchecked_from_images(images);
    const Permutation g_inv = inverse(g);
    bool normalizes = true;
    for (const auto& x : sorted) {
      if (!contains_sorted(sorted, compose(compose(g_inv, x), g))) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) out.push_back(g);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Permutation extend_to_degree(const Permutation& p, std::size_t n) {
  if (n < p.degree())
    throw Error(ErrorKind::InvalidArgument, "cannot extend degree " + std::to_string(p.degree()) + " to " +
                                                std::to_string(n));
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  for (Point i = 0; i < p.degree(); ++i) images[i] = p(i);
  return unchecked_from_images(std::move(images));
}

std::vector<Permutation> subgroup_a(std::size_t n) {
  std::vector<Permutation> out;
  for (const auto& p : cube_groups().tetrahedral) out.push_back(extend_to_degree(p, n));
  return out;
}

std::vector<Permutation> subgroup_b(std::size_t n) {
  std::vector<Permutation> out;
  for (const auto& q : cube_groups().rotations) out.push_back(extend_to_degree(q, n));
  return out;
}

StandardTriple standard_triple(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "standard triple needs n >= 3");
  std::vector<Point> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = static_cast<Point>((i + 1) % n);
  Permutation x = unchecked_from_images(std::move(xs));
  Permutation y = parse_cycles("(1,2)", n);
  Permutation z = inverse(compose(x, y));
  return {std::move(x), std::move(y), std::move(z)};
}

std::array<Permutation, 3> pair_action_generators(std::size_t n) {
  const StandardTriple t = standard_triple(n);
  auto pair = [n](const Permutation& g, const Permutation& h) {
    std::vector<Point> images(2 * n);
    for (Point i = 0; i < n; ++i) {
      images[i] = g(i);
      images[i + n] = static_cast<Point>(h(i) + n);
    }
    return unchecked_from_images(std::move(images));
  };
  return {pair(t.y, t.z), pair(t.z, t.x), pair(t.x, t.y)};
}

std::array<BigInt, 3> generator_orders(std::size_t n) {
  const StandardTriple t = standard_triple(n);
  auto lcm2 = [](const BigInt& a, const BigInt& b) { return a / boost::multiprecision::gcd(a, b) * b; };
  const BigInt ox = order(t.x), oy = order(t.y), oz = order(t.z);
  return {lcm2(oy, oz), lcm2(oz, ox), lcm2(ox, oy)};
}

CosetAction coset_action(std::size_t n, const std::vector<Permutation>& subgroup) {
  using Key = std::vector<Point>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return boost::hash_range(k.begin(), k.end()); }
  };
  // Least image sequence over the coset X g: entry i of x g is g(x(i)).
  auto canonical = [&](const Key& g) {
    Key best;
    Key candidate(n);
    for (const auto& x : subgroup) {
      for (std::size_t i = 0; i < n; ++i) candidate[i] = g[x(static_cast<Point>(i))];
      if (best.empty() || candidate < best) best = candidate;
    }
    return best;
  };
  const StandardTriple t = standard_triple(n);
  const Permutation* gens[3] = {&t.x, &t.y, &t.z};

  std::vector<Key> reps;
  std::unordered_map<Key, std::size_t, KeyHash> found;
  Key id(n);
  std::iota(id.begin(), id.end(), Point{0});
  reps.push_back(canonical(id));
  found.emplace(reps.back(), 0);
  std::vector<std::array<std::size_t, 3>> moves;
  for (std::size_t head = 0; head < reps.size(); ++head) {
    std::array<std::size_t, 3> m{};
    for (std::size_t k = 0; k < 3; ++k) {
      Key next(n);
      for (std::size_t i = 0; i < n; ++i) next[i] = (*gens[k])(reps[head][i]);
      next = canonical(next);
      auto [it, inserted] = found.emplace(next, reps.size());
      if (inserted) reps.push_back(std::move(next));
      m[k] = it->second;
    }
    moves.push_back(m);
  }

  const std::size_t count = reps.size();
  std::vector<std::size_t> by_name(count);
  std::iota(by_name.begin(), by_name.end(), std::size_t{0});
  std::sort(by_name.begin(), by_name.end(), [&](std::size_t a, std::size_t b) { return reps[a] < reps[b]; });
  std::vector<Point> rank(count);
  for (std::size_t r = 0; r < count; ++r) rank[by_name[r]] = static_cast<Point>(r);

  std::array<std::vector<Point>, 3> act;
  for (auto& a : act) a.resize(count);
  for (std::size_t c = 0; c < count; ++c)
    for (std::size_t k = 0; k < 3; ++k) act[k][rank[c]] = rank[moves[c][k]];
  return CosetAction{count, Permutation::from_images(std::move(act[0])), Permutation::from_images(std::move(act[1])),
                     Permutation::from_images(std::move(act[2]))};
}

namespace {

Permutation product_permutation(const Permutation& outer, const Permutation& inner) {
  std::vector<Point> images(outer.degree() * inner.degree());
  kernels::product_action(outer.images(), inner.images(), images);
  return unchecked_from_images(std::move(images));
}

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

SnxSnDessin snxsn_dessin(std::size_t n, int index, std::size_t max_degree) {
  if (n < 6) throw Error(ErrorKind::InvalidArgument, "the S_n x S_n construction needs n >= 6");
  if (index < 0 || index > 3) throw Error(ErrorKind::InvalidArgument, "dessin index must be 0..3");
  const BigInt per_factor = factorial(n) / 24;
  const BigInt degree = per_factor * per_factor;
  if (degree > max_degree)
    throw GuardExceeded("S_n x S_n dessin degree " + degree.str() + " exceeds limit " + std::to_string(max_degree));

  const bool first_is_a = index == 2 || index == 3;
  const bool second_is_a = index == 1 || index == 3;
  SnxSnDessin out{degree2_dessin(), n, index, 0, first_is_a ? subgroup_a(n) : subgroup_b(n),
                  second_is_a ? subgroup_a(n) : subgroup_b(n)};
  const CosetAction left = coset_action(n, out.first);
  const CosetAction right = first_is_a == second_is_a ? left : coset_action(n, out.second);
  out.coset_count = left.count;
  // m0 = (y, z), m1 = (z, x).
  out.dessin = Dessin::from_pair(product_permutation(left.y, right.z), product_permutation(left.z, right.x));
  return out;
}

BigInt fixed_points_class_formula(const Permutation& g, const Permutation& h, const std::vector<Permutation>& first,
                                  const std::vector<Permutation>& second) {
  const CycleType tg = cycle_type(g);
  const CycleType th = cycle_type(h);
  std::size_t class_meets_h = 0;
  for (const auto& a : first) {
    if (cycle_type(a) != tg) continue;
    for (const auto& b : second) class_meets_h += cycle_type(b) == th;
  }
  const BigInt numerator = BigInt(class_meets_h) * centralizer_order(tg) * centralizer_order(th);
  const BigInt h_order = BigInt(first.size()) * second.size();
  if (numerator % h_order != 0)
    throw Error(ErrorKind::Internal, "fixed point count " + numerator.str() + "/" + h_order.str() + " is not integral");
  return numerator / h_order;
}

std::size_t enumerate_transitive_pairs(std::size_t n, const std::function<void(const Dessin&)>& visit) {
  check_guard("enumeration degree", n, 6);
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "enumeration degree must be positive");
  std::vector<Permutation> all;
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  do {
    all.push_back(unchecked_from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));

  std::size_t visited = 0;
  std::vector<Point> queue;
  std::vector<bool> seen(n);
  for (const auto& s0 : all) {
    for (const auto& s1 : all) {
      std::fill(seen.begin(), seen.end(), false);
      queue.assign(1, 0);
      seen[0] = true;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (Point y : {s0(queue[head]), s1(queue[head])}) {
          if (!seen[y]) {
            seen[y] = true;
            queue.push_back(y);
          }
        }
      }
      if (queue.size() != n) continue;
      visit(Dessin::from_pair(s0, s1));
      ++visited;
    }
  }
  return visited;
}

}  // namespace dessin
