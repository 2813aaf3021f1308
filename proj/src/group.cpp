#include "dessin/group.hpp"

#include <algorithm>
#include <boost/container_hash/hash.hpp>
#include <random>
#include <unordered_map>

#include "dessin/error.hpp"

namespace dessin {

namespace {

// Below this degree the randomized warm-up costs more than it saves.
constexpr std::size_t kRandomPhaseMinDegree = 64;

Point first_moved_point(const Permutation& p) {
  for (Point i = 0; i < p.degree(); ++i)
    if (p(i) != i) return i;
  throw Error(ErrorKind::Internal, "identity has no moved point");
}

}  // namespace

GroupHandle GroupHandle::build(std::span<const Permutation> generators, const GroupOptions& options) {
  if (generators.empty()) throw Error(ErrorKind::InvalidArgument, "a group needs at least one generator");
  const std::size_t degree = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw Error(ErrorKind::DegreeMismatch, "generators of degree " + std::to_string(degree) + " and " +
                                                 std::to_string(g.degree()));
  check_guard("group degree", degree, options.max_degree);

  GroupHandle h;
  h.degree_ = degree;
  h.generators_.assign(generators.begin(), generators.end());
  h.add_level(0);
  for (const auto& g : h.generators_) {
    if (g.is_identity()) continue;
    std::size_t fixed_prefix = 0;
    while (fixed_prefix < h.levels_.size() && g(h.levels_[fixed_prefix].base) == h.levels_[fixed_prefix].base)
      ++fixed_prefix;
    h.add_strong_generator(g, fixed_prefix);
  }
  for (std::size_t l = 0; l < h.levels_.size(); ++l) h.rebuild_orbit(l);

  const bool deterministic = degree <= options.deterministic_limit;
  if (degree > kRandomPhaseMinDegree || !deterministic) h.randomized_phase(options);
  if (deterministic) {
    h.deterministic_phase();
  } else {
    h.exact_ = false;
  }
  h.finish();
  return h;
}

void GroupHandle::add_level(Point base_point) {
  Level level;
  level.base = base_point;
  level.tree.assign(degree_, -1);
  level.tree[base_point] = -2;
  level.orbit.assign(1, base_point);
  levels_.push_back(std::move(level));
}

void GroupHandle::rebuild_orbit(std::size_t l) {
  Level& level = levels_[l];
  std::fill(level.tree.begin(), level.tree.end(), -1);
  level.tree[level.base] = -2;
  level.orbit.assign(1, level.base);
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    const Point x = level.orbit[head];
    for (std::size_t t = 0; t < level.labels.size(); ++t) {
      const Point y = strong_[level.labels[t]](x);
      if (level.tree[y] == -1) {
        level.tree[y] = static_cast<std::int32_t>(t);
        level.orbit.push_back(y);
      }
    }
  }
}

std::size_t GroupHandle::add_strong_generator(Permutation g, std::size_t through_level) {
  if (through_level == levels_.size()) add_level(first_moved_point(g));
  const std::size_t id = strong_.size();
  strong_inv_.push_back(inverse(g));
  strong_.push_back(std::move(g));
  for (std::size_t l = 0; l <= through_level; ++l) levels_[l].labels.push_back(id);
  return id;
}

std::size_t GroupHandle::sift(Permutation& g, std::size_t from_level, Permutation& scratch) const {
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const Level& level = levels_[l];
    Point b = g(level.base);
    if (level.tree[b] == -1) return l;
    while (level.tree[b] != -2) {
      const std::size_t id = level.labels[static_cast<std::size_t>(level.tree[b])];
      compose_into(g, strong_inv_[id], scratch);
      std::swap(g, scratch);
      b = strong_inv_[id](b);
    }
  }
  return levels_.size();
}

Permutation GroupHandle::transversal(std::size_t l, Point target) const {
  const Level& level = levels_[l];
  std::vector<std::size_t> path;
  for (Point b = target; level.tree[b] != -2;) {
    const std::size_t id = level.labels[static_cast<std::size_t>(level.tree[b])];
    path.push_back(id);
    b = strong_inv_[id](b);
  }
  Permutation u(degree_);
  Permutation scratch;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    compose_into(u, strong_[*it], scratch);
    std::swap(u, scratch);
  }
  return u;
}

void GroupHandle::randomized_phase(const GroupOptions& options) {
  if (strong_.empty()) return;
  // Product replacement with an accumulator.
  std::mt19937_64 rng(options.seed);
  const std::size_t slots = std::max<std::size_t>(10, generators_.size());
  std::vector<Permutation> state;
  for (std::size_t k = 0; k < slots; ++k) state.push_back(generators_[k % generators_.size()]);
  Permutation accumulator(degree_);
  Permutation scratch;
  std::uniform_int_distribution<std::size_t> pick(0, slots - 1);
  auto step = [&]() {
    std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    while (j == i) j = pick(rng);
    if (rng() & 1) {
      compose_into(state[i], state[j], scratch);
    } else {
      compose_into(state[j], state[i], scratch);
    }
    std::swap(state[i], scratch);
    compose_into(accumulator, state[i], scratch);
    std::swap(accumulator, scratch);
  };
  for (int k = 0; k < 50; ++k) step();

  std::size_t consecutive = 0;
  Permutation candidate;
  while (consecutive < options.random_confidence) {
    step();
    candidate = accumulator;
    const std::size_t stop = sift(candidate, 0, scratch);
    if (stop == levels_.size() && candidate.is_identity()) {
      ++consecutive;
      continue;
    }
    consecutive = 0;
    add_strong_generator(std::move(candidate), stop);
    for (std::size_t l = 1; l <= stop; ++l) rebuild_orbit(l);
  }
}

void GroupHandle::deterministic_phase() {
  Permutation scratch;
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    const std::size_t li = static_cast<std::size_t>(i);
    bool extended = false;
    for (std::size_t oi = 0; oi < levels_[li].orbit.size() && !extended; ++oi) {
      const Point b = levels_[li].orbit[oi];
      const Permutation ub = transversal(li, b);
      for (std::size_t t = 0; t < levels_[li].labels.size(); ++t) {
        const std::size_t s = levels_[li].labels[t];
        const Point sb = strong_[s](b);
        const std::int32_t edge = levels_[li].tree[sb];
        if (edge >= 0 && levels_[li].labels[static_cast<std::size_t>(edge)] == s) continue;  // tree edge
        Permutation h = compose(ub, strong_[s]);
        const std::size_t stop = sift(h, li, scratch);
        if (stop == levels_.size() && h.is_identity()) continue;
        add_strong_generator(std::move(h), stop);
        for (std::size_t l = li + 1; l <= stop; ++l) rebuild_orbit(l);
        i = static_cast<std::ptrdiff_t>(stop);
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }
}

void GroupHandle::finish() {
  order_ = 1;
  for (const auto& level : levels_) order_ *= level.orbit.size();
}

std::vector<Point> GroupHandle::base() const {
  std::vector<Point> out;
  for (const auto& level : levels_) out.push_back(level.base);
  return out;
}

std::vector<std::size_t> GroupHandle::orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& level : levels_) out.push_back(level.orbit.size());
  return out;
}

bool GroupHandle::contains(const Permutation& p) const {
  if (p.degree() != degree_)
    throw Error(ErrorKind::DegreeMismatch, "permutation of degree " + std::to_string(p.degree()) +
                                               " tested against group of degree " + std::to_string(degree_));
  Permutation g = p;
  Permutation scratch;
  return sift(g, 0, scratch) == levels_.size() && g.is_identity();
}

std::vector<Permutation> GroupHandle::point_stabilizer_generators() const {
  std::vector<Permutation> out;
  if (levels_.size() < 2) return out;
  for (std::size_t id : levels_[1].labels) out.push_back(strong_[id]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::erase_if(out, [](const Permutation& p) { return p.is_identity(); });
  return out;
}

// ---------------------------------------------------------------------------

namespace {

GroupHandle monodromy_group(const Dessin& d, const GroupOptions& options) {
  const Permutation gens[2] = {d.sigma0(), d.sigma1()};
  return GroupHandle::build(gens, options);
}

GroupOptions doubled_options(const Dessin& d, const GroupOptions& options) {
  check_guard("group degree", d.degree(), options.max_degree);
  GroupOptions doubled = options;
  doubled.max_degree = 2 * options.max_degree;
  return doubled;
}

}  // namespace

std::vector<Permutation> stabilizer_generators(const Dessin& d, const GroupOptions& options) {
  return monodromy_group(d, options).point_stabilizer_generators();
}

bool is_regular(const Dessin& d, const GroupOptions& options) {
  return monodromy_group(d, options).order() == d.degree();
}

SignMap sign_map_for_twist(int j) {
  if (j < 0 || j > 2) throw Error(ErrorKind::InvalidArgument, "twist index must be 0, 1 or 2");
  return kSignMaps[static_cast<std::size_t>(j)];
}

std::string to_string(const SignMap& m) {
  auto sign = [](int v) { return v < 0 ? std::string("-1") : std::string("+1"); };
  return "(" + sign(m.on_sigma0) + "," + sign(m.on_sigma1) + ")";
}

std::string to_string(QuotientType q) {
  switch (q) {
    case QuotientType::Trivial:
      return "Trivial";
    case QuotientType::Z2:
      return "Z2";
    case QuotientType::Z2xZ2:
      return "Z2xZ2";
  }
  return "?";
}

bool MSquaredClass::has(const SignMap& m) const {
  return std::find(existing_sign_maps.begin(), existing_sign_maps.end(), m) != existing_sign_maps.end();
}

std::array<Permutation, 2> sign_doubled_pair(const Dessin& d, const SignMap& m) {
  const std::size_t n = d.degree();
  auto lift = [n](const Permutation& p, int sign) {
    std::vector<Point> images(2 * n);
    const Point same = 0;
    const Point flip = static_cast<Point>(n);
    for (Point i = 0; i < n; ++i) {
      images[i] = p(i) + (sign < 0 ? flip : same);
      images[i + n] = p(i) + (sign < 0 ? same : flip);
    }
    return unchecked_from_images(std::move(images));
  };
  return {lift(d.sigma0(), m.on_sigma0), lift(d.sigma1(), m.on_sigma1)};
}

Permutation lift_to_both_sheets(const Permutation& h) {
  const std::size_t n = h.degree();
  std::vector<Point> images(2 * n);
  for (Point i = 0; i < n; ++i) {
    images[i] = h(i);
    images[i + n] = static_cast<Point>(h(i) + n);
  }
  return unchecked_from_images(std::move(images));
}

SignMapAnalysis analyze_sign_maps(const Dessin& d, const GroupOptions& options) {
  const GroupHandle monodromy = monodromy_group(d, options);
  const GroupOptions doubled = doubled_options(d, options);
  SignMapAnalysis out;
  out.monodromy_order = monodromy.order();
  out.stabilizer = monodromy.point_stabilizer_generators();
  for (std::size_t k = 0; k < kSignMaps.size(); ++k) {
    const auto pair = sign_doubled_pair(d, kSignMaps[k]);
    const GroupHandle graph = GroupHandle::build(pair, doubled);
    // The doubled group is the graph of rho exactly when it is no larger than M.
    if (graph.order() != monodromy.order()) continue;
    out.m_squared.existing_sign_maps.push_back(kSignMaps[k]);
    bool inside = true;
    for (const auto& h : out.stabilizer) {
      if (!graph.contains(lift_to_both_sheets(h))) {
        inside = false;
        break;
      }
    }
    out.stabilizer_in_kernel[k] = inside;
  }
  switch (out.m_squared.existing_sign_maps.size()) {
    case 0:
      out.m_squared.quotient_type = QuotientType::Trivial;
      break;
    case 1:
      out.m_squared.quotient_type = QuotientType::Z2;
      break;
    case 3:
      out.m_squared.quotient_type = QuotientType::Z2xZ2;
      break;
    default:
      throw Error(ErrorKind::Internal, "found " + std::to_string(out.m_squared.existing_sign_maps.size()) +
                                           " sign homomorphisms; expected 0, 1 or 3");
  }
  return out;
}

MSquaredClass m_squared_class(const Dessin& d, const GroupOptions& options) {
  const GroupHandle monodromy = monodromy_group(d, options);
  const GroupOptions doubled = doubled_options(d, options);
  MSquaredClass out;
  for (const auto& m : kSignMaps) {
    const auto pair = sign_doubled_pair(d, m);
    if (GroupHandle::build(pair, doubled).order() == monodromy.order()) out.existing_sign_maps.push_back(m);
  }
  const std::size_t count = out.existing_sign_maps.size();
  if (count == 0) {
    out.quotient_type = QuotientType::Trivial;
  } else if (count == 1) {
    out.quotient_type = QuotientType::Z2;
  } else if (count == 3) {
    out.quotient_type = QuotientType::Z2xZ2;
  } else {
    throw Error(ErrorKind::Internal, "found 2 sign homomorphisms; expected 0, 1 or 3");
  }
  return out;
}

bool stabilizer_in_kernel(const Dessin& d, const SignMap& m, const GroupOptions& options) {
  const GroupHandle monodromy = monodromy_group(d, options);
  const auto pair = sign_doubled_pair(d, m);
  const GroupHandle graph = GroupHandle::build(pair, doubled_options(d, options));
  if (graph.order() != monodromy.order())
    throw Error(ErrorKind::InvalidArgument, "sign map " + to_string(m) + " does not extend to the monodromy group");
  for (const auto& h : monodromy.point_stabilizer_generators())
    if (!graph.contains(lift_to_both_sheets(h))) return false;
  return true;
}

std::array<bool, 3> classify_by_monodromy(const SignMapAnalysis& a) {
  std::array<bool, 3> verdicts{false, false, false};
  switch (a.m_squared.quotient_type) {
    case QuotientType::Trivial:
      break;
    case QuotientType::Z2: {
      // Exactly one twist has both of its generators outside M^2; only it can
      // be orientable, and it is iff H <= M^2.
      for (std::size_t k = 0; k < 3; ++k)
        if (a.stabilizer_in_kernel[k].has_value()) verdicts[k] = *a.stabilizer_in_kernel[k];
      break;
    }
    case QuotientType::Z2xZ2:
      // D, D', D'' orientable iff H <= <M^2, sigma_inf>, <M^2, sigma0>, <M^2, sigma1>.
      for (std::size_t k = 0; k < 3; ++k) verdicts[k] = a.stabilizer_in_kernel[k].value();
      break;
  }
  return verdicts;
}

std::array<bool, 3> classify_by_monodromy(const Dessin& d, const GroupOptions& options) {
  return classify_by_monodromy(analyze_sign_maps(d, options));
}

RegularCover minimal_regular_cover(const Dessin& d, std::size_t bound, const GroupOptions& options) {
  const GroupHandle monodromy = monodromy_group(d, options);
  if (monodromy.order() > bound)
    throw GuardExceeded("monodromy group order " + monodromy.order().str() + " exceeds limit " + std::to_string(bound));
  const std::size_t size = static_cast<std::size_t>(monodromy.order());

  struct ImagesHash {
    std::size_t operator()(const std::vector<Point>& v) const { return boost::hash_range(v.begin(), v.end()); }
  };
  std::unordered_map<std::vector<Point>, std::uint32_t, ImagesHash> index;
  std::vector<Permutation> elements;
  elements.reserve(size);
  elements.emplace_back(d.degree());
  index.emplace(std::vector<Point>(elements[0].images().begin(), elements[0].images().end()), 0);
  std::vector<std::array<std::uint32_t, 2>> step;
  const Permutation* gens[2] = {&d.sigma0(), &d.sigma1()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    std::array<std::uint32_t, 2> next{};
    for (int g = 0; g < 2; ++g) {
      Permutation prod = compose(elements[head], *gens[g]);
      std::vector<Point> key(prod.images().begin(), prod.images().end());
      auto [it, inserted] = index.emplace(std::move(key), static_cast<std::uint32_t>(elements.size()));
      if (inserted) elements.push_back(std::move(prod));
      next[static_cast<std::size_t>(g)] = it->second;
    }
    step.push_back(next);
  }
  if (elements.size() != size)
    throw Error(ErrorKind::Internal, "enumerated " + std::to_string(elements.size()) +
                                         " group elements but the chain reports " + std::to_string(size));

  // Relabel by lexicographic order of the elements so the identity is edge 1.
  std::vector<std::uint32_t> by_rank(size);
  for (std::uint32_t k = 0; k < size; ++k) by_rank[k] = k;
  std::sort(by_rank.begin(), by_rank.end(),
            [&](std::uint32_t a, std::uint32_t b) { return elements[a] < elements[b]; });
  std::vector<std::uint32_t> rank(size);
  for (std::uint32_t r = 0; r < size; ++r) rank[by_rank[r]] = r;

  std::vector<Point> s0(size), s1(size), projection(size);
  for (std::uint32_t k = 0; k < size; ++k) {
    s0[rank[k]] = rank[step[k][0]];
    s1[rank[k]] = rank[step[k][1]];
    projection[rank[k]] = elements[k](0);
  }
  return RegularCover{Dessin::from_pair(unchecked_from_images(std::move(s0)), unchecked_from_images(std::move(s1))),
                      std::move(projection)};
}

}  // namespace dessin
