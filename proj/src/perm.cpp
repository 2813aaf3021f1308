#include "dessin/perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "dessin/error.hpp"
#include "dessin/kernels.hpp"

namespace dessin {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const Point v = images[i];
    if (v >= images.size())
      throw Error(ErrorKind::InvalidArgument, "image " + std::to_string(v + 1) + " of point " +
                                                  std::to_string(i + 1) + " out of range");
    if (seen[v]) throw Error(ErrorKind::InvalidArgument, "image " + std::to_string(v + 1) + " repeated");
    seen[v] = true;
  }
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::from_one_based(std::span<const std::int64_t> images) {
  std::vector<Point> zero(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] < 1 || static_cast<std::uint64_t>(images[i]) > images.size())
      throw Error(ErrorKind::InvalidArgument, "image " + std::to_string(images[i]) + " of point " +
                                                  std::to_string(i + 1) + " out of range");
    zero[i] = static_cast<Point>(images[i] - 1);
  }
  return from_images(std::move(zero));
}

Permutation unchecked_from_images(std::vector<Point> images) {
  return Permutation(std::move(images), Permutation::Unchecked{});
}

bool Permutation::is_identity() const { return kernels::is_identity(images_); }

std::size_t Permutation::fixed_point_count() const { return kernels::count_fixed(images_); }

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point i = start; !seen[i]; i = images_[i]) {
      seen[i] = true;
      cycle.push_back(i);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

namespace {

class CycleParser {
 public:
  CycleParser(std::string_view text, std::size_t degree) : text_(text), degree_(degree) {}

  Permutation run() {
    std::vector<Point> images(degree_);
    std::iota(images.begin(), images.end(), Point{0});
    std::vector<bool> used(degree_, false);

    skip_ws();
    // "()" on its own denotes the identity.
    if (pos_ + 1 < text_.size() && text_[pos_] == '(') {
      std::size_t probe = pos_ + 1;
      while (probe < text_.size() && is_ws(text_[probe])) ++probe;
      if (probe < text_.size() && text_[probe] == ')') {
        pos_ = probe + 1;
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected text after identity \"()\"");
        return unchecked_from_images(std::move(images));
      }
    }

    while (pos_ < text_.size()) {
      if (text_[pos_] != '(') fail("expected '('");
      ++pos_;
      std::vector<Point> cycle;
      while (true) {
        skip_ws();
        const std::size_t label_pos = pos_;
        const std::uint64_t label = read_int();
        if (label < 1 || label > degree_)
          fail_at(label_pos, "label " + std::to_string(label) + " out of range 1.." + std::to_string(degree_));
        const Point p = static_cast<Point>(label - 1);
        if (used[p]) fail_at(label_pos, "label " + std::to_string(label) + " repeated");
        used[p] = true;
        cycle.push_back(p);
        skip_ws();
        if (pos_ >= text_.size()) fail("unterminated cycle");
        if (text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        fail("expected ',' or ')'");
      }
      for (std::size_t k = 0; k < cycle.size(); ++k) images[cycle[k]] = cycle[(k + 1) % cycle.size()];
      skip_ws();
    }
    return unchecked_from_images(std::move(images));
  }

 private:
  static bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }
  void skip_ws() {
    while (pos_ < text_.size() && is_ws(text_[pos_])) ++pos_;
  }
  std::uint64_t read_int() {
    if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9') fail("expected a label");
    std::uint64_t value = 0;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      if (pos_ - start >= 18) fail_at(start, "label too long");
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      ++pos_;
    }
    return value;
  }
  [[noreturn]] void fail(const std::string& reason) { fail_at(pos_, reason); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& reason) { throw ParseError(at, reason); }

  std::string_view text_;
  std::size_t degree_;
  std::size_t pos_ = 0;
};

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) { return CycleParser(text, degree).run(); }

std::string to_cycle_string(const Permutation& p) {
  const auto cs = p.cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& c : cs) {
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(c[k] + 1);
    }
    out += ')';
  }
  return out;
}

void compose_into(const Permutation& p, const Permutation& q, Permutation& out) {
  if (p.degree() != q.degree())
    throw Error(ErrorKind::DegreeMismatch, "cannot compose permutations of degree " + std::to_string(p.degree()) +
                                               " and " + std::to_string(q.degree()));
  out.images_.resize(p.degree());
  kernels::compose(p.images_, q.images_, out.images_);
}

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation out;
  compose_into(p, q, out);
  return out;
}

Permutation inverse(const Permutation& p) {
  std::vector<Point> inv(p.degree());
  for (Point i = 0; i < p.degree(); ++i) inv[p.images_[i]] = i;
  return Permutation(std::move(inv), Permutation::Unchecked{});
}

Permutation power(const Permutation& p, std::int64_t exponent) {
  Permutation base = exponent < 0 ? inverse(p) : p;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-exponent) : static_cast<std::uint64_t>(exponent);
  // Walk each cycle directly; cheaper than repeated squaring for large degree.
  std::vector<Point> images(p.degree());
  std::vector<bool> seen(p.degree(), false);
  std::vector<Point> cycle;
  for (Point start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    cycle.clear();
    for (Point i = start; !seen[i]; i = base(i)) {
      seen[i] = true;
      cycle.push_back(i);
    }
    const std::size_t len = cycle.size();
    const std::size_t shift = static_cast<std::size_t>(e % len);
    for (std::size_t k = 0; k < len; ++k) images[cycle[k]] = cycle[(k + shift) % len];
  }
  return unchecked_from_images(std::move(images));
}

CycleType cycle_type(const Permutation& p) {
  CycleType lengths;
  std::vector<bool> seen(p.degree(), false);
  for (Point start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (Point i = start; !seen[i]; i = p(i)) {
      seen[i] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

BigInt lcm_of(const CycleType& lengths) {
  BigInt result = 1;
  for (std::size_t l : lengths) {
    const BigInt value = l;
    result = result / boost::multiprecision::gcd(result, value) * value;
  }
  return result;
}

BigInt order(const Permutation& p) { return lcm_of(cycle_type(p)); }

bool is_even(const Permutation& p) {
  const CycleType ct = cycle_type(p);
  return (p.degree() - ct.size()) % 2 == 0;
}

BigInt centralizer_order(const CycleType& lengths) {
  std::map<std::size_t, std::size_t> multiplicity;
  for (std::size_t l : lengths) ++multiplicity[l];
  BigInt result = 1;
  for (const auto& [len, k] : multiplicity) {
    for (std::size_t j = 1; j <= k; ++j) result *= BigInt(len) * j;
  }
  return result;
}

std::vector<std::vector<Point>> orbits(std::span<const Permutation> gens, std::size_t degree) {
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw Error(ErrorKind::DegreeMismatch, "generator of degree " + std::to_string(g.degree()) +
                                                 " in group of degree " + std::to_string(degree));
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(degree, false);
  std::vector<Point> queue;
  for (Point start = 0; start < degree; ++start) {
    if (seen[start]) continue;
    queue.assign(1, start);
    seen[start] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Point x = queue[head];
      for (const auto& g : gens) {
        const Point y = g(x);
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    out.push_back(queue);
  }
  return out;
}

}  // namespace dessin
