#include "porigami/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "porigami/errors.hpp"

namespace porigami {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::span<const Point> images) {
  std::vector<Point> img(images.size());
  std::vector<bool> hit(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const Point v = images[i];
    if (v == 0 || v > images.size() || hit[v - 1])
      throw InputError("images do not form a bijection of {1.." + std::to_string(images.size()) +
                       "}");
    hit[v - 1] = true;
    img[i] = v - 1;
  }
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(const std::vector<std::vector<Point>>& cycles,
                                     std::size_t degree) {
  std::size_t top = 0;
  for (const auto& c : cycles)
    for (Point v : c) {
      if (v == 0) throw InputError("cycle points are 1-based");
      top = std::max<std::size_t>(top, v);
    }
  if (degree == 0) degree = top;
  if (top > degree)
    throw InputError("point " + std::to_string(top) + " exceeds degree " + std::to_string(degree));
  Permutation p(degree);
  std::vector<bool> seen(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Point from = c[i] - 1;
      if (seen[from]) throw InputError("cycles are not disjoint at point " + std::to_string(c[i]));
      seen[from] = true;
      p.images_[from] = c[(i + 1) % c.size()] - 1;
    }
  }
  return p;
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation", i);
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw ParseError("expected '('", i);
    ++i;
    std::vector<Point> cycle;
    skip_ws();
    if (i < text.size() && text[i] == ')') {
      ++i;
      continue;  // "()" contributes nothing
    }
    while (true) {
      skip_ws();
      const std::size_t start = i;
      std::uint64_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value > 0xFFFFFFFFull) throw ParseError("point out of range", start);
        ++i;
      }
      if (i == start) throw ParseError("expected a positive integer", i);
      if (value == 0) throw ParseError("points are 1-based", start);
      if (std::find(cycle.begin(), cycle.end(), static_cast<Point>(value)) != cycle.end())
        throw ParseError("repeated point in cycle", start);
      cycle.push_back(static_cast<Point>(value));
      skip_ws();
      if (i == text.size()) throw ParseError("unterminated cycle", i);
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      throw ParseError("expected ',' or ')'", i);
    }
    cycles.push_back(std::move(cycle));
  }
  // Disjointness is a syntax-level property of cycle notation.
  std::vector<Point> all;
  for (const auto& c : cycles) all.insert(all.end(), c.begin(), c.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw ParseError("cycles are not disjoint", 0);
  return from_cycles(cycles, degree);
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw DegreeMismatch(degree(), rhs.degree());
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = rhs.images_[images_[i]];
  return Permutation(std::move(out));
}

Permutation& Permutation::operator*=(const Permutation& rhs) {
  if (degree() != rhs.degree()) throw DegreeMismatch(degree(), rhs.degree());
  if (this == &rhs) {
    *this = *this * rhs;
    return *this;
  }
  for (auto& v : images_) v = rhs.images_[v];
  return *this;
}

Permutation Permutation::inverse() const {
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(out));
}

Permutation Permutation::pow(std::int64_t exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-(exponent + 1)) + 1
                                 : static_cast<std::uint64_t>(exponent);
  // Reduce by the order first; cheap and keeps huge exponents bounded.
  e %= base.order();
  Permutation result(degree());
  while (e > 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Point Permutation::first_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<Point>(i + 1);
  return 0;
}

std::vector<std::size_t> Permutation::cycle_lengths() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

std::uint64_t Permutation::order() const {
  std::uint64_t m = 1;
  for (std::size_t len : cycle_lengths()) m = std::lcm(m, static_cast<std::uint64_t>(len));
  return m;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<Point> c;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      c.push_back(static_cast<Point>(j + 1));
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::to_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(c[k]);
    }
    s += ')';
  }
  return s;
}

Permutation Permutation::extended(std::size_t new_degree) const {
  if (new_degree < degree()) throw DegreeMismatch(degree(), new_degree);
  std::vector<Point> out = images_;
  for (std::size_t i = degree(); i < new_degree; ++i) out.push_back(static_cast<Point>(i));
  return Permutation(std::move(out));
}

Permutation commutator(const Permutation& x, const Permutation& y) {
  if (x.degree() != y.degree()) throw DegreeMismatch(x.degree(), y.degree());
  return x.inverse() * y.inverse() * x * y;
}

Permutation conjugate(const Permutation& g, const Permutation& x) {
  if (g.degree() != x.degree()) throw DegreeMismatch(g.degree(), x.degree());
  return x.inverse() * g * x;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image words.
  std::uint64_t h = 1469598103934665603ull;
  for (Point v : p.images0()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace porigami
