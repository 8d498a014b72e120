#include "porigami/origami.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "porigami/errors.hpp"

namespace porigami {

Origami make_origami(Group g, Permutation x, Permutation y) {
  if (!is_generating_pair(g, x, y))
    throw NotGeneratingPair(x.to_string() + ", " + y.to_string() + " do not generate the group");
  return Origami(std::move(g), std::move(x), std::move(y));
}

std::string SingularityData::stratum() const {
  if (multiplicity == 1) return "H(0)";
  return "H(" + std::to_string(count) + " x " + std::to_string(multiplicity - 1) + ")";
}

SingularityData singularity_data(const Origami& o) {
  SingularityData s;
  s.multiplicity = commutator(o.x(), o.y()).order();
  if (s.multiplicity > 1) {
    const std::uint64_t n = o.group().order();
    s.count = n / s.multiplicity;
    // Euler characteristic of the square complex: V - E + F = n/a - 2n + n.
    s.genus = 1 + s.count * (s.multiplicity - 1) / 2;
  }
  return s;
}

CylinderDecomposition cylinder_decomposition(const Origami& o, Direction direction,
                                             std::size_t cap) {
  const auto& elems = o.group().elements(cap);
  const Permutation& step = direction == Direction::kHorizontal ? o.x() : o.y();
  CylinderDecomposition out{direction, {}};
  std::vector<bool> done(elems.size(), false);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (done[i]) continue;
    Cylinder c{0, {}};
    Permutation g = elems[i];
    std::size_t k = i;
    do {
      done[k] = true;
      c.squares.push_back(k);
      g = g * step;
      k = elems.index_of(g);
    } while (k != i);
    c.circumference = c.squares.size();
    out.cylinders.push_back(std::move(c));
  }
  return out;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<std::size_t> VertexClasses::sizes() const {
  std::vector<std::size_t> out(count, 0);
  for (auto c : class_of) ++out[c];
  return out;
}

VertexClasses vertex_classes(const Origami& o, std::size_t cap) {
  const auto& elems = o.group().elements(cap);
  const std::size_t n = elems.size();
  constexpr std::size_t LL = 0, LR = 1, UL = 2, UR = 3;
  UnionFind uf(4 * n);
  for (std::size_t g = 0; g < n; ++g) {
    const std::size_t gx = elems.index_of(elems[g] * o.x());
    const std::size_t gy = elems.index_of(elems[g] * o.y());
    uf.unite(4 * g + LR, 4 * gx + LL);
    uf.unite(4 * g + UR, 4 * gx + UL);
    uf.unite(4 * g + UL, 4 * gy + LL);
    uf.unite(4 * g + UR, 4 * gy + LR);
  }
  VertexClasses vc;
  vc.class_of.assign(4 * n, 0);
  std::vector<std::uint32_t> id(4 * n, static_cast<std::uint32_t>(-1));
  for (std::size_t s = 0; s < 4 * n; ++s) {
    const std::size_t r = uf.find(s);
    if (id[r] == static_cast<std::uint32_t>(-1)) id[r] = static_cast<std::uint32_t>(vc.count++);
    vc.class_of[s] = id[r];
  }
  return vc;
}

bool origami_equal(const Origami& a, const Origami& b, std::size_t cap) {
  if (a.group().degree() != b.group().degree() || !same_subgroup(a.group(), b.group()))
    throw InputError("origamis live on different group realizations");
  return extends_to_automorphism(a.group(), a.x(), a.y(), b.x(), b.y(), cap);
}

Origami sl2_act(Sl2Generator gen, const Origami& o) {
  // SL(2,Z) moves generating pairs to generating pairs.
  const Permutation& x = o.x();
  const Permutation& y = o.y();
  switch (gen) {
    case Sl2Generator::kS:
      return Origami(o.group(), y.inverse(), x);
    case Sl2Generator::kSInverse:
      return Origami(o.group(), y, x.inverse());
    case Sl2Generator::kT:
      return Origami(o.group(), x, y * x.inverse());
    case Sl2Generator::kTInverse:
      return Origami(o.group(), x, y * x);
  }
  throw Error("unknown SL(2,Z) generator");
}

std::vector<std::uint32_t> canonical_key(const Origami& o, std::size_t cap) {
  const auto& elems = o.group().elements(cap);
  const std::size_t n = elems.size();
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> label(n, kUnset);
  std::vector<std::size_t> order{0};
  label[0] = 0;
  std::vector<std::uint32_t> key;
  key.reserve(2 * n);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const Permutation* s : {&o.x(), &o.y()}) {
      const std::size_t k = elems.index_of(elems[order[i]] * *s);
      if (label[k] == kUnset) {
        label[k] = static_cast<std::uint32_t>(order.size());
        order.push_back(k);
      }
      key.push_back(label[k]);
    }
  }
  return key;
}

std::vector<Origami> sl2_orbit(const Origami& o, std::size_t max_size, std::size_t cap) {
  std::vector<Origami> reps{o};
  std::set<std::vector<std::uint32_t>> seen{canonical_key(o, cap)};
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (auto gen : {Sl2Generator::kS, Sl2Generator::kT, Sl2Generator::kSInverse,
                     Sl2Generator::kTInverse}) {
      Origami next = sl2_act(gen, reps[i]);
      if (!seen.insert(canonical_key(next, cap)).second) continue;
      if (reps.size() >= max_size) throw CapExceeded("SL(2,Z) orbit", max_size);
      reps.push_back(std::move(next));
    }
  }
  return reps;
}

const char* to_string(Direction d) { return d == Direction::kHorizontal ? "horizontal" : "vertical"; }

const char* to_string(Sl2Generator g) {
  switch (g) {
    case Sl2Generator::kS:
      return "S";
    case Sl2Generator::kT:
      return "T";
    case Sl2Generator::kSInverse:
      return "S^-1";
    case Sl2Generator::kTInverse:
      return "T^-1";
  }
  return "?";
}

}  // namespace porigami
