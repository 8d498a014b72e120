#include "porigami/stabilizer_chain.hpp"

#include <algorithm>

#include "porigami/errors.hpp"

namespace porigami {

StabilizerChain::StabilizerChain(std::size_t degree) : degree_(degree) {}

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Permutation> generators)
    : degree_(degree) {
  for (const auto& g : generators) add_generator(g);
}

bool StabilizerChain::add_generator(const Permutation& g) {
  if (g.degree() != degree_) throw DegreeMismatch(degree_, g.degree());
  if (contains(g)) return false;
  insert(g, 0);
  return true;
}

std::pair<Permutation, std::size_t> StabilizerChain::strip(const Permutation& g,
                                                           std::size_t from) const {
  Permutation h = g;
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    const Point gamma = h.image0(lv.base_point);
    const std::int32_t pos = lv.orbit_position[gamma];
    if (pos < 0) return {std::move(h), l};
    h *= lv.transversal_inv[static_cast<std::size_t>(pos)];
  }
  return {std::move(h), levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  return strip(g).first.is_identity();
}

void StabilizerChain::insert(const Permutation& g, std::size_t level) {
  auto [h, stop] = strip(g, level);
  if (h.is_identity()) return;
  if (stop == levels_.size()) {
    Level lv;
    lv.base_point = h.first_moved_point() - 1;
    lv.orbit = {lv.base_point};
    lv.orbit_position.assign(degree_, -1);
    lv.orbit_position[lv.base_point] = 0;
    lv.transversal = {Permutation(degree_)};
    lv.transversal_inv = {Permutation(degree_)};
    lv.processed = {0};
    levels_.push_back(std::move(lv));
  }
  for (std::size_t l = level; l <= stop; ++l) levels_[l].generators.push_back(h);
  for (std::size_t l = stop + 1; l-- > level;) complete(l);
}

void StabilizerChain::complete(std::size_t level) {
  // Extend the orbit. Transversal entries never change once assigned, which
  // keeps the Schreier generators already sifted valid.
  {
    Level& lv = levels_[level];
    for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
      for (const auto& s : lv.generators) {
        const Point img = s.image0(lv.orbit[k]);
        if (lv.orbit_position[img] >= 0) continue;
        lv.orbit_position[img] = static_cast<std::int32_t>(lv.orbit.size());
        lv.orbit.push_back(img);
        Permutation rep = lv.transversal[k] * s;
        lv.transversal_inv.push_back(rep.inverse());
        lv.transversal.push_back(std::move(rep));
        lv.processed.push_back(0);
      }
    }
  }
  // Sift every Schreier generator not yet seen into the next level. The
  // recursion only appends to deeper levels, but levels_ may reallocate.
  for (std::size_t k = 0; k < levels_[level].orbit.size(); ++k) {
    while (levels_[level].processed[k] < levels_[level].generators.size()) {
      const Level& lv = levels_[level];
      const std::size_t s_idx = lv.processed[k];
      const Permutation& s = lv.generators[s_idx];
      const Point img = s.image0(lv.orbit[k]);
      Permutation schreier =
          lv.transversal[k] * s * lv.transversal_inv[static_cast<std::size_t>(lv.orbit_position[img])];
      levels_[level].processed[k] = s_idx + 1;
      if (!schreier.is_identity()) insert(schreier, level + 1);
    }
  }
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t n = 1;
  for (const auto& lv : levels_) {
    std::uint64_t next = 0;
    if (__builtin_mul_overflow(n, static_cast<std::uint64_t>(lv.orbit.size()), &next))
      throw Error("group order overflows 64 bits");
    n = next;
  }
  return n;
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  for (const auto& lv : levels_) b.push_back(lv.base_point + 1);
  return b;
}

std::vector<Permutation> StabilizerChain::strong_generators() const {
  std::vector<Permutation> out;
  for (const auto& lv : levels_)
    for (const auto& g : lv.generators)
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  return out;
}

ElementSet::ElementSet(std::vector<Permutation> elements) : elements_(std::move(elements)) {
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

std::size_t ElementSet::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw MembershipError("element " + p.to_string() + " not in set");
  return it->second;
}

std::size_t ElementSet::find(const Permutation& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? elements_.size() : it->second;
}

ElementSet enumerate_elements(std::span<const Permutation> generators, std::size_t cap,
                              std::size_t degree) {
  if (!generators.empty()) {
    degree = generators.front().degree();
    for (const auto& g : generators)
      if (g.degree() != degree) throw DegreeMismatch(degree, g.degree());
  }
  std::vector<Permutation> elems{Permutation(degree)};
  std::unordered_map<Permutation, std::size_t, PermutationHash> seen;
  seen.emplace(elems.front(), 0);
  if (cap == 0) throw CapExceeded("element enumeration", cap);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators) {
      Permutation next = elems[i] * g;
      if (seen.contains(next)) continue;
      if (elems.size() >= cap) throw CapExceeded("element enumeration", cap);
      seen.emplace(next, elems.size());
      elems.push_back(std::move(next));
    }
  }
  return ElementSet(std::move(elems));
}

}  // namespace porigami
