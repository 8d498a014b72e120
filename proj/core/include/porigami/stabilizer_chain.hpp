#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "porigami/permutation.hpp"

namespace porigami {

/// Base and strong generating set of a permutation group, built by the
/// deterministic incremental Schreier-Sims algorithm. New base points are
/// the smallest point moved by the element that failed to sift.
class StabilizerChain {
 public:
  struct Level {
    Point base_point;  // 0-based
    std::vector<Permutation> generators;
    std::vector<Point> orbit;                  // discovery order, orbit[0] == base_point
    std::vector<std::int32_t> orbit_position;  // point -> index in orbit, -1 if absent
    std::vector<Permutation> transversal;      // base_point^transversal[k] == orbit[k]
    std::vector<Permutation> transversal_inv;
    std::vector<std::size_t> processed;        // generators already paired with orbit[k]
  };

  explicit StabilizerChain(std::size_t degree = 0);
  StabilizerChain(std::size_t degree, std::span<const Permutation> generators);

  /// Adds a generator. Returns true when the group grew.
  bool add_generator(const Permutation& g);

  std::size_t degree() const noexcept { return degree_; }
  /// Group order; throws Error on 64-bit overflow.
  std::uint64_t order() const;
  bool contains(const Permutation& g) const;

  /// Sifts g through the levels. Returns the residue and the level where
  /// sifting stopped (levels().size() when it passed all of them).
  std::pair<Permutation, std::size_t> strip(const Permutation& g, std::size_t from = 0) const;

  /// 1-based base points.
  std::vector<Point> base() const;
  std::span<const Level> levels() const noexcept { return levels_; }
  /// Every strong generator, level by level, without duplicates.
  std::vector<Permutation> strong_generators() const;

 private:
  void insert(const Permutation& g, std::size_t level);
  void complete(std::size_t level);

  std::size_t degree_;
  std::vector<Level> levels_;
};

/// Element list with stable indices (breadth-first discovery order from the
/// identity, which is index 0) and reverse lookup.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::vector<Permutation> elements);

  std::size_t size() const noexcept { return elements_.size(); }
  const Permutation& operator[](std::size_t i) const { return elements_[i]; }
  std::span<const Permutation> elements() const noexcept { return elements_; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  bool contains(const Permutation& p) const { return index_.contains(p); }
  /// Index of p; throws MembershipError when absent.
  std::size_t index_of(const Permutation& p) const;
  /// Index of p, or size() when absent.
  std::size_t find(const Permutation& p) const;

 private:
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
};

/// Breadth-first closure of the generators. Throws CapExceeded as soon as
/// more than `cap` elements are found. An empty generator list yields the
/// identity of `degree`.
ElementSet enumerate_elements(std::span<const Permutation> generators, std::size_t cap,
                              std::size_t degree = 0);

}  // namespace porigami
