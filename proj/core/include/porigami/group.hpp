#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "porigami/permutation.hpp"
#include "porigami/stabilizer_chain.hpp"

namespace porigami {

/// Default cap on full element enumeration.
inline constexpr std::size_t kDefaultElementCap = std::size_t{1} << 16;

/// A finite permutation group given by generators.
///
/// Copies share the lazily built stabilizer chain and element list, so a
/// Group is a cheap handle. Cache construction is serialized internally;
/// once built, a Group may be read from several threads.
///
/// Subgroups are Groups of the same degree; `is_subgroup_of` and
/// `same_subgroup` compare them by chain membership of generators.
class Group {
 public:
  /// Trivial group of degree 0.
  Group();
  /// Throws DegreeMismatch when the generators disagree on degree.
  explicit Group(std::vector<Permutation> generators, std::optional<unsigned> prime = {});
  /// Generators may be empty; all must have the given degree.
  Group(std::size_t degree, std::vector<Permutation> generators,
        std::optional<unsigned> prime = {});

  std::size_t degree() const noexcept;
  std::span<const Permutation> generators() const noexcept;
  Permutation identity() const { return Permutation(degree()); }

  /// Prime mark: set when the group is known to be a p-group.
  std::optional<unsigned> prime() const noexcept;
  /// Same group with the prime mark set.
  Group with_prime(unsigned p) const;

  const StabilizerChain& chain() const;
  std::uint64_t order() const { return chain().order(); }
  bool contains(const Permutation& g) const { return chain().contains(g); }
  bool is_trivial() const { return order() == 1; }
  bool is_abelian() const;

  /// All elements, identity first. Throws CapExceeded if order() > cap.
  const ElementSet& elements(std::size_t cap = kDefaultElementCap) const;

  bool is_subgroup_of(const Group& other) const;

  /// Adopts an already built chain for `generators`.
  static Group from_chain(std::vector<Permutation> generators, StabilizerChain chain,
                          std::optional<unsigned> prime = {});
  friend bool same_subgroup(const Group& a, const Group& b);

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

/// Group handle over `gens`; the same as the Group constructor.
Group make_group(std::vector<Permutation> gens);

/// Subgroup generated by `elements`, keeping only elements that enlarge it.
Group subgroup_from_elements(std::size_t degree, std::span<const Permutation> elements,
                             std::optional<unsigned> prime = {});

/// Smallest normal subgroup of G containing the seeds.
/// Throws MembershipError when a seed is not in G.
Group normal_closure(const Group& g, std::span<const Permutation> seeds);

Group derived_subgroup(const Group& g);

/// Largest element order. Throws CapExceeded above `cap`.
std::uint64_t group_exponent(const Group& g, std::size_t cap = kDefaultElementCap);

enum class VerbalKind { kOmega, kAgemo };

/// Omega_i(G) = <g : g^(p^i) = 1> or agemo^i(G) = <g^(p^i)>.
/// Throws NotPGroup when G is not a p-group, CapExceeded above `cap`.
Group verbal_subgroup(const Group& g, VerbalKind kind, unsigned i,
                      std::size_t cap = kDefaultElementCap);

/// Phi(G) = G' together with p-th powers of the generators.
Group frattini_subgroup(const Group& g);

Group center(const Group& g, std::size_t cap = kDefaultElementCap);

struct LowerCentralSeries {
  /// gamma_1 = G, gamma_2, ... ; the trivial term is not included.
  std::vector<Group> terms;
  /// False when the series stalls at a nontrivial term (G not nilpotent).
  bool reaches_trivial = true;
};

LowerCentralSeries lower_central_series(const Group& g);

/// True iff <u, v> = G. Uses Burnside's basis theorem (u, v generate modulo
/// Phi(G)) when the prime mark is set, closure order otherwise.
/// Throws MembershipError when u or v is not in G.
bool is_generating_pair(const Group& g, const Permutation& u, const Permutation& v);

/// True iff x1 -> x2, y1 -> y2 extends to an automorphism of G.
/// Throws NotGeneratingPair if either pair fails to generate G.
bool extends_to_automorphism(const Group& g, const Permutation& x1, const Permutation& y1,
                             const Permutation& x2, const Permutation& y2,
                             std::size_t cap = kDefaultElementCap);

/// Prime mark if present, otherwise the prime dividing |G|. Throws NotPGroup for the
/// trivial group or a group that is not of prime-power order.
unsigned require_prime(const Group& g);

}  // namespace porigami
