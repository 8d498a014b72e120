#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "porigami/group.hpp"

namespace porigami {

/// |G| = p^n. The trivial group has n == 0 and no prime.
struct PValuation {
  std::optional<unsigned> prime;
  unsigned exponent = 0;
};

/// Throws NotPrimePower.
PValuation p_valuation(const Group& g);

/// G' in agemo^1(G) for odd p, G' in agemo^2(G) for p = 2.
bool is_powerful(const Group& g, std::size_t cap = kDefaultElementCap);

/// Iterates powers := {x^p : x in powers} from powers = G and fails as soon
/// as the subgroup generated by the set is larger than the set.
bool is_weakly_power_closed(const Group& g, std::size_t cap = kDefaultElementCap);

/// For every k with p^k < exp(G), elements of order <= p^k are closed under
/// products.
bool is_weakly_order_closed(const Group& g, std::size_t cap = kDefaultElementCap);

inline constexpr std::uint64_t kDefaultPairCap = std::uint64_t{1} << 20;

/// Hall's criterion: for all g, h the element (g^p h^p)^-1 (gh)^p lies in
/// agemo^1(<g,h>'). Throws CapExceeded when |G|^2 > pair_cap.
bool is_regular(const Group& g, std::uint64_t pair_cap = kDefaultPairCap);

struct NilpotencyClass {
  unsigned nilpotency_class = 0;
  bool maximal_class = false;
};

/// Throws NotPGroup when G is not a nontrivial p-group.
NilpotencyClass nilpotency_class(const Group& g);

/// Every subgroup is weakly power-closed. Enumerates all subgroups, so it
/// refuses groups larger than `cap` (CapExceeded).
bool is_power_closed(const Group& g, std::size_t cap = 256);

enum class PairStrategy { kExhaustive, kConjugationPruned };

struct PropertyCOptions {
  PairStrategy strategy = PairStrategy::kConjugationPruned;
  /// Stop as soon as two distinct commutator orders are seen.
  bool early_exit = true;
  /// Worker threads for the candidate rows; results are identical for any
  /// worker count.
  unsigned workers = 1;
  std::size_t element_cap = kDefaultElementCap;
};

struct PairWitness {
  std::size_t x_index;
  std::size_t y_index;
  Permutation x;
  Permutation y;
  std::uint64_t commutator_order;
};

struct PropertyCReport {
  bool holds = true;
  std::set<std::uint64_t> orders_found;
  /// Empty when the property holds; otherwise the first pair found for each
  /// of the first two distinct orders.
  std::vector<PairWitness> witnesses;
  std::uint64_t pairs_examined = 0;
  PairStrategy strategy = PairStrategy::kConjugationPruned;
};

/// Checks whether every generating pair has a commutator of the same order.
/// With conjugation pruning, x ranges over conjugacy class representatives
/// (smallest element index in the class). Throws NotTwoGenerated when no
/// pair generates G, CapExceeded when G is too large to enumerate.
PropertyCReport property_c(const Group& g, const PropertyCOptions& options = {});

/// Conjugacy classes as lists of element indices, each sorted, ordered by
/// their smallest index.
std::vector<std::vector<std::size_t>> conjugacy_classes(const Group& g,
                                                        std::size_t cap = kDefaultElementCap);

const char* to_string(PairStrategy s);

}  // namespace porigami
