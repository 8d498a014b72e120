#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "porigami/group.hpp"
#include "porigami/presentation.hpp"

namespace porigami {

/// A group together with a designated ordered generating pair. For the
/// metacyclic and maximal-class families the pair is (r, s).
struct GroupWithPair {
  Group group;
  Permutation x;
  Permutation y;
};

/// C_{p^l} x| C_{p^m} acting on p^l + p^m points: r adds 1 on the first
/// block and fixes the second, s multiplies the first block by a and
/// adds 1 on the second. Then s^-1 r s = r^a.
/// Throws InvalidTwist unless gcd(a, p) = 1 and a^(p^m) = 1 mod p^l,
/// RangeError when p is not prime or the degree does not fit 32 bits.
GroupWithPair semidirect_cyclic(unsigned p, unsigned l, unsigned m, std::int64_t a);

/// G^p_(n,k): semidirect_cyclic(p, k+1, n-k-1, a) with a = -1 for p = 2 and
/// a = p+1 otherwise. Throws RangeError unless 0 <= k <= n-2 (p = 2) or
/// 0 <= k < n/2 (p odd).
GroupWithPair strata_family(unsigned p, unsigned n, unsigned k);

enum class MaximalClassKind { kDihedral, kQuaternion, kSemidihedral };

Presentation maximal_class_presentation(MaximalClassKind kind, unsigned n);

/// Realized by Todd-Coxeter; order 2^n for n >= 3 (the semidihedral
/// presentation collapses at n = 3). Throws RangeError for n < 3.
GroupWithPair maximal_class_family(MaximalClassKind kind, unsigned n,
                                   std::size_t max_cosets = kDefaultCosetCap);

/// e_{i,j} on p^r points. Throws RangeError unless 1 <= i <= r and
/// 1 <= j <= p^(i-1).
Permutation sylow_wreath_generator(unsigned p, unsigned r, unsigned i, std::uint64_t j);

/// P_{p,r} = <e_{1,1}, ..., e_{r,1}>, a Sylow p-subgroup of S_{p^r}.
Group sylow_group(unsigned p, unsigned r);

struct CounterexampleGenerators {
  Permutation x;
  Permutation y;
  Permutation x_prime;  // x^3 for p = 2, x^2 otherwise
};

/// H_p. For p = 2 the printed permutations of degree 16; for odd p,
/// x = e11 e21 and y = e11 e21 e31 e_{4,1+p^2} on p^4 points.
CounterexampleGenerators counterexample_generators(unsigned p);

Presentation wollmilchsau_presentation(unsigned n);

/// W_n of order 2^(2n+1). Throws RangeError for n = 0.
GroupWithPair wollmilchsau_group(unsigned n, std::size_t max_cosets = kDefaultCosetCap);

struct AlternatingExample {
  Group group;  // generated by the first pair
  std::pair<Permutation, Permutation> first;   // (1,2,...,n), (1,2,3)
  std::pair<Permutation, Permutation> second;  // (3,4,...,n), (1,3)(2,4)
};

/// Throws RangeError unless 5 <= n <= 10.
AlternatingExample alternating_example(unsigned n);

/// Least m >= 1 with a^m = 1 mod modulus. Throws NotCoprime.
std::uint64_t multiplicative_order(std::int64_t a, std::uint64_t modulus);

/// Seeded source of uniform group elements. Draws use std::mt19937_64 and
/// rejection sampling, so the sequence is fixed for a given seed on every
/// platform.
class ElementSampler {
 public:
  ElementSampler(const StabilizerChain& chain, std::uint64_t seed) : chain_(chain), engine_(seed) {}

  /// Product of uniformly drawn transversal representatives, deepest level
  /// first; exactly uniform over the group.
  Permutation draw();

  std::uint64_t below(std::uint64_t bound);

 private:
  const StabilizerChain& chain_;
  std::mt19937_64 engine_;
};

/// Two uniform elements x, y of P_{p,r} and the group they generate.
GroupWithPair random_two_generated_subgroup(unsigned p, unsigned r, std::uint64_t seed);

enum class TowerFamily { kDihedralStaircase, kDihedralCylinders, kWollmilchsau, kAbelian };

struct TowerLevel {
  unsigned level;
  std::uint64_t order;
  std::uint64_t commutator_order;
  std::uint64_t singularity_count;
  std::string stratum;
};

struct TowerReport {
  TowerFamily family;
  std::vector<TowerLevel> levels;
  /// Diverging when the commutator order strictly increases across all levels.
  bool diverging = false;
};

/// Dihedral levels are D_{2^n} with the pair (s, s r) (staircase) or (r, s)
/// (cylinders); W_n carries (x, y); the abelian tower is C_p x C_p at every
/// level. Throws RangeError on an empty or invalid level range.
TowerReport tower_report(TowerFamily family, unsigned from, unsigned to, unsigned p = 2,
                         std::size_t max_cosets = kDefaultCosetCap);

enum class SearchPredicate { kOrderMismatch, kOrderMismatchAndWeaklyPowerClosedDerived };

struct SearchResult {
  bool found = false;
  std::uint64_t iterations = 0;
  std::optional<Permutation> x;
  std::optional<Permutation> y;
  std::uint64_t commutator_order = 0;        // ord([x,y])
  std::uint64_t shifted_commutator_order = 0;  // ord([x,y^(p+1)])
};

/// Draws pairs from P_{p,r} until ord([x,y]) != ord([x,y^(p+1)]) (and, for
/// the second predicate, <x,y>' is weakly power-closed) or max_iter pairs
/// have been tried.
SearchResult search_counterexample(unsigned p, unsigned r, std::uint64_t seed,
                                   std::uint64_t max_iter,
                                   SearchPredicate predicate = SearchPredicate::kOrderMismatch);

/// First pair (u, v) in element order that satisfies every relator of the
/// two-generator presentation and generates G. Used to place a presented
/// group's generators inside another realization.
std::optional<std::pair<Permutation, Permutation>> find_presentation_images(
    const Group& g, const Presentation& pres, std::size_t cap = kDefaultElementCap);

const char* to_string(MaximalClassKind k);
const char* to_string(TowerFamily f);
const char* to_string(SearchPredicate p);

}  // namespace porigami
