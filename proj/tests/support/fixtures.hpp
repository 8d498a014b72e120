#pragma once

#include <string>
#include <vector>

#include "oracles.hpp"
#include "porigami/families.hpp"
#include "porigami/origami.hpp"

namespace fixtures {

using porigami::Permutation;

inline Permutation perm(const std::string& text, std::size_t degree = 0) {
  return Permutation::parse(text, degree);
}

// Example pair in S_16 whose derived subgroup is weakly power-closed.
inline const char* kS16X = "(1,13,2,14)(3,16,4,15)(5,9,7,11,6,10,8,12)";
inline const char* kS16Y = "(1,16,6,11,4,14,7,9,2,15,5,12,3,13,8,10)";

/// Q_8 with (i, j) on its regular representation.
inline porigami::GroupWithPair q8() {
  return porigami::maximal_class_family(porigami::MaximalClassKind::kQuaternion, 3);
}

/// D_8 = G^2_(3,1) with (r, s).
inline porigami::GroupWithPair d8() { return porigami::strata_family(2, 3, 1); }

inline oracle::Table table_of(const porigami::Group& g, std::size_t cap = 4096) {
  std::vector<oracle::Perm> gens;
  for (const auto& p : g.generators()) gens.push_back(oracle::from_lib(p));
  return oracle::closure(gens, g.degree(), cap);
}

inline std::uint32_t idx(const oracle::Table& t, const Permutation& p) {
  return t.index.at(oracle::from_lib(p));
}

}  // namespace fixtures
