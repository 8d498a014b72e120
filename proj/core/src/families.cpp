#include "porigami/families.hpp"

#include <limits>
#include <numeric>

#include "porigami/errors.hpp"
#include "porigami/origami.hpp"
#include "porigami/pgroup_props.hpp"

namespace porigami {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// p^e, or RangeError when it does not fit in 32 bits.
std::uint64_t checked_power(std::uint64_t p, unsigned e) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < e; ++i) {
    out *= p;
    if (out > 0xffffffffu) throw RangeError(std::to_string(p) + "^" + std::to_string(e) + " is too large");
  }
  return out;
}

__extension__ using Wide = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<Wide>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1u) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1u;
  }
  return r;
}

std::uint64_t residue(std::int64_t a, std::uint64_t m) {
  const auto sm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((a % sm) + sm) % sm);
}

std::string power_text(const char* name, std::uint64_t e) {
  return std::string(name) + "^" + std::to_string(e);
}

GroupWithPair realize_pair(const Presentation& pres, std::size_t max_cosets) {
  RealizedPresentation rp = realize(pres, max_cosets, 2u);
  return {rp.group, rp.generators.at(0), rp.generators.at(1)};
}

}  // namespace

GroupWithPair semidirect_cyclic(unsigned p, unsigned l, unsigned m, std::int64_t a) {
  if (!is_prime(p)) throw RangeError(std::to_string(p) + " is not prime");
  const std::uint64_t na = checked_power(p, l);
  const std::uint64_t nb = checked_power(p, m);
  if (na + nb > 0xffffffffu) throw RangeError("semidirect product degree too large");
  const std::uint64_t twist = residue(a, na);
  if (std::gcd(residue(a, p), std::uint64_t{p}) != 1)
    throw InvalidTwist("twist " + std::to_string(a) + " is not coprime to " + std::to_string(p));
  if (powmod(twist, nb, na) != 1 % na)
    throw InvalidTwist("twist " + std::to_string(a) + " does not satisfy a^(p^m) = 1 mod p^l");

  const std::size_t degree = na + nb;
  std::vector<Point> r(degree), s(degree);
  for (std::uint64_t i = 0; i < na; ++i) {
    r[i] = static_cast<Point>((i + 1) % na + 1);
    s[i] = static_cast<Point>(mulmod(i, twist, na) + 1);
  }
  for (std::uint64_t i = 0; i < nb; ++i) {
    r[na + i] = static_cast<Point>(na + i + 1);
    s[na + i] = static_cast<Point>(na + (i + 1) % nb + 1);
  }
  Permutation pr = Permutation::from_images(r);
  Permutation ps = Permutation::from_images(s);
  return {Group(std::vector<Permutation>{pr, ps}, p), pr, ps};
}

GroupWithPair strata_family(unsigned p, unsigned n, unsigned k) {
  if (!is_prime(p)) throw RangeError(std::to_string(p) + " is not prime");
  if (p == 2) {
    if (n < 2 || k > n - 2)
      throw RangeError("strata family needs 0 <= k <= n-2 for p = 2");
    return semidirect_cyclic(2, k + 1, n - k - 1, -1);
  }
  if (2 * k >= n) throw RangeError("strata family needs 0 <= k < n/2 for odd p");
  return semidirect_cyclic(p, k + 1, n - k - 1, static_cast<std::int64_t>(p) + 1);
}

Presentation maximal_class_presentation(MaximalClassKind kind, unsigned n) {
  if (n < 3) throw RangeError("maximal class families need n >= 3");
  if (n > 40) throw RangeError("maximal class order too large");
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  const std::uint64_t quarter = std::uint64_t{1} << (n - 2);
  std::string text = "<r,s | " + power_text("r", half) + ", ";
  switch (kind) {
    case MaximalClassKind::kDihedral:
      text += "s^2, s^-1*r*s*r>";
      break;
    case MaximalClassKind::kQuaternion:
      text += "s^2=" + power_text("r", quarter) + ", s^-1*r*s*r>";
      break;
    case MaximalClassKind::kSemidihedral:
      text += "s^2, s^-1*r*s=r^" + std::to_string(quarter - 1) + ">";
      break;
  }
  return parse_presentation(text);
}

GroupWithPair maximal_class_family(MaximalClassKind kind, unsigned n, std::size_t max_cosets) {
  return realize_pair(maximal_class_presentation(kind, n), max_cosets);
}

Permutation sylow_wreath_generator(unsigned p, unsigned r, unsigned i, std::uint64_t j) {
  if (!is_prime(p)) throw RangeError(std::to_string(p) + " is not prime");
  if (i < 1 || i > r) throw RangeError("e_{i,j} needs 1 <= i <= r");
  if (j < 1 || j > checked_power(p, i - 1)) throw RangeError("e_{i,j} needs 1 <= j <= p^(i-1)");
  const std::uint64_t degree = checked_power(p, r);
  const std::uint64_t step = checked_power(p, r - i);
  const std::uint64_t first = step * p * (j - 1) + 1;
  std::vector<std::vector<Point>> cycles;
  for (std::uint64_t k = first; k < first + step; ++k) {
    std::vector<Point> c;
    for (unsigned t = 0; t < p; ++t) c.push_back(static_cast<Point>(k + step * t));
    cycles.push_back(std::move(c));
  }
  return Permutation::from_cycles(cycles, degree);
}

Group sylow_group(unsigned p, unsigned r) {
  std::vector<Permutation> gens;
  for (unsigned i = 1; i <= r; ++i) gens.push_back(sylow_wreath_generator(p, r, i, 1));
  return Group(checked_power(p, r), std::move(gens), p);
}

CounterexampleGenerators counterexample_generators(unsigned p) {
  if (!is_prime(p)) throw RangeError(std::to_string(p) + " is not prime");
  if (p == 2) {
    Permutation x = Permutation::parse("(1,9,5,13,3,11,7,15,2,10,6,14,4,12,8,16)", 16);
    Permutation xp = Permutation::parse("(1,13,7,10,4,16,5,11,2,14,8,9,3,15,6,12)", 16);
    Permutation y = Permutation::parse("(1,9,2,10)(3,11)(4,12)(5,15,7,13)(6,16,8,14)", 16);
    return {x, y, xp};
  }
  const auto e = [p](unsigned i, std::uint64_t j) { return sylow_wreath_generator(p, 4, i, j); };
  const std::uint64_t pp = std::uint64_t{p} * p;
  Permutation x = e(1, 1) * e(2, 1);
  Permutation y = e(1, 1) * e(2, 1) * e(3, 1) * e(4, 1 + pp);
  Permutation xp = x.pow(2);
  return {x, y, xp};
}

Presentation wollmilchsau_presentation(unsigned n) {
  if (n < 1) throw RangeError("W_n needs n >= 1");
  if (n > 30) throw RangeError("W_n order too large");
  const std::uint64_t big = std::uint64_t{1} << (n + 1);
  const std::uint64_t small = std::uint64_t{1} << n;
  return parse_presentation("<x,y | " + power_text("x", big) + ", " + power_text("y", big) + ", " +
                            power_text("x", small) + "*" + power_text("y", small) +
                            ", x^-1*y*x*y>");
}

GroupWithPair wollmilchsau_group(unsigned n, std::size_t max_cosets) {
  return realize_pair(wollmilchsau_presentation(n), max_cosets);
}

AlternatingExample alternating_example(unsigned n) {
  if (n < 5 || n > 10) throw RangeError("alternating example needs 5 <= n <= 10");
  std::vector<Point> full(n), tail;
  std::iota(full.begin(), full.end(), Point{1});
  for (Point i = 3; i <= n; ++i) tail.push_back(i);
  Permutation a1 = Permutation::from_cycles({full}, n);
  Permutation b1 = Permutation::from_cycles({{1, 2, 3}}, n);
  Permutation a2 = Permutation::from_cycles({tail}, n);
  Permutation b2 = Permutation::from_cycles({{1, 3}, {2, 4}}, n);
  return {Group(std::vector<Permutation>{a1, b1}), {a1, b1}, {a2, b2}};
}

std::uint64_t multiplicative_order(std::int64_t a, std::uint64_t modulus) {
  if (modulus == 0) throw RangeError("modulus must be positive");
  const std::uint64_t r = residue(a, modulus);
  if (std::gcd(r, modulus) != 1)
    throw NotCoprime(std::to_string(a) + " is not coprime to " + std::to_string(modulus));
  if (modulus == 1) return 1;
  std::uint64_t m = 1;
  for (std::uint64_t v = r; v != 1; v = mulmod(v, r, modulus)) ++m;
  return m;
}

std::uint64_t ElementSampler::below(std::uint64_t bound) {
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % bound;
}

Permutation ElementSampler::draw() {
  const auto levels = chain_.levels();
  Permutation g(chain_.degree());
  for (std::size_t l = levels.size(); l-- > 0;)
    g *= levels[l].transversal[below(levels[l].transversal.size())];
  return g;
}

GroupWithPair random_two_generated_subgroup(unsigned p, unsigned r, std::uint64_t seed) {
  const Group big = sylow_group(p, r);
  ElementSampler sampler(big.chain(), seed);
  Permutation x = sampler.draw();
  Permutation y = sampler.draw();
  return {Group(std::vector<Permutation>{x, y}, p), x, y};
}

TowerReport tower_report(TowerFamily family, unsigned from, unsigned to, unsigned p,
                         std::size_t max_cosets) {
  if (from > to) throw RangeError("empty tower level range");
  const unsigned lowest = family == TowerFamily::kWollmilchsau || family == TowerFamily::kAbelian ? 1 : 3;
  if (from < lowest) throw RangeError("tower starts at level " + std::to_string(lowest));
  TowerReport report{family, {}, false};
  for (unsigned n = from; n <= to; ++n) {
    GroupWithPair level;
    switch (family) {
      case TowerFamily::kDihedralStaircase: {
        GroupWithPair d = semidirect_cyclic(2, n - 1, 1, -1);
        level = {d.group, d.y, d.y * d.x};
        break;
      }
      case TowerFamily::kDihedralCylinders:
        level = semidirect_cyclic(2, n - 1, 1, -1);
        break;
      case TowerFamily::kWollmilchsau:
        level = wollmilchsau_group(n, max_cosets);
        break;
      case TowerFamily::kAbelian:
        level = semidirect_cyclic(p, 1, 1, 1);
        break;
    }
    const Origami o = make_origami(level.group, level.x, level.y);
    const SingularityData s = singularity_data(o);
    report.levels.push_back({n, level.group.order(), s.multiplicity, s.count, s.stratum()});
  }
  report.diverging = report.levels.size() > 1;
  for (std::size_t i = 1; i < report.levels.size(); ++i)
    if (report.levels[i].commutator_order <= report.levels[i - 1].commutator_order)
      report.diverging = false;
  return report;
}

SearchResult search_counterexample(unsigned p, unsigned r, std::uint64_t seed,
                                   std::uint64_t max_iter, SearchPredicate predicate) {
  const Group big = sylow_group(p, r);
  ElementSampler sampler(big.chain(), seed);
  SearchResult result;
  for (std::uint64_t it = 1; it <= max_iter; ++it) {
    Permutation x = sampler.draw();
    Permutation y = sampler.draw();
    const std::uint64_t o1 = commutator(x, y).order();
    const std::uint64_t o2 = commutator(x, y.pow(static_cast<std::int64_t>(p) + 1)).order();
    if (o1 == o2) continue;
    if (predicate == SearchPredicate::kOrderMismatchAndWeaklyPowerClosedDerived) {
      const Group g(std::vector<Permutation>{x, y}, p);
      if (!is_weakly_power_closed(derived_subgroup(g))) continue;
    }
    result.found = true;
    result.iterations = it;
    result.x = std::move(x);
    result.y = std::move(y);
    result.commutator_order = o1;
    result.shifted_commutator_order = o2;
    return result;
  }
  result.iterations = max_iter;
  return result;
}

std::optional<std::pair<Permutation, Permutation>> find_presentation_images(
    const Group& g, const Presentation& pres, std::size_t cap) {
  if (pres.generators.size() != 2) throw InputError("presentation must have two generators");
  const auto& elems = g.elements(cap);
  for (const auto& u : elems) {
    for (const auto& v : elems) {
      const Permutation images[] = {u, v};
      bool ok = true;
      for (const auto& rel : pres.relators)
        if (!rel.evaluate(images, g.degree()).is_identity()) {
          ok = false;
          break;
        }
      if (ok && is_generating_pair(g, u, v)) return std::pair{u, v};
    }
  }
  return std::nullopt;
}

const char* to_string(MaximalClassKind k) {
  switch (k) {
    case MaximalClassKind::kDihedral:
      return "dihedral";
    case MaximalClassKind::kQuaternion:
      return "quaternion";
    case MaximalClassKind::kSemidihedral:
      return "semidihedral";
  }
  return "?";
}

const char* to_string(TowerFamily f) {
  switch (f) {
    case TowerFamily::kDihedralStaircase:
      return "dihedral_staircase";
    case TowerFamily::kDihedralCylinders:
      return "dihedral_cylinders";
    case TowerFamily::kWollmilchsau:
      return "wollmilchsau";
    case TowerFamily::kAbelian:
      return "abelian";
  }
  return "?";
}

const char* to_string(SearchPredicate p) {
  return p == SearchPredicate::kOrderMismatch ? "order_mismatch" : "order_mismatch_and_wpc_derived";
}

}  // namespace porigami
