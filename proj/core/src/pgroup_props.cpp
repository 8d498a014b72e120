#include "porigami/pgroup_props.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "porigami/errors.hpp"

namespace porigami {

PValuation p_valuation(const Group& g) {
  std::uint64_t n = g.order();
  if (n == 1) return {};
  std::uint64_t p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) p = n;
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1) throw NotPrimePower("group order " + std::to_string(g.order()) + " is not a prime power");
  return {static_cast<unsigned>(p), e};
}

namespace {

Group with_detected_prime(const Group& g) {
  if (g.prime()) return g;
  return g.with_prime(require_prime(g));
}

}  // namespace

bool is_powerful(const Group& g, std::size_t cap) {
  const Group pg = with_detected_prime(g);
  const unsigned p = *pg.prime();
  const Group derived = derived_subgroup(pg);
  const Group agemo = verbal_subgroup(pg, VerbalKind::kAgemo, p == 2 ? 2 : 1, cap);
  return derived.is_subgroup_of(agemo);
}

bool is_weakly_power_closed(const Group& g, std::size_t cap) {
  if (g.is_trivial()) return true;
  const unsigned p = require_prime(g);
  const auto& elems = g.elements(cap);
  std::vector<Permutation> powers(elems.begin(), elems.end());
  while (true) {
    std::unordered_set<Permutation, PermutationHash> next;
    for (const auto& x : powers) next.insert(x.pow(p));
    powers.assign(next.begin(), next.end());
    std::sort(powers.begin(), powers.end());
    const Group generated = subgroup_from_elements(g.degree(), powers);
    if (generated.order() > powers.size()) return false;
    if (powers.size() == 1) return true;
  }
}

bool is_weakly_order_closed(const Group& g, std::size_t cap) {
  if (g.is_trivial()) return true;
  const unsigned p = require_prime(g);
  const auto& elems = g.elements(cap);
  const std::uint64_t exponent = group_exponent(g, cap);
  for (std::uint64_t bound = 1; bound < exponent; bound *= p) {
    std::vector<Permutation> small;
    for (const auto& x : elems)
      if (x.order() <= bound) small.push_back(x);
    // A finite set containing 1 is product-closed iff it is a subgroup.
    if (subgroup_from_elements(g.degree(), small).order() != small.size()) return false;
  }
  return true;
}

bool is_regular(const Group& g, std::uint64_t pair_cap) {
  const Group pg = with_detected_prime(g);
  const unsigned p = *pg.prime();
  const std::uint64_t n = pg.order();
  if (n > pair_cap / n) throw CapExceeded("regularity pair enumeration", pair_cap);
  const auto& elems = pg.elements(static_cast<std::size_t>(n));
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      const Permutation c = (a.pow(p) * b.pow(p)).inverse() * (a * b).pow(p);
      if (c.is_identity()) continue;
      const Group k(std::vector<Permutation>{a, b}, p);
      const Group k_derived = derived_subgroup(k);
      if (k_derived.is_trivial()) return false;
      const Group agemo = verbal_subgroup(k_derived, VerbalKind::kAgemo, 1);
      if (!agemo.contains(c)) return false;
    }
  }
  return true;
}

NilpotencyClass nilpotency_class(const Group& g) {
  const PValuation val = p_valuation(g);
  if (!val.prime) throw NotPGroup("the trivial group has no nilpotency class of interest");
  const LowerCentralSeries series = lower_central_series(g);
  NilpotencyClass out;
  out.nilpotency_class = static_cast<unsigned>(series.terms.size());
  out.maximal_class = val.exponent >= 2 && out.nilpotency_class == val.exponent - 1;
  return out;
}

namespace {

/// Index-level multiplication table for small groups.
std::vector<std::uint32_t> multiplication_table(const ElementSet& elems) {
  const std::size_t n = elems.size();
  std::vector<std::uint32_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = static_cast<std::uint32_t>(elems.index_of(elems[a] * elems[b]));
  return table;
}

using Bits = std::vector<std::uint64_t>;

Bits closure_bits(const std::vector<std::uint32_t>& mul, std::size_t n,
                  const std::vector<std::size_t>& gens) {
  Bits bits((n + 63) / 64, 0);
  std::vector<std::size_t> members{0};
  bits[0] |= 1;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t s : gens) {
      const std::size_t m = mul[members[i] * n + s];
      if (!(bits[m / 64] >> (m % 64) & 1u)) {
        bits[m / 64] |= std::uint64_t{1} << (m % 64);
        members.push_back(m);
      }
    }
  return bits;
}

}  // namespace

bool is_power_closed(const Group& g, std::size_t cap) {
  if (g.order() > cap) throw CapExceeded("subgroup lattice enumeration", cap);
  const unsigned p = g.is_trivial() ? 2 : require_prime(g);
  const auto& elems = g.elements(cap);
  const std::size_t n = elems.size();
  const auto mul = multiplication_table(elems);

  struct Sub {
    std::vector<std::size_t> gens;
    Bits bits;
  };
  std::vector<Sub> subs{{{}, closure_bits(mul, n, {})}};
  std::set<Bits> seen{subs.front().bits};
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t e = 1; e < n; ++e) {
      if (subs[i].bits[e / 64] >> (e % 64) & 1u) continue;
      std::vector<std::size_t> gens = subs[i].gens;
      gens.push_back(e);
      Bits bits = closure_bits(mul, n, gens);
      if (seen.insert(bits).second) subs.push_back({std::move(gens), std::move(bits)});
    }
  }
  for (const auto& s : subs) {
    std::vector<Permutation> gens;
    for (std::size_t k : s.gens) gens.push_back(elems[k]);
    if (!is_weakly_power_closed(Group(g.degree(), std::move(gens), p), cap)) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const Group& g, std::size_t cap) {
  const auto& elems = g.elements(cap);
  const std::size_t n = elems.size();
  std::vector<bool> done(n, false);
  std::vector<Permutation> inverses;
  for (const auto& s : g.generators()) inverses.push_back(s.inverse());
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> cls{i};
    done[i] = true;
    for (std::size_t k = 0; k < cls.size(); ++k)
      for (std::size_t s = 0; s < inverses.size(); ++s) {
        const std::size_t j = elems.index_of(inverses[s] * elems[cls[k]] * g.generators()[s]);
        if (!done[j]) {
          done[j] = true;
          cls.push_back(j);
        }
      }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

const char* to_string(PairStrategy s) {
  return s == PairStrategy::kExhaustive ? "exhaustive" : "conjugation-pruned";
}

namespace {

/// Answers "does (x, y) generate G" in O(1) for p-groups through the labels
/// of G/Phi(G); falls back to a closure per pair otherwise.
class PairTest {
 public:
  PairTest(const Group& g, const ElementSet& elems, std::size_t cap) : g_(g), elems_(elems) {
    std::optional<unsigned> p;
    try {
      p = require_prime(g);
    } catch (const NotPGroup&) {
    }
    if (!p) return;
    const Group phi = frattini_subgroup(g.prime() ? g : g.with_prime(*p));
    const auto& phi_elems = phi.elements(cap);
    const std::size_t n = elems.size();
    constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);
    label_.assign(n, kUnset);
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < n; ++i) {
      if (label_[i] != kUnset) continue;
      const auto l = static_cast<std::uint32_t>(reps.size());
      reps.push_back(i);
      for (const auto& f : phi_elems) label_[elems.index_of(elems[i] * f)] = l;
    }
    q_ = reps.size();
    std::vector<std::uint32_t> qmul(q_ * q_);
    for (std::size_t a = 0; a < q_; ++a)
      for (std::size_t b = 0; b < q_; ++b)
        qmul[a * q_ + b] = label_[elems.index_of(elems[reps[a]] * elems[reps[b]])];
    ok_.assign(q_ * q_, false);
    for (std::size_t a = 0; a < q_; ++a)
      for (std::size_t b = 0; b < q_; ++b) {
        std::vector<bool> in(q_, false);
        std::vector<std::size_t> members{0};
        in[0] = true;
        for (std::size_t k = 0; k < members.size(); ++k)
          for (std::size_t s : {a, b}) {
            const std::size_t m = qmul[members[k] * q_ + s];
            if (!in[m]) {
              in[m] = true;
              members.push_back(m);
            }
          }
        ok_[a * q_ + b] = members.size() == q_;
      }
    fast_ = true;
  }

  std::size_t quotient_order() const { return q_; }
  bool fast() const { return fast_; }

  bool generates(std::size_t x, std::size_t y) const {
    if (fast_) return ok_[label_[x] * q_ + label_[y]];
    const Permutation pair[] = {elems_[x], elems_[y]};
    return StabilizerChain(g_.degree(), pair).order() == g_.order();
  }

 private:
  const Group& g_;
  const ElementSet& elems_;
  bool fast_ = false;
  std::size_t q_ = 0;
  std::vector<std::uint32_t> label_;
  std::vector<bool> ok_;
};

struct RowResult {
  /// (first y index, commutator order) for each distinct order in the row,
  /// by increasing y.
  std::vector<std::pair<std::size_t, std::uint64_t>> firsts;
};

std::uint64_t commutator_order(const Permutation& x_inv, const Permutation& x,
                               const Permutation& y_inv, const Permutation& y,
                               std::vector<Point>& image, std::vector<bool>& seen) {
  // [x,y] = x^-1 y^-1 x y read left to right.
  const std::size_t d = x.degree();
  for (std::size_t i = 0; i < d; ++i)
    image[i] = y.image0(x.image0(y_inv.image0(x_inv.image0(static_cast<Point>(i)))));
  std::fill(seen.begin(), seen.end(), false);
  std::uint64_t m = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = image[j]) {
      seen[j] = true;
      ++len;
    }
    m = std::lcm(m, len);
  }
  return m;
}

RowResult scan_row(std::size_t x, const ElementSet& elems, const std::vector<Permutation>& inverses,
                   const PairTest& test) {
  RowResult row;
  std::vector<Point> image(elems[x].degree());
  std::vector<bool> seen(elems[x].degree());
  for (std::size_t y = 0; y < elems.size(); ++y) {
    if (!test.generates(x, y)) continue;
    const std::uint64_t o = commutator_order(inverses[x], elems[x], inverses[y], elems[y], image, seen);
    if (std::none_of(row.firsts.begin(), row.firsts.end(),
                     [o](const auto& f) { return f.second == o; }))
      row.firsts.emplace_back(y, o);
  }
  return row;
}

}  // namespace

PropertyCReport property_c(const Group& g, const PropertyCOptions& options) {
  const auto& elems = g.elements(options.element_cap);
  const std::size_t n = elems.size();
  const PairTest test(g, elems, options.element_cap);
  if (test.fast() && test.quotient_order() > 0) {
    const unsigned p = require_prime(g);
    if (test.quotient_order() > static_cast<std::size_t>(p) * p)
      throw NotTwoGenerated("G/Phi(G) has order " + std::to_string(test.quotient_order()));
  }

  std::vector<std::size_t> candidates;
  if (options.strategy == PairStrategy::kExhaustive) {
    candidates.resize(n);
    std::iota(candidates.begin(), candidates.end(), std::size_t{0});
  } else {
    for (const auto& cls : conjugacy_classes(g, options.element_cap)) candidates.push_back(cls.front());
    std::sort(candidates.begin(), candidates.end());
  }
  std::vector<Permutation> inverses;
  inverses.reserve(n);
  for (const auto& e : elems) inverses.push_back(e.inverse());

  PropertyCReport report;
  report.strategy = options.strategy;
  std::map<std::uint64_t, PairWitness> first_pair;
  std::vector<std::uint64_t> discovery;
  bool stopped = false;

  const unsigned workers = std::max(1u, options.workers);
  const std::size_t block = workers == 1 ? 1 : workers * 4;
  for (std::size_t start = 0; start < candidates.size() && !stopped; start += block) {
    const std::size_t stop = std::min(candidates.size(), start + block);
    std::vector<RowResult> rows(stop - start);
    if (workers == 1) {
      for (std::size_t r = start; r < stop; ++r)
        rows[r - start] = scan_row(candidates[r], elems, inverses, test);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
          for (std::size_t r = start + w; r < stop; r += workers)
            rows[r - start] = scan_row(candidates[r], elems, inverses, test);
        });
      for (auto& t : pool) t.join();
    }
    // Merge in candidate order, replaying where a sequential scan would stop.
    for (std::size_t r = start; r < stop && !stopped; ++r) {
      const std::size_t x = candidates[r];
      for (const auto& [y, o] : rows[r - start].firsts) {
        if (first_pair.contains(o)) continue;
        first_pair.emplace(o, PairWitness{x, y, elems[x], elems[y], o});
        discovery.push_back(o);
        if (options.early_exit && discovery.size() >= 2) {
          report.pairs_examined += y + 1;
          stopped = true;
          break;
        }
      }
      if (!stopped) report.pairs_examined += n;
    }
  }

  if (discovery.empty()) throw NotTwoGenerated("no pair of elements generates the group");
  for (std::uint64_t o : discovery) report.orders_found.insert(o);
  report.holds = report.orders_found.size() == 1;
  if (!report.holds)
    for (std::size_t k = 0; k < 2; ++k) report.witnesses.push_back(first_pair.at(discovery[k]));
  return report;
}

}  // namespace porigami
