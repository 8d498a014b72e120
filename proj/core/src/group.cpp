#include "porigami/group.hpp"

#include <mutex>
#include <queue>

#include "porigami/errors.hpp"

namespace porigami {

struct Group::Impl {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::optional<unsigned> prime;

  mutable std::mutex mutex;
  mutable std::unique_ptr<StabilizerChain> chain;
  mutable std::unique_ptr<ElementSet> elements;
};

namespace {

std::size_t common_degree(const std::vector<Permutation>& gens) {
  if (gens.empty()) return 0;
  const std::size_t d = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != d) throw DegreeMismatch(d, g.degree());
  return d;
}

}  // namespace

Group::Group() : impl_(std::make_shared<Impl>()) {}

Group::Group(std::vector<Permutation> generators, std::optional<unsigned> prime)
    : impl_(std::make_shared<Impl>()) {
  impl_->degree = common_degree(generators);
  impl_->generators = std::move(generators);
  impl_->prime = prime;
}

Group::Group(std::size_t degree, std::vector<Permutation> generators, std::optional<unsigned> prime)
    : impl_(std::make_shared<Impl>()) {
  for (const auto& g : generators)
    if (g.degree() != degree) throw DegreeMismatch(degree, g.degree());
  impl_->degree = degree;
  impl_->generators = std::move(generators);
  impl_->prime = prime;
}

Group Group::from_chain(std::vector<Permutation> generators, StabilizerChain chain,
                        std::optional<unsigned> prime) {
  Group g(chain.degree(), std::move(generators), prime);
  g.impl_->chain = std::make_unique<StabilizerChain>(std::move(chain));
  return g;
}

std::size_t Group::degree() const noexcept { return impl_->degree; }

std::span<const Permutation> Group::generators() const noexcept { return impl_->generators; }

std::optional<unsigned> Group::prime() const noexcept { return impl_->prime; }

Group Group::with_prime(unsigned p) const {
  Group g = *this;
  g.impl_ = std::make_shared<Impl>();
  g.impl_->degree = impl_->degree;
  g.impl_->generators = impl_->generators;
  g.impl_->prime = p;
  std::lock_guard lock(impl_->mutex);
  if (impl_->chain) g.impl_->chain = std::make_unique<StabilizerChain>(*impl_->chain);
  return g;
}

const StabilizerChain& Group::chain() const {
  std::lock_guard lock(impl_->mutex);
  if (!impl_->chain)
    impl_->chain = std::make_unique<StabilizerChain>(impl_->degree, impl_->generators);
  return *impl_->chain;
}

bool Group::is_abelian() const {
  const auto gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  return true;
}

const ElementSet& Group::elements(std::size_t cap) const {
  const std::uint64_t n = order();
  if (n > cap) throw CapExceeded("group of order " + std::to_string(n), cap);
  std::lock_guard lock(impl_->mutex);
  if (!impl_->elements)
    impl_->elements = std::make_unique<ElementSet>(
        enumerate_elements(impl_->generators, cap, impl_->degree));
  return *impl_->elements;
}

bool Group::is_subgroup_of(const Group& other) const {
  if (degree() != other.degree()) return false;
  for (const auto& g : generators())
    if (!other.contains(g)) return false;
  return true;
}

bool same_subgroup(const Group& a, const Group& b) {
  return a.is_subgroup_of(b) && b.is_subgroup_of(a);
}

Group make_group(std::vector<Permutation> gens) { return Group(std::move(gens)); }

Group subgroup_from_elements(std::size_t degree, std::span<const Permutation> elements,
                             std::optional<unsigned> prime) {
  StabilizerChain chain(degree);
  std::vector<Permutation> gens;
  for (const auto& e : elements)
    if (chain.add_generator(e)) gens.push_back(e);
  return Group::from_chain(std::move(gens), std::move(chain), prime);
}

Group normal_closure(const Group& g, std::span<const Permutation> seeds) {
  for (const auto& s : seeds)
    if (!g.contains(s)) throw MembershipError("seed " + s.to_string() + " is not in the group");
  StabilizerChain chain(g.degree());
  std::vector<Permutation> gens;
  for (const auto& s : seeds)
    if (chain.add_generator(s)) gens.push_back(s);
  // Conjugating by generators suffices: inverses are positive powers.
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& x : g.generators()) {
      Permutation c = conjugate(gens[i], x);
      if (chain.add_generator(c)) gens.push_back(std::move(c));
    }
  }
  return Group::from_chain(std::move(gens), std::move(chain), g.prime());
}

Group derived_subgroup(const Group& g) {
  std::vector<Permutation> seeds;
  const auto gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) seeds.push_back(commutator(gens[i], gens[j]));
  return normal_closure(g, seeds);
}

std::uint64_t group_exponent(const Group& g, std::size_t cap) {
  std::uint64_t e = 1;
  for (const auto& x : g.elements(cap)) e = std::max(e, x.order());
  return e;
}

unsigned require_prime(const Group& g) {
  if (g.prime()) return *g.prime();
  std::uint64_t n = g.order();
  if (n == 1) throw NotPGroup("the trivial group carries no prime");
  std::uint64_t p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) p = n;
  while (n % p == 0) n /= p;
  if (n != 1) throw NotPGroup("group order " + std::to_string(g.order()) + " is not a prime power");
  return static_cast<unsigned>(p);
}

Group verbal_subgroup(const Group& g, VerbalKind kind, unsigned i, std::size_t cap) {
  const unsigned p = require_prime(g);
  std::int64_t q = 1;
  for (unsigned k = 0; k < i; ++k) q *= p;
  const auto& elems = g.elements(cap);
  std::vector<Permutation> picked;
  for (const auto& x : elems) {
    if (kind == VerbalKind::kOmega) {
      if (static_cast<std::uint64_t>(q) % x.order() == 0) picked.push_back(x);
    } else {
      picked.push_back(x.pow(q));
    }
  }
  return subgroup_from_elements(g.degree(), picked, g.prime());
}

Group frattini_subgroup(const Group& g) {
  const unsigned p = require_prime(g);
  Group derived = derived_subgroup(g);
  StabilizerChain chain = derived.chain();
  std::vector<Permutation> gens(derived.generators().begin(), derived.generators().end());
  for (const auto& x : g.generators()) {
    Permutation power = x.pow(p);
    if (chain.add_generator(power)) gens.push_back(std::move(power));
  }
  return Group::from_chain(std::move(gens), std::move(chain), g.prime());
}

Group center(const Group& g, std::size_t cap) {
  std::vector<Permutation> central;
  for (const auto& x : g.elements(cap)) {
    bool ok = true;
    for (const auto& s : g.generators())
      if (x * s != s * x) {
        ok = false;
        break;
      }
    if (ok) central.push_back(x);
  }
  return subgroup_from_elements(g.degree(), central, g.prime());
}

LowerCentralSeries lower_central_series(const Group& g) {
  LowerCentralSeries series;
  Group current = g;
  while (!current.is_trivial()) {
    series.terms.push_back(current);
    std::vector<Permutation> seeds;
    for (const auto& a : current.generators())
      for (const auto& s : g.generators()) seeds.push_back(commutator(a, s));
    Group next = normal_closure(g, seeds);
    if (next.order() == current.order()) {
      series.reaches_trivial = false;
      break;
    }
    current = std::move(next);
  }
  return series;
}

bool is_generating_pair(const Group& g, const Permutation& u, const Permutation& v) {
  if (!g.contains(u)) throw MembershipError(u.to_string() + " is not in the group");
  if (!g.contains(v)) throw MembershipError(v.to_string() + " is not in the group");
  if (g.prime()) {
    // Burnside: {u, v} generates G iff it generates G modulo Phi(G).
    Group phi = frattini_subgroup(g);
    StabilizerChain chain = phi.chain();
    chain.add_generator(u);
    chain.add_generator(v);
    return chain.order() == g.order();
  }
  const Permutation pair[] = {u, v};
  return StabilizerChain(g.degree(), pair).order() == g.order();
}

bool extends_to_automorphism(const Group& g, const Permutation& x1, const Permutation& y1,
                             const Permutation& x2, const Permutation& y2, std::size_t cap) {
  if (!is_generating_pair(g, x1, y1))
    throw NotGeneratingPair(x1.to_string() + ", " + y1.to_string() + " do not generate the group");
  if (!is_generating_pair(g, x2, y2))
    throw NotGeneratingPair(x2.to_string() + ", " + y2.to_string() + " do not generate the group");
  const auto& elems = g.elements(cap);
  const std::size_t n = elems.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  // image[k] = index of phi(elems[k]); walk the Cayley graph on (x1, y1).
  std::vector<std::size_t> image(n, kUnset);
  std::vector<bool> used(n, false);
  image[0] = 0;
  used[0] = true;
  std::queue<std::size_t> todo;
  todo.push(0);
  const Permutation* src[] = {&x1, &y1};
  const Permutation* dst[] = {&x2, &y2};
  while (!todo.empty()) {
    const std::size_t k = todo.front();
    todo.pop();
    for (int s = 0; s < 2; ++s) {
      const std::size_t a = elems.index_of(elems[k] * *src[s]);
      const std::size_t b = elems.index_of(elems[image[k]] * *dst[s]);
      if (image[a] == kUnset) {
        if (used[b]) return false;
        image[a] = b;
        used[b] = true;
        todo.push(a);
      } else if (image[a] != b) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace porigami
