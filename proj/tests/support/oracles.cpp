#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace oracle {

Perm identity(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Perm mul(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

Perm inv(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint32_t>(i);
  return r;
}

Perm power(const Perm& a, std::int64_t e) {
  Perm base = e < 0 ? inv(a) : a;
  Perm r = identity(a.size());
  for (std::int64_t k = e < 0 ? -e : e; k > 0; --k) r = mul(r, base);
  return r;
}

Perm comm(const Perm& a, const Perm& b) { return mul(mul(inv(a), inv(b)), mul(a, b)); }

std::uint64_t order(const Perm& a) {
  const Perm id = identity(a.size());
  Perm r = a;
  std::uint64_t k = 1;
  while (r != id) {
    r = mul(r, a);
    ++k;
  }
  return k;
}

Perm random_perm(std::size_t n, std::mt19937_64& rng) {
  Perm p = identity(n);
  for (std::size_t i = n; i > 1; --i) {
    std::uniform_int_distribution<std::size_t> d(0, i - 1);
    std::swap(p[i - 1], p[d(rng)]);
  }
  return p;
}

Perm from_lib(const porigami::Permutation& p) {
  Perm r(p.degree());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = p(static_cast<porigami::Point>(i + 1)) - 1;
  return r;
}

porigami::Permutation to_lib(const Perm& p) {
  std::vector<porigami::Point> images(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) images[i] = p[i] + 1;
  return porigami::Permutation::from_images(images);
}

std::uint32_t Table::pow(std::uint32_t g, std::uint64_t e) const {
  std::uint32_t r = 0;
  for (std::uint64_t k = 0; k < e; ++k) r = mul[r][g];
  return r;
}

std::uint32_t Table::comm(std::uint32_t a, std::uint32_t b) const {
  return mul[mul[inv[a]][inv[b]]][mul[a][b]];
}

Table closure(const std::vector<Perm>& gens, std::size_t n, std::size_t cap) {
  Table t;
  const auto add = [&](const Perm& p) {
    if (t.index.count(p)) return;
    if (t.elems.size() >= cap) throw std::runtime_error("oracle closure over cap");
    t.index.emplace(p, static_cast<std::uint32_t>(t.elems.size()));
    t.elems.push_back(p);
  };
  add(identity(n));
  for (std::size_t i = 0; i < t.elems.size(); ++i)
    for (const Perm& g : gens) add(mul(t.elems[i], g));
  const std::size_t m = t.elems.size();
  t.mul.assign(m, std::vector<std::uint32_t>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) t.mul[a][b] = t.index.at(mul(t.elems[a], t.elems[b]));
  t.inv.resize(m);
  t.order.resize(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::uint32_t b = 0; b < m; ++b)
      if (t.mul[a][b] == 0) t.inv[a] = b;
    std::uint64_t k = 1;
    for (std::uint32_t r = static_cast<std::uint32_t>(a); r != 0; r = t.mul[r][a]) ++k;
    t.order[a] = k;
  }
  return t;
}

std::size_t closure_size(const std::vector<Perm>& gens, std::size_t n, std::size_t cap) {
  std::set<Perm> seen{identity(n)};
  std::deque<Perm> queue{identity(n)};
  while (!queue.empty()) {
    const Perm g = queue.front();
    queue.pop_front();
    for (const Perm& s : gens) {
      Perm h = mul(g, s);
      if (seen.insert(h).second) {
        if (seen.size() > cap) throw std::runtime_error("oracle closure over cap");
        queue.push_back(std::move(h));
      }
    }
  }
  return seen.size();
}

Subset generated(const Table& t, const std::vector<std::uint32_t>& seeds) {
  Subset in(t.size(), false);
  std::vector<std::uint32_t> members{0};
  in[0] = true;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::uint32_t s : seeds) {
      const std::uint32_t h = t.mul[members[i]][s];
      if (!in[h]) {
        in[h] = true;
        members.push_back(h);
      }
    }
  return in;
}

std::size_t count(const Subset& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), true)); }

bool closed_under_products(const Table& t, const Subset& s) {
  for (std::size_t a = 0; a < t.size(); ++a) {
    if (!s[a]) continue;
    for (std::size_t b = 0; b < t.size(); ++b)
      if (s[b] && !s[t.mul[a][b]]) return false;
  }
  return true;
}

Subset derived(const Table& t) {
  std::vector<std::uint32_t> comms;
  Subset seen(t.size(), false);
  for (std::uint32_t a = 0; a < t.size(); ++a)
    for (std::uint32_t b = 0; b < t.size(); ++b) {
      const std::uint32_t c = t.comm(a, b);
      if (!seen[c]) {
        seen[c] = true;
        comms.push_back(c);
      }
    }
  return generated(t, comms);
}

std::uint64_t exponent(const Table& t, const Subset& s) {
  std::uint64_t e = 1;
  for (std::size_t a = 0; a < t.size(); ++a)
    if (s[a]) e = std::lcm(e, t.order[a]);
  return e;
}

std::uint64_t exponent(const Table& t) { return exponent(t, Subset(t.size(), true)); }

bool weakly_power_closed(const Table& t, unsigned p) {
  const std::uint64_t e = exponent(t);
  for (std::uint64_t q = p; q < e; q *= p) {
    Subset powers(t.size(), false);
    for (std::uint32_t g = 0; g < t.size(); ++g) powers[t.pow(g, q)] = true;
    if (!closed_under_products(t, powers)) return false;
  }
  return true;
}

bool weakly_order_closed(const Table& t, unsigned p) {
  const std::uint64_t e = exponent(t);
  for (std::uint64_t q = p; q < e; q *= p) {
    Subset small(t.size(), false);
    for (std::uint32_t g = 0; g < t.size(); ++g) small[g] = t.pow(g, q) == 0;
    if (!closed_under_products(t, small)) return false;
  }
  return true;
}

Table subtable(const Table& t, const Subset& s) {
  std::vector<Perm> gens;
  for (std::size_t a = 0; a < t.size(); ++a)
    if (s[a]) gens.push_back(t.elems[a]);
  return closure(gens, t.elems[0].size(), t.size());
}

namespace {

bool generates(const Table& t, std::uint32_t a, std::uint32_t b) {
  return count(generated(t, {a, b})) == t.size();
}

}  // namespace

std::set<std::uint64_t> generating_pair_commutator_orders(const Table& t) {
  std::set<std::uint64_t> out;
  for (std::uint32_t a = 0; a < t.size(); ++a)
    for (std::uint32_t b = 0; b < t.size(); ++b)
      if (generates(t, a, b)) out.insert(t.order[t.comm(a, b)]);
  return out;
}

std::size_t generating_pair_count(const Table& t) {
  std::size_t n = 0;
  for (std::uint32_t a = 0; a < t.size(); ++a)
    for (std::uint32_t b = 0; b < t.size(); ++b) n += generates(t, a, b);
  return n;
}

unsigned nilpotency_class(const Table& t) {
  Subset term(t.size(), true);
  unsigned c = 0;
  while (count(term) > 1) {
    Subset hit(t.size(), false);
    for (std::uint32_t a = 0; a < t.size(); ++a)
      if (term[a])
        for (std::uint32_t b = 0; b < t.size(); ++b) hit[t.comm(a, b)] = true;
    std::vector<std::uint32_t> comms;
    for (std::uint32_t c = 0; c < t.size(); ++c)
      if (hit[c]) comms.push_back(c);
    Subset next = generated(t, comms);
    if (next == term) throw std::runtime_error("not nilpotent");
    term = std::move(next);
    ++c;
  }
  return c;
}

bool extends(const Table& t, std::uint32_t x1, std::uint32_t y1, std::uint32_t x2, std::uint32_t y2) {
  if (!generates(t, x1, y1) || !generates(t, x2, y2)) return false;
  std::vector<std::int64_t> phi(t.size(), -1);
  phi[0] = 0;
  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    const std::uint32_t g = queue.front();
    queue.pop_front();
    const std::uint32_t img = static_cast<std::uint32_t>(phi[g]);
    for (const auto& [s, s2] : {std::pair{x1, x2}, std::pair{y1, y2}}) {
      const std::uint32_t h = t.mul[g][s];
      const std::uint32_t want = t.mul[img][s2];
      if (phi[h] < 0) {
        phi[h] = want;
        queue.push_back(h);
      } else if (phi[h] != want) {
        return false;
      }
    }
  }
  std::vector<bool> hit(t.size(), false);
  for (auto v : phi) hit[static_cast<std::size_t>(v)] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::size_t vertex_count(const Table& t, std::uint32_t x, std::uint32_t y) {
  // slot 4g+0 lower left, +1 lower right, +2 upper left, +3 upper right
  std::vector<std::size_t> parent(4 * t.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  const auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  const auto join = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
  for (std::size_t g = 0; g < t.size(); ++g) {
    const std::size_t r = t.mul[g][x], u = t.mul[g][y];
    join(4 * g + 1, 4 * r + 0);
    join(4 * g + 3, 4 * r + 2);
    join(4 * g + 2, 4 * u + 0);
    join(4 * g + 3, 4 * u + 1);
  }
  std::size_t n = 0;
  for (std::size_t a = 0; a < parent.size(); ++a) n += find(a) == a;
  return n;
}

std::multiset<std::size_t> cycle_lengths(const Table& t, std::uint32_t step) {
  std::multiset<std::size_t> out;
  std::vector<bool> seen(t.size(), false);
  for (std::uint32_t g = 0; g < t.size(); ++g) {
    if (seen[g]) continue;
    std::size_t len = 0;
    for (std::uint32_t h = g; !seen[h]; h = t.mul[h][step]) {
      seen[h] = true;
      ++len;
    }
    out.insert(len);
  }
  return out;
}

std::uint64_t mult_order(std::uint64_t a, std::uint64_t m) {
  a %= m;
  std::uint64_t r = a, k = 1;
  while (r != 1 % m) {
    r = r * a % m;
    if (++k > m) throw std::runtime_error("not a unit");
  }
  return k;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace oracle
