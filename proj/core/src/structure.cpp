#include "sgd/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "sgd/error.hpp"

namespace sgd {

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  std::vector<std::size_t> parent;
};

}  // namespace

Orbits orbits(const PermGroup& g, std::uint32_t arity) {
  if (arity != 1 && arity != 2) throw Error(Errc::kInvalidInput, "orbit arity must be 1 or 2");
  const std::uint64_t n = g.degree();
  const std::uint64_t tuples = arity == 1 ? n : n * n;
  DisjointSets sets(tuples);
  for (const auto& s : g.generators()) {
    for (std::uint64_t t = 0; t < tuples; ++t) {
      const std::uint64_t image = arity == 1 ? s(static_cast<Point>(t))
                                             : s(static_cast<Point>(t / n)) * n + s(static_cast<Point>(t % n));
      sets.unite(t, image);
    }
  }
  Orbits out;
  out.degree = g.degree();
  out.arity = arity;
  out.orbit_of.assign(tuples, 0);
  std::vector<std::int64_t> slot(tuples, -1);
  for (std::uint64_t t = 0; t < tuples; ++t) {
    const std::size_t root = sets.find(t);
    if (slot[root] < 0) {
      slot[root] = static_cast<std::int64_t>(out.orbits.size());
      out.orbits.emplace_back();
    }
    out.orbit_of[t] = static_cast<std::uint32_t>(slot[root]);
    out.orbits[slot[root]].push_back(t);
  }
  return out;
}

std::size_t k2_at(const Orbits& pair_orbits, Point r) {
  if (pair_orbits.arity != 2) throw Error(Errc::kInvalidInput, "k2 needs the 2-orbit partition");
  const std::uint64_t n = pair_orbits.degree;
  if (r >= n) throw Error(Errc::kIndexOutOfRange, "point out of range");
  std::vector<std::uint32_t> ids;
  for (std::uint64_t t = 0; t < n; ++t) ids.push_back(pair_orbits.orbit_of[r * n + t]);
  std::sort(ids.begin(), ids.end());
  return static_cast<std::size_t>(std::unique(ids.begin(), ids.end()) - ids.begin());
}

std::size_t k2_at(const PermGroup& g, Point r) { return k2_at(orbits(g, 2), r); }

std::vector<Elem> centre(const GroupTable& g) {
  std::vector<Elem> out;
  const auto gens = generating_sequence(g);
  for (Elem z = 0; z < g.order(); ++z) {
    bool central = true;
    for (Elem s : gens) central = central && g.mul(z, s) == g.mul(s, z);
    if (central) out.push_back(z);
  }
  return out;
}

std::vector<Elem> centre(const PermGroup& g) {
  std::vector<Elem> out;
  for (Elem z = 0; z < g.order(); ++z) {
    const auto& p = g.element(z);
    bool central = true;
    for (const auto& s : g.generators()) central = central && p * s == s * p;
    if (central) out.push_back(z);
  }
  return out;
}

std::vector<std::vector<Elem>> conjugacy_classes(const GroupTable& g) {
  std::vector<bool> done(g.order(), false);
  std::vector<std::vector<Elem>> out;
  for (Elem x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::vector<Elem> cls;
    for (Elem h = 0; h < g.order(); ++h) {
      const Elem y = g.conjugate(h, x);
      if (!done[y]) {
        done[y] = true;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<Elem> normal_closure(const GroupTable& g, Elem x) {
  std::vector<Elem> cls;
  std::vector<bool> seen(g.order(), false);
  for (Elem h = 0; h < g.order(); ++h) {
    const Elem y = g.conjugate(h, x);
    if (!seen[y]) {
      seen[y] = true;
      cls.push_back(y);
    }
  }
  return g.subgroup(cls);
}

bool is_simple(const GroupTable& g) {
  if (g.order() < 2) throw Error(Errc::kInvalidInput, "simplicity needs at least 2 elements");
  if (g.order() > kSimplicityLimit)
    throw Error(Errc::kSizeLimit, "simplicity test limited to " + std::to_string(kSimplicityLimit) + " elements");
  for (const auto& cls : conjugacy_classes(g)) {
    if (cls.front() == g.identity()) continue;
    if (normal_closure(g, cls.front()).size() != g.order()) return false;
  }
  return true;
}

std::vector<std::uint32_t> order_profile(const GroupTable& g) {
  auto orders = g.element_orders();
  std::sort(orders.begin(), orders.end());
  return orders;
}

std::vector<Elem> generating_sequence(const GroupTable& g) {
  const std::size_t n = g.order();
  if (n == 1) return {};
  const auto orders = g.element_orders();
  std::map<std::uint32_t, std::size_t> class_size;
  for (auto o : orders) ++class_size[o];

  // Prefer a generating pair whose order classes are small: it bounds the
  // number of candidate image tuples in isomorphism search.
  std::vector<Elem> best;
  std::size_t best_cost = 0;
  std::map<std::uint32_t, Elem> first_of_order;
  for (Elem x = 0; x < n; ++x) first_of_order.emplace(orders[x], x);
  for (const auto& [order, a] : first_of_order) {
    if (order == 1) continue;
    if (g.subgroup(std::span<const Elem>(&a, 1)).size() == n) {
      const std::size_t cost = class_size[order];
      if (best.empty() || best.size() > 1 || cost < best_cost) {
        best = {a};
        best_cost = cost;
      }
      continue;
    }
    if (best.size() == 1) continue;
    for (Elem b = 0; b < n; ++b) {
      if (orders[b] == 1) continue;
      const std::size_t cost = class_size[order] * class_size[orders[b]];
      if (!best.empty() && cost >= best_cost) continue;
      const Elem pair[] = {a, b};
      if (g.subgroup(pair).size() == n) {
        best = {a, b};
        best_cost = cost;
      }
    }
  }
  if (!best.empty()) return best;

  std::vector<Elem> by_order(n);
  std::iota(by_order.begin(), by_order.end(), Elem{0});
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Elem a, Elem b) { return orders[a] > orders[b]; });
  std::vector<Elem> gens;
  std::vector<bool> in(n, false);
  in[g.identity()] = true;
  std::size_t covered = 1;
  for (Elem x : by_order) {
    if (covered == n) break;
    if (in[x]) continue;
    gens.push_back(x);
    const auto sub = g.subgroup(gens);
    std::fill(in.begin(), in.end(), false);
    for (Elem y : sub) in[y] = true;
    covered = sub.size();
  }
  return gens;
}

void for_each_isomorphism(const GroupTable& g, const GroupTable& h, std::span<const Elem> gens,
                          const std::function<bool(std::span<const Elem>)>& visit) {
  const std::size_t n = g.order();
  if (h.order() != n) return;
  if (n == 1) {
    const Elem only[] = {h.identity()};
    visit(only);
    return;
  }
  const auto g_orders = g.element_orders();
  const auto h_orders = h.element_orders();
  std::map<std::uint32_t, std::vector<Elem>> h_by_order;
  for (Elem y = 0; y < n; ++y) h_by_order[h_orders[y]].push_back(y);

  // Spanning tree of G: x = parent[x] · gens[via[x]].
  std::vector<Elem> parent(n), via(n), order_seen{g.identity()};
  std::vector<bool> reached(n, false);
  reached[g.identity()] = true;
  for (std::size_t i = 0; i < order_seen.size(); ++i) {
    for (std::uint32_t j = 0; j < gens.size(); ++j) {
      const Elem y = g.mul(order_seen[i], gens[j]);
      if (reached[y]) continue;
      reached[y] = true;
      parent[y] = order_seen[i];
      via[y] = j;
      order_seen.push_back(y);
    }
  }
  if (order_seen.size() != n) throw Error(Errc::kNotGenerating, "isomorphism search needs a generating sequence");

  const std::size_t k = gens.size();
  std::vector<Elem> images(k);
  std::vector<Elem> map(n);
  std::vector<std::uint32_t> used(n, 0);
  std::uint32_t stamp = 0;

  auto try_extend = [&]() -> bool {
    ++stamp;
    map[g.identity()] = h.identity();
    used[h.identity()] = stamp;
    for (std::size_t i = 1; i < n; ++i) {
      const Elem x = order_seen[i];
      const Elem y = h.mul(map[parent[x]], images[via[x]]);
      if (used[y] == stamp) return false;
      used[y] = stamp;
      map[x] = y;
    }
    for (Elem x = 0; x < n; ++x)
      for (std::size_t j = 0; j < k; ++j)
        if (map[g.mul(x, gens[j])] != h.mul(map[x], images[j])) return false;
    return true;
  };

  bool keep_going = true;
  std::function<void(std::size_t)> choose = [&](std::size_t pos) {
    if (!keep_going) return;
    if (pos == k) {
      if (try_extend()) keep_going = visit(map);
      return;
    }
    auto it = h_by_order.find(g_orders[gens[pos]]);
    if (it == h_by_order.end()) return;
    for (Elem candidate : it->second) {
      bool ok = true;
      for (std::size_t i = 0; i < pos && ok; ++i) {
        ok = h_orders[h.mul(images[i], candidate)] == g_orders[g.mul(gens[i], gens[pos])] &&
             h_orders[h.mul(candidate, images[i])] == g_orders[g.mul(gens[pos], gens[i])];
      }
      if (!ok) continue;
      images[pos] = candidate;
      choose(pos + 1);
      if (!keep_going) return;
    }
  };
  choose(0);
}

std::optional<std::vector<Elem>> is_isomorphic(const GroupTable& g, const GroupTable& h) {
  if (g.order() != h.order()) return std::nullopt;
  if (order_profile(g) != order_profile(h)) return std::nullopt;
  if (g.is_abelian() != h.is_abelian()) return std::nullopt;
  std::optional<std::vector<Elem>> found;
  for_each_isomorphism(g, h, generating_sequence(g), [&](std::span<const Elem> map) {
    found.emplace(map.begin(), map.end());
    return false;
  });
  return found;
}

}  // namespace sgd
