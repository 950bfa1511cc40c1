#include "sgd/group.hpp"

#include <algorithm>
#include <random>

#include "sgd/error.hpp"

namespace sgd {

GroupTable::GroupTable(const std::vector<std::vector<Elem>>& rows) : n_(rows.size()) {
  table_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw Error(Errc::kInvalidGroup, "table is not square");
    table_.insert(table_.end(), r.begin(), r.end());
  }
  validate();
}

GroupTable::GroupTable(std::size_t order, std::vector<Elem> flat) : n_(order), table_(std::move(flat)) {
  if (table_.size() != n_ * n_) throw Error(Errc::kInvalidGroup, "table is not square");
  validate();
}

void GroupTable::validate() {
  if (n_ == 0) throw Error(Errc::kInvalidGroup, "empty group");
  std::vector<std::uint32_t> seen(n_, 0);
  std::uint32_t stamp = 0;
  for (std::size_t a = 0; a < n_; ++a) {
    ++stamp;
    for (std::size_t b = 0; b < n_; ++b) {
      const Elem x = table_[a * n_ + b];
      if (x >= n_ || seen[x] == stamp) throw Error(Errc::kInvalidGroup, "table is not a Latin square");
      seen[x] = stamp;
    }
  }
  for (std::size_t b = 0; b < n_; ++b) {
    ++stamp;
    for (std::size_t a = 0; a < n_; ++a) {
      const Elem x = table_[a * n_ + b];
      if (seen[x] == stamp) throw Error(Errc::kInvalidGroup, "table is not a Latin square");
      seen[x] = stamp;
    }
  }
  std::optional<Elem> id;
  for (Elem e = 0; e < n_ && !id; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n_ && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) id = e;
  }
  if (!id) throw Error(Errc::kInvalidGroup, "no identity element");
  identity_ = *id;
  inverse_.assign(n_, 0);
  for (Elem a = 0; a < n_; ++a) {
    for (Elem b = 0; b < n_; ++b) {
      if (mul(a, b) == identity_) {
        inverse_[a] = b;
        break;
      }
    }
    if (mul(inverse_[a], a) != identity_) throw Error(Errc::kInvalidGroup, "inverse is not two-sided");
  }
  auto assoc = [&](Elem a, Elem b, Elem c) { return mul(mul(a, b), c) == mul(a, mul(b, c)); };
  if (n_ <= 256) {
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = 0; b < n_; ++b)
        for (Elem c = 0; c < n_; ++c)
          if (!assoc(a, b, c)) throw Error(Errc::kInvalidGroup, "multiplication is not associative");
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n_ - 1));
    for (int i = 0; i < 100000; ++i)
      if (!assoc(pick(rng), pick(rng), pick(rng)))
        throw Error(Errc::kInvalidGroup, "multiplication is not associative");
  }
}

Elem GroupTable::power(Elem a, std::uint64_t e) const {
  Elem result = identity_;
  Elem base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t GroupTable::element_order(Elem a) const {
  std::uint32_t k = 1;
  for (Elem x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

std::vector<std::uint32_t> GroupTable::element_orders() const {
  std::vector<std::uint32_t> out(n_);
  for (Elem a = 0; a < n_; ++a) out[a] = element_order(a);
  return out;
}

bool GroupTable::is_abelian() const {
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<Elem> GroupTable::subgroup(std::span<const Elem> gens) const {
  std::vector<bool> in(n_, false);
  std::vector<Elem> members{identity_};
  in[identity_] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Elem g : gens) {
      const Elem x = mul(members[i], g);
      if (!in[x]) {
        in[x] = true;
        members.push_back(x);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<std::vector<Elem>> GroupTable::rows() const {
  std::vector<std::vector<Elem>> out(n_);
  for (Elem a = 0; a < n_; ++a) out[a].assign(row(a).begin(), row(a).end());
  return out;
}

// ---------------------------------------------------------------------------

PermGroup::PermGroup(std::uint32_t degree, std::vector<Permutation> generators, std::size_t max_order)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw Error(Errc::kInvalidInput, "generator degree mismatch");
  std::unordered_map<Permutation, Elem, PermutationHash> seen;
  std::vector<Permutation> found{Permutation(degree_)};
  seen.emplace(found.front(), 0);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& g : generators_) {
      Permutation x = found[i] * g;
      if (seen.contains(x)) continue;
      if (found.size() >= max_order)
        throw Error(Errc::kSizeLimit, "permutation group exceeds " + std::to_string(max_order) + " elements");
      seen.emplace(x, static_cast<Elem>(found.size()));
      found.push_back(std::move(x));
    }
  }
  std::sort(found.begin(), found.end());
  elements_ = std::move(found);
  index_.reserve(elements_.size());
  for (Elem i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

std::optional<Elem> PermGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Elem> PermGroup::generator_indices() const {
  std::vector<Elem> out;
  for (const auto& g : generators_) out.push_back(index_.at(g));
  return out;
}

GroupTable PermGroup::table() const {
  const std::size_t n = elements_.size();
  std::vector<Elem> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = index_.at(elements_[a] * elements_[b]);
  }
  return GroupTable(n, std::move(flat));
}

}  // namespace sgd
