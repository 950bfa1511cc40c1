#pragma once

// Structural queries: orbits, centres, normal closures, simplicity and
// isomorphism.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sgd/group.hpp"

namespace sgd {

/// Orbits of the diagonal action on p-tuples, p ∈ {1, 2}. Tuples are encoded
/// as integers: a point for p = 1, first·degree + second for p = 2. Orbits
/// are sorted internally and ordered by their least tuple.
struct Orbits {
  std::uint32_t degree = 0;
  std::uint32_t arity = 1;
  std::vector<std::vector<std::uint64_t>> orbits;
  /// orbit_of[tuple] indexes into orbits.
  std::vector<std::uint32_t> orbit_of;
};

Orbits orbits(const PermGroup& g, std::uint32_t arity);

/// Number of 2-orbits containing a pair (r, t).
std::size_t k2_at(const PermGroup& g, Point r);
std::size_t k2_at(const Orbits& pair_orbits, Point r);

/// Elements commuting with every element.
std::vector<Elem> centre(const GroupTable& g);
/// Elements commuting with every generator, as sorted element indices.
std::vector<Elem> centre(const PermGroup& g);

std::vector<std::vector<Elem>> conjugacy_classes(const GroupTable& g);

/// Smallest normal subgroup containing x, as a sorted element list.
std::vector<Elem> normal_closure(const GroupTable& g, Elem x);

inline constexpr std::size_t kSimplicityLimit = 10'000;

/// True iff the normal closure of every nonidentity element is the whole
/// group. Throws kInvalidInput for the trivial group and kSizeLimit above
/// kSimplicityLimit elements.
bool is_simple(const GroupTable& g);

/// A short generating sequence, built greedily from elements of large order.
std::vector<Elem> generating_sequence(const GroupTable& g);

/// Sorted multiset of element orders.
std::vector<std::uint32_t> order_profile(const GroupTable& g);

/// Visits every injective homomorphism G → H that is a bijection, found by
/// mapping `gens` (which must generate G) to image tuples in H with matching
/// element orders and matching orders of pairwise products. The callback
/// receives the full element map and returns false to stop the search.
void for_each_isomorphism(const GroupTable& g, const GroupTable& h, std::span<const Elem> gens,
                          const std::function<bool(std::span<const Elem>)>& visit);

/// An explicit isomorphism G → H (image of each element), or nothing.
std::optional<std::vector<Elem>> is_isomorphic(const GroupTable& g, const GroupTable& h);

}  // namespace sgd
