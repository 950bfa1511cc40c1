#pragma once

// Automorphism groups, the left regular representation, holomorphs and the
// map R from the normaliser of the regular image onto Aut(G).

#include <cstddef>
#include <vector>

#include "sgd/group.hpp"

namespace sgd {

struct AutOptions {
  static constexpr std::size_t kDefaultMaxOrder = 64;
  static constexpr std::size_t kExtendedMaxOrder = 720;
  std::size_t max_order = kDefaultMaxOrder;
};

/// Aut(G) with each automorphism stored as a permutation of element indices.
struct AutGroup {
  GroupTable base;
  /// Sorted; the identity automorphism is first.
  std::vector<Permutation> automorphisms;
  /// Conjugation maps x ↦ gxg⁻¹, deduplicated and sorted.
  std::vector<Permutation> inner;
  std::size_t out_order = 0;
};

/// Exhaustive generator-image search. Throws kSizeLimit above
/// options.max_order.
AutGroup automorphisms(const GroupTable& g, AutOptions options = {});

struct RegularRep {
  GroupTable source;
  /// Degree |G|; generated by τ_g(x) = g·x for g in a generating sequence.
  PermGroup image;
};

/// τ_g as a permutation of element indices.
Permutation left_translation(const GroupTable& g, Elem x);
RegularRep regular_representation(const GroupTable& g);

inline constexpr std::size_t kHolomorphMaxOrder = 200'000;

/// ⟨τ_G, Aut(G)⟩ ≤ Sym(G); its order is checked to be |G|·|Aut(G)|.
PermGroup holomorph(const AutGroup& aut);
PermGroup holomorph(const GroupTable& g, AutOptions options = {});

/// R(φ)(g) = h where φτ_gφ⁻¹ = τ_h, returned as a permutation of element
/// indices. Throws kNotNormalizing if φ does not normalise the regular image.
Permutation r_map(const GroupTable& g, const Permutation& phi);

inline constexpr std::uint32_t kBruteNormalizerMaxDegree = 8;

/// Normaliser of H in S_n by sweeping all n! permutations (n ≤ 8).
PermGroup brute_normalizer(const PermGroup& h);

struct CentreBoundReport {
  std::size_t centre_order = 0;
  std::vector<Point> orbit_reps;
  std::vector<std::size_t> k2_values;
  std::size_t bound = 1;
  bool holds = false;
};

/// |C(G)| against ∏ k₂(G, rᵢ) over 1-orbit representatives rᵢ.
CentreBoundReport centre_bound_report(const PermGroup& g);

}  // namespace sgd
