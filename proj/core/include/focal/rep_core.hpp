#pragma once

#include <map>

#include "focal/normalization.hpp"
#include "focal/root_data.hpp"

namespace focal {

inline constexpr long long kDefaultDimGuard = 100000;

/// Full weight multiset of an irreducible representation.
struct WeightSystem {
  DominantWeight rep;
  std::map<WeightVector, long long> entries;  // weight -> multiplicity > 0
};

/// Weyl dimension formula: prod <lambda+rho, alpha> / <rho, alpha> over
/// positive roots. Exact; throws std::invalid_argument on negative levels.
long long weyl_dimension(const RootSystem& rs, const DominantWeight& lambda);

/// s.value * <lambda, lambda + 2 rho>. The scale must be an induced-on-dual
/// MetricScale.
Rat casimir_eigenvalue(const RootSystem& rs, const DominantWeight& lambda,
                       const MetricScale& s);

/// Freudenthal recursion restricted to the dominant chamber: multiplicity of
/// every dominant weight of V_lambda. The full multiset is the union of the
/// Weyl orbits of these.
std::map<WeightVector, long long> dominant_weight_multiplicities(
    const RootSystem& rs, const DominantWeight& lambda);

/// Full weight multiset (dominant multiplicities expanded over Weyl orbits).
/// Throws std::length_error if the Weyl dimension exceeds dim_guard.
WeightSystem weight_system(const RootSystem& rs, const DominantWeight& lambda,
                           long long dim_guard = kDefaultDimGuard);

/// The Weyl orbit of v, generated by simple reflections.
std::vector<WeightVector> weyl_orbit(const RootSystem& rs, const WeightVector& v);

/// All dominant weights with casimir_eigenvalue(rs, ., s) <= bound, each
/// once, sorted by (casimir, levels). Completeness rests on monotonicity of
/// the Casimir along every fundamental-weight direction.
std::vector<DominantWeight> enumerate_dominant(const RootSystem& rs,
                                               const MetricScale& s,
                                               const Rat& bound);

}  // namespace focal
