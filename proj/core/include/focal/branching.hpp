#pragma once

#include <map>
#include <optional>

#include "focal/rep_core.hpp"

namespace focal {

/// Label of an irreducible K-representation: a dominant weight for the
/// semisimple part plus, where present, the extra-factor datum (a U(1)
/// charge for CP^2, an Sp(1) dominant level for HP^2).
struct KIrrepLabel {
  DominantWeight semisimple;
  Rat extra{0};

  bool operator==(const KIrrepLabel& o) const {
    return semisimple == o.semisimple && extra == o.extra;
  }
  bool operator<(const KIrrepLabel& o) const {
    if (semisimple != o.semisimple) return semisimple < o.semisimple;
    return extra < o.extra;
  }
};

/// Rational linear map from G-weight coordinates to the weight coordinates
/// of the semisimple part of K, plus an optional functional extracting the
/// extra-factor weight.
struct TorusEmbedding {
  std::vector<std::vector<Rat>> semisimple_map;  // k_rank x g_ambient_dim
  std::optional<std::vector<Rat>> extra_map;     // length g_ambient_dim
};

const TorusEmbedding& torus_embedding(const FocalSpace& space);

struct BranchingResult {
  std::map<KIrrepLabel, long long> constituents;  // label -> multiplicity > 0
};

/// Restricts a G-weight through the torus embedding.
/// Returns (semisimple K-weight, extra scalar).
std::pair<WeightVector, Rat> restrict_weight(const FocalSpace& space,
                                             const WeightVector& g_weight);

/// Complex dimension of the K-irrep with the given label.
long long k_irrep_dimension(const FocalSpace& space, const KIrrepLabel& label);

/// Full decomposition of V_lambda restricted to K, computed by restricting
/// the weight system and peeling off highest weights. The dimension-sum
/// invariant is checked on every call.
BranchingResult branch(const FocalSpace& space, const DominantWeight& lambda,
                       long long dim_guard = kDefaultDimGuard);

/// Label of the slice representation of K on the complexified normal space.
KIrrepLabel slice_label(const FocalSpace& space);

/// Multiplicity of one K-irrep in V_lambda|_K, via the Weyl alternating sum
/// over the K-Weyl orbit of label + rho_K. Agrees with branch() everywhere
/// but never materializes the full weight multiset, so it scales to
/// representations far beyond the branch() guard.
long long constituent_multiplicity(const FocalSpace& space, const DominantWeight& lambda,
                                   const KIrrepLabel& label);

/// m_lambda: multiplicity of the slice representation in V_lambda|_K.
long long slice_multiplicity(const FocalSpace& space, const DominantWeight& lambda);

/// Multiplicity of the trivial K-representation in V_lambda|_K.
long long spherical_multiplicity(const FocalSpace& space, const DominantWeight& lambda);

}  // namespace focal
