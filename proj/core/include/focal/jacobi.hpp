#pragma once

#include <vector>

#include "focal/branching.hpp"

namespace focal {

enum class EigenClass { Negative, Null, Positive };

struct SpectrumEntry {
  DominantWeight levels;
  Rat casimir;            // c_lambda w.r.t. b_K
  Rat jacobi_eigenvalue;  // c_lambda - 2d
  long long dim;
  long long multiplicity;  // m_lambda
  EigenClass cls;
};

struct SpectrumReport {
  FocalSpaceId space;
  std::vector<SpectrumEntry> entries;  // multiplicity > 0, sorted by (casimir, levels)
  long long index;
  long long nullity;
  long long killing_nullity;
  bool expanded_consistency;  // slice Casimir + (4/3)d == 2d
};

/// Casimir of the slice representation w.r.t. b_K restricted to k: (2/3)d.
Rat slice_casimir(const FocalSpace& space);

/// c_lambda - 2d. Recomputes the shift as slice_casimir + (4/3)d and throws
/// std::logic_error if it differs from 2d.
Rat jacobi_eigenvalue(const FocalSpace& space, const DominantWeight& lambda);

/// Enumerates all dominant lambda with c_lambda <= 2d + margin, computes
/// m_lambda by branching, and totals index, nullity and Killing nullity.
SpectrumReport compute_spectrum(const FocalSpace& space, const Rat& margin = Rat(0),
                                long long dim_guard = kDefaultDimGuard);

/// Smallest nonzero Casimir eigenvalue among representations containing the
/// trivial K-type; equals d for all three spaces.
Rat first_laplace_eigenvalue(const FocalSpace& space);

}  // namespace focal
