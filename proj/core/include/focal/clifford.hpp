#pragma once

#include <utility>
#include <vector>

#include "focal/normalization.hpp"

namespace focal {

using IntMatrix = std::vector<std::vector<long long>>;

/// d/2 + 1 symmetric anticommuting involutions on R^d with integer entries,
/// the rescaled shape operators of the focal manifold of dimension d.
struct CliffordSystem {
  int d;
  std::vector<IntMatrix> matrices;
};

/// Builds the system for d in {4, 8, 16} by the doubling construction over
/// the left-multiplication operators of C, H, O. Throws
/// std::invalid_argument for other d.
CliffordSystem build_clifford_system(int d);

/// (1/3) sum_k tr(P_k P_k^T) = (d/3)(d/2 + 1), the squared-norm sum of the
/// second fundamental form.
Rat shape_trace_sum(const CliffordSystem& cs);

/// The curvature and second-fundamental-form terms of the Jacobi operator:
/// (-d, d/3). The second component is cross-validated against the Clifford
/// trace identity (1/3) tr(P_k P_0) = (d/3) delta_k0.
std::pair<Rat, Rat> jacobi_curvature_constants(const FocalSpace& space);

}  // namespace focal
