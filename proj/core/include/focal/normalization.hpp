#pragma once

#include "focal/root_data.hpp"

namespace focal {

enum class FocalSpaceId { CP2, HP2, OP2 };

/// Extra factor of the isotropy group K beyond its semisimple root system:
/// the U(1) in U(2), the Sp(1) in Sp(2)*Sp(1), or nothing for Spin(9).
enum class ExtraFactor { None, U1, Sp1 };

/// One of the three orientable cubic focal manifolds KP^2 in S^n.
struct FocalSpace {
  FocalSpaceId id;
  int d;  // dimension (4, 8, 16)
  int n;  // ambient sphere dimension, n = 3d/2 + 1
  RootSystemId ambient_alg;    // g: A2, C3, F4
  RootSystemId isotropy_alg;   // semisimple part of k: A1, C2, B4
  ExtraFactor extra;           // remaining factor of K
  DominantWeight slice_levels; // highest weight of the slice rep on the semisimple part
};

const FocalSpace& focal_space(FocalSpaceId id);
const char* focal_space_name(FocalSpaceId id);

/// A positive rational relating two invariant bilinear forms (on the algebra)
/// or the inner products they induce on the dual of the torus. Rescaling the
/// form by c rescales the dual product by 1/c.
struct MetricScale {
  enum class Meaning { FormOnAlgebra, InducedOnDual };
  Rat value;
  Meaning meaning;
};

enum class CasimirGroup { Ambient, Isotropy };

/// The factor c such that the dual product induced by the negative Killing
/// form equals c times the standard coordinate dot product:
/// c = dim(g) / (24 <rho, rho>).
MetricScale strange_dual_factor(const RootSystem& rs);

/// Ratio Killing form / trace form for the classical algebras: 2n for su(n),
/// 2(n+1) for sp(n). Throws std::domain_error for B4 and F4.
Rat killing_trace_ratio(RootSystemId id);

/// d(d-1) - (d/3)(d/2+1), the scalar curvature of the induced focal metric.
/// Throws std::invalid_argument unless d is 4, 8 or 16.
Rat gauss_scalar(int d);

/// f with b_K = f * b_g: 1/4, 3/32, 1/24.
MetricScale focal_metric_factor(const FocalSpace& space);

/// r with b_g restricted to the semisimple part of k equal to r * b_k.
MetricScale restriction_factor(const FocalSpace& space);

/// The single rational s with Casimir eigenvalue = s * <lambda, lambda+2rho>
/// in standard coordinates, for the metric b_K (Ambient) or its restriction
/// to the semisimple part of k (Isotropy).
MetricScale casimir_dual_scale(const FocalSpace& space, CasimirGroup which);

}  // namespace focal
