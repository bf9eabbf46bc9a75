#include "focal/normalization.hpp"

#include <stdexcept>

namespace focal {

const FocalSpace& focal_space(FocalSpaceId id) {
  static const FocalSpace cp2{FocalSpaceId::CP2, 4, 7, RootSystemId::A2,
                              RootSystemId::A1, ExtraFactor::U1, {2}};
  static const FocalSpace hp2{FocalSpaceId::HP2, 8, 13, RootSystemId::C3,
                              RootSystemId::C2, ExtraFactor::Sp1, {0, 1}};
  static const FocalSpace op2{FocalSpaceId::OP2, 16, 25, RootSystemId::F4,
                              RootSystemId::B4, ExtraFactor::None, {1, 0, 0, 0}};
  switch (id) {
    case FocalSpaceId::CP2: return cp2;
    case FocalSpaceId::HP2: return hp2;
    case FocalSpaceId::OP2: return op2;
  }
  throw std::invalid_argument("unknown focal space id");
}

const char* focal_space_name(FocalSpaceId id) {
  switch (id) {
    case FocalSpaceId::CP2: return "cp2";
    case FocalSpaceId::HP2: return "hp2";
    case FocalSpaceId::OP2: return "op2";
  }
  return "?";
}

MetricScale strange_dual_factor(const RootSystem& rs) {
  const Rat rho2 = inner_product(rs, rs.weyl_vector, rs.weyl_vector);
  return {Rat(rs.algebra_dim) / (Rat(24) * rho2), MetricScale::Meaning::InducedOnDual};
}

Rat killing_trace_ratio(RootSystemId id) {
  switch (id) {
    case RootSystemId::A1: return Rat(4);   // su(2): 2n
    case RootSystemId::A2: return Rat(6);   // su(3): 2n
    case RootSystemId::C2: return Rat(6);   // sp(2): 2(n+1)
    case RootSystemId::C3: return Rat(8);   // sp(3): 2(n+1)
    case RootSystemId::B4:
    case RootSystemId::F4:
      throw std::domain_error("trace-form ratio not used for B4/F4");
  }
  throw std::invalid_argument("unknown root system id");
}

Rat gauss_scalar(int d) {
  if (d != 4 && d != 8 && d != 16)
    throw std::invalid_argument("focal dimension must be 4, 8 or 16");
  return Rat(d) * Rat(d - 1) - Rat(d, 3) * Rat(d / 2 + 1);
}

MetricScale focal_metric_factor(const FocalSpace& space) {
  // scal of the Killing metric on a symmetric space is dim/2; scaling the
  // form by f scales the scalar curvature by 1/f.
  const Rat scal_killing = Rat(space.d, 2);
  return {scal_killing / gauss_scalar(space.d), MetricScale::Meaning::FormOnAlgebra};
}

MetricScale restriction_factor(const FocalSpace& space) {
  if (space.id == FocalSpaceId::OP2) {
    // Shared torus: the form scaling is the reciprocal ratio of the induced
    // dual-product factors.
    const Rat cg = strange_dual_factor(root_system(space.ambient_alg)).value;
    const Rat ck = strange_dual_factor(root_system(space.isotropy_alg)).value;
    return {ck / cg, MetricScale::Meaning::FormOnAlgebra};
  }
  // Block embeddings restrict the trace form to the trace form.
  return {killing_trace_ratio(space.ambient_alg) / killing_trace_ratio(space.isotropy_alg),
          MetricScale::Meaning::FormOnAlgebra};
}

MetricScale casimir_dual_scale(const FocalSpace& space, CasimirGroup which) {
  const Rat f = focal_metric_factor(space).value;
  if (which == CasimirGroup::Ambient) {
    const Rat c = strange_dual_factor(root_system(space.ambient_alg)).value;
    return {c / f, MetricScale::Meaning::InducedOnDual};
  }
  // b_K restricted to the semisimple part of k is f*r times b_k.
  const Rat r = restriction_factor(space).value;
  const Rat c = strange_dual_factor(root_system(space.isotropy_alg)).value;
  return {c / (f * r), MetricScale::Meaning::InducedOnDual};
}

}  // namespace focal
