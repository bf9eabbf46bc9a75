#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "focal/normalization.hpp"

using namespace focal;

namespace {

const std::vector<FocalSpaceId> kSpaces = {FocalSpaceId::CP2, FocalSpaceId::HP2,
                                           FocalSpaceId::OP2};

}  // namespace

TEST_CASE("focal space shape") {
  for (auto id : kSpaces) {
    const FocalSpace& s = focal_space(id);
    CHECK(s.n == 3 * s.d / 2 + 1);
    CHECK(static_cast<int>(s.slice_levels.size()) ==
          root_system(s.isotropy_alg).rank);
  }
  CHECK(focal_space(FocalSpaceId::CP2).d == 4);
  CHECK(focal_space(FocalSpaceId::HP2).d == 8);
  CHECK(focal_space(FocalSpaceId::OP2).d == 16);
}

TEST_CASE("killing-to-dual reciprocity of the strange factor") {
  // The factor is defined on the dual; by construction c * <rho,rho> must be
  // dim/24 (the value of the normalized form on the dual of the Weyl vector).
  for (auto id : {RootSystemId::A1, RootSystemId::A2, RootSystemId::C2,
                  RootSystemId::C3, RootSystemId::B4, RootSystemId::F4}) {
    const RootSystem& rs = root_system(id);
    const MetricScale c = strange_dual_factor(rs);
    CHECK(c.meaning == MetricScale::Meaning::InducedOnDual);
    CHECK(c.value * inner_product(rs, rs.weyl_vector, rs.weyl_vector) ==
          Rat(rs.algebra_dim, 24));
  }
}

TEST_CASE("strange factor values") {
  CHECK(strange_dual_factor(root_system(RootSystemId::A1)).value == Rat(1, 4));
  CHECK(strange_dual_factor(root_system(RootSystemId::A2)).value == Rat(1, 6));
  CHECK(strange_dual_factor(root_system(RootSystemId::C2)).value == Rat(1, 12));
  CHECK(strange_dual_factor(root_system(RootSystemId::C3)).value == Rat(1, 16));
  CHECK(strange_dual_factor(root_system(RootSystemId::B4)).value == Rat(1, 14));
  CHECK(strange_dual_factor(root_system(RootSystemId::F4)).value == Rat(1, 18));
}

TEST_CASE("killing trace ratio") {
  CHECK(killing_trace_ratio(RootSystemId::A1) == Rat(4));
  CHECK(killing_trace_ratio(RootSystemId::A2) == Rat(6));
  CHECK(killing_trace_ratio(RootSystemId::C2) == Rat(6));
  CHECK(killing_trace_ratio(RootSystemId::C3) == Rat(8));
  CHECK_THROWS_AS(killing_trace_ratio(RootSystemId::B4), std::domain_error);
  CHECK_THROWS_AS(killing_trace_ratio(RootSystemId::F4), std::domain_error);
}

TEST_CASE("gauss scalar") {
  CHECK(gauss_scalar(4) == Rat(8));
  CHECK(gauss_scalar(8) == Rat(128, 3));
  CHECK(gauss_scalar(16) == Rat(192));
  for (int d : {4, 8, 16})
    CHECK(gauss_scalar(d) == Rat(d) * Rat(d - 1) - Rat(d, 3) * Rat(d / 2 + 1));
  CHECK_THROWS_AS(gauss_scalar(5), std::invalid_argument);
}

TEST_CASE("focal metric factor") {
  CHECK(focal_metric_factor(focal_space(FocalSpaceId::CP2)).value == Rat(1, 4));
  CHECK(focal_metric_factor(focal_space(FocalSpaceId::HP2)).value == Rat(3, 32));
  CHECK(focal_metric_factor(focal_space(FocalSpaceId::OP2)).value == Rat(1, 24));
  for (auto id : kSpaces) {
    const FocalSpace& s = focal_space(id);
    const MetricScale f = focal_metric_factor(s);
    CHECK(f.meaning == MetricScale::Meaning::FormOnAlgebra);
    // Definition: the factor is (d/2) / gauss_scalar(d).
    CHECK(f.value == Rat(s.d, 2) / gauss_scalar(s.d));
  }
}

TEST_CASE("restriction factor") {
  CHECK(restriction_factor(focal_space(FocalSpaceId::CP2)).value == Rat(3, 2));
  CHECK(restriction_factor(focal_space(FocalSpaceId::HP2)).value == Rat(4, 3));
  CHECK(restriction_factor(focal_space(FocalSpaceId::OP2)).value == Rat(9, 7));
  // Trace-form route for the matrix-algebra cases must agree with the
  // stored values.
  CHECK(restriction_factor(focal_space(FocalSpaceId::CP2)).value ==
        killing_trace_ratio(RootSystemId::A2) / killing_trace_ratio(RootSystemId::A1));
  CHECK(restriction_factor(focal_space(FocalSpaceId::HP2)).value ==
        killing_trace_ratio(RootSystemId::C3) / killing_trace_ratio(RootSystemId::C2));
  // Strange-factor route works for all three, including Spin(9) in F4.
  for (auto id : kSpaces) {
    const FocalSpace& s = focal_space(id);
    CHECK(restriction_factor(s).value ==
          strange_dual_factor(root_system(s.isotropy_alg)).value /
              strange_dual_factor(root_system(s.ambient_alg)).value);
  }
}

TEST_CASE("casimir dual scales") {
  const FocalSpace& cp2 = focal_space(FocalSpaceId::CP2);
  const FocalSpace& hp2 = focal_space(FocalSpaceId::HP2);
  const FocalSpace& op2 = focal_space(FocalSpaceId::OP2);
  CHECK(casimir_dual_scale(cp2, CasimirGroup::Ambient).value == Rat(2, 3));
  CHECK(casimir_dual_scale(hp2, CasimirGroup::Ambient).value == Rat(2, 3));
  CHECK(casimir_dual_scale(op2, CasimirGroup::Ambient).value == Rat(4, 3));
  CHECK(casimir_dual_scale(cp2, CasimirGroup::Isotropy).value == Rat(2, 3));
  CHECK(casimir_dual_scale(hp2, CasimirGroup::Isotropy).value == Rat(2, 3));
  CHECK(casimir_dual_scale(op2, CasimirGroup::Isotropy).value == Rat(4, 3));
  for (auto id : kSpaces) {
    const FocalSpace& s = focal_space(id);
    for (auto g : {CasimirGroup::Ambient, CasimirGroup::Isotropy})
      CHECK(casimir_dual_scale(s, g).meaning ==
            MetricScale::Meaning::InducedOnDual);
    // Ambient scale is the strange dual factor divided by the focal metric
    // factor (rescaling the form by f rescales the dual product by 1/f).
    CHECK(casimir_dual_scale(s, CasimirGroup::Ambient).value ==
          strange_dual_factor(root_system(s.ambient_alg)).value /
              focal_metric_factor(s).value);
    // Isotropy scale picks up the restriction factor on top.
    CHECK(casimir_dual_scale(s, CasimirGroup::Isotropy).value ==
          casimir_dual_scale(s, CasimirGroup::Ambient).value /
              restriction_factor(s).value *
              (strange_dual_factor(root_system(s.isotropy_alg)).value /
               strange_dual_factor(root_system(s.ambient_alg)).value));
  }
}
