#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "focal/jacobi.hpp"

using namespace focal;

namespace {

const SpectrumEntry* find_entry(const SpectrumReport& r, const DominantWeight& dw) {
  for (const auto& e : r.entries)
    if (e.levels == dw) return &e;
  return nullptr;
}

}  // namespace

TEST_CASE("slice casimir") {
  for (auto id : {FocalSpaceId::CP2, FocalSpaceId::HP2, FocalSpaceId::OP2}) {
    const FocalSpace& s = focal_space(id);
    CHECK(slice_casimir(s) == Rat(2 * s.d, 3));
    // Same number via the general Casimir of the slice label under the
    // isotropy scale.
    CHECK(slice_casimir(s) ==
          casimir_eigenvalue(root_system(s.isotropy_alg), s.slice_levels,
                             casimir_dual_scale(s, CasimirGroup::Isotropy)));
    // The eigenvalue shift reconstitutes 2d: slice Casimir + (4/3)d.
    CHECK(slice_casimir(s) + Rat(4 * s.d, 3) == Rat(2 * s.d));
  }
}

TEST_CASE("jacobi eigenvalue examples") {
  CHECK(jacobi_eigenvalue(focal_space(FocalSpaceId::CP2), {1, 1}) == Rat(-4));
  CHECK(jacobi_eigenvalue(focal_space(FocalSpaceId::CP2), {3, 0}) == Rat(0));
  CHECK(jacobi_eigenvalue(focal_space(FocalSpaceId::HP2), {0, 1, 0}) == Rat(-8));
  CHECK(jacobi_eigenvalue(focal_space(FocalSpaceId::HP2), {1, 0, 1}) == Rat(0));
  CHECK(jacobi_eigenvalue(focal_space(FocalSpaceId::OP2), {0, 0, 0, 0}) == Rat(-32));
  CHECK(jacobi_eigenvalue(focal_space(FocalSpaceId::OP2), {0, 0, 1, 0}) == Rat(0));
}

TEST_CASE("complex projective plane spectrum") {
  const SpectrumReport r = compute_spectrum(focal_space(FocalSpaceId::CP2));
  CHECK(r.index == 8);
  CHECK(r.nullity == 20);
  CHECK(r.killing_nullity == 20);
  CHECK(r.expanded_consistency);
  REQUIRE(r.entries.size() == 3);
  const SpectrumEntry* neg = find_entry(r, {1, 1});
  REQUIRE(neg);
  CHECK(neg->casimir == Rat(4));
  CHECK(neg->jacobi_eigenvalue == Rat(-4));
  CHECK(neg->dim == 8);
  CHECK(neg->multiplicity == 1);
  CHECK(neg->cls == EigenClass::Negative);
  for (const DominantWeight& dw : {DominantWeight{3, 0}, DominantWeight{0, 3}}) {
    const SpectrumEntry* nul = find_entry(r, dw);
    REQUIRE(nul);
    CHECK(nul->casimir == Rat(8));
    CHECK(nul->dim == 10);
    CHECK(nul->multiplicity == 1);
    CHECK(nul->cls == EigenClass::Null);
  }
}

TEST_CASE("quaternionic projective plane spectrum") {
  const SpectrumReport r = compute_spectrum(focal_space(FocalSpaceId::HP2));
  CHECK(r.index == 14);
  CHECK(r.nullity == 70);
  CHECK(r.killing_nullity == 70);
  REQUIRE(r.entries.size() == 2);
  CHECK(r.entries[0].levels == DominantWeight{0, 1, 0});
  CHECK(r.entries[0].casimir == Rat(8));
  CHECK(r.entries[0].dim == 14);
  CHECK(r.entries[0].cls == EigenClass::Negative);
  CHECK(r.entries[1].levels == DominantWeight{1, 0, 1});
  CHECK(r.entries[1].casimir == Rat(16));
  CHECK(r.entries[1].dim == 70);
  CHECK(r.entries[1].cls == EigenClass::Null);
}

TEST_CASE("octonionic projective plane spectrum") {
  const SpectrumReport r = compute_spectrum(focal_space(FocalSpaceId::OP2));
  CHECK(r.index == 26);
  CHECK(r.nullity == 273);
  CHECK(r.killing_nullity == 273);
  REQUIRE(r.entries.size() == 2);
  CHECK(r.entries[0].levels == DominantWeight{0, 0, 0, 1});
  CHECK(r.entries[0].casimir == Rat(16));
  CHECK(r.entries[0].dim == 26);
  CHECK(r.entries[0].cls == EigenClass::Negative);
  CHECK(r.entries[1].levels == DominantWeight{0, 0, 1, 0});
  CHECK(r.entries[1].casimir == Rat(32));
  CHECK(r.entries[1].dim == 273);
  CHECK(r.entries[1].cls == EigenClass::Null);
}

TEST_CASE("spectrum invariants") {
  for (auto id : {FocalSpaceId::CP2, FocalSpaceId::HP2, FocalSpaceId::OP2}) {
    const FocalSpace& s = focal_space(id);
    const SpectrumReport r = compute_spectrum(s);
    CHECK(r.expanded_consistency);
    // Killing fields: difference between the ambient isometry algebra and
    // the symmetry algebra of the space.
    CHECK(r.killing_nullity ==
          static_cast<long long>(s.n + 1) * s.n / 2 -
              root_system(s.ambient_alg).algebra_dim);
    // Index is the dimension of the ambient round sphere's isometry-orbit
    // direction count n + 1.
    CHECK(r.index == s.n + 1);
    long long index = 0, nullity = 0;
    for (size_t i = 0; i < r.entries.size(); ++i) {
      const auto& e = r.entries[i];
      CHECK(e.multiplicity > 0);
      CHECK(e.jacobi_eigenvalue == e.casimir - Rat(2 * s.d));
      CHECK(e.cls == (e.casimir < Rat(2 * s.d)
                          ? EigenClass::Negative
                          : (e.casimir == Rat(2 * s.d) ? EigenClass::Null
                                                       : EigenClass::Positive)));
      if (e.cls == EigenClass::Negative) index += e.dim * e.multiplicity;
      if (e.cls == EigenClass::Null) nullity += e.dim * e.multiplicity;
      if (i > 0)
        CHECK((r.entries[i - 1].casimir < e.casimir ||
               (r.entries[i - 1].casimir == e.casimir &&
                r.entries[i - 1].levels < e.levels)));
    }
    CHECK(index == r.index);
    CHECK(nullity == r.nullity);
  }
}

TEST_CASE("positive margin reveals eigenvalues above the null level") {
  const SpectrumReport r =
      compute_spectrum(focal_space(FocalSpaceId::HP2), Rat(16, 3));
  const SpectrumEntry* pos = find_entry(r, {0, 2, 0});
  REQUIRE(pos);
  CHECK(pos->casimir == Rat(56, 3));
  CHECK(pos->cls == EigenClass::Positive);
  CHECK(pos->dim == 90);
  // Totals are margin-independent.
  CHECK(r.index == 14);
  CHECK(r.nullity == 70);
}

TEST_CASE("first laplace eigenvalue equals the focal dimension") {
  for (auto id : {FocalSpaceId::CP2, FocalSpaceId::HP2, FocalSpaceId::OP2}) {
    const FocalSpace& s = focal_space(id);
    CHECK(first_laplace_eigenvalue(s) == Rat(s.d));
  }
}
