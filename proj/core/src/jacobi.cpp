#include "focal/jacobi.hpp"

#include <algorithm>
#include <stdexcept>

namespace focal {

Rat slice_casimir(const FocalSpace& space) {
  const MetricScale s = casimir_dual_scale(space, CasimirGroup::Isotropy);
  return casimir_eigenvalue(root_system(space.isotropy_alg), space.slice_levels, s);
}

Rat jacobi_eigenvalue(const FocalSpace& space, const DominantWeight& lambda) {
  const Rat shift = slice_casimir(space) + Rat(4 * space.d, 3);
  if (shift != Rat(2 * space.d))
    throw std::logic_error("Jacobi shift does not reduce to 2d");
  const MetricScale s = casimir_dual_scale(space, CasimirGroup::Ambient);
  return casimir_eigenvalue(root_system(space.ambient_alg), lambda, s) - shift;
}

SpectrumReport compute_spectrum(const FocalSpace& space, const Rat& margin,
                                long long dim_guard) {
  if (margin < Rat(0)) throw std::invalid_argument("margin must be nonnegative");
  const RootSystem& g = root_system(space.ambient_alg);
  const MetricScale s = casimir_dual_scale(space, CasimirGroup::Ambient);
  const Rat two_d(2 * space.d);

  SpectrumReport report;
  report.space = space.id;
  report.index = 0;
  report.nullity = 0;
  report.expanded_consistency = slice_casimir(space) + Rat(4 * space.d, 3) == two_d;

  for (const DominantWeight& lambda : enumerate_dominant(g, s, two_d + margin)) {
    const BranchingResult br = branch(space, lambda, dim_guard);
    const auto mit = br.constituents.find(slice_label(space));
    const long long m = mit == br.constituents.end() ? 0 : mit->second;
    if (m == 0) continue;
    SpectrumEntry entry;
    entry.levels = lambda;
    entry.casimir = casimir_eigenvalue(g, lambda, s);
    entry.jacobi_eigenvalue = entry.casimir - two_d;
    entry.dim = weyl_dimension(g, lambda);
    entry.multiplicity = m;
    entry.cls = entry.jacobi_eigenvalue < Rat(0)   ? EigenClass::Negative
                : entry.jacobi_eigenvalue == Rat(0) ? EigenClass::Null
                                                    : EigenClass::Positive;
    if (entry.cls == EigenClass::Negative) report.index += m * entry.dim;
    if (entry.cls == EigenClass::Null) report.nullity += m * entry.dim;
    report.entries.push_back(std::move(entry));
  }
  std::sort(report.entries.begin(), report.entries.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) {
              if (a.casimir != b.casimir) return a.casimir < b.casimir;
              return a.levels < b.levels;
            });

  const long long so_dim = (space.n + 1) * space.n / 2;
  report.killing_nullity = so_dim - g.algebra_dim;
  return report;
}

Rat first_laplace_eigenvalue(const FocalSpace& space) {
  const RootSystem& g = root_system(space.ambient_alg);
  const MetricScale s = casimir_dual_scale(space, CasimirGroup::Ambient);
  // The function spectrum starts no later than 2d; searching up to that
  // bound is enough to see the first nonzero eigenvalue.
  Rat best(0);
  bool found = false;
  for (const DominantWeight& lambda : enumerate_dominant(g, s, Rat(2 * space.d))) {
    const Rat c = casimir_eigenvalue(g, lambda, s);
    if (c == Rat(0)) continue;
    if (found && c >= best) continue;
    if (spherical_multiplicity(space, lambda) >= 1) {
      best = c;
      found = true;
    }
  }
  if (!found) throw std::logic_error("no spherical representation below 2d");
  return best;
}

}  // namespace focal
