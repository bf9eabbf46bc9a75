#include "focal/verify.hpp"

#include "focal/clifford.hpp"
#include "focal/jacobi.hpp"

namespace focal {

namespace {

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  const size_t n = a.size();
  IntMatrix c(n, std::vector<long long>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

bool clifford_identities(int d) {
  const CliffordSystem cs = build_clifford_system(d);
  if (static_cast<int>(cs.matrices.size()) != d / 2 + 1) return false;
  for (size_t i = 0; i < cs.matrices.size(); ++i) {
    const IntMatrix& p = cs.matrices[i];
    long long trace = 0;
    for (int r = 0; r < d; ++r) {
      trace += p[r][r];
      for (int c = 0; c < d; ++c)
        if (p[r][c] != p[c][r]) return false;
    }
    if (trace != 0) return false;
    const IntMatrix sq = mat_mul(p, p);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c)
        if (sq[r][c] != (r == c ? 1 : 0)) return false;
    for (size_t j = i + 1; j < cs.matrices.size(); ++j) {
      const IntMatrix ab = mat_mul(p, cs.matrices[j]);
      const IntMatrix ba = mat_mul(cs.matrices[j], p);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
          if (ab[r][c] + ba[r][c] != 0) return false;
    }
  }
  return true;
}

// The closed forms of the eigenvalue tables as functions of the family
// parameter k.
bool family_matches(FocalSpaceId id, const std::function<DominantWeight(long long)>& rep,
                    const std::function<Rat(long long)>& closed_form, long long k_min) {
  const FocalSpace& space = focal_space(id);
  const RootSystem& g = root_system(space.ambient_alg);
  const MetricScale s = casimir_dual_scale(space, CasimirGroup::Ambient);
  for (long long k = k_min; k <= 5; ++k)
    if (casimir_eigenvalue(g, rep(k), s) != closed_form(k)) return false;
  return true;
}

struct Totals {
  long long index, nullity, killing;
};

bool spectrum_totals(FocalSpaceId id, Totals expect) {
  const SpectrumReport r = compute_spectrum(focal_space(id));
  return r.index == expect.index && r.nullity == expect.nullity &&
         r.killing_nullity == expect.killing && r.expanded_consistency;
}

}  // namespace

std::vector<VerifyCheck> verification_checks() {
  using Id = RootSystemId;
  using Sp = FocalSpaceId;
  std::vector<VerifyCheck> checks;
  auto rat_eq = [&](std::string name, std::function<Rat()> fn, Rat want) {
    checks.push_back({std::move(name), [fn = std::move(fn), want] { return fn() == want; }});
  };
  auto int_eq = [&](std::string name, std::function<long long()> fn, long long want) {
    checks.push_back({std::move(name), [fn = std::move(fn), want] { return fn() == want; }});
  };

  rat_eq("scalar curvature, d=4: 8", [] { return gauss_scalar(4); }, Rat(8));
  rat_eq("scalar curvature, d=8: 128/3", [] { return gauss_scalar(8); }, Rat(128, 3));
  rat_eq("scalar curvature, d=16: 192", [] { return gauss_scalar(16); }, Rat(192));

  auto fmf = [](Sp s) { return focal_metric_factor(focal_space(s)).value; };
  rat_eq("metric factor cp2: b = 1/4 b_g", [fmf] { return fmf(Sp::CP2); }, Rat(1, 4));
  rat_eq("metric factor hp2: b = 3/32 b_g", [fmf] { return fmf(Sp::HP2); }, Rat(3, 32));
  rat_eq("metric factor op2: b = 1/24 b_g", [fmf] { return fmf(Sp::OP2); }, Rat(1, 24));

  auto rf = [](Sp s) { return restriction_factor(focal_space(s)).value; };
  rat_eq("restriction factor cp2: 3/2", [rf] { return rf(Sp::CP2); }, Rat(3, 2));
  rat_eq("restriction factor hp2: 4/3", [rf] { return rf(Sp::HP2); }, Rat(4, 3));
  rat_eq("restriction factor op2: 9/7", [rf] { return rf(Sp::OP2); }, Rat(9, 7));

  auto sdf = [](Id id) { return strange_dual_factor(root_system(id)).value; };
  rat_eq("dual Killing factor A1: 1/4", [sdf] { return sdf(Id::A1); }, Rat(1, 4));
  rat_eq("dual Killing factor A2: 1/6", [sdf] { return sdf(Id::A2); }, Rat(1, 6));
  rat_eq("dual Killing factor C2: 1/12", [sdf] { return sdf(Id::C2); }, Rat(1, 12));
  rat_eq("dual Killing factor C3: 1/16", [sdf] { return sdf(Id::C3); }, Rat(1, 16));
  rat_eq("dual Killing factor B4: 1/14", [sdf] { return sdf(Id::B4); }, Rat(1, 14));
  rat_eq("dual Killing factor F4: 1/18", [sdf] { return sdf(Id::F4); }, Rat(1, 18));

  rat_eq("Killing/trace ratio su(2): 4", [] { return killing_trace_ratio(Id::A1); }, Rat(4));
  rat_eq("Killing/trace ratio su(3): 6", [] { return killing_trace_ratio(Id::A2); }, Rat(6));
  rat_eq("Killing/trace ratio sp(2): 6", [] { return killing_trace_ratio(Id::C2); }, Rat(6));
  rat_eq("Killing/trace ratio sp(3): 8", [] { return killing_trace_ratio(Id::C3); }, Rat(8));

  auto rho2 = [](Id id) {
    const RootSystem& rs = root_system(id);
    return inner_product(rs, rs.weyl_vector, rs.weyl_vector);
  };
  rat_eq("<rho,rho> C2: 5", [rho2] { return rho2(Id::C2); }, Rat(5));
  rat_eq("<rho,rho> B4: 21", [rho2] { return rho2(Id::B4); }, Rat(21));
  rat_eq("<rho,rho> F4: 39", [rho2] { return rho2(Id::F4); }, Rat(39));

  auto dim = [](Id id, DominantWeight dw) { return weyl_dimension(root_system(id), dw); };
  int_eq("dim A2 (1,1): 8", [dim] { return dim(Id::A2, {1, 1}); }, 8);
  int_eq("dim A2 (3,0): 10", [dim] { return dim(Id::A2, {3, 0}); }, 10);
  int_eq("dim A2 (0,3): 10", [dim] { return dim(Id::A2, {0, 3}); }, 10);
  int_eq("dim C3 (0,1,0): 14", [dim] { return dim(Id::C3, {0, 1, 0}); }, 14);
  int_eq("dim C3 (1,0,1): 70", [dim] { return dim(Id::C3, {1, 0, 1}); }, 70);
  int_eq("dim F4 (0,0,0,1): 26", [dim] { return dim(Id::F4, {0, 0, 0, 1}); }, 26);
  int_eq("dim F4 (0,0,1,0): 273", [dim] { return dim(Id::F4, {0, 0, 1, 0}); }, 273);

  auto sc = [](Sp s) { return slice_casimir(focal_space(s)); };
  rat_eq("slice Casimir cp2: 8/3", [sc] { return sc(Sp::CP2); }, Rat(8, 3));
  rat_eq("slice Casimir hp2: 16/3", [sc] { return sc(Sp::HP2); }, Rat(16, 3));
  rat_eq("slice Casimir op2: 32/3", [sc] { return sc(Sp::OP2); }, Rat(32, 3));

  auto shift = [sc](Sp s) { return sc(s) + Rat(4 * focal_space(s).d, 3); };
  rat_eq("Jacobi shift cp2: 2d", [shift] { return shift(Sp::CP2); }, Rat(8));
  rat_eq("Jacobi shift hp2: 2d", [shift] { return shift(Sp::HP2); }, Rat(16));
  rat_eq("Jacobi shift op2: 2d", [shift] { return shift(Sp::OP2); }, Rat(32));

  auto ambient_scale = [](Sp s) {
    return casimir_dual_scale(focal_space(s), CasimirGroup::Ambient).value;
  };
  rat_eq("ambient Casimir scale cp2: 2/3", [ambient_scale] { return ambient_scale(Sp::CP2); },
         Rat(2, 3));
  rat_eq("ambient Casimir scale hp2: 2/3", [ambient_scale] { return ambient_scale(Sp::HP2); },
         Rat(2, 3));
  rat_eq("ambient Casimir scale op2: 4/3", [ambient_scale] { return ambient_scale(Sp::OP2); },
         Rat(4, 3));

  checks.push_back({"eigenvalue table cp2, family (k+1,k+1): (4/3)(k+1)(k+3)", [] {
                      return family_matches(
                          Sp::CP2, [](long long k) { return DominantWeight{k + 1, k + 1}; },
                          [](long long k) { return Rat(4 * (k + 1) * (k + 3), 3); }, 0);
                    }});
  checks.push_back({"eigenvalue table cp2, family (k-1,k+2): (4/3)(k+1)(k+2)", [] {
                      return family_matches(
                          Sp::CP2, [](long long k) { return DominantWeight{k - 1, k + 2}; },
                          [](long long k) { return Rat(4 * (k + 1) * (k + 2), 3); }, 1);
                    }});
  checks.push_back({"eigenvalue table cp2, family (k+3,k): (4/3)(k+2)(k+3)", [] {
                      return family_matches(
                          Sp::CP2, [](long long k) { return DominantWeight{k + 3, k}; },
                          [](long long k) { return Rat(4 * (k + 2) * (k + 3), 3); }, 0);
                    }});
  checks.push_back({"eigenvalue table hp2, family k*w2: (4/3)k(k+5)", [] {
                      return family_matches(
                          Sp::HP2, [](long long k) { return DominantWeight{0, k, 0}; },
                          [](long long k) { return Rat(4 * k * (k + 5), 3); }, 1);
                    }});
  checks.push_back({"eigenvalue table hp2, family w1+k*w2+w3: (4/3)(k^2+8k+12)", [] {
                      return family_matches(
                          Sp::HP2, [](long long k) { return DominantWeight{1, k, 1}; },
                          [](long long k) { return Rat(4 * (k * k + 8 * k + 12), 3); }, 0);
                    }});
  checks.push_back({"eigenvalue table op2, family k*w4: (4/3)(k^2+11k)", [] {
                      return family_matches(
                          Sp::OP2, [](long long k) { return DominantWeight{0, 0, 0, k}; },
                          [](long long k) { return Rat(4 * (k * k + 11 * k), 3); }, 1);
                    }});
  checks.push_back({"eigenvalue table op2, family w3+k*w4: (4/3)(k^2+14k+24)", [] {
                      return family_matches(
                          Sp::OP2, [](long long k) { return DominantWeight{0, 0, 1, k}; },
                          [](long long k) { return Rat(4 * (k * k + 14 * k + 24), 3); }, 0);
                    }});

  checks.push_back({"index/nullity cp2: 8, 20, 20",
                    [] { return spectrum_totals(Sp::CP2, {8, 20, 20}); }});
  checks.push_back({"index/nullity hp2: 14, 70, 70",
                    [] { return spectrum_totals(Sp::HP2, {14, 70, 70}); }});
  checks.push_back({"index/nullity op2: 26, 273, 273",
                    [] { return spectrum_totals(Sp::OP2, {26, 273, 273}); }});

  auto lap = [](Sp s) { return first_laplace_eigenvalue(focal_space(s)); };
  rat_eq("first Laplace eigenvalue cp2: 4", [lap] { return lap(Sp::CP2); }, Rat(4));
  rat_eq("first Laplace eigenvalue hp2: 8", [lap] { return lap(Sp::HP2); }, Rat(8));
  rat_eq("first Laplace eigenvalue op2: 16", [lap] { return lap(Sp::OP2); }, Rat(16));

  checks.push_back({"Clifford system d=4: involutions anticommute", [] {
                      return clifford_identities(4);
                    }});
  checks.push_back({"Clifford system d=8: involutions anticommute", [] {
                      return clifford_identities(8);
                    }});
  checks.push_back({"Clifford system d=16: involutions anticommute", [] {
                      return clifford_identities(16);
                    }});

  auto sts = [](int d) { return shape_trace_sum(build_clifford_system(d)); };
  rat_eq("shape trace sum d=4: 4", [sts] { return sts(4); }, Rat(4));
  rat_eq("shape trace sum d=8: 40/3", [sts] { return sts(8); }, Rat(40, 3));
  rat_eq("shape trace sum d=16: 48", [sts] { return sts(16); }, Rat(48));

  return checks;
}

}  // namespace focal
