#include "focal/clifford.hpp"

#include <stdexcept>

namespace focal {

namespace {

// Basis products of the Cayley-Dickson algebras R, C, H, O as signed basis
// indices: e_i e_j = sign * e_index.
struct SignedIndex {
  int index;
  int sign;
};
using MultTable = std::vector<std::vector<SignedIndex>>;

// Conjugation: e_0 fixed, imaginary units negated.
int conj_sign(int i) { return i == 0 ? 1 : -1; }

MultTable doubled(const MultTable& t) {
  const int k = static_cast<int>(t.size());
  MultTable r(2 * k, std::vector<SignedIndex>(2 * k));
  // (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)) on basis elements.
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      r[i][j] = t[i][j];                                          // (e_i,0)(e_j,0)
      r[i][k + j] = {k + t[j][i].index, t[j][i].sign};            // (e_i,0)(0,e_j)
      r[k + i][j] = {k + t[i][j].index, t[i][j].sign * conj_sign(j)};  // (0,e_i)(e_j,0)
      r[k + i][k + j] = {t[j][i].index,
                         -t[j][i].sign * conj_sign(j)};           // (0,e_i)(0,e_j)
    }
  return r;
}

MultTable division_algebra(int dim) {
  MultTable t{{SignedIndex{0, 1}}};  // the reals
  while (static_cast<int>(t.size()) < dim) t = doubled(t);
  return t;
}

// Left multiplication by the imaginary unit e_u, as an integer matrix.
IntMatrix left_mult(const MultTable& t, int u) {
  const int k = static_cast<int>(t.size());
  IntMatrix m(k, std::vector<long long>(k, 0));
  for (int j = 0; j < k; ++j) m[t[u][j].index][j] = t[u][j].sign;
  return m;
}

}  // namespace

CliffordSystem build_clifford_system(int d) {
  if (d != 4 && d != 8 && d != 16)
    throw std::invalid_argument("Clifford system exists here only for d = 4, 8, 16");
  const int k = d / 2;
  const MultTable t = division_algebra(k);

  CliffordSystem cs;
  cs.d = d;
  auto zero = [d] { return IntMatrix(d, std::vector<long long>(d, 0)); };

  IntMatrix p0 = zero();  // diag(I_k, -I_k)
  IntMatrix p1 = zero();  // [[0, I],[I, 0]]
  for (int i = 0; i < k; ++i) {
    p0[i][i] = 1;
    p0[k + i][k + i] = -1;
    p1[i][k + i] = 1;
    p1[k + i][i] = 1;
  }
  cs.matrices.push_back(std::move(p0));
  cs.matrices.push_back(std::move(p1));

  // [[0, L_u],[-L_u, 0]] for each imaginary unit: symmetric since L_u is
  // antisymmetric, involutive since L_u^2 = -I.
  for (int u = 1; u < k; ++u) {
    const IntMatrix l = left_mult(t, u);
    IntMatrix p = zero();
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        p[i][k + j] = l[i][j];
        p[k + i][j] = -l[i][j];
      }
    cs.matrices.push_back(std::move(p));
  }
  return cs;
}

Rat shape_trace_sum(const CliffordSystem& cs) {
  long long total = 0;
  for (const auto& p : cs.matrices)
    for (int i = 0; i < cs.d; ++i)
      for (int j = 0; j < cs.d; ++j) total += p[i][j] * p[i][j];
  return Rat(total, 3);
}

std::pair<Rat, Rat> jacobi_curvature_constants(const FocalSpace& space) {
  const int d = space.d;
  const CliffordSystem cs = build_clifford_system(d);
  // Cross-check the second component: (1/3) tr(P_k P_0) must be d/3 for
  // k = 0 and 0 otherwise.
  for (size_t k = 0; k < cs.matrices.size(); ++k) {
    long long tr = 0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) tr += cs.matrices[k][i][j] * cs.matrices[0][j][i];
    if (tr != (k == 0 ? d : 0))
      throw std::logic_error("Clifford trace identity failed");
  }
  return {Rat(-d), Rat(d, 3)};
}

}  // namespace focal
