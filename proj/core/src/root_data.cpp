#include "focal/root_data.hpp"

#include <algorithm>
#include <stdexcept>

namespace focal {

namespace {

WeightVector vec(std::initializer_list<Rat> xs) { return WeightVector(xs); }

Rat dot(const WeightVector& v, const WeightVector& w) {
  Rat s(0);
  for (size_t i = 0; i < v.size(); ++i) s += v[i] * w[i];
  return s;
}

WeightVector half_sum(const std::vector<WeightVector>& roots, int dim) {
  WeightVector s(dim, Rat(0));
  for (const auto& r : roots) s = add(s, r);
  return scaled(s, Rat(1, 2));
}

RootSystem make_a1() {
  RootSystem rs;
  rs.id = RootSystemId::A1;
  rs.ambient_dim = 2;
  rs.rank = 1;
  rs.simple_roots = {vec({1, -1})};
  rs.positive_roots = rs.simple_roots;
  rs.fundamental_weights = {vec({Rat(1, 2), Rat(-1, 2)})};
  rs.algebra_dim = 3;
  return rs;
}

RootSystem make_a2() {
  RootSystem rs;
  rs.id = RootSystemId::A2;
  rs.ambient_dim = 3;
  rs.rank = 2;
  rs.simple_roots = {vec({1, -1, 0}), vec({0, 1, -1})};
  rs.positive_roots = {vec({1, -1, 0}), vec({0, 1, -1}), vec({1, 0, -1})};
  rs.fundamental_weights = {vec({Rat(2, 3), Rat(-1, 3), Rat(-1, 3)}),
                            vec({Rat(1, 3), Rat(1, 3), Rat(-2, 3)})};
  rs.algebra_dim = 8;
  return rs;
}

RootSystem make_c(int n) {
  // C2 or C3: roots e_i - e_j, e_i + e_j (i < j), 2 e_i.
  RootSystem rs;
  rs.id = n == 2 ? RootSystemId::C2 : RootSystemId::C3;
  rs.ambient_dim = n;
  rs.rank = n;
  auto e = [n](int i, Rat c) {
    WeightVector v(n, Rat(0));
    v[i] = c;
    return v;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      rs.positive_roots.push_back(add(e(i, 1), e(j, -1)));
      rs.positive_roots.push_back(add(e(i, 1), e(j, 1)));
    }
  for (int i = 0; i < n; ++i) rs.positive_roots.push_back(e(i, 2));
  for (int i = 0; i + 1 < n; ++i) rs.simple_roots.push_back(add(e(i, 1), e(i + 1, -1)));
  rs.simple_roots.push_back(e(n - 1, 2));
  for (int k = 1; k <= n; ++k) {  // omega_k = e_1 + ... + e_k
    WeightVector w(n, Rat(0));
    for (int i = 0; i < k; ++i) w[i] = Rat(1);
    rs.fundamental_weights.push_back(w);
  }
  rs.algebra_dim = n * (2 * n + 1);
  return rs;
}

RootSystem make_b4() {
  RootSystem rs;
  rs.id = RootSystemId::B4;
  rs.ambient_dim = 4;
  rs.rank = 4;
  auto e = [](int i, Rat c) {
    WeightVector v(4, Rat(0));
    v[i] = c;
    return v;
  };
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      rs.positive_roots.push_back(add(e(i, 1), e(j, -1)));
      rs.positive_roots.push_back(add(e(i, 1), e(j, 1)));
    }
  for (int i = 0; i < 4; ++i) rs.positive_roots.push_back(e(i, 1));
  rs.simple_roots = {add(e(0, 1), e(1, -1)), add(e(1, 1), e(2, -1)),
                     add(e(2, 1), e(3, -1)), e(3, 1)};
  rs.fundamental_weights = {vec({1, 0, 0, 0}), vec({1, 1, 0, 0}), vec({1, 1, 1, 0}),
                            vec({Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)})};
  rs.algebra_dim = 36;
  return rs;
}

RootSystem make_f4() {
  RootSystem rs;
  rs.id = RootSystemId::F4;
  rs.ambient_dim = 4;
  rs.rank = 4;
  auto e = [](int i, Rat c) {
    WeightVector v(4, Rat(0));
    v[i] = c;
    return v;
  };
  for (int i = 0; i < 4; ++i) rs.positive_roots.push_back(e(i, 1));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      rs.positive_roots.push_back(add(e(i, 1), e(j, -1)));
      rs.positive_roots.push_back(add(e(i, 1), e(j, 1)));
    }
  for (int s2 : {1, -1})
    for (int s3 : {1, -1})
      for (int s4 : {1, -1})
        rs.positive_roots.push_back(vec({Rat(1, 2), Rat(s2, 2), Rat(s3, 2), Rat(s4, 2)}));
  rs.simple_roots = {add(e(1, 1), e(2, -1)), add(e(2, 1), e(3, -1)), e(3, 1),
                     vec({Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)})};
  rs.fundamental_weights = {vec({1, 1, 0, 0}), vec({2, 1, 1, 0}),
                            vec({Rat(3, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)}),
                            vec({1, 0, 0, 0})};
  rs.algebra_dim = 52;
  return rs;
}

RootSystem finish(RootSystem rs) {
  rs.weyl_vector = half_sum(rs.positive_roots, rs.ambient_dim);
  if (static_cast<int>(rs.positive_roots.size()) != (rs.algebra_dim - rs.rank) / 2)
    throw std::logic_error("positive root count inconsistent with algebra dimension");
  return rs;
}

}  // namespace

const RootSystem& root_system(RootSystemId id) {
  static const RootSystem a1 = finish(make_a1());
  static const RootSystem a2 = finish(make_a2());
  static const RootSystem c2 = finish(make_c(2));
  static const RootSystem c3 = finish(make_c(3));
  static const RootSystem b4 = finish(make_b4());
  static const RootSystem f4 = finish(make_f4());
  switch (id) {
    case RootSystemId::A1: return a1;
    case RootSystemId::A2: return a2;
    case RootSystemId::C2: return c2;
    case RootSystemId::C3: return c3;
    case RootSystemId::B4: return b4;
    case RootSystemId::F4: return f4;
  }
  throw std::invalid_argument("unknown root system id");
}

const char* root_system_name(RootSystemId id) {
  switch (id) {
    case RootSystemId::A1: return "A1";
    case RootSystemId::A2: return "A2";
    case RootSystemId::C2: return "C2";
    case RootSystemId::C3: return "C3";
    case RootSystemId::B4: return "B4";
    case RootSystemId::F4: return "F4";
  }
  return "?";
}

WeightVector weight_of(const RootSystem& rs, const DominantWeight& dw) {
  if (static_cast<int>(dw.size()) != rs.rank)
    throw std::invalid_argument("level count does not match rank");
  WeightVector v(rs.ambient_dim, Rat(0));
  for (int i = 0; i < rs.rank; ++i)
    v = add(v, scaled(rs.fundamental_weights[i], Rat(dw[i])));
  return v;
}

Rat inner_product(const RootSystem& rs, const WeightVector& v, const WeightVector& w) {
  if (static_cast<int>(v.size()) != rs.ambient_dim ||
      static_cast<int>(w.size()) != rs.ambient_dim)
    throw std::invalid_argument("weight vector dimension mismatch");
  return dot(v, w);
}

WeightVector add(const WeightVector& v, const WeightVector& w) {
  WeightVector r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] + w[i];
  return r;
}

WeightVector sub(const WeightVector& v, const WeightVector& w) {
  WeightVector r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] - w[i];
  return r;
}

WeightVector scaled(const WeightVector& v, const Rat& c) {
  WeightVector r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
  return r;
}

Rat pairing(const RootSystem& rs, const WeightVector& v, const WeightVector& alpha) {
  return Rat(2) * inner_product(rs, v, alpha) / inner_product(rs, alpha, alpha);
}

WeightVector reflect(const RootSystem& rs, const WeightVector& v, const WeightVector& alpha) {
  return sub(v, scaled(alpha, pairing(rs, v, alpha)));
}

bool is_dominant(const RootSystem& rs, const WeightVector& v) {
  for (const auto& alpha : rs.simple_roots)
    if (pairing(rs, v, alpha) < Rat(0)) return false;
  return true;
}

WeightVector dominant_conjugate(const RootSystem& rs, WeightVector v) {
  for (;;) {
    bool moved = false;
    for (const auto& alpha : rs.simple_roots) {
      if (pairing(rs, v, alpha) < Rat(0)) {
        v = reflect(rs, v, alpha);
        moved = true;
      }
    }
    if (!moved) return v;
  }
}

DominantWeight levels_of(const RootSystem& rs, const WeightVector& v) {
  DominantWeight levels(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    const Rat p = pairing(rs, v, rs.simple_roots[i]);
    if (p.denominator() != 1 || p.numerator() < 0)
      throw std::invalid_argument("weight is not dominant integral");
    levels[i] = p.numerator();
  }
  return levels;
}

std::optional<std::vector<Rat>> root_coefficients(const RootSystem& rs,
                                                  const WeightVector& v) {
  // Solve the Gram system G c = b with G_ij = <alpha_i, alpha_j>,
  // b_i = <v, alpha_i>, then confirm sum c_i alpha_i == v.
  const int r = rs.rank;
  std::vector<std::vector<Rat>> m(r, std::vector<Rat>(r + 1, Rat(0)));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j)
      m[i][j] = inner_product(rs, rs.simple_roots[i], rs.simple_roots[j]);
    m[i][r] = inner_product(rs, v, rs.simple_roots[i]);
  }
  for (int col = 0; col < r; ++col) {
    int pivot = -1;
    for (int row = col; row < r; ++row)
      if (m[row][col] != Rat(0)) {
        pivot = row;
        break;
      }
    if (pivot < 0) return std::nullopt;  // cannot happen: roots are independent
    std::swap(m[col], m[pivot]);
    for (int row = 0; row < r; ++row) {
      if (row == col) continue;
      const Rat f = m[row][col] / m[col][col];
      for (int k = col; k <= r; ++k) m[row][k] -= f * m[col][k];
    }
  }
  std::vector<Rat> c(r);
  for (int i = 0; i < r; ++i) c[i] = m[i][r] / m[i][i];
  WeightVector recon(rs.ambient_dim, Rat(0));
  for (int i = 0; i < r; ++i) recon = add(recon, scaled(rs.simple_roots[i], c[i]));
  if (recon != v) return std::nullopt;
  return c;
}

}  // namespace focal
