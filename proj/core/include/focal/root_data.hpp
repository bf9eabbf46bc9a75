#pragma once

#include <optional>
#include <vector>

#include "focal/rational.hpp"

namespace focal {

/// The six simple Lie algebras the computation touches.
enum class RootSystemId { A1, A2, C2, C3, B4, F4 };

/// A weight in the fixed orthonormal coordinates of its root system.
using WeightVector = std::vector<Rat>;

/// Nonnegative coefficients n_i of lambda = sum n_i omega_i.
using DominantWeight = std::vector<long long>;

/// Root-system data in standard orthonormal coordinates: A_n in the sum-zero
/// hyperplane of an (n+1)-vector, B/C/F in rank-many coordinates. All entries
/// are exact rationals.
struct RootSystem {
  RootSystemId id;
  int ambient_dim;
  int rank;
  std::vector<WeightVector> simple_roots;
  std::vector<WeightVector> positive_roots;
  std::vector<WeightVector> fundamental_weights;
  WeightVector weyl_vector;  // half the sum of positive roots
  int algebra_dim;
};

/// Returns the fixed root system for the given id. The result is an
/// immutable singleton; safe to share across threads.
const RootSystem& root_system(RootSystemId id);

const char* root_system_name(RootSystemId id);

/// lambda = sum n_i omega_i in coordinates. Throws std::invalid_argument if
/// the level count does not match the rank.
WeightVector weight_of(const RootSystem& rs, const DominantWeight& dw);

/// Standard coordinate dot product. Throws std::invalid_argument on a
/// dimension mismatch.
Rat inner_product(const RootSystem& rs, const WeightVector& v, const WeightVector& w);

// Elementwise vector helpers.
WeightVector add(const WeightVector& v, const WeightVector& w);
WeightVector sub(const WeightVector& v, const WeightVector& w);
WeightVector scaled(const WeightVector& v, const Rat& c);

/// 2<v,alpha>/<alpha,alpha>.
Rat pairing(const RootSystem& rs, const WeightVector& v, const WeightVector& alpha);

/// Reflection of v in the hyperplane orthogonal to alpha.
WeightVector reflect(const RootSystem& rs, const WeightVector& v, const WeightVector& alpha);

/// True if <v, alpha^v> >= 0 for every simple root.
bool is_dominant(const RootSystem& rs, const WeightVector& v);

/// The unique dominant Weyl conjugate of v.
WeightVector dominant_conjugate(const RootSystem& rs, WeightVector v);

/// Recovers the levels <v, alpha_i^v> of a dominant weight vector. Throws
/// std::invalid_argument if they are not nonnegative integers.
DominantWeight levels_of(const RootSystem& rs, const WeightVector& v);

/// Coefficients of v in the simple-root basis, or nullopt if v is not in
/// the span of the roots.
std::optional<std::vector<Rat>> root_coefficients(const RootSystem& rs,
                                                  const WeightVector& v);

}  // namespace focal
