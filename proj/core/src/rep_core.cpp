#include "focal/rep_core.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace focal {

long long weyl_dimension(const RootSystem& rs, const DominantWeight& lambda) {
  for (long long n : lambda)
    if (n < 0) throw std::invalid_argument("levels must be nonnegative");
  const WeightVector lv = weight_of(rs, lambda);
  const WeightVector lr = add(lv, rs.weyl_vector);
  Rat dim(1);
  for (const auto& alpha : rs.positive_roots)
    dim *= inner_product(rs, lr, alpha) / inner_product(rs, rs.weyl_vector, alpha);
  if (dim.denominator() != 1)
    throw std::logic_error("Weyl dimension is not an integer");
  return dim.numerator();
}

Rat casimir_eigenvalue(const RootSystem& rs, const DominantWeight& lambda,
                       const MetricScale& s) {
  if (s.meaning != MetricScale::Meaning::InducedOnDual)
    throw std::invalid_argument("Casimir scale must be an induced-on-dual factor");
  const WeightVector lv = weight_of(rs, lambda);
  const WeightVector shifted = add(lv, scaled(rs.weyl_vector, Rat(2)));
  return s.value * inner_product(rs, lv, shifted);
}

std::vector<WeightVector> weyl_orbit(const RootSystem& rs, const WeightVector& v) {
  std::set<WeightVector> seen{v};
  std::deque<WeightVector> queue{v};
  while (!queue.empty()) {
    const WeightVector w = queue.front();
    queue.pop_front();
    for (const auto& alpha : rs.simple_roots) {
      WeightVector r = reflect(rs, w, alpha);
      if (seen.insert(r).second) queue.push_back(std::move(r));
    }
  }
  return {seen.begin(), seen.end()};
}

std::map<WeightVector, long long> dominant_weight_multiplicities(
    const RootSystem& rs, const DominantWeight& lambda) {
  const WeightVector lv = weight_of(rs, lambda);
  const Rat lambda_norm2 = inner_product(rs, lv, lv);
  const WeightVector rho = rs.weyl_vector;
  const WeightVector lam_rho = add(lv, rho);
  const Rat lam_rho_norm2 = inner_product(rs, lam_rho, lam_rho);

  // Dominant integral weights inside the norm ball of lambda; the norm is
  // strictly increasing along every fundamental-weight direction on the
  // dominant cone, so level-BFS with pruning is exhaustive.
  std::vector<WeightVector> candidates;
  {
    std::set<DominantWeight> seen;
    std::deque<DominantWeight> queue;
    const DominantWeight zero(rs.rank, 0);
    queue.push_back(zero);
    seen.insert(zero);
    while (!queue.empty()) {
      DominantWeight dw = queue.front();
      queue.pop_front();
      const WeightVector v = weight_of(rs, dw);
      if (inner_product(rs, v, v) > lambda_norm2) continue;
      // Keep mu only if lambda - mu is a nonnegative integer combination of
      // simple roots (the support condition for weights of V_lambda).
      const auto coeffs = root_coefficients(rs, sub(lv, v));
      bool in_support = coeffs.has_value();
      if (in_support)
        for (const Rat& c : *coeffs)
          if (c.denominator() != 1 || c.numerator() < 0) in_support = false;
      if (in_support) candidates.push_back(v);
      for (int i = 0; i < rs.rank; ++i) {
        DominantWeight nxt = dw;
        ++nxt[i];
        if (seen.insert(nxt).second) queue.push_back(std::move(nxt));
      }
    }
  }

  std::sort(candidates.begin(), candidates.end(),
            [&](const WeightVector& a, const WeightVector& b) {
              const Rat na = inner_product(rs, add(a, rho), add(a, rho));
              const Rat nb = inner_product(rs, add(b, rho), add(b, rho));
              if (na != nb) return na > nb;
              return a > b;
            });

  std::map<WeightVector, long long> mult;
  mult[lv] = 1;
  for (const auto& mu : candidates) {
    if (mu == lv) continue;
    Rat numerator(0);
    for (const auto& alpha : rs.positive_roots) {
      for (long long k = 1;; ++k) {
        const WeightVector nu = add(mu, scaled(alpha, Rat(k)));
        if (inner_product(rs, nu, nu) > lambda_norm2) break;
        const auto it = mult.find(dominant_conjugate(rs, nu));
        if (it != mult.end())
          numerator += Rat(it->second) * inner_product(rs, nu, alpha);
      }
    }
    const WeightVector mu_rho = add(mu, rho);
    const Rat denom = lam_rho_norm2 - inner_product(rs, mu_rho, mu_rho);
    if (denom == Rat(0))
      throw std::logic_error("Freudenthal denominator vanished below the highest weight");
    const Rat m = Rat(2) * numerator / denom;
    if (m.denominator() != 1 || m.numerator() <= 0)
      throw std::logic_error("Freudenthal multiplicity is not a positive integer");
    mult[mu] = m.numerator();
  }
  return mult;
}

WeightSystem weight_system(const RootSystem& rs, const DominantWeight& lambda,
                           long long dim_guard) {
  const long long dim = weyl_dimension(rs, lambda);
  if (dim > dim_guard)
    throw std::length_error("representation dimension exceeds guard");

  WeightSystem ws;
  ws.rep = lambda;
  long long total = 0;
  for (const auto& [mu, m] : dominant_weight_multiplicities(rs, lambda)) {
    for (const auto& w : weyl_orbit(rs, mu)) {
      ws.entries[w] = m;
      total += m;
    }
  }
  if (total != dim)
    throw std::logic_error("weight multiplicities do not sum to the dimension");
  return ws;
}

std::vector<DominantWeight> enumerate_dominant(const RootSystem& rs,
                                               const MetricScale& s,
                                               const Rat& bound) {
  std::vector<DominantWeight> result;
  std::set<DominantWeight> seen;
  std::deque<DominantWeight> queue;
  const DominantWeight zero(rs.rank, 0);
  queue.push_back(zero);
  seen.insert(zero);
  while (!queue.empty()) {
    DominantWeight dw = queue.front();
    queue.pop_front();
    // Casimir strictly increases along every fundamental-weight direction,
    // so nothing above an over-bound weight can come back under it.
    if (casimir_eigenvalue(rs, dw, s) > bound) continue;
    result.push_back(dw);
    for (int i = 0; i < rs.rank; ++i) {
      DominantWeight nxt = dw;
      ++nxt[i];
      if (seen.insert(nxt).second) queue.push_back(std::move(nxt));
    }
  }
  std::sort(result.begin(), result.end(),
            [&](const DominantWeight& a, const DominantWeight& b) {
              const Rat ca = casimir_eigenvalue(rs, a, s);
              const Rat cb = casimir_eigenvalue(rs, b, s);
              if (ca != cb) return ca < cb;
              return a < b;
            });
  return result;
}

}  // namespace focal
