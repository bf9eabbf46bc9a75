#include "focal/branching.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace focal {

namespace {

std::vector<std::vector<Rat>> rows(std::initializer_list<std::initializer_list<Rat>> rs) {
  std::vector<std::vector<Rat>> m;
  for (auto& r : rs) m.emplace_back(r);
  return m;
}

// A restricted G-weight: semisimple K-weight plus the extra-factor scalar.
struct RestrictedWeight {
  WeightVector ss;
  Rat extra;
  bool operator==(const RestrictedWeight& o) const {
    return ss == o.ss && extra == o.extra;
  }
  bool operator<(const RestrictedWeight& o) const {
    if (ss != o.ss) return ss < o.ss;
    return extra < o.extra;
  }
};

Rat dot(const std::vector<Rat>& a, const WeightVector& b) {
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Weight multiset of the extra factor of a K-irrep: a single charge for
// U(1), the string m, m-2, ..., -m for Sp(1).
std::vector<Rat> extra_weights(ExtraFactor kind, const Rat& extra) {
  switch (kind) {
    case ExtraFactor::None: return {Rat(0)};
    case ExtraFactor::U1: return {extra};
    case ExtraFactor::Sp1: {
      if (extra.denominator() != 1 || extra.numerator() < 0)
        throw std::logic_error("Sp(1) level must be a nonnegative integer");
      std::vector<Rat> ws;
      for (long long w = extra.numerator(); w >= -extra.numerator(); w -= 2)
        ws.emplace_back(w);
      return ws;
    }
  }
  throw std::invalid_argument("unknown extra factor");
}

}  // namespace

const TorusEmbedding& torus_embedding(const FocalSpace& space) {
  // CP2: su(3) weight (a1,a2,a3) -> su(2) weight ((a1-a2)/2, -(a1-a2)/2)
  // and U(1) charge a1+a2.
  static const TorusEmbedding cp2{
      rows({{Rat(1, 2), Rat(-1, 2), Rat(0)}, {Rat(-1, 2), Rat(1, 2), Rat(0)}}),
      std::vector<Rat>{Rat(1), Rat(1), Rat(0)}};
  // HP2: sp(3) weight (x1,x2,x3) -> sp(2) weight (x1,x2), sp(1) weight x3.
  static const TorusEmbedding hp2{
      rows({{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}}),
      std::vector<Rat>{Rat(0), Rat(0), Rat(1)}};
  // OP2: the standard B4 coordinates coincide with the standard F4
  // coordinates on the shared maximal torus (the spin(9) roots are exactly
  // the F4 roots of the form +-e_i, +-e_i+-e_j).
  static const TorusEmbedding op2{
      rows({{Rat(1), Rat(0), Rat(0), Rat(0)},
            {Rat(0), Rat(1), Rat(0), Rat(0)},
            {Rat(0), Rat(0), Rat(1), Rat(0)},
            {Rat(0), Rat(0), Rat(0), Rat(1)}}),
      std::nullopt};
  switch (space.id) {
    case FocalSpaceId::CP2: return cp2;
    case FocalSpaceId::HP2: return hp2;
    case FocalSpaceId::OP2: return op2;
  }
  throw std::invalid_argument("unknown focal space id");
}

std::pair<WeightVector, Rat> restrict_weight(const FocalSpace& space,
                                             const WeightVector& g_weight) {
  const TorusEmbedding& emb = torus_embedding(space);
  WeightVector ss;
  ss.reserve(emb.semisimple_map.size());
  for (const auto& row : emb.semisimple_map) ss.push_back(dot(row, g_weight));
  Rat extra(0);
  if (emb.extra_map) extra = dot(*emb.extra_map, g_weight);
  return {std::move(ss), extra};
}

long long k_irrep_dimension(const FocalSpace& space, const KIrrepLabel& label) {
  long long dim = weyl_dimension(root_system(space.isotropy_alg), label.semisimple);
  if (space.extra == ExtraFactor::Sp1) dim *= label.extra.numerator() + 1;
  return dim;
}

KIrrepLabel slice_label(const FocalSpace& space) {
  return {space.slice_levels, Rat(0)};
}

BranchingResult branch(const FocalSpace& space, const DominantWeight& lambda,
                       long long dim_guard) {
  const RootSystem& g = root_system(space.ambient_alg);
  const RootSystem& k = root_system(space.isotropy_alg);
  const WeightSystem ws = weight_system(g, lambda, dim_guard);
  const long long g_dim = weyl_dimension(g, lambda);

  std::map<RestrictedWeight, long long> pool;
  for (const auto& [w, m] : ws.entries) {
    auto [ss, extra] = restrict_weight(space, w);
    for (const auto& alpha : k.simple_roots) {
      if (pairing(k, ss, alpha).denominator() != 1)
        throw std::runtime_error("torus embedding leaves the K-weight lattice");
    }
    pool[{std::move(ss), extra}] += m;
  }

  BranchingResult result;
  long long dim_accounted = 0;
  while (!pool.empty()) {
    // Highest remaining K-dominant restricted weight, ordered by semisimple
    // height, then lexicographically, then by extra weight.
    const RestrictedWeight* best = nullptr;
    Rat best_height(0);
    for (const auto& [rw, m] : pool) {
      if (m <= 0) throw std::logic_error("negative multiplicity in branching pool");
      if (!is_dominant(k, rw.ss)) continue;
      if (space.extra == ExtraFactor::Sp1 && rw.extra < Rat(0)) continue;
      const Rat h = inner_product(k, rw.ss, k.weyl_vector);
      if (!best || h > best_height ||
          (h == best_height && (rw.ss > best->ss ||
                                (rw.ss == best->ss && rw.extra > best->extra)))) {
        best = &rw;
        best_height = h;
      }
    }
    if (!best)
      throw std::logic_error("nonempty branching pool without a dominant weight");

    const KIrrepLabel label{levels_of(k, best->ss), best->extra};
    const long long mult = pool.at(*best);
    const WeightSystem kws = weight_system(k, label.semisimple, dim_guard);
    const std::vector<Rat> extras = extra_weights(space.extra, label.extra);
    for (const auto& [kw, km] : kws.entries) {
      for (const auto& e : extras) {
        const RestrictedWeight rw{kw, e};
        auto it = pool.find(rw);
        if (it == pool.end() || it->second < mult * km)
          throw std::logic_error("branching subtraction went negative");
        it->second -= mult * km;
        if (it->second == 0) pool.erase(it);
      }
    }
    result.constituents[label] += mult;
    dim_accounted += mult * k_irrep_dimension(space, label);
  }

  if (dim_accounted != g_dim)
    throw std::logic_error("branching constituents do not sum to the dimension");
  return result;
}

namespace {

// Signed Weyl orbit of a strictly dominant (regular) vector: every orbit
// element appears once, tagged with the sign of the unique group element
// producing it.
std::vector<std::pair<WeightVector, int>> signed_orbit(const RootSystem& rs,
                                                       const WeightVector& v) {
  std::map<WeightVector, int> seen{{v, 1}};
  std::deque<WeightVector> queue{v};
  while (!queue.empty()) {
    const WeightVector w = queue.front();
    queue.pop_front();
    const int sign = seen.at(w);
    for (const auto& alpha : rs.simple_roots) {
      WeightVector r = reflect(rs, w, alpha);
      if (r == w) throw std::logic_error("signed orbit requires a regular vector");
      if (seen.emplace(r, -sign).second) queue.push_back(std::move(r));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

long long constituent_multiplicity(const FocalSpace& space, const DominantWeight& lambda,
                                   const KIrrepLabel& label) {
  const RootSystem& g = root_system(space.ambient_alg);
  const RootSystem& k = root_system(space.isotropy_alg);

  // Signed targets w(mu + rho_K) - rho_K over the K-Weyl group, with the
  // Sp(1) factor contributing its own +-(s+1) - 1 alternation.
  const WeightVector mu_rho = add(weight_of(k, label.semisimple), k.weyl_vector);
  std::map<RestrictedWeight, long long> targets;
  for (const auto& [w, sign] : signed_orbit(k, mu_rho)) {
    const WeightVector ss = sub(w, k.weyl_vector);
    if (space.extra == ExtraFactor::Sp1) {
      const long long s = label.extra.numerator();
      targets[{ss, Rat(s)}] += sign;
      targets[{ss, Rat(-s - 2)}] -= sign;
    } else {
      targets[{ss, label.extra}] += sign;
    }
  }

  long long acc = 0;
  long long total = 0;
  for (const auto& [mu, m] : dominant_weight_multiplicities(g, lambda)) {
    for (const auto& w : weyl_orbit(g, mu)) {
      total += m;
      auto [ss, extra] = restrict_weight(space, w);
      const auto it = targets.find({std::move(ss), extra});
      if (it != targets.end()) acc += m * it->second;
    }
  }
  if (total != weyl_dimension(g, lambda))
    throw std::logic_error("weight multiplicities do not sum to the dimension");
  if (acc < 0)
    throw std::logic_error("alternating branching sum went negative");
  return acc;
}

long long slice_multiplicity(const FocalSpace& space, const DominantWeight& lambda) {
  return constituent_multiplicity(space, lambda, slice_label(space));
}

long long spherical_multiplicity(const FocalSpace& space, const DominantWeight& lambda) {
  const KIrrepLabel trivial{DominantWeight(root_system(space.isotropy_alg).rank, 0), Rat(0)};
  return constituent_multiplicity(space, lambda, trivial);
}

}  // namespace focal
