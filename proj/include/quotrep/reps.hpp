#pragma once

#include "quotrep/root_system.hpp"
#include "quotrep/weyl.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace quotrep {

inline void require_dominant(const RootSystem& rs, const Weight& w, const char* where) {
  check_rank(rs, w, where);
  if (!w.dominant())
    throw std::invalid_argument(std::string(where) + ": weight " + to_string(w) +
                                " is not dominant");
}

// Weyl dimension formula: prod_{alpha>0} (lam+rho, alpha) / (rho, alpha).
inline Int dim(const RootSystem& rs, const Weight& lam) {
  require_dominant(rs, lam, "dim");
  const Weight top = lam + rho(rs);
  const Weight r = rho(rs);
  Int num = 1, den = 1;
  for (const PositiveRoot& alpha : rs.positive_roots) {
    num *= root_pairing(rs, top, alpha);
    den *= root_pairing(rs, r, alpha);
  }
  if (num % den != 0) throw std::logic_error("dim: Weyl product not integral");
  return num / den;
}

namespace detail {

// All dominant mu <= lam (same root-lattice coset). The deficit lam - mu in
// simple-root coordinates lies in the box 0 <= c_i <= floor(root coords of
// lam), since dominant weights have nonnegative root coordinates.
inline std::vector<std::pair<Weight, std::vector<int>>> dominant_weights_below(
    const RootSystem& rs, const Weight& lam) {
  RootVector lr = weight_to_root(rs, lam);
  std::vector<long long> bound(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    const Rat& x = lr.r[i];
    bound[i] = static_cast<long long>(rat_num(x) / rat_den(x));  // floor for x >= 0
    if (bound[i] < 0) bound[i] = 0;
  }
  std::vector<std::pair<Weight, std::vector<int>>> out;
  std::vector<int> c(rs.rank, 0);
  Weight mu = lam;
  // Depth-first over the box, updating mu incrementally.
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == rs.rank) {
      if (mu.dominant()) out.emplace_back(mu, c);
      return;
    }
    for (long long k = 0;; ++k) {
      self(self, pos + 1);
      if (k == bound[pos]) break;
      c[pos] += 1;
      for (int j = 0; j < rs.rank; ++j) mu.c[j] -= rs.cartan[j][pos];
    }
    for (int j = 0; j < rs.rank; ++j) mu.c[j] += rs.cartan[j][pos] * static_cast<int>(bound[pos]);
    c[pos] = 0;
  };
  rec(rec, 0);
  return out;
}

struct WeightSystemKey {
  char family;
  int rank;
  std::vector<int> lam;
  friend bool operator==(const WeightSystemKey& a, const WeightSystemKey& b) {
    return a.family == b.family && a.rank == b.rank && a.lam == b.lam;
  }
};

struct WeightSystemKeyHash {
  std::size_t operator()(const WeightSystemKey& k) const {
    std::size_t h = WeightHash{}(Weight(k.lam));
    h ^= static_cast<std::size_t>(k.family) * 1000003u + static_cast<std::size_t>(k.rank);
    return h;
  }
};

}  // namespace detail

using WeightSystemPtr = std::shared_ptr<const WeightMultiset>;

// Multiplicities of the dominant weights of V(lam), by Freudenthal recursion:
//   ((lam+rho,lam+rho) - (nu+rho,nu+rho)) m_nu
//     = 2 sum_{alpha>0} sum_{k>=1} (nu+k alpha, alpha) m_{nu+k alpha},
// resolved in order of increasing depth so every lookup is already final.
// All quantities are integers; every division is exact.
inline WeightMap dominant_weight_multiplicities(const RootSystem& rs, const Weight& lam) {
  require_dominant(rs, lam, "weights");
  auto doms = detail::dominant_weights_below(rs, lam);
  std::sort(doms.begin(), doms.end(), [](const auto& a, const auto& b) {
    long long ha = 0, hb = 0;
    for (int x : a.second) ha += x;
    for (int x : b.second) hb += x;
    return ha < hb;
  });

  WeightMap mult;
  for (const auto& [mu, c] : doms) mult.emplace(mu, Int(0));

  const Weight r = rho(rs);
  for (const auto& [mu, c] : doms) {
    if (mu == lam) {
      mult[mu] = 1;
      continue;
    }
    Int num = 0;
    for (const PositiveRoot& alpha : rs.positive_roots) {
      Weight xi = mu;
      for (;;) {
        for (int j = 0; j < rs.rank; ++j) xi.c[j] += alpha.weight_coords.c[j];
        auto it = mult.find(dominant_representative(rs, xi));
        if (it == mult.end()) break;
        num += it->second * root_pairing(rs, xi, alpha);
      }
    }
    // denominator (lam+rho)^2 - (mu+rho)^2 = (lam+mu+2rho, lam-mu)
    Weight sum = lam + mu + r + r;
    long long den = 0;
    for (int j = 0; j < rs.rank; ++j)
      den += static_cast<long long>(c[j]) * rs.symmetrizer[j] * sum.c[j];
    if (den <= 0) throw std::logic_error("weights: nonpositive Freudenthal denominator");
    Int m = 2 * num;
    if (m % den != 0) throw std::logic_error("weights: inexact Freudenthal division");
    m /= den;
    if (m <= 0) throw std::logic_error("weights: nonpositive multiplicity");
    mult[mu] = std::move(m);
  }
  return mult;
}

// Full weight system of V(lam): dominant multiplicities expanded over Weyl
// orbits. Cached per (type, lam); the cache only ever stores immutable values.
inline WeightSystemPtr weights(const RootSystem& rs, const Weight& lam) {
  require_dominant(rs, lam, "weights");
  static std::mutex cache_mutex;
  static std::unordered_map<detail::WeightSystemKey, WeightSystemPtr, detail::WeightSystemKeyHash>
      cache;
  detail::WeightSystemKey key{static_cast<char>(rs.type.family), rs.rank, lam.c};
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  WeightMap dominant = dominant_weight_multiplicities(rs, lam);
  auto full = std::make_shared<WeightMultiset>();
  for (const auto& entry : dominant) {
    const Int& m = entry.second;
    for_each_orbit_point(rs, entry.first,
                         [&](Weight point) { full->emplace(std::move(point), m); });
  }
  WeightSystemPtr result = full;
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(key, std::move(result)).first->second;
}

inline Int weight_multiplicity(const RootSystem& rs, const Weight& lam, const Weight& nu) {
  const WeightMultiset& wt = *weights(rs, lam);
  auto it = wt.find(nu);
  return it == wt.end() ? Int(0) : it->second;
}

// Multiplicity of V(nu) in V(lam) (x) V(mu) by coefficient extraction from
//   ch V(lam) * sum_w eps(w) e^{w(rho+mu)} = sum_nu a_nu sum_w eps(w) e^{w(rho+nu)}:
// a_nu is the coefficient of e^{rho+nu} on both sides. Needs the full Weyl
// orbit of rho+mu, so it is gated by the enumeration cap. This is the
// independent oracle for the Klimyk decomposition.
inline Int mult_alternating(const RootSystem& rs, const Weight& lam, const Weight& mu,
                            const Weight& nu, long long cap = kDefaultWeylCap) {
  require_dominant(rs, lam, "mult_alternating");
  require_dominant(rs, mu, "mult_alternating");
  require_dominant(rs, nu, "mult_alternating");
  const Int order = weyl_group_order(rs.type);
  if (order > cap) throw WeylCapExceeded(order);

  const WeightMultiset& wt = *weights(rs, lam);
  const Weight target = nu + rho(rs);
  Int acc = 0;
  for_each_regular_orbit_point(rs, mu + rho(rs), [&](const Weight& p, int sign) {
    auto it = wt.find(target - p);
    if (it != wt.end()) acc += sign * it->second;
  });
  if (acc < 0) throw std::logic_error("mult_alternating: negative multiplicity");
  return acc;
}

// Whole decomposition by the same alternating sum, for sweep comparisons.
inline Decomposition alternating_decompose(const RootSystem& rs, const Weight& lam,
                                           const Weight& mu, long long cap = kDefaultWeylCap) {
  require_dominant(rs, lam, "alternating_decompose");
  require_dominant(rs, mu, "alternating_decompose");
  const Int order = weyl_group_order(rs.type);
  if (order > cap) throw WeylCapExceeded(order);

  const WeightMultiset& wt = *weights(rs, lam);
  const Weight r = rho(rs);
  Decomposition acc;
  for_each_regular_orbit_point(rs, mu + r, [&](const Weight& p, int sign) {
    for (const auto& [xi, m] : wt) {
      Weight nu = xi + p - r;
      if (!nu.dominant()) continue;
      acc[std::move(nu)] += sign * m;
    }
  });
  for (auto it = acc.begin(); it != acc.end();) {
    if (it->second == 0) {
      it = acc.erase(it);
    } else if (it->second < 0) {
      throw std::logic_error("alternating_decompose: negative multiplicity");
    } else {
      ++it;
    }
  }
  return acc;
}

// Symmetrized square of a character's weight multiset:
//   m(gamma) = (sum_{xi+eta=gamma} m_xi m_eta + m_{gamma/2}) / 2.
inline WeightMultiset symmetric_square(const WeightMultiset& wt) {
  WeightMultiset twice;
  for (const auto& [xi, mx] : wt)
    for (const auto& [eta, my] : wt) twice[xi + eta] += mx * my;
  WeightMultiset out;
  for (auto& [gamma, m] : twice) {
    Int diag = 0;
    bool even = true;
    Weight half = gamma;
    for (int& x : half.c) {
      if (x % 2 != 0) {
        even = false;
        break;
      }
      x /= 2;
    }
    if (even) {
      auto it = wt.find(half);
      if (it != wt.end()) diag = it->second;
    }
    Int v = m + diag;
    if (v % 2 != 0) throw std::logic_error("symmetric_square: parity failure");
    v /= 2;
    if (v != 0) out.emplace(gamma, std::move(v));
  }
  return out;
}

}  // namespace quotrep
