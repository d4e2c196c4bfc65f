#pragma once

#include "quotrep/reps.hpp"

#include <stdexcept>
#include <utility>

namespace quotrep {

// V(lam) (x) V(mu) decomposed into dominant highest weights, by signed
// translation: every weight xi of V(lam) contributes sign * m_xi at the
// chamber-normalized value of xi + mu + rho, shifted back by rho. Wall hits
// are dropped. Intermediate sums may cancel; the final map must be
// nonnegative.
inline Decomposition decompose(const RootSystem& rs, const Weight& lam, const Weight& mu) {
  require_dominant(rs, lam, "decompose");
  require_dominant(rs, mu, "decompose");
  const WeightMultiset& wt = *weights(rs, lam);
  const Weight shift = mu + rho(rs);
  Decomposition acc;
  for (const auto& [xi, m] : wt) {
    SignedDominant sd = dominantize(rs, xi + shift);
    if (sd.sign == 0) continue;
    Weight nu = sd.weight;
    for (int& x : nu.c) x -= 1;  // subtract rho
    acc[std::move(nu)] += sd.sign * m;
  }
  for (auto it = acc.begin(); it != acc.end();) {
    if (it->second == 0) {
      it = acc.erase(it);
    } else if (it->second < 0) {
      throw std::logic_error("decompose: negative multiplicity");
    } else {
      ++it;
    }
  }
  return acc;
}

inline Int mult(const RootSystem& rs, const Weight& lam, const Weight& mu, const Weight& nu) {
  require_dominant(rs, nu, "mult");
  Decomposition d = decompose(rs, lam, mu);
  auto it = d.find(nu);
  return it == d.end() ? Int(0) : it->second;
}

// epsilon_i = alpha_i + ... + alpha_n for type B (and the A_1 degeneration
// epsilon_1 = alpha_1), as a weight. 1-based i.
inline Weight epsilon_vector(const RootSystem& rs, int i) {
  const bool type_b = rs.type.family == Family::B;
  const bool rank_one = rs.type.family == Family::A && rs.rank == 1;
  if (!type_b && !rank_one) throw std::invalid_argument("epsilon_vector: needs type B or A1");
  if (i < 1 || i > rs.rank) throw std::invalid_argument("epsilon_vector: index out of range");
  std::vector<int> coords(rs.rank, 0);
  for (int j = i; j <= rs.rank; ++j) coords[j - 1] = 1;
  return root_lattice_weight(rs, coords);
}

}  // namespace quotrep
