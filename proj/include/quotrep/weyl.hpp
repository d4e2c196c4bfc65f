#pragma once

#include "quotrep/root_system.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace quotrep {

inline Weight rho(const RootSystem& rs) {
  return Weight(std::vector<int>(rs.rank, 1));
}

// s_i(nu) = nu - <nu, alpha_i-vee> alpha_i. Index i is 1-based (Bourbaki).
inline Weight reflect(const RootSystem& rs, int i, const Weight& nu) {
  if (i < 1 || i > rs.rank) throw std::invalid_argument("reflect: index out of range");
  check_rank(rs, nu, "reflect");
  const int k = nu.c[i - 1];
  Weight out = nu;
  for (int j = 0; j < rs.rank; ++j) out.c[j] -= k * rs.cartan[j][i - 1];
  return out;
}

// Applies reflections in the given order: word[0] first.
inline Weight apply_reflections(const RootSystem& rs, const std::vector<int>& word, Weight nu) {
  for (int i : word) nu = reflect(rs, i, nu);
  return nu;
}

struct SignedDominant {
  Weight weight;          // the dominant orbit representative
  int sign = 0;           // (-1)^(reflections used), or 0 if the orbit meets a wall
  std::vector<int> word;  // reflections applied, in order
};

// Chamber normalization with sign tracking: reflect at the lowest-index
// negative coordinate until dominant. A zero coordinate anywhere along the
// way means the weight lies on a wall (sign 0); normalization still finishes.
inline SignedDominant dominantize(const RootSystem& rs, Weight nu) {
  check_rank(rs, nu, "dominantize");
  SignedDominant out;
  int sign = 1;
  bool wall = false;
  for (;;) {
    int neg = -1;
    for (int j = 0; j < rs.rank; ++j) {
      if (nu.c[j] == 0) wall = true;
      if (neg < 0 && nu.c[j] < 0) neg = j;
    }
    if (neg < 0) break;
    out.word.push_back(neg + 1);
    nu = reflect(rs, neg + 1, nu);
    sign = -sign;
  }
  out.weight = std::move(nu);
  out.sign = wall ? 0 : sign;
  return out;
}

// Dominant orbit representative without sign or word bookkeeping.
inline Weight dominant_representative(const RootSystem& rs, Weight nu) {
  check_rank(rs, nu, "dominant_representative");
  for (;;) {
    int neg = -1;
    for (int j = 0; j < rs.rank; ++j)
      if (nu.c[j] < 0) {
        neg = j;
        break;
      }
    if (neg < 0) return nu;
    const int k = nu.c[neg];
    for (int j = 0; j < rs.rank; ++j) nu.c[j] -= k * rs.cartan[j][neg];
  }
}

// Highest weight of the dual module: -w_0(lam), as a dominant weight.
inline Weight dual_weight(const RootSystem& rs, const Weight& lam) {
  check_rank(rs, lam, "dual_weight");
  if (!lam.dominant()) throw std::invalid_argument("dual_weight: weight not dominant");
  return dominantize(rs, -lam).weight;
}

struct WeylElement {
  std::vector<int> word;  // apply_reflections(word, nu) = w(nu)
  int sign = 1;           // epsilon(w) = (-1)^length(w)
};

struct WeylCapExceeded : std::runtime_error {
  Int order;
  explicit WeylCapExceeded(Int n)
      : std::runtime_error("Weyl group order " + n.str() + " exceeds enumeration cap"),
        order(std::move(n)) {}
};

inline constexpr long long kDefaultWeylCap = 1000000;

// All |W| elements by breadth-first generation of the regular orbit of rho.
inline std::vector<WeylElement> weyl_elements(const RootSystem& rs,
                                              long long cap = kDefaultWeylCap) {
  const Int order = weyl_group_order(rs.type);
  if (order > cap) throw WeylCapExceeded(order);

  std::vector<WeylElement> out;
  std::unordered_map<Weight, int, WeightHash> seen;
  std::deque<std::pair<Weight, int>> queue;  // orbit point, element index
  const Weight start = rho(rs);
  seen.emplace(start, 0);
  out.push_back(WeylElement{});
  queue.emplace_back(start, 0);
  while (!queue.empty()) {
    auto [point, idx] = queue.front();
    queue.pop_front();
    for (int i = 1; i <= rs.rank; ++i) {
      Weight next = reflect(rs, i, point);
      if (seen.count(next)) continue;
      WeylElement elem;
      elem.word = out[idx].word;
      elem.word.push_back(i);
      elem.sign = -out[idx].sign;
      seen.emplace(next, static_cast<int>(out.size()));
      queue.emplace_back(std::move(next), static_cast<int>(out.size()));
      out.push_back(std::move(elem));
    }
  }
  if (Int(out.size()) != order) throw std::logic_error("weyl_elements: orbit size mismatch");
  return out;
}

// Orbit of a strictly dominant (hence regular) weight, with signs. Visits all
// |W| translates without materializing words.
template <typename Fn>
inline void for_each_regular_orbit_point(const RootSystem& rs, const Weight& strictly_dominant,
                                         Fn&& fn) {
  for (int x : strictly_dominant.c)
    if (x <= 0)
      throw std::invalid_argument("for_each_regular_orbit_point: weight not strictly dominant");
  std::unordered_map<Weight, char, WeightHash> seen;
  std::deque<std::pair<Weight, int>> queue;
  seen.emplace(strictly_dominant, 1);
  queue.emplace_back(strictly_dominant, 1);
  while (!queue.empty()) {
    auto [point, sign] = queue.front();
    queue.pop_front();
    fn(point, sign);
    for (int i = 1; i <= rs.rank; ++i) {
      Weight next = reflect(rs, i, point);
      if (seen.count(next)) continue;
      seen.emplace(next, 1);
      queue.emplace_back(std::move(next), -sign);
    }
  }
}

// Weyl orbit of any weight (no signs); used to expand weight systems.
template <typename Fn>
inline void for_each_orbit_point(const RootSystem& rs, const Weight& w, Fn&& fn) {
  std::unordered_map<Weight, char, WeightHash> seen;
  std::deque<Weight> queue;
  seen.emplace(w, 1);
  queue.push_back(w);
  while (!queue.empty()) {
    Weight point = std::move(queue.front());
    queue.pop_front();
    for (int i = 1; i <= rs.rank; ++i) {
      Weight next = reflect(rs, i, point);
      if (seen.count(next)) continue;
      seen.emplace(next, 1);
      queue.push_back(std::move(next));
    }
    fn(std::move(point));
  }
}

}  // namespace quotrep
