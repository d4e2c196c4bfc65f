#pragma once

#include "quotrep/group.hpp"
#include "quotrep/tensor.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace quotrep {

// Degree-graded isotypic data for the modules attached to the cone of
// primitive vectors of V(lam):
//   A_m = V(m lam),  M_m = V(m lam) (x) V(mu),  Q_m = V(m lam + mu),
//   N_m = ker of the Cartan projection M_m -> Q_m.
// Everything is computed with undualized weights; all the multiplicity
// statements are invariant under taking duals.
enum class GradedKind : char { A = 'A', M = 'M', N = 'N', Q = 'Q' };

struct GradedDecomposition {
  Weight lam, mu;
  GradedKind which;
  int degree_bound = 0;
  std::vector<Decomposition> per_degree;  // index m = 0..degree_bound
};

inline constexpr int kDefaultDegreeBound = 4;

inline GradedDecomposition graded_module(const RootSystem& rs, const Weight& lam,
                                         const Weight& mu, GradedKind which,
                                         int degree_bound = kDefaultDegreeBound) {
  require_dominant(rs, lam, "graded_module");
  require_dominant(rs, mu, "graded_module");
  if (degree_bound < 0) throw std::invalid_argument("graded_module: negative degree bound");
  GradedDecomposition out;
  out.lam = lam;
  out.mu = mu;
  out.which = which;
  out.degree_bound = degree_bound;
  for (int m = 0; m <= degree_bound; ++m) {
    const Weight mlam = m * lam;
    Decomposition d;
    switch (which) {
      case GradedKind::A:
        d.emplace(mlam, 1);
        break;
      case GradedKind::Q:
        d.emplace(mlam + mu, 1);
        break;
      case GradedKind::M:
        d = decompose(rs, mlam, mu);
        break;
      case GradedKind::N: {
        d = decompose(rs, mlam, mu);
        auto it = d.find(mlam + mu);
        if (it == d.end() || it->second != 1)
          throw std::logic_error("graded_module: Cartan component multiplicity is not 1");
        d.erase(it);
        break;
      }
    }
    out.per_degree.push_back(std::move(d));
  }
  return out;
}

// The multiplicity prescription cut out by the quotient modules: 1 exactly on
// the weights m lam* + mu* (m >= 0, the same m across all factors), 0
// elsewhere.
struct HilbertFunction {
  ProductWeight lam_dual, mu_dual;

  // The degree m >= 0 with nu = m lam* + mu*, when one exists.
  std::optional<int> degree(const ProductWeight& nu) const {
    if (nu.size() != lam_dual.size())
      throw std::invalid_argument("hilbert: factor count mismatch");
    std::vector<int> delta, base;
    for (std::size_t f = 0; f < nu.size(); ++f) {
      const Weight d = nu[f] - mu_dual[f];
      delta.insert(delta.end(), d.c.begin(), d.c.end());
      base.insert(base.end(), lam_dual[f].c.begin(), lam_dual[f].c.end());
    }
    bool all_zero = true;
    for (int x : delta) all_zero = all_zero && x == 0;
    if (all_zero) return 0;  // m = 0 (well-defined even when lam = 0)
    int pivot = -1;
    for (std::size_t i = 0; i < base.size(); ++i)
      if (base[i] != 0) {
        pivot = static_cast<int>(i);
        break;
      }
    if (pivot < 0) return std::nullopt;  // lam = 0 but nu != mu*
    if (delta[pivot] % base[pivot] != 0) return std::nullopt;
    const int m = delta[pivot] / base[pivot];
    if (m < 1) return std::nullopt;
    for (std::size_t i = 0; i < base.size(); ++i)
      if (delta[i] != m * base[i]) return std::nullopt;
    return m;
  }

  int operator()(const ProductWeight& nu) const { return degree(nu).has_value() ? 1 : 0; }
};

inline HilbertFunction make_hilbert(const Group& g, const ProductWeight& lam,
                                    const ProductWeight& mu) {
  check_product(g, lam, "make_hilbert");
  check_product(g, mu, "make_hilbert");
  HilbertFunction h;
  for (std::size_t f = 0; f < g.factors.size(); ++f) {
    if (!lam[f].dominant() || !mu[f].dominant())
      throw std::invalid_argument("make_hilbert: weights must be dominant");
    h.lam_dual.push_back(dual_weight(g.factors[f], lam[f]));
    h.mu_dual.push_back(dual_weight(g.factors[f], mu[f]));
  }
  return h;
}

inline int hilbert(const RootSystem& rs, const Weight& lam, const Weight& mu, const Weight& nu) {
  require_dominant(rs, nu, "hilbert");
  Group g;
  g.spec.factors = {rs.type};
  g.factors = {rs};
  return make_hilbert(g, {lam}, {mu})(ProductWeight{nu});
}

// Highest weight of the defining vector module of the odd orthogonal group:
// omega_1 in type B_n (n >= 2), 2 omega_1 in the rank-1 case (A_1).
inline Weight vector_weight(const RootSystem& rs) {
  if (rs.type.family == Family::B) {
    std::vector<int> c(rs.rank, 0);
    c[0] = 1;
    return Weight(std::move(c));
  }
  if (rs.type.family == Family::A && rs.rank == 1) return Weight{2};
  throw std::invalid_argument("vector_weight: needs type B (or A1 as the rank-1 case)");
}

inline void require_spin_cone(const RootSystem& rs, const Weight& lam, const char* where) {
  if (lam != vector_weight(rs))
    throw std::invalid_argument(std::string(where) +
                                ": lam must be the vector-module highest weight");
}

// Splits N_m into the isotypic part of type (m-1) lam + mu (the marker) and
// the rest.
inline std::pair<Int, Decomposition> n_prime_split(const RootSystem& rs, const Weight& lam,
                                                   const Weight& mu, int m) {
  require_spin_cone(rs, lam, "n_prime_split");
  require_dominant(rs, mu, "n_prime_split");
  if (m < 1) throw std::invalid_argument("n_prime_split: m must be >= 1");
  Decomposition n_m = decompose(rs, m * lam, mu);
  auto cartan = n_m.find(m * lam + mu);
  if (cartan == n_m.end() || cartan->second != 1)
    throw std::logic_error("n_prime_split: Cartan component multiplicity is not 1");
  n_m.erase(cartan);
  const Weight marker = (m - 1) * lam + mu;
  Int marker_mult = 0;
  auto it = n_m.find(marker);
  if (it != n_m.end()) {
    marker_mult = it->second;
    n_m.erase(it);
  }
  return {std::move(marker_mult), std::move(n_m)};
}

// Upper bound for the tangent-space dimension at the distinguished point:
// the multiplicity of type mu inside N_1, computed factor-wise (isotypic
// multiplicities of a product group multiply). For lam = 0 the kernel N is
// zero and the bound is 0; otherwise the only type of the form m lam + mu
// that can occur in N_1 is mu itself.
inline Int tangent_upper_bound(const Group& g, const ProductWeight& lam, const ProductWeight& mu) {
  check_product(g, lam, "tangent_upper_bound");
  check_product(g, mu, "tangent_upper_bound");
  if (!product_dominant(lam) || !product_dominant(mu))
    throw std::invalid_argument("tangent_upper_bound: weights must be dominant");
  if (product_zero(lam)) return 0;
  Int bound = 1;
  for (std::size_t f = 0; f < g.factors.size(); ++f) {
    bound *= mult(g.factors[f], lam[f], mu[f], mu[f]);
    if (bound == 0) break;
  }
  return bound;
}

inline Int tangent_upper_bound(const RootSystem& rs, const Weight& lam, const Weight& mu) {
  Group g;
  g.spec.factors = {rs.type};
  g.factors = {rs};
  return tangent_upper_bound(g, {lam}, {mu});
}

// --- identity checks -------------------------------------------------------
// Each report carries the computed sides; ok tells whether the identity held.

struct Check211 {
  bool ok = false;
  Int mult_value;
  int coroot_pairing = 0;  // <mu, alpha_n-vee>
};

// mult of V(mu) in V(lam) (x) V(mu) is 1 iff <mu, alpha_n-vee> != 0, else 0.
inline Check211 verify_lemma_211(const RootSystem& rs, const Weight& mu) {
  require_dominant(rs, mu, "verify_lemma_211");
  const Weight lam = vector_weight(rs);
  Check211 r;
  r.mult_value = mult(rs, lam, mu, mu);
  r.coroot_pairing = mu.c.back();
  r.ok = r.mult_value == (r.coroot_pairing != 0 ? 1 : 0);
  return r;
}

struct Check212 {
  bool ok = false;
  int m = 0;
  // nu = m lam + mu - (alpha_1 + ... + alpha_i), listed per witness
  std::vector<std::pair<Weight, int>> witnesses;
  std::vector<Weight> violations;
};

// Every dominant nu in V(m lam) (x) V(mu) lying above (m-1) lam + mu has the
// staircase form m lam + mu - (alpha_1 + ... + alpha_i), 0 <= i <= n.
inline Check212 verify_lemma_212(const RootSystem& rs, const Weight& mu, int m) {
  require_dominant(rs, mu, "verify_lemma_212");
  if (m < 1) throw std::invalid_argument("verify_lemma_212: m must be >= 1");
  const Weight lam = vector_weight(rs);
  const Weight base = m * lam + mu;
  const Weight floor_weight = (m - 1) * lam + mu;

  std::vector<Weight> staircase;  // alpha_1 + ... + alpha_i as weights
  staircase.push_back(Weight::zero(rs.rank));
  for (int i = 1; i <= rs.rank; ++i)
    staircase.push_back(staircase.back() + rs.simple_root(i));

  Check212 r;
  r.m = m;
  for (const auto& [nu, mult_nu] : decompose(rs, m * lam, mu)) {
    if (!dominance_leq(rs, floor_weight, nu)) continue;
    int found = -1;
    for (int i = 0; i <= rs.rank; ++i)
      if (nu == base - staircase[i]) {
        found = i;
        break;
      }
    if (found >= 0)
      r.witnesses.emplace_back(nu, found);
    else
      r.violations.push_back(nu);
  }
  std::sort(r.witnesses.begin(), r.witnesses.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  r.ok = r.violations.empty();
  return r;
}

struct Check214 {
  bool ok = false;
  int m = 0;
  Int marker_mult;
};

// Under <mu, alpha_n-vee> != 0, the (m-1) lam + mu isotypic part of N_m is a
// single copy.
inline Check214 verify_lemma_214(const RootSystem& rs, const Weight& mu, int m) {
  require_dominant(rs, mu, "verify_lemma_214");
  if (mu.c.back() == 0)
    throw std::invalid_argument("verify_lemma_214: needs <mu, alpha_n-vee> != 0");
  Check214 r;
  r.m = m;
  r.marker_mult = n_prime_split(rs, vector_weight(rs), mu, m).first;
  r.ok = r.marker_mult == 1;
  return r;
}

struct CheckQ1 {
  bool ok = false;
  // (i, sign, mult) for each dominant nu +/- epsilon_i
  struct Case {
    int i = 0;
    int sign = 0;
    Weight target;
    Int mult_value;
  };
  std::vector<Case> cases;
};

// mult of V(nu +/- epsilon_i) in V(lam) (x) V(nu) is 1 whenever the shifted
// weight is dominant.
inline CheckQ1 verify_lemma_q1(const RootSystem& rs, const Weight& nu) {
  require_dominant(rs, nu, "verify_lemma_q1");
  const Weight lam = vector_weight(rs);
  Decomposition d = decompose(rs, lam, nu);
  CheckQ1 r;
  r.ok = true;
  for (int i = 1; i <= rs.rank; ++i) {
    const Weight eps = epsilon_vector(rs, i);
    for (int sign : {+1, -1}) {
      Weight target = sign > 0 ? nu + eps : nu - eps;
      if (!target.dominant()) continue;
      auto it = d.find(target);
      CheckQ1::Case c;
      c.i = i;
      c.sign = sign;
      c.target = target;
      c.mult_value = it == d.end() ? Int(0) : it->second;
      if (c.mult_value != 1) r.ok = false;
      r.cases.push_back(std::move(c));
    }
  }
  return r;
}

// r(mu) in the non-reduced regime mu_n >= 1: the number of equalities among
// mu_1 >= 0, ..., mu_{n-1} >= 0, mu_n >= 1.
inline int r_of_mu(const RootSystem& rs, const Weight& mu) {
  if (rs.type.family != Family::B && !(rs.type.family == Family::A && rs.rank == 1))
    throw std::invalid_argument("r_of_mu: needs type B (or A1 as the rank-1 case)");
  require_dominant(rs, mu, "r_of_mu");
  if (mu.c.back() < 1) throw std::invalid_argument("r_of_mu: needs mu_n >= 1");
  int r = 0;
  for (int i = 0; i + 1 < rs.rank; ++i)
    if (mu.c[i] == 0) ++r;
  if (mu.c.back() == 1) ++r;
  return r;
}

struct CheckQ2 {
  bool ok = false;
  Int mult_value;  // mult of V(mu) in V(2 lam) (x) V(mu)
  int expected = 0;  // n - r(mu)
};

inline CheckQ2 verify_lemma_q2(const RootSystem& rs, const Weight& mu) {
  CheckQ2 r;
  r.expected = rs.rank - r_of_mu(rs, mu);
  r.mult_value = mult(rs, 2 * vector_weight(rs), mu, mu);
  r.ok = r.mult_value == r.expected;
  return r;
}

struct CheckS2 {
  bool ok = false;
  Int square_total;    // weights of S^2 V(lam), counted with multiplicity
  Int v2lam_total;     // weights of V(2 lam), counted with multiplicity
};

// S^2 V(lam) = V(2 lam) (+) V(0) on the level of characters.
inline CheckS2 verify_s2(const RootSystem& rs) {
  const Weight lam = vector_weight(rs);
  WeightMultiset sq = symmetric_square(*weights(rs, lam));
  WeightMultiset expect = *weights(rs, 2 * lam);
  expect[Weight::zero(rs.rank)] += 1;
  CheckS2 r;
  r.square_total = 0;
  for (const auto& [w, m] : sq) r.square_total += m;
  r.v2lam_total = 0;
  for (const auto& [w, m] : *weights(rs, 2 * lam)) r.v2lam_total += m;
  r.ok = sq == expect;
  return r;
}

}  // namespace quotrep
