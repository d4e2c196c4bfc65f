#pragma once

#include "quotrep/numeric.hpp"
#include "quotrep/weight.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace quotrep {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
  Family family;
  int rank = 0;

  friend bool operator==(const SimpleType& a, const SimpleType& b) {
    return a.family == b.family && a.rank == b.rank;
  }
};

inline std::string to_string(const SimpleType& t) {
  return std::string(1, static_cast<char>(t.family)) + std::to_string(t.rank);
}

// B_1 is deliberately not constructible; the rank-1 spin case is handled as
// A_1 with doubled highest weight where it matters.
inline bool valid_simple_type(const SimpleType& t) {
  switch (t.family) {
    case Family::A: return t.rank >= 1;
    case Family::B: return t.rank >= 2;
    case Family::C: return t.rank >= 3;
    case Family::D: return t.rank >= 4;
    case Family::E: return t.rank >= 6 && t.rank <= 8;
    case Family::F: return t.rank == 4;
    case Family::G: return t.rank == 2;
  }
  return false;
}

inline std::size_t positive_root_count(const SimpleType& t) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return t.rank == 6 ? 36 : (t.rank == 7 ? 63 : 120);
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

inline Int weyl_group_order(const SimpleType& t) {
  auto factorial = [](int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return (Int(1) << n) * factorial(n);
    case Family::D: return (Int(1) << (n - 1)) * factorial(n);
    case Family::E: return n == 6 ? Int(51840) : (n == 7 ? Int(2903040) : Int(696729600));
    case Family::F: return Int(1152);
    case Family::G: return Int(12);
  }
  return 0;
}

struct PositiveRoot {
  std::vector<int> root_coords;     // expansion in simple roots
  Weight weight_coords;             // pairings with simple coroots
  std::vector<long long> pairing;   // d_j * b_j, so (nu, alpha) = sum_j pairing[j]*nu.c[j]
  long long norm2 = 0;              // (alpha, alpha)
  int height = 0;
};

// One simple factor: Cartan matrix a[i][j] = <alpha_j, alpha_i-vee> in
// Bourbaki numbering, symmetrizer d_i (short roots have squared length 2),
// the positive roots, and the exact bilinear form on the weight lattice.
struct RootSystem {
  SimpleType type;
  int rank = 0;
  std::vector<std::vector<int>> cartan;
  std::vector<long long> symmetrizer;
  std::vector<PositiveRoot> positive_roots;
  RatMatrix cartan_inv;
  RatMatrix form;  // form[i][j] = (omega_i, omega_j)

  Weight simple_root(int i) const {  // i is 1-based throughout the public API
    std::vector<int> c(rank);
    for (int k = 0; k < rank; ++k) c[k] = cartan[k][i - 1];
    return Weight(std::move(c));
  }
};

namespace detail {

inline std::vector<std::vector<int>> cartan_matrix(const SimpleType& t) {
  const int n = t.rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };  // 0-based
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;  // <alpha_{n-1}, alpha_n-vee> = -2
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E:
      // Bourbaki: chain 1-3-4-5-6(-7-8), branch 2-4.
      link(0, 2);
      link(2, 3);
      link(3, 4);
      link(4, 5);
      if (n >= 7) link(5, 6);
      if (n >= 8) link(6, 7);
      link(1, 3);
      break;
    case Family::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[2][1] = -2;  // <alpha_2, alpha_3-vee> = -2
      break;
    case Family::G:
      a[0][1] = -3;
      a[1][0] = -1;
      break;
  }
  return a;
}

inline std::vector<long long> symmetrizer_for(const SimpleType& t) {
  const int n = t.rank;
  std::vector<long long> d(n, 1);
  switch (t.family) {
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) d[i] = 2;
      break;
    case Family::C:
      d[n - 1] = 2;
      break;
    case Family::F:
      d[0] = d[1] = 2;
      break;
    case Family::G:
      d[1] = 3;
      break;
    default:
      break;
  }
  return d;
}

struct IntVecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x));
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace detail

inline RootSystem build(const SimpleType& type) {
  if (!valid_simple_type(type))
    throw std::invalid_argument("build: invalid simple type " + to_string(type));

  RootSystem rs;
  rs.type = type;
  rs.rank = type.rank;
  rs.cartan = detail::cartan_matrix(type);
  rs.symmetrizer = detail::symmetrizer_for(type);
  const int n = rs.rank;

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rs.symmetrizer[i] * rs.cartan[i][j] != rs.symmetrizer[j] * rs.cartan[j][i])
        throw std::logic_error("build: symmetrizer does not symmetrize the Cartan matrix");

  // Positive roots by closure under addition of simple roots, membership
  // decided by the root-string criterion: beta + alpha_i is a root iff
  // p - <beta, alpha_i-vee> >= 1, where p is the depth of the alpha_i-string
  // below beta.
  std::unordered_set<std::vector<int>, detail::IntVecHash> seen;
  std::vector<std::vector<int>> level;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    level.push_back(std::move(e));
  }
  std::vector<std::vector<int>> all = level;
  while (!level.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : level) {
      for (int i = 0; i < n; ++i) {
        std::vector<int> gamma = beta;
        gamma[i] += 1;
        if (seen.count(gamma)) continue;
        long long pair = 0;
        for (int j = 0; j < n; ++j) pair += static_cast<long long>(rs.cartan[i][j]) * beta[j];
        long long depth = 0;
        std::vector<int> down = beta;
        while (true) {
          down[i] -= 1;
          bool valid = down[i] >= 0 && seen.count(down);
          if (!valid) break;
          ++depth;
        }
        if (depth - pair >= 1) {
          seen.insert(gamma);
          next.push_back(std::move(gamma));
        }
      }
    }
    for (auto& g : next) all.push_back(g);
    level = std::move(next);
  }

  if (all.size() != positive_root_count(type))
    throw std::logic_error("build: positive root count mismatch for " + to_string(type));

  for (const auto& b : all) {
    PositiveRoot pr;
    pr.root_coords = b;
    std::vector<int> wc(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) wc[i] += rs.cartan[i][j] * b[j];
    pr.weight_coords = Weight(std::move(wc));
    pr.pairing.resize(n);
    for (int j = 0; j < n; ++j) pr.pairing[j] = rs.symmetrizer[j] * b[j];
    pr.norm2 = 0;
    for (int j = 0; j < n; ++j) pr.norm2 += pr.pairing[j] * pr.weight_coords.c[j];
    pr.height = 0;
    for (int x : b) pr.height += x;
    rs.positive_roots.push_back(std::move(pr));
  }
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
            [](const PositiveRoot& x, const PositiveRoot& y) {
              if (x.height != y.height) return x.height < y.height;
              return x.root_coords < y.root_coords;
            });

  RatMatrix a_rat(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a_rat[i][j] = rs.cartan[i][j];
  rs.cartan_inv = invert(a_rat);

  // (omega_i, omega_j) = d_j * (A^{-1})_{ji}; symmetric since DA is.
  rs.form.assign(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rs.form[i][j] = Rat(rs.symmetrizer[j]) * rs.cartan_inv[j][i];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rs.form[i][j] != rs.form[j][i]) throw std::logic_error("build: form not symmetric");

  return rs;
}

inline void check_rank(const RootSystem& rs, const Weight& w, const char* where) {
  if (w.rank() != rs.rank)
    throw std::invalid_argument(std::string(where) + ": dimension mismatch");
}

// Simple-root coordinates of a weight (exact rationals).
inline RootVector weight_to_root(const RootSystem& rs, const Weight& w) {
  check_rank(rs, w, "weight_to_root");
  std::vector<Rat> r(rs.rank, Rat(0));
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) r[i] += rs.cartan_inv[i][j] * w.c[j];
  return RootVector(std::move(r));
}

inline RootVector root_vector(const RootSystem& rs, const std::vector<int>& coords) {
  if (static_cast<int>(coords.size()) != rs.rank)
    throw std::invalid_argument("root_vector: dimension mismatch");
  std::vector<Rat> r(coords.begin(), coords.end());
  return RootVector(std::move(r));
}

inline std::vector<Rat> root_to_weight(const RootSystem& rs, const RootVector& v) {
  if (v.rank() != rs.rank) throw std::invalid_argument("root_to_weight: dimension mismatch");
  std::vector<Rat> c(rs.rank, Rat(0));
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) c[i] += Rat(rs.cartan[i][j]) * v.r[j];
  return c;
}

// Integer-coordinate combination of simple roots as a Weight.
inline Weight root_lattice_weight(const RootSystem& rs, const std::vector<int>& coords) {
  if (static_cast<int>(coords.size()) != rs.rank)
    throw std::invalid_argument("root_lattice_weight: dimension mismatch");
  std::vector<int> c(rs.rank, 0);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) c[i] += rs.cartan[i][j] * coords[j];
  return Weight(std::move(c));
}

inline Rat inner(const RootSystem& rs, const Weight& x, const Weight& y) {
  check_rank(rs, x, "inner");
  check_rank(rs, y, "inner");
  // (x, y) = sum_k r_k(x) d_k <y, alpha_k-vee>
  RootVector rx = weight_to_root(rs, x);
  Rat s(0);
  for (int k = 0; k < rs.rank; ++k) s += rx.r[k] * Rat(rs.symmetrizer[k]) * y.c[k];
  return s;
}

inline Rat inner(const RootSystem& rs, const RootVector& x, const RootVector& y) {
  if (x.rank() != rs.rank || y.rank() != rs.rank)
    throw std::invalid_argument("inner: dimension mismatch");
  // (x, y) = x^T (D A) y in root coordinates
  Rat s(0);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j)
      s += x.r[i] * Rat(rs.symmetrizer[i] * rs.cartan[i][j]) * y.r[j];
  return s;
}

inline Rat inner(const RootSystem& rs, const Weight& x, const RootVector& y) {
  Rat s(0);
  std::vector<Rat> yc = root_to_weight(rs, y);
  RootVector rx = weight_to_root(rs, x);
  for (int k = 0; k < rs.rank; ++k) s += rx.r[k] * Rat(rs.symmetrizer[k]) * yc[k];
  return s;
}

inline Rat inner(const RootSystem& rs, const RootVector& x, const Weight& y) {
  return inner(rs, y, x);
}

// (nu, alpha) for a weight-lattice nu and a root alpha: always an integer.
inline long long root_pairing(const RootSystem& rs, const Weight& nu, const PositiveRoot& alpha) {
  long long s = 0;
  for (int j = 0; j < rs.rank; ++j) s += alpha.pairing[j] * nu.c[j];
  return s;
}

// <nu, alpha-vee> = 2(nu,alpha)/(alpha,alpha), an integer.
inline long long coroot_pairing(const RootSystem& rs, const Weight& nu, const PositiveRoot& alpha) {
  const long long twice = 2 * root_pairing(rs, nu, alpha);
  if (twice % alpha.norm2 != 0) throw std::logic_error("coroot_pairing: non-integral pairing");
  return twice / alpha.norm2;
}

// mu <= lam in dominance order: lam - mu is a nonnegative integer combination
// of simple roots.
inline bool dominance_leq(const RootSystem& rs, const Weight& mu, const Weight& lam) {
  check_rank(rs, mu, "dominance_leq");
  check_rank(rs, lam, "dominance_leq");
  RootVector diff = weight_to_root(rs, lam - mu);
  return diff.integral() && diff.nonnegative();
}

}  // namespace quotrep
