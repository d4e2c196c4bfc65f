#pragma once

#include "quotrep/group.hpp"
#include "quotrep/quotcone.hpp"

#include <optional>
#include <vector>

namespace quotrep {

struct DominantRootHit {
  SimpleType type;
  std::vector<int> root_coords;
  Weight weight_coords;
};

// Scans every simple type of rank 2..max_rank for dominant positive roots
// whose simple-root expansion contains exactly one simple root non-orthogonal
// to the root itself, with coefficient 1 there. (For a dominant root the
// non-orthogonal simple roots are exactly the nonzero fundamental
// coordinates.) The rank-1 degeneration enters the classification through the
// A_1 clause of classify_quot instead.
inline std::vector<DominantRootHit> scan_dominant_roots(int max_rank) {
  if (max_rank < 2) throw std::invalid_argument("scan_dominant_roots: max_rank must be >= 2");
  std::vector<SimpleType> types;
  for (int n = 2; n <= max_rank; ++n) types.push_back({Family::A, n});
  for (int n = 2; n <= max_rank; ++n) types.push_back({Family::B, n});
  for (int n = 3; n <= max_rank; ++n) types.push_back({Family::C, n});
  for (int n = 4; n <= max_rank; ++n) types.push_back({Family::D, n});
  for (int n = 6; n <= 8 && n <= max_rank; ++n) types.push_back({Family::E, n});
  if (max_rank >= 4) types.push_back({Family::F, 4});
  types.push_back({Family::G, 2});

  std::vector<DominantRootHit> hits;
  for (const SimpleType& t : types) {
    RootSystem rs = build(t);
    for (const PositiveRoot& alpha : rs.positive_roots) {
      if (!alpha.weight_coords.dominant()) continue;
      int nonorth = -1;
      bool unique = true;
      for (int j = 0; j < rs.rank; ++j) {
        if (alpha.weight_coords.c[j] == 0) continue;
        if (nonorth >= 0) {
          unique = false;
          break;
        }
        nonorth = j;
      }
      if (!unique || nonorth < 0) continue;
      if (alpha.root_coords[nonorth] != 1) continue;
      hits.push_back({t, alpha.root_coords, alpha.weight_coords});
    }
  }
  return hits;
}

enum class QuotKind { ReducedPoint, DoublePoint };

// When the point is non-reduced it is the order-2 fat point, never thicker,
// so the tangent dimension determines everything.
struct QuotClassification {
  QuotKind kind = QuotKind::ReducedPoint;
  int tangent_dim = 0;
  std::optional<int> witness_factor;  // 1-based index of the B-factor
};

namespace detail {

inline bool is_spin_cone_factor(const RootSystem& rs, const Weight& lam) {
  if (rs.type.family == Family::B) return lam == vector_weight(rs);
  if (rs.type.family == Family::A && rs.rank == 1) return lam == Weight{2};
  return false;
}

}  // namespace detail

// The classification: the point is non-reduced exactly when one factor is the
// odd spin group acting on the cone of its vector module (B_n with lam =
// omega_1, or A_1 with lam = 2 omega_1), lam vanishes on every other factor,
// and the mu-component on that factor pairs nontrivially with the short
// simple coroot.
inline QuotClassification classify_quot(const Group& g, const ProductWeight& lam,
                                        const ProductWeight& mu) {
  check_product(g, lam, "classify_quot");
  check_product(g, mu, "classify_quot");
  if (!product_dominant(lam) || !product_dominant(mu))
    throw std::invalid_argument("classify_quot: weights must be dominant");

  int nonzero = -1;
  bool single_nonzero = true;
  for (std::size_t f = 0; f < lam.size(); ++f) {
    if (lam[f].is_zero()) continue;
    if (nonzero >= 0) {
      single_nonzero = false;
      break;
    }
    nonzero = static_cast<int>(f);
  }

  QuotClassification out;
  if (nonzero >= 0 && single_nonzero && detail::is_spin_cone_factor(g.factors[nonzero], lam[nonzero]) &&
      mu[nonzero].c.back() >= 1) {
    out.kind = QuotKind::DoublePoint;
    out.tangent_dim = 1;
    out.witness_factor = nonzero + 1;
  }
  return out;
}

}  // namespace quotrep
