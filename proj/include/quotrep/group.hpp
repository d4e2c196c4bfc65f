#pragma once

#include "quotrep/root_system.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace quotrep {

// A semisimple group given as a product of simple factors (simply connected;
// weights live in the full fundamental-weight lattice of each factor).
struct GroupSpec {
  std::vector<SimpleType> factors;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) { return a.factors == b.factors; }
};

inline std::string to_string(const GroupSpec& g) {
  std::string s;
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    if (i) s += 'x';
    s += to_string(g.factors[i]);
  }
  return s;
}

struct Group {
  GroupSpec spec;
  std::vector<RootSystem> factors;
};

inline Group build_group(const GroupSpec& spec) {
  if (spec.factors.empty()) throw std::invalid_argument("build_group: no factors");
  Group g;
  g.spec = spec;
  for (const SimpleType& t : spec.factors) g.factors.push_back(build(t));
  return g;
}

// Product weights are per-factor tuples.
using ProductWeight = std::vector<Weight>;

inline void check_product(const Group& g, const ProductWeight& w, const char* where) {
  if (w.size() != g.factors.size())
    throw std::invalid_argument(std::string(where) + ": factor count mismatch");
  for (std::size_t f = 0; f < w.size(); ++f)
    if (w[f].rank() != g.factors[f].rank)
      throw std::invalid_argument(std::string(where) + ": dimension mismatch in factor " +
                                  std::to_string(f + 1));
}

inline bool product_dominant(const ProductWeight& w) {
  for (const Weight& x : w)
    if (!x.dominant()) return false;
  return true;
}

inline bool product_zero(const ProductWeight& w) {
  for (const Weight& x : w)
    if (!x.is_zero()) return false;
  return true;
}

inline std::string to_string(const ProductWeight& w) {
  std::string s;
  for (std::size_t f = 0; f < w.size(); ++f) {
    if (f) s += ';';
    s += to_string(w[f]);
  }
  return s;
}

}  // namespace quotrep
