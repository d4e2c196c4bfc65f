#pragma once

#include "quotrep/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

namespace quotrep {

// Integer vector in the fundamental-weight basis of one simple factor:
// coordinate i is the pairing with the simple coroot alpha_i-vee.
struct Weight {
  std::vector<int> c;

  Weight() = default;
  explicit Weight(std::vector<int> coords) : c(std::move(coords)) {}
  Weight(std::initializer_list<int> coords) : c(coords) {}

  static Weight zero(int rank) { return Weight(std::vector<int>(rank, 0)); }

  int rank() const { return static_cast<int>(c.size()); }
  bool is_zero() const {
    for (int x : c)
      if (x != 0) return false;
    return true;
  }
  bool dominant() const {
    for (int x : c)
      if (x < 0) return false;
    return true;
  }

  friend Weight operator+(const Weight& a, const Weight& b) {
    Weight r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
  }
  friend Weight operator-(const Weight& a, const Weight& b) {
    Weight r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
  }
  friend Weight operator-(const Weight& a) {
    Weight r = a;
    for (int& x : r.c) x = -x;
    return r;
  }
  friend Weight operator*(int k, const Weight& a) {
    Weight r = a;
    for (int& x : r.c) x *= k;
    return r;
  }
  friend bool operator==(const Weight& a, const Weight& b) { return a.c == b.c; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  // Lexicographic; used only for deterministic ordering of output.
  friend bool operator<(const Weight& a, const Weight& b) { return a.c < b.c; }
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (int x : w.c) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x));
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Finitely supported map Weight -> multiplicity. Used both for full weight
// systems (arbitrary weights) and for decompositions (dominant weights only).
using WeightMap = std::unordered_map<Weight, Int, WeightHash>;
using WeightMultiset = WeightMap;
using Decomposition = WeightMap;

// Exact-rational vector in simple-root coordinates.
struct RootVector {
  std::vector<Rat> r;

  RootVector() = default;
  explicit RootVector(std::vector<Rat> coords) : r(std::move(coords)) {}

  int rank() const { return static_cast<int>(r.size()); }
  bool integral() const {
    for (const Rat& x : r)
      if (!is_integer(x)) return false;
    return true;
  }
  bool nonnegative() const {
    for (const Rat& x : r)
      if (x < 0) return false;
    return true;
  }
};

inline std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < w.rank(); ++i) {
    if (i) os << ',';
    os << w.c[i];
  }
  os << ')';
  return os.str();
}

}  // namespace quotrep
