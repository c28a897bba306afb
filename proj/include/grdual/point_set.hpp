#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "grdual/errors.hpp"

namespace grdual {

/// Subsets of the carrier {0..n-1} are bitmasks: bit x set means point x is in
/// the set. All set algebra below is plain bit algebra under a fixed bit order.
using Mask = std::uint32_t;

/// Hard cap on carrier sizes. Exhaustive work beyond 7 points is not
/// desk-scale (isomorph rejection alone is n! <= 5040 permutations at 7).
inline constexpr int kMaxCarrier = 7;

/// Subfamily-enumeration guard for the f.i.p. compactness oracle
/// (2^guard subfamilies are enumerated; the oracle is not a hot path).
inline constexpr int kDefaultFipGuard = 16;

/// Default cap for a full census; spot operations may go up to kMaxCarrier.
inline constexpr int kDefaultCensusCap = 5;

constexpr Mask carrier_mask(int n) { return n <= 0 ? Mask{0} : (Mask{1} << n) - 1u; }

inline void require_carrier(int n) {
  if (n < 0 || n > kMaxCarrier) {
    throw Error(Errc::cap_exceeded,
                "carrier size " + std::to_string(n) + " outside [0, " +
                    std::to_string(kMaxCarrier) + "]");
  }
}

/// A subset of a fixed carrier {0..n-1}. Equality is bitwise.
struct PointSet {
  int n = 0;
  Mask bits = 0;

  bool contains(int x) const { return x >= 0 && x < n && ((bits >> x) & 1u); }
  int size() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  PointSet complement() const { return {n, static_cast<Mask>(carrier_mask(n) & ~bits)}; }

  bool operator==(const PointSet&) const = default;
};

inline PointSet make_point_set(int n, std::initializer_list<int> points) {
  require_carrier(n);
  Mask m = 0;
  for (int x : points) {
    if (x < 0 || x >= n)
      throw Error(Errc::carrier_mismatch,
                  "point " + std::to_string(x) + " outside carrier of size " + std::to_string(n));
    m |= Mask{1} << x;
  }
  return {n, m};
}

inline std::vector<int> points_of(Mask m) {
  std::vector<int> out;
  for (int x = 0; m >> x; ++x)
    if ((m >> x) & 1u) out.push_back(x);
  return out;
}

inline std::string set_to_string(Mask m) {
  std::string s = "{";
  bool first = true;
  for (int x : points_of(m)) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + "}";
}

}  // namespace grdual
