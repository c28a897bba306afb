#pragma once

#include <vector>

#include "grdual/point_set.hpp"

namespace grdual {

/// A reflexive transitive relation on {0..n-1}, stored row-wise as bitmasks:
/// up[x] = {y : x <= y}. Transitivity is equivalent to the row condition
/// y in up[x]  ==>  up[y] subset of up[x].
struct Preorder {
  int n = 0;
  std::vector<Mask> up;

  bool leq(int x, int y) const { return (up[x] >> y) & 1u; }

  bool operator==(const Preorder&) const = default;
};

inline bool is_valid_preorder(const Preorder& p) {
  if (static_cast<int>(p.up.size()) != p.n) return false;
  const Mask carrier = carrier_mask(p.n);
  for (int x = 0; x < p.n; ++x) {
    if ((p.up[x] & ~carrier) != 0) return false;
    if (!((p.up[x] >> x) & 1u)) return false;  // reflexive
    for (int y = 0; y < p.n; ++y)
      if ((p.up[x] >> y) & 1u)
        if ((p.up[y] & ~p.up[x]) != 0) return false;  // transitive
  }
  return true;
}

inline Preorder identity_preorder(int n) {
  require_carrier(n);
  Preorder p{n, std::vector<Mask>(static_cast<std::size_t>(n), 0)};
  for (int x = 0; x < n; ++x) p.up[x] = Mask{1} << x;
  return p;
}

inline Preorder full_preorder(int n) {
  require_carrier(n);
  return {n, std::vector<Mask>(static_cast<std::size_t>(n), carrier_mask(n))};
}

/// Transpose: leq'[x][y] = leq[y][x]. An involution.
inline Preorder opposite(const Preorder& p) {
  Preorder q{p.n, std::vector<Mask>(static_cast<std::size_t>(p.n), 0)};
  for (int x = 0; x < p.n; ++x)
    for (int y = 0; y < p.n; ++y)
      if (p.leq(y, x)) q.up[x] |= Mask{1} << y;
  return q;
}

inline void require_same_carrier(int n, const PointSet& a) {
  if (a.n != n || (a.bits & ~carrier_mask(n)) != 0)
    throw Error(Errc::carrier_mismatch, "point set does not live on this carrier");
}

/// {x : x >= y for some y in A}; the saturation of A seen order-theoretically.
inline PointSet up_set(const Preorder& p, PointSet a) {
  require_same_carrier(p.n, a);
  Mask out = 0;
  for (int y = 0; y < p.n; ++y)
    if ((a.bits >> y) & 1u) out |= p.up[y];
  return {p.n, out};
}

/// {x : x <= y for some y in A}; for singletons this is the point's closure.
inline PointSet down_set(const Preorder& p, PointSet a) {
  require_same_carrier(p.n, a);
  Mask out = 0;
  for (int x = 0; x < p.n; ++x)
    if ((p.up[x] & a.bits) != 0) out |= Mask{1} << x;
  return {p.n, out};
}

}  // namespace grdual
