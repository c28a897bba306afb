#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "grdual/preorder.hpp"
#include "grdual/set_family.hpp"

namespace grdual {

/// A topology on {0..n-1} in canonical form: opens sorted ascending as
/// unsigned integers under the fixed bit order, duplicate-free. Canonical form
/// makes equality of topologies (the heart of every stabilization check)
/// structural equality of the opens vectors.
///
/// Invariants: contains the empty set and the full carrier, and is closed
/// under pairwise union and intersection. On a finite carrier pairwise closure
/// already gives closure under arbitrary unions and intersections, so these
/// are exactly the topologies. Construct via validate_topology or the
/// factories below, which establish the invariants.
struct FiniteTopology {
  int n = 0;
  std::vector<Mask> opens;

  bool is_open(Mask m) const { return std::binary_search(opens.begin(), opens.end(), m); }

  bool operator==(const FiniteTopology&) const = default;
};

/// Checks the open-set axioms and returns the canonical form.
/// Throws FamilyError (MissingEmptyOrFull / NotClosedUnderUnion /
/// NotClosedUnderIntersection, with a witness pair) on violation.
inline FiniteTopology validate_topology(int n, std::vector<Mask> opens) {
  require_carrier(n);
  const Mask carrier = carrier_mask(n);
  for (Mask m : opens)
    if ((m & ~carrier) != 0)
      throw Error(Errc::carrier_mismatch,
                  "open set " + set_to_string(m) + " outside carrier of size " + std::to_string(n));
  opens = canonical_members(std::move(opens));
  const auto has = [&](Mask m) { return std::binary_search(opens.begin(), opens.end(), m); };
  if (!has(0) || !has(carrier))
    throw FamilyError(Errc::missing_empty_or_full,
                      "a topology must contain the empty set and the full carrier", 0, carrier);
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      const Mask u = opens[i] | opens[j];
      const Mask v = opens[i] & opens[j];
      if (!has(u))
        throw FamilyError(Errc::not_closed_under_union,
                          set_to_string(opens[i]) + " | " + set_to_string(opens[j]) + " = " +
                              set_to_string(u) + " is missing",
                          opens[i], opens[j]);
      if (!has(v))
        throw FamilyError(Errc::not_closed_under_intersection,
                          set_to_string(opens[i]) + " & " + set_to_string(opens[j]) + " = " +
                              set_to_string(v) + " is missing",
                          opens[i], opens[j]);
    }
  }
  return {n, std::move(opens)};
}

inline FiniteTopology discrete_topology(int n) {
  require_carrier(n);
  std::vector<Mask> opens(std::size_t{1} << n);
  for (Mask m = 0; m < opens.size(); ++m) opens[m] = m;
  return {n, std::move(opens)};
}

inline FiniteTopology indiscrete_topology(int n) {
  require_carrier(n);
  if (n == 0) return {0, {0}};
  return {n, {0, carrier_mask(n)}};
}

inline SetFamily closed_sets(const FiniteTopology& t) {
  const Mask carrier = carrier_mask(t.n);
  std::vector<Mask> closed;
  closed.reserve(t.opens.size());
  for (Mask u : t.opens) closed.push_back(carrier & ~u);
  return {t.n, canonical_members(std::move(closed))};
}

/// Smallest closed set containing A.
inline PointSet closure(const FiniteTopology& t, PointSet a) {
  require_same_carrier(t.n, a);
  const Mask carrier = carrier_mask(t.n);
  Mask c = carrier;
  for (Mask u : t.opens) {
    const Mask k = carrier & ~u;
    if ((a.bits & ~k) == 0) c &= k;
  }
  return {t.n, c};
}

/// Intersection of all opens containing A; equals the up-closure of A in the
/// specialization preorder (cross-checked as a library invariant).
inline PointSet saturation(const FiniteTopology& t, PointSet a) {
  require_same_carrier(t.n, a);
  Mask s = carrier_mask(t.n);
  for (Mask u : t.opens)
    if ((a.bits & ~u) == 0) s &= u;
  return {t.n, s};
}

/// The specialization preorder: x <= y iff x lies in the closure of {y};
/// equivalently, every open containing x contains y. Row x is therefore the
/// intersection of all opens containing x (the minimal open neighbourhood).
inline Preorder specialization(const FiniteTopology& t) {
  Preorder p{t.n, std::vector<Mask>(static_cast<std::size_t>(t.n), 0)};
  for (int x = 0; x < t.n; ++x) {
    Mask row = carrier_mask(t.n);
    for (Mask u : t.opens)
      if ((u >> x) & 1u) row &= u;
    p.up[x] = row;
  }
  return p;
}

/// The topology whose opens are all up-closed sets of the preorder. On finite
/// carriers this is a bijection inverse to specialization.
inline FiniteTopology alexandrov_from_preorder(const Preorder& p) {
  require_carrier(p.n);
  std::vector<Mask> opens;
  const Mask carrier = carrier_mask(p.n);
  for (Mask m = 0;; ++m) {
    bool up_closed = true;
    for (int x = 0; x < p.n && up_closed; ++x)
      if ((m >> x) & 1u) up_closed = (p.up[x] & ~m) == 0;
    if (up_closed) opens.push_back(m);
    if (m == carrier) break;
  }
  return {p.n, std::move(opens)};  // ascending scan keeps canonical order
}

inline std::string to_string(const FiniteTopology& t) {
  std::string s = "n=" + std::to_string(t.n) + " opens=[";
  for (std::size_t i = 0; i < t.opens.size(); ++i) {
    if (i) s += ",";
    s += set_to_string(t.opens[i]);
  }
  return s + "]";
}

}  // namespace grdual
