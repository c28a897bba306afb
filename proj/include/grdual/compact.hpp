#pragma once

#include <bit>
#include <vector>

#include "grdual/topology.hpp"

namespace grdual {

/// Every open cover of S admits a finite subcover. On a finite carrier the
/// whole open family is finite, so any cover is already a finite subcover of
/// itself and the check collapses to `true`. Kept as the oracle side of the
/// f.i.p. equivalence.
inline bool is_compact_cover(const FiniteTopology& t, PointSet s) {
  require_same_carrier(t.n, s);
  return true;
}

/// A finite family has the finite intersection property iff its total
/// intersection is nonempty: every subfamily meet contains the total meet,
/// and the family is itself one of its finite subfamilies. The literal
/// all-subfamilies definition is kept as a test oracle against this shortcut.
inline bool family_has_fip(Mask total_meet) { return total_meet != 0; }

/// Closed-base compactness criterion: S is compact iff for every subfamily
/// zeta of the base such that {S} u zeta has f.i.p., S meets the intersection
/// of zeta. Enumerates all 2^|base| subfamilies; guarded because of that.
inline bool is_compact_fip(PointSet s, const SetFamily& base, int guard = kDefaultFipGuard) {
  require_same_carrier(base.n, s);
  const int k = static_cast<int>(base.members.size());
  if (k > guard)
    throw Error(Errc::guard_exceeded, "closed base has " + std::to_string(k) +
                                          " members, above the subfamily guard " +
                                          std::to_string(guard));
  const Mask carrier = carrier_mask(base.n);
  std::vector<Mask> meet(std::size_t{1} << k);
  meet[0] = carrier;  // empty subfamily: empty intersection is the carrier
  for (std::size_t m = 1; m < meet.size(); ++m) {
    const int low = std::countr_zero(m);
    meet[m] = meet[m & (m - 1)] & base.members[static_cast<std::size_t>(low)];
  }
  for (std::size_t m = 0; m < meet.size(); ++m) {
    const Mask total = s.bits & meet[m];  // meet of {S} u zeta
    if (family_has_fip(total) && (s.bits & meet[m]) == 0) return false;
  }
  return true;
}

/// Generates the topology for which `base` is a closed base: closed sets are
/// all intersections of finite unions of base members, with the conventions
/// empty union = empty set and empty intersection = full carrier. Computed as
/// a fixpoint (close under pairwise union, then pairwise intersection, repeat
/// until stable), then complemented. Always yields a valid topology.
inline FiniteTopology topology_from_closed_base(int n, const SetFamily& base) {
  require_carrier(n);
  const Mask carrier = carrier_mask(n);
  for (Mask m : base.members)
    if ((m & ~carrier) != 0)
      throw Error(Errc::carrier_mismatch, "base member " + set_to_string(m) +
                                              " outside carrier of size " + std::to_string(n));

  std::vector<Mask> fam = base.members;
  fam.push_back(0);
  fam.push_back(carrier);
  fam = canonical_members(std::move(fam));

  const auto close_under = [&](auto combine) {
    bool grew_any = false;
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Mask> fresh;
      for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = i + 1; j < fam.size(); ++j) {
          const Mask c = combine(fam[i], fam[j]);
          if (!std::binary_search(fam.begin(), fam.end(), c)) fresh.push_back(c);
        }
      if (!fresh.empty()) {
        fam.insert(fam.end(), fresh.begin(), fresh.end());
        fam = canonical_members(std::move(fam));
        grew = grew_any = true;
      }
    }
    return grew_any;
  };

  bool changed = true;
  while (changed) {
    changed = close_under([](Mask a, Mask b) { return a | b; });
    changed = close_under([](Mask a, Mask b) { return a & b; }) || changed;
  }

  std::vector<Mask> opens;
  opens.reserve(fam.size());
  for (Mask c : fam) opens.push_back(carrier & ~c);
  return validate_topology(n, std::move(opens));
}

}  // namespace grdual
