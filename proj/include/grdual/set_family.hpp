#pragma once

#include <algorithm>
#include <vector>

#include "grdual/point_set.hpp"

namespace grdual {

/// A named family of point sets over a fixed carrier, held in canonical form:
/// members sorted ascending as unsigned integers, duplicate-free. Equality of
/// families is structural equality of canonical forms.
struct SetFamily {
  int n = 0;
  std::vector<Mask> members;

  bool contains(Mask m) const {
    return std::binary_search(members.begin(), members.end(), m);
  }
  std::size_t size() const { return members.size(); }

  bool operator==(const SetFamily&) const = default;
};

inline std::vector<Mask> canonical_members(std::vector<Mask> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

inline SetFamily make_family(int n, std::vector<Mask> members) {
  require_carrier(n);
  const Mask carrier = carrier_mask(n);
  for (Mask m : members) {
    if ((m & ~carrier) != 0)
      throw Error(Errc::carrier_mismatch,
                  "family member " + set_to_string(m) + " outside carrier of size " +
                      std::to_string(n));
  }
  return {n, canonical_members(std::move(members))};
}

/// True when every member of `sub` occurs in `super` (same carrier assumed).
inline bool is_subfamily(const SetFamily& sub, const SetFamily& super) {
  return std::all_of(sub.members.begin(), sub.members.end(),
                     [&](Mask m) { return super.contains(m); });
}

}  // namespace grdual
