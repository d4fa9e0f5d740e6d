#pragma once

#include <cstdint>
#include <vector>

namespace latpimc {

/// A closed lattice walk (ring polymer) of p unreduced positions. Step alpha
/// runs from position alpha to position alpha+1, with the last step returning
/// to position 0, so the steps always sum to zero.
struct ClosedWalk {
  std::vector<std::int64_t> positions;

  int size() const noexcept { return static_cast<int>(positions.size()); }

  std::int64_t step(int alpha) const noexcept {
    const int next = alpha + 1 == size() ? 0 : alpha + 1;
    return positions[next] - positions[alpha];
  }

  std::vector<std::int64_t> steps() const {
    std::vector<std::int64_t> s(positions.size());
    for (int a = 0; a < size(); ++a) s[a] = step(a);
    return s;
  }

  friend bool operator==(const ClosedWalk&, const ClosedWalk&) = default;
};

}  // namespace latpimc
