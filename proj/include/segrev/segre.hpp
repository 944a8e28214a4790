#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "segrev/gf2.hpp"

// The binary Segre variety S_(N) = PG(1,2) x ... x PG(1,2) as a point-line
// incidence structure, with its tensor embedding into PG(2^N-1,2), the
// distinguished spreads, sub-Segre decomposition and collinearity metric.

namespace segrev {

// A nonzero linear functional on the tensor space GF(2)^(2^N), bit I of the
// word being the coefficient of coordinate x_I.  Hyperplanes are identified
// with functionals throughout; 0 denotes the extraordinary hyperplane.
using Tensor = std::uint32_t;

// The three points of PG(1,2), as GF(2)^2 vectors: 0 -> (0,1), 1 -> (1,0),
// 2 -> (1,1).  Component b of point c:
inline bool pg1_component(int c, int b) {
  static constexpr int tbl[3][2] = {{0, 1}, {1, 0}, {1, 1}};
  return tbl[c][b] != 0;
}

struct SegreLine {
  int free_axis;                 // coordinate that runs over {0,1,2}
  std::vector<std::uint8_t> fixed;  // the other N-1 coordinates, axis order
  std::array<int, 3> points;     // point ids, index = value on the free axis
};

class SegreVariety {
 public:
  explicit SegreVariety(int n);

  int n() const { return n_; }
  int num_points() const { return num_points_; }
  int num_lines() const { return static_cast<int>(lines_.size()); }

  // Points carry ids in lexicographic order of their coordinate tuples,
  // coords[0] most significant.
  std::vector<std::uint8_t> coords(int point) const;
  int point_of(const std::vector<std::uint8_t>& c) const;

  const std::vector<SegreLine>& lines() const { return lines_; }
  const std::vector<int>& lines_through(int point) const { return lines_through_[point]; }

  // Tensor (Kronecker) embedding into GF(2)^(2^N); axis 0 owns the most
  // significant bit of the flat index.
  Tensor embed(int point) const { return emb_[point]; }
  BinVector embed_vector(int point) const;

  // Collinearity-graph distance; equals the number of differing coordinates.
  int distance(int p, int q) const;

  // The 3^(N-1) points with coords[axis] == level, in the id order of the
  // reduced (coordinate-dropped) S_(N-1).
  const std::vector<int>& sub_segre_points(int axis, int level) const {
    return sub_points_[axis][level];
  }
  // Line ids of the distinguished spread of the given axis.
  const std::vector<int>& spread(int axis) const { return spreads_[axis]; }

  // Restriction of a functional to the sub-Segre (axis, level): the functional
  // on GF(2)^(2^(N-1)) cutting out the intersection hyperplane.  Zero means
  // the sub-Segre lies fully inside (deep).
  Tensor contract(Tensor f, int axis, int level) const;

  // Inverse of contraction: the functional whose restrictions to levels 0 and
  // 1 of the axis are g0 and g1 (level 2 is then forced to g0 ^ g1).
  Tensor expand(Tensor g0, Tensor g1, int axis) const;

 private:
  int n_;
  int num_points_;
  std::vector<Tensor> emb_;
  std::vector<SegreLine> lines_;
  std::vector<std::vector<int>> lines_through_;
  std::vector<std::array<std::vector<int>, 3>> sub_points_;  // [axis][level]
  std::vector<std::vector<int>> spreads_;
  // flat tensor indices with the axis bit forced to 0 resp. 1, per rest-index
  std::vector<std::vector<int>> flat0_, flat1_;
};

}  // namespace segrev
