#pragma once

#include <memory>
#include <vector>

#include "segrev/hyperplane.hpp"
#include "segrev/lagrangian.hpp"
#include "segrev/segre.hpp"
#include "segrev/symmetry.hpp"
#include "segrev/veldkamp.hpp"

// One-stop computation of everything the reports and checks need, for
// S_(1) .. S_(n_max).  Construction order: varieties, hyperplane censuses
// (bottom-up, each needing the one below), Veldkamp-line censuses, then the
// enrichment passes (weights, quadric membership, VL provenance).

namespace segrev {

struct Level {
  std::unique_ptr<SegreVariety> variety;
  StabilizerGroup group;
  std::vector<std::vector<Tensor>> action_tables;
  HyperplaneCensus hyperplanes;
  VLCensus vlines;                 // populated for n <= vl_max (default 3)
  OrbitPartition hyperplane_orbits;
  std::vector<int> weights;        // per functional
  QuadraticForm quadric;           // populated for n >= 2
  bool has_quadric = false;
  QuadricCensusReport quadric_report;
};

class Atlas {
 public:
  explicit Atlas(int n_max, int vl_max = 3);

  int n_max() const { return static_cast<int>(levels_.size()) - 1; }
  const Level& level(int n) const { return levels_.at(n); }
  const SegreVariety& variety(int n) const { return *levels_.at(n).variety; }

 private:
  std::vector<Level> levels_;  // index = n; [0] unused
};

}  // namespace segrev
