#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "segrev/segre.hpp"

// Geometric hyperplanes of S_(N): enumeration via linear functionals, the
// hyperplane axiom, per-hyperplane invariants and the type census.

namespace segrev {

struct GeometricHyperplane {
  Tensor functional = 0;     // 0 = extraordinary (full point set)
  BinVector point_set;       // membership mask over point ids
  bool extraordinary() const { return functional == 0; }
};

GeometricHyperplane hyperplane_from_functional(const SegreVariety& v, Tensor f);
GeometricHyperplane extraordinary_hyperplane(const SegreVariety& v);

// True iff s is a proper subset meeting every line in exactly 1 or 3 points.
bool is_geometric_hyperplane(const SegreVariety& v, const BinVector& s);

// Yields the 2^(2^N)-1 ordinary hyperplanes, then the extraordinary one when
// flagged.
void enumerate_hyperplanes(const SegreVariety& v, bool include_extraordinary,
                           const std::function<void(const GeometricHyperplane&)>& visit);

// Number of lines through p fully contained in h; p must lie in h.
int point_order(const SegreVariety& v, const GeometricHyperplane& h, int p);

// The centre of a singular hyperplane: the unique p with
// h = { q : distance(p,q) < N }, if it exists.
std::optional<int> deepest_point(const SegreVariety& v, const GeometricHyperplane& h);

// Everything the census needs about one hyperplane.  sub_types has 3N
// entries in (axis, level) order: -1 = sub-Segre fully inside (deep),
// otherwise the S_(N-1) census type of the intersection.
struct HyperplaneStats {
  int points = 0;
  int lines = 0;
  std::vector<int> order_hist;  // index = order, size N+1
  std::vector<int> sub_types;
};

// Per-type record of the census.  sub_profile keys: 0 = Deep, k > 0 = H_k.
struct HyperplaneType {
  int label = 0;
  int points = 0;
  int lines = 0;
  std::vector<int> order_hist;
  std::map<int, int> sub_profile;
  long long cardinality = 0;
  Tensor representative = 0;
  // filled in by later passes (symmetry / veldkamp):
  int weight = 0;
  bool on_quadric = false;
  std::vector<std::string> vl_types;
};

class HyperplaneCensus {
 public:
  int n = 0;
  std::vector<HyperplaneType> types;          // sorted by label, 1-based labels
  std::vector<std::int16_t> type_of;          // indexed by functional; 0 unused
  long long total = 0;

  int type_of_functional(Tensor f) const { return type_of[f]; }
  const HyperplaneType& type(int label) const { return types[label - 1]; }
  HyperplaneType& type(int label) { return types[label - 1]; }
};

HyperplaneStats analyze_hyperplane(const SegreVariety& v, Tensor f,
                                   const HyperplaneCensus* prev);

// Groups all ordinary hyperplanes by signature and orders types by the
// census rule: descending point count, then order histogram compared from
// the highest order downwards, descending.  prev = census of S_(N-1)
// (null for n = 1, where there are no sub-Segre profiles).
HyperplaneCensus classify_hyperplanes(const SegreVariety& v, const HyperplaneCensus* prev);

// Multiset of sub-Segre intersection types of one hyperplane (key 0 = Deep).
std::map<int, int> sub_segre_profile(const SegreVariety& v, Tensor f,
                                     const HyperplaneCensus& prev);

}  // namespace segrev
