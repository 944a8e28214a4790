#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "segrev/hyperplane.hpp"
#include "segrev/segre.hpp"

// Veldkamp lines of S_(N): construction, classification into orbit types,
// and the blow-up/projection correspondence with hyperplanes of S_(N+1).

namespace segrev {

// Members stored canonically in ascending order.  Ordinary: three distinct
// nonzero functionals XOR-ing to zero.  Extraordinary: {0, f, f}.
struct VeldkampLine {
  std::array<Tensor, 3> members{};
  bool extraordinary() const { return members[0] == 0; }
  bool operator==(const VeldkampLine&) const = default;
};

VeldkampLine line_through(Tensor a, Tensor b);  // a, b nonzero
VeldkampLine canonical_line(std::array<Tensor, 3> members);
std::uint64_t vl_key(const VeldkampLine& vl);

// Complement of the symmetric difference; extraordinary when h1 == h2.
GeometricHyperplane veldkamp_sum(const SegreVariety& v, const GeometricHyperplane& h1,
                                 const GeometricHyperplane& h2);

enum class VLKind { kOrdinary, kExtraordinary, kBoth };
void enumerate_veldkamp_lines(const SegreVariety& v, VLKind kind,
                              const std::function<void(const VeldkampLine&)>& visit);

// --- blow-up / projection -------------------------------------------------

// Which member of the line occupies each of the three levels of the new axis.
struct BlowUpAssignment {
  int axis = 0;
  std::array<int, 3> member_of_level{};  // indices into VeldkampLine::members
};

// All valid assignments: 6 for an ordinary line, 3 for an extraordinary one
// (the deep layer must receive the extraordinary member).
std::vector<BlowUpAssignment> blow_up_assignments(const VeldkampLine& vl, int axis);

// big is S_(N); vl is a Veldkamp line of S_(N-1).  Returns the functional of
// the hyperplane whose layer at each level of the axis is the assigned member.
Tensor blow_up(const SegreVariety& big, const VeldkampLine& vl, const BlowUpAssignment& a);

// Layer functionals of h restricted to levels 0,1,2 of the axis.
std::array<Tensor, 3> project_layers(const SegreVariety& big, Tensor f, int axis);
VeldkampLine project_hyperplane(const SegreVariety& big, Tensor f, int axis);

// --- census -----------------------------------------------------------------

enum class CorePattern { kNA, kDisjoint, kConcurrent, kMixed };
std::string to_string(CorePattern p);

struct VLSignature {
  int core_points = 0;
  int core_lines = 0;
  CorePattern pattern = CorePattern::kNA;
  std::map<int, int> composition;  // member hyperplane type -> count
};

VLSignature vl_signature(const SegreVariety& v, const HyperplaneCensus& census,
                         const VeldkampLine& vl);

struct VLType {
  int label = 0;
  VLSignature signature;
  long long cardinality = 0;
  VeldkampLine representative;
  bool ambiguous_label = false;  // tie broken beyond printed invariants
};

struct VLCensus {
  int n = 0;
  std::vector<VLType> types;
  std::unordered_map<std::uint64_t, int> type_of;  // key -> label, ordinary lines
  long long total = 0;

  int type_of_line(const VeldkampLine& vl) const {
    auto it = type_of.find(vl_key(vl));
    return it == type_of.end() ? 0 : it->second;
  }
};

// Orbit classification of the ordinary Veldkamp lines under the stabilizer
// (functional action tables from the symmetry module).  Type order: core
// points desc, core lines desc, composition desc-lex, disjoint before
// concurrent before mixed, cardinality asc; a residual tie is broken by the
// signature of a blown-up representative and flagged ambiguous.
VLCensus classify_veldkamp_lines(const SegreVariety& v, const HyperplaneCensus& census,
                                 const std::vector<std::vector<Tensor>>& action_tables);

// --- provenance & structure -------------------------------------------------

std::string roman_numeral(int k);

// For each hyperplane of S_(N) and each axis, classifies the projected
// Veldkamp line of S_(N-1); returns per-type label sets ("7" ordinary,
// "II" extraordinary of a type-2 repeated member).
std::map<int, std::set<std::string>> vl_provenance(const SegreVariety& big,
                                                   const HyperplaneCensus& big_census,
                                                   const HyperplaneCensus& small_census,
                                                   const VLCensus& small_vl_census);

// ord-V(S_(N)) is PG(2^N-1,2): functional -> point set injective, and the
// Veldkamp sum of point sets matches XOR of functionals (exhaustive pairwise
// check for n <= 3, injectivity plus sampled pairs for n = 4).
bool verify_pg_structure(const SegreVariety& v);

}  // namespace segrev
