#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "segrev/hyperplane.hpp"
#include "segrev/segre.hpp"

// The stabilizer of S_(N) inside PGL(2^N,2): local GL(2,2) actions per
// tensor factor plus factor permutations.  Orbit partitions, tensor weight,
// and the unique invariant hyperbolic quadric.

namespace segrev {

struct StabilizerGroup {
  int n = 0;
  std::vector<BinMatrix> generators;  // 2^N x 2^N point actions
};

StabilizerGroup stabilizer_generators(int n);

// Order of the generated matrix group by exhaustive closure (small n only).
unsigned long long group_order(const StabilizerGroup& g);

// The permutation of point ids induced by a generator; throws if the matrix
// does not map embedded points onto embedded points.
std::vector<int> point_permutation(const SegreVariety& v, const BinMatrix& g);

// Per-generator lookup tables of the induced action on functionals (the
// contragredient f -> f . g^-1, so hyperplane membership is equivariant).
std::vector<std::vector<Tensor>> functional_action_tables(const SegreVariety& v,
                                                          const StabilizerGroup& g);

// Orbit id per nonzero functional (entry 0 unused, ids 1-based), plus sizes.
struct OrbitPartition {
  std::vector<int> orbit_of;
  std::vector<long long> sizes;          // index = orbit id - 1
  std::vector<Tensor> representatives;   // minimum member per orbit
};
OrbitPartition orbit_partition_functionals(const std::vector<std::vector<Tensor>>& tables);

// Minimum number of rank-one tensors summing to each functional, by layered
// closure over the 3^N embedded points; weight[0] = 0.
std::vector<int> tensor_weights(const SegreVariety& v);
int tensor_weight(const SegreVariety& v, Tensor f);

// Quadratic form on GF(2)^dim, upper-triangular coefficients.
class QuadraticForm {
 public:
  QuadraticForm() = default;
  QuadraticForm(int dim, BinVector coeffs) : dim_(dim), coeffs_(std::move(coeffs)) {}
  static QuadraticForm zero(int dim) {
    return {dim, BinVector(static_cast<std::size_t>(dim) * (dim + 1) / 2)};
  }

  int dim() const { return dim_; }
  const BinVector& coeffs() const { return coeffs_; }
  std::size_t index(int i, int j) const {  // i <= j
    return static_cast<std::size_t>(i) * dim_ - static_cast<std::size_t>(i) * (i - 1) / 2 + (j - i);
  }
  bool coeff(int i, int j) const { return coeffs_.get(index(i, j)); }
  void set_coeff(int i, int j, bool b) { coeffs_.set(index(i, j), b); }

  bool eval(Tensor x) const;
  QuadraticForm composed_with(const BinMatrix& g) const;  // x -> Q(g x)
  long long projective_zero_count() const;  // nonzero vectors with Q = 0

  bool operator==(const QuadraticForm&) const = default;

 private:
  int dim_ = 0;
  BinVector coeffs_;
};

// The unique nonzero quadratic form vanishing on every embedded Segre point
// and fixed by every stabilizer generator; throws if the fixed space does
// not have dimension one.
QuadraticForm invariant_quadric(const SegreVariety& v, const StabilizerGroup& g);

// Closed-form candidate: sum over complementary index pairs x_I * x_Ibar.
QuadraticForm complementary_pairs_form(int n);

struct QuadricCensusReport {
  long long quadric_points = 0;            // projective zeros of the form
  std::vector<int> types_on_quadric;       // labels, ascending
  std::map<int, long long> per_type_counts;
  bool split_defect = false;               // a type with members on both sides
};
QuadricCensusReport quadric_census(const QuadraticForm& q, const HyperplaneCensus& census);

// Veldkamp sums of singular-hyperplane pairs, bucketed by deepest-point
// distance.  rule_holds covers distances 2..N -> types 2..N.
struct WeightDistanceReport {
  std::map<int, int> type_by_distance;  // distance -> resulting type (uniform)
  bool uniform = true;                  // each distance yields a single type
  bool rule_holds = false;
};
WeightDistanceReport weight_distance_rule(const SegreVariety& v,
                                          const HyperplaneCensus& census);

}  // namespace segrev
