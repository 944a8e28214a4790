#pragma once

#include <map>
#include <vector>

#include "segrev/gf2.hpp"
#include "segrev/hyperplane.hpp"
#include "segrev/symmetry.hpp"

// Generators (maximal totally isotropic subspaces) of the symplectic polar
// space W(2n-1,2) and their spinor images in PG(2^n-1,2).

namespace segrev {

// Symplectic basis e_1..e_n, f_1..f_n with <e_i, f_j> = delta_ij; a subspace
// basis is an n x 2n reduced-echelon matrix in blocks [A | B].
BinMatrix symplectic_gram(int n);
bool is_totally_isotropic(const BinMatrix& basis);

// All generators, as canonical reduced-echelon matrices; count = prod (2^i+1).
std::vector<BinMatrix> enumerate_generators(int n);
unsigned long long generator_count(int n);

// Coordinate at subset T of {columns}: det of A with the columns indexed by
// T replaced by the corresponding columns of B.  Subset bits follow the
// Segre tensor convention (column 0 owns the most significant bit).
Tensor spinor_image(const BinMatrix& basis);

struct LgrReport {
  int n = 0;
  long long generator_count = 0;
  long long image_distinct = 0;
  bool injective = false;
  bool all_on_quadric = false;
  std::map<int, long long> type_histogram;  // hyperplane type -> count
};

LgrReport lgr_census(int n, const HyperplaneCensus& census, const QuadraticForm& quadric);

}  // namespace segrev
