#include "segrev/lagrangian.hpp"

#include <set>
#include <stdexcept>

namespace segrev {

BinMatrix symplectic_gram(int n) {
  BinMatrix g(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    g.set(i, n + i, true);
    g.set(n + i, i, true);
  }
  return g;
}

bool is_totally_isotropic(const BinMatrix& basis) {
  int n = static_cast<int>(basis.rows());
  if (basis.cols() != static_cast<std::size_t>(2 * n)) return false;
  // <r_s, r_t> = a_s.b_t + b_s.a_t = 0 for all s,t <=> A B^T symmetric
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      bool st = false, ts = false;
      for (int j = 0; j < n; ++j) {
        st ^= basis.get(s, j) && basis.get(t, n + j);
        ts ^= basis.get(t, j) && basis.get(s, n + j);
      }
      if (st != ts) return false;
    }
  return true;
}

std::vector<BinMatrix> enumerate_generators(int n) {
  std::vector<BinMatrix> out;
  enumerate_k_subspaces(2 * n, n, [&](const BinMatrix& m) {
    if (is_totally_isotropic(m)) out.push_back(m);
  });
  return out;
}

unsigned long long generator_count(int n) {
  unsigned long long c = 1;
  for (int i = 1; i <= n; ++i) c *= (1ull << i) + 1;
  return c;
}

Tensor spinor_image(const BinMatrix& basis) {
  int n = static_cast<int>(basis.rows());
  Tensor image = 0;
  for (int subset = 0; subset < (1 << n); ++subset) {
    BinMatrix m(n, n);
    for (int j = 0; j < n; ++j) {
      bool replace = (subset >> (n - 1 - j)) & 1;  // column 0 = msb
      int src = replace ? n + j : j;
      for (int s = 0; s < n; ++s) m.set(s, j, basis.get(s, src));
    }
    if (det(m)) image |= Tensor{1} << subset;
  }
  if (image == 0) throw std::runtime_error("spinor_image: zero image (pure-spinor defect)");
  return image;
}

LgrReport lgr_census(int n, const HyperplaneCensus& census, const QuadraticForm& quadric) {
  LgrReport rep;
  rep.n = n;
  rep.all_on_quadric = true;
  std::set<Tensor> distinct;
  for (const auto& gen : enumerate_generators(n)) {
    Tensor f = spinor_image(gen);
    ++rep.generator_count;
    distinct.insert(f);
    if (quadric.eval(f)) rep.all_on_quadric = false;
    ++rep.type_histogram[census.type_of_functional(f)];
  }
  rep.image_distinct = static_cast<long long>(distinct.size());
  rep.injective = rep.image_distinct == rep.generator_count;
  return rep;
}

}  // namespace segrev
