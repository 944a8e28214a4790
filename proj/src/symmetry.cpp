#include "segrev/symmetry.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace segrev {

namespace {

// Tensor-factor action: 2x2 matrix m on slot `axis`, identity elsewhere.
BinMatrix local_action(int n, int axis, const std::array<std::array<int, 2>, 2>& m) {
  int dim = 1 << n;
  int bitpos = n - 1 - axis;
  BinMatrix g(dim, dim);
  for (int col = 0; col < dim; ++col) {
    int b = (col >> bitpos) & 1;
    for (int bo = 0; bo < 2; ++bo)
      if (m[bo][b]) g.set((col & ~(1 << bitpos)) | (bo << bitpos), col, true);
  }
  return g;
}

// Factor permutation pi: image coords c'[k] = c[pi[k]].
BinMatrix permutation_action(int n, const std::vector<int>& pi) {
  int dim = 1 << n;
  BinMatrix g(dim, dim);
  for (int col = 0; col < dim; ++col) {
    int row = 0;
    for (int k = 0; k < n; ++k) {
      int b = (col >> (n - 1 - pi[k])) & 1;
      row |= b << (n - 1 - k);
    }
    g.set(row, col, true);
  }
  return g;
}

std::string matrix_key(const BinMatrix& m) {
  std::string key;
  key.reserve(m.rows() * 4);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::uint32_t w = static_cast<std::uint32_t>(m.row(i).low_word());
    key.append(reinterpret_cast<const char*>(&w), 4);
  }
  return key;
}

}  // namespace

StabilizerGroup stabilizer_generators(int n) {
  if (n < 1) throw std::invalid_argument("stabilizer_generators: need n >= 1");
  StabilizerGroup g;
  g.n = n;
  const std::array<std::array<int, 2>, 2> swap01{{{0, 1}, {1, 0}}};
  const std::array<std::array<int, 2>, 2> shear{{{1, 1}, {0, 1}}};
  for (int a = 0; a < n; ++a) {
    g.generators.push_back(local_action(n, a, swap01));
    g.generators.push_back(local_action(n, a, shear));
  }
  if (n >= 2) {
    std::vector<int> transpose(n);
    std::iota(transpose.begin(), transpose.end(), 0);
    std::swap(transpose[0], transpose[1]);
    g.generators.push_back(permutation_action(n, transpose));
    if (n >= 3) {
      std::vector<int> cycle(n);
      for (int k = 0; k < n; ++k) cycle[k] = (k + 1) % n;
      g.generators.push_back(permutation_action(n, cycle));
    }
  }
  return g;
}

unsigned long long group_order(const StabilizerGroup& g) {
  std::unordered_set<std::string> seen;
  std::vector<BinMatrix> frontier{BinMatrix::identity(std::size_t{1} << g.n)};
  seen.insert(matrix_key(frontier[0]));
  while (!frontier.empty()) {
    std::vector<BinMatrix> next;
    for (const auto& m : frontier)
      for (const auto& gen : g.generators) {
        BinMatrix prod = gen * m;
        if (seen.insert(matrix_key(prod)).second) next.push_back(std::move(prod));
      }
    frontier = std::move(next);
  }
  return seen.size();
}

std::vector<int> point_permutation(const SegreVariety& v, const BinMatrix& g) {
  std::unordered_map<Tensor, int> point_of_emb;
  for (int p = 0; p < v.num_points(); ++p) point_of_emb[v.embed(p)] = p;
  std::vector<int> perm(v.num_points());
  for (int p = 0; p < v.num_points(); ++p) {
    BinVector img = g.apply(v.embed_vector(p));
    auto it = point_of_emb.find(static_cast<Tensor>(img.low_word()));
    if (it == point_of_emb.end())
      throw std::invalid_argument("point_permutation: matrix does not preserve the Segre point set");
    perm[p] = it->second;
  }
  return perm;
}

std::vector<std::vector<Tensor>> functional_action_tables(const SegreVariety& v,
                                                          const StabilizerGroup& g) {
  int dim = 1 << v.n();
  std::vector<std::vector<Tensor>> tables;
  tables.reserve(g.generators.size());
  for (const auto& gen : g.generators) {
    BinMatrix inv = gen.inverse();
    // f -> f . g^-1; row i of g^-1 tells where basis functional e_i goes
    std::vector<Tensor> rowmask(dim, 0);
    for (int i = 0; i < dim; ++i)
      rowmask[i] = static_cast<Tensor>(inv.row(i).low_word());
    std::vector<Tensor> table(std::size_t{1} << dim, 0);
    for (std::uint64_t f = 1; f < table.size(); ++f)
      table[f] = table[f & (f - 1)] ^ rowmask[std::countr_zero(f)];
    tables.push_back(std::move(table));
  }
  return tables;
}

OrbitPartition orbit_partition_functionals(const std::vector<std::vector<Tensor>>& tables) {
  std::size_t space = tables.at(0).size();
  OrbitPartition part;
  part.orbit_of.assign(space, 0);
  for (Tensor f = 1; f < space; ++f) {
    if (part.orbit_of[f]) continue;
    int id = static_cast<int>(part.sizes.size()) + 1;
    long long size = 0;
    std::vector<Tensor> stack{f};
    part.orbit_of[f] = id;
    while (!stack.empty()) {
      Tensor x = stack.back();
      stack.pop_back();
      ++size;
      for (const auto& t : tables) {
        Tensor y = t[x];
        if (!part.orbit_of[y]) {
          part.orbit_of[y] = id;
          stack.push_back(y);
        }
      }
    }
    part.sizes.push_back(size);
    part.representatives.push_back(f);
  }
  return part;
}

std::vector<int> tensor_weights(const SegreVariety& v) {
  std::size_t space = std::size_t{1} << (1 << v.n());
  std::vector<int> weight(space, -1);
  weight[0] = 0;
  std::vector<Tensor> frontier{0};
  int layer = 0;
  while (!frontier.empty()) {
    ++layer;
    std::vector<Tensor> next;
    for (Tensor f : frontier)
      for (int p = 0; p < v.num_points(); ++p) {
        Tensor g = f ^ v.embed(p);
        if (weight[g] < 0) {
          weight[g] = layer;
          next.push_back(g);
        }
      }
    frontier = std::move(next);
  }
  return weight;
}

int tensor_weight(const SegreVariety& v, Tensor f) {
  if (f == 0) throw std::invalid_argument("tensor_weight: zero functional");
  static thread_local std::unordered_map<int, std::vector<int>> cache;
  auto it = cache.find(v.n());
  if (it == cache.end()) it = cache.emplace(v.n(), tensor_weights(v)).first;
  return it->second[f];
}

bool QuadraticForm::eval(Tensor x) const {
  bool acc = false;
  for (int i = 0; i < dim_; ++i) {
    if (!((x >> i) & 1)) continue;
    for (int j = i; j < dim_; ++j)
      if ((x >> j) & 1) acc ^= coeff(i, j);
  }
  return acc;
}

QuadraticForm QuadraticForm::composed_with(const BinMatrix& g) const {
  // Q(g e_k) gives diagonal coefficients; polarization gives the rest.
  auto col = [&](int k) {
    Tensor c = 0;
    for (int i = 0; i < dim_; ++i)
      if (g.get(i, k)) c |= Tensor{1} << i;
    return c;
  };
  QuadraticForm out = QuadraticForm::zero(dim_);
  std::vector<Tensor> cols(dim_);
  std::vector<bool> diag(dim_);
  for (int k = 0; k < dim_; ++k) {
    cols[k] = col(k);
    diag[k] = eval(cols[k]);
    out.set_coeff(k, k, diag[k]);
  }
  for (int k = 0; k < dim_; ++k)
    for (int l = k + 1; l < dim_; ++l)
      out.set_coeff(k, l, eval(cols[k] ^ cols[l]) ^ diag[k] ^ diag[l]);
  return out;
}

long long QuadraticForm::projective_zero_count() const {
  long long count = 0;
  std::uint64_t space = std::uint64_t{1} << dim_;
  for (std::uint64_t x = 1; x < space; ++x)
    if (!eval(static_cast<Tensor>(x))) ++count;
  return count;
}

QuadraticForm invariant_quadric(const SegreVariety& v, const StabilizerGroup& g) {
  int dim = 1 << v.n();
  std::size_t ncoeff = static_cast<std::size_t>(dim) * (dim + 1) / 2;
  std::vector<BinVector> rows;

  // vanish on every embedded point
  for (int p = 0; p < v.num_points(); ++p) {
    Tensor x = v.embed(p);
    BinVector row(ncoeff);
    QuadraticForm idx = QuadraticForm::zero(dim);
    for (int i = 0; i < dim; ++i) {
      if (!((x >> i) & 1)) continue;
      for (int j = i; j < dim; ++j)
        if ((x >> j) & 1) row.flip(idx.index(i, j));
    }
    rows.push_back(std::move(row));
  }
  // fixed as a function by every generator: coeffs(Q o g) + coeffs(Q) = 0,
  // expressed via the images of the coefficient basis forms
  for (const auto& gen : g.generators) {
    std::vector<BinVector> basis_images;
    basis_images.reserve(ncoeff);
    for (std::size_t c = 0; c < ncoeff; ++c) {
      QuadraticForm e = QuadraticForm::zero(dim);
      BinVector coeffs(ncoeff);
      coeffs.set(c, true);
      e = QuadraticForm(dim, coeffs);
      basis_images.push_back(e.composed_with(gen).coeffs());
    }
    for (std::size_t r = 0; r < ncoeff; ++r) {
      BinVector row(ncoeff);
      for (std::size_t c = 0; c < ncoeff; ++c)
        if (basis_images[c].get(r)) row.flip(c);
      row.flip(r);  // subtract identity
      rows.push_back(std::move(row));
    }
  }

  BinMatrix conditions(rows.size(), ncoeff);
  for (std::size_t i = 0; i < rows.size(); ++i) conditions.row(i) = rows[i];
  std::vector<BinVector> kernel = kernel_basis(conditions);
  if (kernel.size() != 1)
    throw std::runtime_error("invariant_quadric: fixed space has dimension " +
                             std::to_string(kernel.size()) + ", expected 1");
  return {dim, kernel.front()};
}

QuadraticForm complementary_pairs_form(int n) {
  int dim = 1 << n;
  QuadraticForm q = QuadraticForm::zero(dim);
  for (int i = 0; i < dim; ++i) {
    int j = ~i & (dim - 1);
    if (i < j) q.set_coeff(i, j, true);
  }
  return q;
}

QuadricCensusReport quadric_census(const QuadraticForm& q, const HyperplaneCensus& census) {
  QuadricCensusReport rep;
  rep.quadric_points = q.projective_zero_count();
  std::map<int, std::pair<long long, long long>> on_off;
  for (Tensor f = 1; f < census.type_of.size(); ++f) {
    auto& [on, off] = on_off[census.type_of[f]];
    (q.eval(f) ? off : on)++;
  }
  for (const auto& [label, counts] : on_off) {
    if (counts.first && counts.second) rep.split_defect = true;
    if (counts.first && !counts.second) {
      rep.types_on_quadric.push_back(label);
      rep.per_type_counts[label] = counts.first;
    }
  }
  return rep;
}

WeightDistanceReport weight_distance_rule(const SegreVariety& v,
                                          const HyperplaneCensus& census) {
  WeightDistanceReport rep;
  // rank-one functionals are exactly the embedded points; deepest point of
  // the hyperplane of embed(p) need not be p, so recover centres explicitly
  std::vector<std::pair<int, Tensor>> singular;  // (deepest point, functional)
  for (int p = 0; p < v.num_points(); ++p) {
    auto h = hyperplane_from_functional(v, v.embed(p));
    auto dp = deepest_point(v, h);
    if (!dp) throw std::runtime_error("weight_distance_rule: rank-one functional not singular");
    singular.emplace_back(*dp, v.embed(p));
  }
  for (std::size_t i = 0; i < singular.size(); ++i)
    for (std::size_t j = i + 1; j < singular.size(); ++j) {
      int dist = v.distance(singular[i].first, singular[j].first);
      int type = census.type_of_functional(singular[i].second ^ singular[j].second);
      auto [it, inserted] = rep.type_by_distance.emplace(dist, type);
      if (!inserted && it->second != type) rep.uniform = false;
    }
  rep.rule_holds = rep.uniform;
  for (int d = 2; d <= v.n(); ++d)
    rep.rule_holds = rep.rule_holds && rep.type_by_distance.count(d) &&
                     rep.type_by_distance.at(d) == d;
  return rep;
}

}  // namespace segrev
