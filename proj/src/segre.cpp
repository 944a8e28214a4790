#include "segrev/segre.hpp"

#include <cassert>
#include <stdexcept>

namespace segrev {

namespace {
int pow3(int n) {
  int r = 1;
  while (n--) r *= 3;
  return r;
}
}  // namespace

SegreVariety::SegreVariety(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("SegreVariety: need n >= 1");
  if (n > 5) throw std::invalid_argument("SegreVariety: tensor word limited to n <= 5");
  num_points_ = pow3(n);
  int dim = 1 << n;

  emb_.resize(num_points_);
  for (int p = 0; p < num_points_; ++p) {
    auto c = coords(p);
    Tensor t = 0;
    for (int m = 0; m < dim; ++m) {
      int bit = 1;
      for (int a = 0; a < n; ++a) {
        int b = (m >> (n - 1 - a)) & 1;  // axis 0 = most significant bit
        bit &= pg1_component(c[a], b);
      }
      if (bit) t |= Tensor{1} << m;
    }
    emb_[p] = t;
  }

  // lines in (free_axis, fixed tuple) lexicographic order
  lines_through_.assign(num_points_, {});
  spreads_.assign(n, {});
  int fixed_count = pow3(n - 1);
  for (int a = 0; a < n; ++a) {
    for (int r = 0; r < fixed_count; ++r) {
      SegreLine ln;
      ln.free_axis = a;
      ln.fixed.resize(n - 1);
      int rr = r;
      for (int k = n - 2; k >= 0; --k) {
        ln.fixed[k] = static_cast<std::uint8_t>(rr % 3);
        rr /= 3;
      }
      for (int v = 0; v < 3; ++v) {
        std::vector<std::uint8_t> c(n);
        for (int k = 0, pos = 0; k < n; ++k)
          c[k] = (k == a) ? static_cast<std::uint8_t>(v) : ln.fixed[pos++];
        ln.points[v] = point_of(c);
      }
      int id = static_cast<int>(lines_.size());
      lines_.push_back(ln);
      spreads_[a].push_back(id);
      for (int v = 0; v < 3; ++v) lines_through_[ln.points[v]].push_back(id);
    }
  }

  sub_points_.resize(n);
  for (int a = 0; a < n; ++a)
    for (int l = 0; l < 3; ++l) sub_points_[a][l].resize(n > 1 ? fixed_count : 1);
  for (int p = 0; p < num_points_; ++p) {
    auto c = coords(p);
    for (int a = 0; a < n; ++a) {
      int rest = 0;
      for (int k = 0; k < n; ++k)
        if (k != a) rest = rest * 3 + c[k];
      sub_points_[a][c[a]][rest] = p;
    }
  }

  flat0_.assign(n, std::vector<int>(dim / 2));
  flat1_.assign(n, std::vector<int>(dim / 2));
  for (int a = 0; a < n; ++a) {
    int axis_bit = 1 << (n - 1 - a);
    for (int r = 0; r < dim / 2; ++r) {
      // interleave the rest-index around the axis bit position
      int high = r >> (n - 1 - a);
      int low = r & (axis_bit - 1);
      int base = (high << (n - a)) | low;
      flat0_[a][r] = base;
      flat1_[a][r] = base | axis_bit;
    }
  }
}

std::vector<std::uint8_t> SegreVariety::coords(int point) const {
  std::vector<std::uint8_t> c(n_);
  for (int k = n_ - 1; k >= 0; --k) {
    c[k] = static_cast<std::uint8_t>(point % 3);
    point /= 3;
  }
  return c;
}

int SegreVariety::point_of(const std::vector<std::uint8_t>& c) const {
  assert(static_cast<int>(c.size()) == n_);
  int p = 0;
  for (int k = 0; k < n_; ++k) p = p * 3 + c[k];
  return p;
}

BinVector SegreVariety::embed_vector(int point) const {
  return BinVector(std::size_t{1} << n_, emb_[point]);
}

int SegreVariety::distance(int p, int q) const {
  auto a = coords(p), b = coords(q);
  int d = 0;
  for (int k = 0; k < n_; ++k) d += a[k] != b[k];
  return d;
}

Tensor SegreVariety::contract(Tensor f, int axis, int level) const {
  // Restricting to coords[axis] == level pairs f with the PG(1,2) vector of
  // that level: g[r] = f[bit=0,r]*v[0] + f[bit=1,r]*v[1].
  const auto& i0 = flat0_[axis];
  const auto& i1 = flat1_[axis];
  Tensor g = 0;
  for (std::size_t r = 0; r < i0.size(); ++r) {
    int b0 = (f >> i0[r]) & 1;
    int b1 = (f >> i1[r]) & 1;
    int v = pg1_component(level, 0) * b0 ^ pg1_component(level, 1) * b1;
    if (v) g |= Tensor{1} << r;
  }
  return g;
}

Tensor SegreVariety::expand(Tensor g0, Tensor g1, int axis) const {
  // contract(.,axis,0) reads the bit-1 slice and contract(.,axis,1) the
  // bit-0 slice (levels 0 and 1 embed as (0,1) and (1,0)).
  const auto& i0 = flat0_[axis];
  const auto& i1 = flat1_[axis];
  Tensor f = 0;
  for (std::size_t r = 0; r < i0.size(); ++r) {
    if ((g1 >> r) & 1) f |= Tensor{1} << i0[r];
    if ((g0 >> r) & 1) f |= Tensor{1} << i1[r];
  }
  return f;
}

}  // namespace segrev
