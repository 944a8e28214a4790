#include "segrev/gf2.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace segrev {

bool BinVector::dot(const BinVector& o) const {
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
  return std::popcount(acc) & 1;
}

bool BinVector::is_zero() const {
  for (auto w : w_)
    if (w) return false;
  return true;
}

std::size_t BinVector::count() const {
  std::size_t c = 0;
  for (auto w : w_) c += std::popcount(w);
  return c;
}

int BinVector::lowest_set() const {
  for (std::size_t k = 0; k < w_.size(); ++k)
    if (w_[k]) return static_cast<int>(k * 64 + std::countr_zero(w_[k]));
  return -1;
}

BinMatrix BinMatrix::identity(std::size_t n) {
  BinMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BinMatrix BinMatrix::transposed() const {
  BinMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (get(i, j)) t.set(j, i, true);
  return t;
}

BinMatrix BinMatrix::operator*(const BinMatrix& o) const {
  assert(cols_ == o.rows_);
  BinMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (get(i, k)) out.r_[i] ^= o.r_[k];
  return out;
}

BinVector BinMatrix::apply(const BinVector& x) const {
  assert(cols_ == x.size());
  BinVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) y.set(i, r_[i].dot(x));
  return y;
}

BinMatrix BinMatrix::rref() const {
  std::vector<BinVector> rows = r_;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols_ && pivot_row < rows.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows.size() && !rows[sel].get(col)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pivot_row], rows[sel]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != pivot_row && rows[i].get(col)) rows[i] ^= rows[pivot_row];
    ++pivot_row;
  }
  BinMatrix out(pivot_row, cols_);
  for (std::size_t i = 0; i < pivot_row; ++i) out.r_[i] = rows[i];
  return out;
}

BinMatrix BinMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse: matrix not square");
  std::size_t n = rows_;
  BinMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, get(i, j));
    aug.set(i, n + i, true);
  }
  BinMatrix red = aug.rref();
  if (red.rows() != n) throw std::invalid_argument("inverse: matrix singular");
  BinMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.set(i, j, red.get(i, n + j));
  return inv;
}

int rank(const BinMatrix& m) { return static_cast<int>(m.rref().rows()); }

std::vector<BinVector> kernel_basis(const BinMatrix& m) {
  BinMatrix r = m.rref();
  std::size_t n = m.cols();
  std::vector<int> pivot_of_col(n, -1);
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    int p = r.row(i).lowest_set();
    pivot_of_col[p] = static_cast<int>(i);
    pivots.push_back(static_cast<std::size_t>(p));
  }
  std::vector<BinVector> basis;
  for (std::size_t j = 0; j < n; ++j) {
    if (pivot_of_col[j] >= 0) continue;
    BinVector x(n);
    x.set(j, true);
    for (std::size_t i = 0; i < r.rows(); ++i)
      if (r.get(i, j)) x.set(pivots[i], true);
    basis.push_back(std::move(x));
  }
  return basis;
}

bool det(const BinMatrix& m) {
  assert(m.rows() == m.cols());
  return m.rref().rows() == m.rows();
}

unsigned long long gaussian_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  // product formula over GF(2): prod_i (2^(n-i)-1)/(2^(k-i)-1)
  unsigned long long num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= (1ull << (n - i)) - 1;
    den *= (1ull << (k - i)) - 1;
  }
  return num / den;
}

void enumerate_k_subspaces(int n, int k,
                           const std::function<void(const BinMatrix&)>& visit) {
  if (k < 0 || k > n) throw std::invalid_argument("enumerate_k_subspaces: need 0 <= k <= n");
  if (k == 0) {
    visit(BinMatrix(0, n));
    return;
  }
  std::vector<int> piv(k);
  for (int i = 0; i < k; ++i) piv[i] = i;
  for (;;) {
    std::vector<bool> is_pivot(n, false);
    for (int p : piv) is_pivot[p] = true;
    // free slots: (row i, non-pivot column j) with j > piv[i]
    std::vector<std::pair<int, int>> free_slots;
    for (int i = 0; i < k; ++i)
      for (int j = piv[i] + 1; j < n; ++j)
        if (!is_pivot[j]) free_slots.emplace_back(i, j);
    std::uint64_t combos = std::uint64_t{1} << free_slots.size();
    for (std::uint64_t bits = 0; bits < combos; ++bits) {
      BinMatrix m(k, n);
      for (int i = 0; i < k; ++i) m.set(i, piv[i], true);
      for (std::size_t s = 0; s < free_slots.size(); ++s)
        if ((bits >> s) & 1) m.set(free_slots[s].first, free_slots[s].second, true);
      visit(m);
    }
    // next pivot combination, lexicographic
    int i = k - 1;
    while (i >= 0 && piv[i] == n - k + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
}

}  // namespace segrev
