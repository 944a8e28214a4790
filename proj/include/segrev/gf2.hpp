#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

// Dense GF(2) linear algebra: bit-packed vectors and matrices, rank/kernel,
// and canonical enumeration of subspaces by reduced-echelon representatives.

namespace segrev {

class BinVector {
 public:
  BinVector() = default;
  explicit BinVector(std::size_t len) : len_(len), w_((len + 63) / 64, 0) {}
  BinVector(std::size_t len, std::uint64_t low_bits) : BinVector(len) {
    if (!w_.empty()) w_[0] = low_bits & low_mask(len < 64 ? len : 64);
  }
  static BinVector from_bits(std::initializer_list<int> bits) {
    BinVector v(bits.size());
    std::size_t i = 0;
    for (int b : bits) v.set(i++, b != 0);
    return v;
  }

  std::size_t size() const { return len_; }
  bool get(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool b) {
    std::uint64_t m = std::uint64_t{1} << (i % 64);
    if (b) w_[i / 64] |= m; else w_[i / 64] &= ~m;
  }
  void flip(std::size_t i) { w_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  BinVector& operator^=(const BinVector& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
  }
  friend BinVector operator^(BinVector a, const BinVector& b) { return a ^= b; }
  BinVector& operator&=(const BinVector& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  friend BinVector operator&(BinVector a, const BinVector& b) { return a &= b; }

  bool dot(const BinVector& o) const;  // parity of componentwise AND
  bool is_zero() const;
  std::size_t count() const;  // population count
  int lowest_set() const;     // -1 if zero

  std::uint64_t low_word() const { return w_.empty() ? 0 : w_[0]; }

  bool operator==(const BinVector&) const = default;
  bool operator<(const BinVector& o) const {
    if (len_ != o.len_) return len_ < o.len_;
    return w_ < o.w_;
  }

 private:
  static std::uint64_t low_mask(std::size_t bits) {
    return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
  }
  std::size_t len_ = 0;
  std::vector<std::uint64_t> w_;
};

class BinMatrix {
 public:
  BinMatrix() = default;
  BinMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), r_(rows, BinVector(cols)) {}
  static BinMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t i, std::size_t j) const { return r_[i].get(j); }
  void set(std::size_t i, std::size_t j, bool b) { r_[i].set(j, b); }
  BinVector& row(std::size_t i) { return r_[i]; }
  const BinVector& row(std::size_t i) const { return r_[i]; }

  BinMatrix transposed() const;
  BinMatrix operator*(const BinMatrix& o) const;
  BinVector apply(const BinVector& x) const;  // matrix * column vector
  BinMatrix rref() const;                     // reduced row-echelon, zero rows dropped
  BinMatrix inverse() const;                  // square, full rank required

  bool operator==(const BinMatrix&) const = default;
  bool operator<(const BinMatrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    return r_ < o.r_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BinVector> r_;
};

int rank(const BinMatrix& m);
std::vector<BinVector> kernel_basis(const BinMatrix& m);
bool det(const BinMatrix& m);  // determinant over GF(2) (square matrix)

// Number of k-dimensional subspaces of GF(2)^n.
unsigned long long gaussian_binomial(int n, int k);

// Visits every k-dimensional subspace of GF(2)^n exactly once, as its
// canonical reduced-echelon basis matrix (pivot columns leftmost-first).
void enumerate_k_subspaces(int n, int k,
                           const std::function<void(const BinMatrix&)>& visit);

}  // namespace segrev
