#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace skewfib {

// Dense row-major matrix with 64-bit integer entries. The matrices handled
// here are tiny (q <= 4096) and their entries stay in {-1, 0, 1}, so density
// keeps the exact verifiers simple.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMat identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  std::int64_t operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const IntMat& other) const = default;

  bool is_zero() const {
    for (auto v : data_)
      if (v != 0) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

IntMat transpose(const IntMat& a);
IntMat mul(const IntMat& a, const IntMat& b);

/// aᵗ·b without materializing the transpose. Skips zero entries, so signed
/// permutation inputs cost O(rows·cols) instead of O(rows·cols²).
IntMat mul_transpose_left(const IntMat& a, const IntMat& b);

IntMat add(const IntMat& a, const IntMat& b);
IntMat negate(const IntMat& a);

/// Kronecker product; entry ((i·br+s), (j·bc+t)) = a(i,j)·b(s,t).
IntMat kron(const IntMat& a, const IntMat& b);

/// Block-diagonal sum of `copies` copies of m.
IntMat block_diag(const IntMat& m, std::size_t copies);

bool is_identity(const IntMat& a);

/// Exactly one nonzero per row and per column, each in {-1, 1}.
bool is_signed_permutation(const IntMat& a);

}  // namespace skewfib
