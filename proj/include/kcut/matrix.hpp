#ifndef KCUT_MATRIX_HPP
#define KCUT_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace kcut {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  std::int64_t operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  static IntMatrix identity(std::size_t n);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

struct MatmulOptions {
  /// Strassen recursion is used while the padded dimension exceeds this.
  std::size_t strassen_threshold = 256;
};

IntMatrix matmul_cubic(const IntMatrix& a, const IntMatrix& b);
IntMatrix matmul_strassen(const IntMatrix& a, const IntMatrix& b,
                          std::size_t leaf_size);

/// Exact product; Strassen when the largest dimension exceeds the threshold,
/// the classical triple loop otherwise. Both paths agree entrywise.
IntMatrix matmul(const IntMatrix& a, const IntMatrix& b,
                 const MatmulOptions& options = {});

}  // namespace kcut

#endif  // KCUT_MATRIX_HPP
