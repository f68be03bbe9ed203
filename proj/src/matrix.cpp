#include "kcut/matrix.hpp"

#include <algorithm>

#include "kcut/error.hpp"

namespace kcut {
namespace {

using Square = std::vector<std::int64_t>;

void check_dims(const IntMatrix& a, const IntMatrix& b) {
  require(a.cols() == b.rows(), ErrorKind::kInvalidArgument,
          "matrix dimension mismatch");
}

Square add(const Square& x, const Square& y) {
  Square out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return out;
}

Square sub(const Square& x, const Square& y) {
  Square out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
  return out;
}

Square multiply_leaf(const Square& x, const Square& y, std::size_t n) {
  Square out(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t xik = x[i * n + k];
      if (xik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] += xik * y[k * n + j];
    }
  }
  return out;
}

Square quadrant(const Square& x, std::size_t n, int qr, int qc) {
  const std::size_t h = n / 2;
  Square out(h * h);
  for (std::size_t i = 0; i < h; ++i) {
    std::copy_n(x.begin() + (i + qr * h) * n + qc * h, h,
                out.begin() + i * h);
  }
  return out;
}

void place(Square& x, std::size_t n, int qr, int qc, const Square& part) {
  const std::size_t h = n / 2;
  for (std::size_t i = 0; i < h; ++i) {
    std::copy_n(part.begin() + i * h, h,
                x.begin() + (i + qr * h) * n + qc * h);
  }
}

Square strassen(const Square& x, const Square& y, std::size_t n,
                std::size_t leaf) {
  if (n <= leaf || n % 2 != 0) return multiply_leaf(x, y, n);
  const std::size_t h = n / 2;
  const Square a11 = quadrant(x, n, 0, 0), a12 = quadrant(x, n, 0, 1);
  const Square a21 = quadrant(x, n, 1, 0), a22 = quadrant(x, n, 1, 1);
  const Square b11 = quadrant(y, n, 0, 0), b12 = quadrant(y, n, 0, 1);
  const Square b21 = quadrant(y, n, 1, 0), b22 = quadrant(y, n, 1, 1);

  const Square m1 = strassen(add(a11, a22), add(b11, b22), h, leaf);
  const Square m2 = strassen(add(a21, a22), b11, h, leaf);
  const Square m3 = strassen(a11, sub(b12, b22), h, leaf);
  const Square m4 = strassen(a22, sub(b21, b11), h, leaf);
  const Square m5 = strassen(add(a11, a12), b22, h, leaf);
  const Square m6 = strassen(sub(a21, a11), add(b11, b12), h, leaf);
  const Square m7 = strassen(sub(a12, a22), add(b21, b22), h, leaf);

  Square out(n * n);
  place(out, n, 0, 0, add(sub(add(m1, m4), m5), m7));
  place(out, n, 0, 1, add(m3, m5));
  place(out, n, 1, 0, add(m2, m4));
  place(out, n, 1, 1, add(add(sub(m1, m2), m3), m6));
  return out;
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix matmul_cubic(const IntMatrix& a, const IntMatrix& b) {
  check_dims(a, b);
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

IntMatrix matmul_strassen(const IntMatrix& a, const IntMatrix& b,
                          std::size_t leaf_size) {
  check_dims(a, b);
  const std::size_t leaf = std::max<std::size_t>(leaf_size, 1);
  // Pad to d * 2^levels with d <= leaf so every level halves evenly.
  std::size_t d = std::max({a.rows(), a.cols(), b.cols(), std::size_t{1}});
  std::size_t scale = 1;
  while (d > leaf) {
    d = (d + 1) / 2;
    scale *= 2;
  }
  const std::size_t n = d * scale;
  Square x(n * n, 0);
  Square y(n * n, 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) x[i * n + j] = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) y[i * n + j] = b(i, j);
  }
  const Square z = strassen(x, y, n, d);
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = z[i * n + j];
  }
  return out;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b,
                 const MatmulOptions& options) {
  check_dims(a, b);
  const std::size_t largest = std::max({a.rows(), a.cols(), b.cols()});
  if (largest > options.strassen_threshold) {
    return matmul_strassen(a, b, options.strassen_threshold);
  }
  return matmul_cubic(a, b);
}

}  // namespace kcut
