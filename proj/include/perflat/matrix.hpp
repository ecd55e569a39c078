#ifndef PERFLAT_MATRIX_HPP
#define PERFLAT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "perflat/numeric.hpp"

namespace perflat {

// Small dense row-major matrix.  Used with Int and Rat scalars only;
// everything stays exact.
template <typename T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Mat(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw domain_error("ragged initializer");
      for (const auto& v : row) data_.push_back(v);
    }
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_,
                          data_.begin() + (i + 1) * cols_);
  }

  void set_row(std::size_t i, const std::vector<T>& v) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }

  Mat transposed() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

using IMat = Mat<Int>;
using QMat = Mat<Rat>;

template <typename T>
Mat<T> operator*(const Mat<T>& a, const Mat<T>& b) {
  if (a.cols() != b.rows()) throw domain_error("matrix product shape");
  Mat<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == T(0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <typename T>
bool is_symmetric(const Mat<T>& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

template <typename T>
std::vector<T> mat_vec(const Mat<T>& m, const std::vector<T>& v) {
  if (m.cols() != v.size()) throw domain_error("matrix-vector shape");
  std::vector<T> r(m.rows(), T(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m(i, j) * v[j];
  return r;
}

template <typename T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
  T s = T(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// x^T G y, the inner product of coordinate vectors under a Gram matrix.
template <typename T>
T gram_product(const Mat<T>& g, const std::vector<T>& x,
               const std::vector<T>& y) {
  T s = T(0);
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (x[i] == T(0)) continue;
    T acc = T(0);
    for (std::size_t j = 0; j < g.cols(); ++j) acc += g(i, j) * y[j];
    s += x[i] * acc;
  }
  return s;
}

inline QMat to_rational(const IMat& m) {
  QMat q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rat(m(i, j));
  return q;
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const Mat<T>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j);
    }
    os << '\n';
  }
  return os;
}

}  // namespace perflat

#endif  // PERFLAT_MATRIX_HPP
