// Copyright 2026 The ocusim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ocusim/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "ocusim/kernels.hpp"

namespace ocusim {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = cxd{1.0, 0.0};
  return m;
}

Mat Mat::column(const CVec& v) {
  Mat m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Mat Mat::outer(const CVec& u, const CVec& v) {
  Mat m(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      m(i, j) = u[i] * std::conj(v[j]);
    }
  }
  return m;
}

Mat Mat::dagger() const {
  Mat m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      m(j, i) = std::conj((*this)(i, j));
    }
  }
  return m;
}

Mat& Mat::operator+=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw DimensionError("matrix addition shape mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw DimensionError("matrix subtraction shape mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Mat& Mat::operator*=(cxd s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Mat& Mat::operator*=(double s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  Mat c(a.rows(), b.cols());
  kern::active().gemm_nn(a.rows(), a.cols(), b.cols(), a.data(), b.data(),
                         c.data(), false);
  return c;
}

Mat Mat::mul_dagger(const Mat& other) const {
  if (cols_ != other.cols_) {
    throw DimensionError("mul_dagger shape mismatch");
  }
  Mat c(rows_, other.rows_);
  kern::active().gemm_nh(rows_, cols_, other.rows_, data(), other.data(),
                         c.data(), false);
  return c;
}

cxd Mat::trace() const {
  if (!square()) throw DimensionError("trace of non-square matrix");
  cxd t{0.0, 0.0};
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double Mat::max_abs() const {
  double m = 0.0;
  for (const auto& x : data_) m = std::max(m, std::abs(x));
  return m;
}

double Mat::frobenius_norm() const {
  double s = 0.0;
  for (const auto& x : data_) s += std::norm(x);
  return std::sqrt(s);
}

double Mat::hermiticity_defect() const {
  if (!square()) throw DimensionError("hermiticity check on non-square matrix");
  double m = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i; j < cols_; ++j) {
      m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    }
  }
  return m;
}

void Mat::hermitize() {
  if (!square()) throw DimensionError("hermitize on non-square matrix");
  for (std::size_t i = 0; i < rows_; ++i) {
    (*this)(i, i) = cxd{(*this)(i, i).real(), 0.0};
    for (std::size_t j = i + 1; j < cols_; ++j) {
      const cxd avg = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
      (*this)(i, j) = avg;
      (*this)(j, i) = std::conj(avg);
    }
  }
}

CVec Mat::matvec(const CVec& v) const {
  if (v.size() != cols_) throw DimensionError("matvec shape mismatch");
  CVec out(rows_, cxd{0.0, 0.0});
  kern::active().gemm_nn(rows_, cols_, 1, data(), v.data(), out.data(), false);
  return out;
}

CVec Mat::col(std::size_t j) const {
  CVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Mat::set_col(std::size_t j, const CVec& v) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Mat kron(const Mat& a, const Mat& b) {
  Mat c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cxd av = a(i, j);
      for (std::size_t p = 0; p < b.rows(); ++p) {
        cxd* crow = c.data() + (i * b.rows() + p) * c.cols() + j * b.cols();
        const cxd* brow = b.data() + p * b.cols();
        for (std::size_t q = 0; q < b.cols(); ++q) {
          crow[q] = av * brow[q];
        }
      }
    }
  }
  return c;
}

CVec kron(const CVec& a, const CVec& b) {
  CVec c(a.size() * b.size());
  std::size_t idx = 0;
  for (const auto& av : a) {
    for (const auto& bv : b) c[idx++] = av * bv;
  }
  return c;
}

double max_abs_diff(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("max_abs_diff shape mismatch");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      m = std::max(m, std::abs(a(i, j) - b(i, j)));
    }
  }
  return m;
}

double norm(const CVec& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

cxd dot(const CVec& a, const CVec& b) {
  if (a.size() != b.size()) throw DimensionError("dot shape mismatch");
  cxd s{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

void normalize(CVec& v) {
  const double n = norm(v);
  if (n <= 0.0) throw NumericalError("cannot normalize zero vector");
  for (auto& x : v) x /= n;
}

CVec basis_vector(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DimensionError("basis index out of range");
  CVec v(dim, cxd{0.0, 0.0});
  v[index] = cxd{1.0, 0.0};
  return v;
}

cxd expectation(const Mat& m, const CVec& v) {
  return dot(v, m.matvec(v));
}

}  // namespace ocusim
