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

#ifndef OCUSIM_MATRIX_HPP
#define OCUSIM_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "ocusim/common.hpp"

namespace ocusim {

using CVec = std::vector<cxd>;

/// Dense row-major complex matrix. Arithmetic hot paths route through the
/// runtime-dispatched kernels in ocusim::kern.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, cxd{0.0, 0.0}) {}

  static Mat identity(std::size_t n);
  /// Column vector as an n×1 matrix.
  static Mat column(const CVec& v);
  /// Outer product |u⟩⟨v|.
  static Mat outer(const CVec& u, const CVec& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cxd& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cxd& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  cxd* data() { return data_.data(); }
  const cxd* data() const { return data_.data(); }

  Mat dagger() const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(cxd s);
  Mat& operator*=(double s);

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, cxd s) { return a *= s; }
  friend Mat operator*(cxd s, Mat a) { return a *= s; }
  friend Mat operator*(Mat a, double s) { return a *= s; }
  friend Mat operator*(double s, Mat a) { return a *= s; }
  friend Mat operator*(const Mat& a, const Mat& b);  // kernel gemm_nn

  /// this · other† via the gemm_nh kernel.
  Mat mul_dagger(const Mat& other) const;

  cxd trace() const;
  double max_abs() const;
  double frobenius_norm() const;
  /// max_{ij} |A[i][j] - conj(A[j][i])|.
  double hermiticity_defect() const;
  /// In-place A <- (A + A†)/2.
  void hermitize();

  CVec matvec(const CVec& v) const;
  /// Column j as a vector.
  CVec col(std::size_t j) const;
  void set_col(std::size_t j, const CVec& v);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cxd> data_;
};

/// Kronecker product with the first factor slowest-varying.
Mat kron(const Mat& a, const Mat& b);
CVec kron(const CVec& a, const CVec& b);

/// max_{ij} |A[i][j] - B[i][j]|.
double max_abs_diff(const Mat& a, const Mat& b);

// Vector helpers.
double norm(const CVec& v);
cxd dot(const CVec& a, const CVec& b);  // ⟨a|b⟩, conjugate-linear in a
void normalize(CVec& v);
CVec basis_vector(std::size_t dim, std::size_t index);

/// ⟨v|M|v⟩.
cxd expectation(const Mat& m, const CVec& v);

}  // namespace ocusim

#endif  // OCUSIM_MATRIX_HPP
