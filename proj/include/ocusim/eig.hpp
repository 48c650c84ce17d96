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

#ifndef OCUSIM_EIG_HPP
#define OCUSIM_EIG_HPP

#include <vector>

#include "ocusim/matrix.hpp"

namespace ocusim {

/// Eigendecomposition of a Hermitian matrix. values[j] descending, column j
/// of vectors is the matching eigenvector with a fixed phase convention
/// (largest-magnitude entry real positive).
struct EigH {
  std::vector<double> values;
  Mat vectors;
};

/// Cyclic complex Jacobi. Robust, used wherever eigenvectors are needed.
EigH hermitian_eig(const Mat& a);

/// Eigenvalues only, descending. Householder tridiagonalization plus
/// implicit-shift QL on the realified 2n×2n symmetric embedding; roughly an
/// order of magnitude faster than the Jacobi path and used by the norm
/// routines in the trial loops.
std::vector<double> hermitian_eigenvalues(const Mat& a);

double min_eigenvalue(const Mat& hermitian);

/// Trace norm: sum of singular values. Hermitian inputs take the eigenvalue
/// path; general square inputs go through the Hermitian dilation
/// [[0, M], [M†, 0]] whose spectrum is ±σ_i. NO factor 1/2: the distance
/// between two density matrices ranges over [0, 2].
double trace_norm(const Mat& m);

/// trace_norm(a - b) with the difference hermitized first (both arguments
/// are expected to be Hermitian up to rounding).
double trace_distance(const Mat& a, const Mat& b);

/// Eigenvalues of a unitary matrix (unit modulus). Computed by jointly
/// diagonalizing the commuting Hermitian pair (U+U†)/2 and (U-U†)/(2i).
/// Throws ValidationError when ||U†U - I||_max > 1e-8.
std::vector<cxd> unitary_eigenvalues(const Mat& u);

}  // namespace ocusim

#endif  // OCUSIM_EIG_HPP
