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

#include "ocusim/eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace ocusim {

namespace {

// ---------------------------------------------------------------------------
// Real symmetric tridiagonalization + implicit-shift QL, eigenvalues only.
// Classic Householder/QL pair operating on a destroyed row-major copy.
// ---------------------------------------------------------------------------

void sym_tridiag_values(std::vector<double>& a, int n, std::vector<double>& d,
                        std::vector<double>& e) {
  auto A = [&](int r, int c) -> double& { return a[static_cast<std::size_t>(r) * n + c]; };
  d.assign(n, 0.0);
  e.assign(n, 0.0);
  for (int i = n - 1; i >= 1; --i) {
    const int l = i - 1;
    double h = 0.0;
    double scale = 0.0;
    if (l > 0) {
      for (int k = 0; k <= l; ++k) scale += std::fabs(A(i, k));
      if (scale == 0.0) {
        e[i] = A(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          A(i, k) /= scale;
          h += A(i, k) * A(i, k);
        }
        double f = A(i, l);
        double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        A(i, l) = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          g = 0.0;
          for (int k = 0; k <= j; ++k) g += A(j, k) * A(i, k);
          for (int k = j + 1; k <= l; ++k) g += A(k, j) * A(i, k);
          e[j] = g / h;
          f += e[j] * A(i, j);
        }
        const double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = A(i, j);
          g = e[j] - hh * f;
          e[j] = g;
          for (int k = 0; k <= j; ++k) {
            A(j, k) -= (f * e[k] + g * A(i, k));
          }
        }
      }
    } else {
      e[i] = A(i, l);
    }
  }
  for (int i = 0; i < n; ++i) d[i] = A(i, i);
  e[0] = 0.0;
}

void tql_values(std::vector<double>& d, std::vector<double>& e, int n) {
  if (n <= 1) return;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  double anorm = 0.0;
  for (int i = 0; i < n; ++i) anorm = std::max(anorm, std::fabs(d[i]) + std::fabs(e[i]));
  const double floor_tol = eps * anorm * 1e-3;

  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= eps * dd + floor_tol) break;
      }
      if (m != l) {
        if (iter++ == 60) throw NumericalError("tql: too many iterations");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        bool underflow = false;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

void require_square(const Mat& m, const char* who) {
  if (!m.square()) throw DimensionError(std::string(who) + ": non-square input");
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const Mat& a) {
  require_square(a, "hermitian_eigenvalues");
  const int n = static_cast<int>(a.rows());
  if (n == 0) return {};
  // Realify: A = X + iY maps to the symmetric [[X, -Y], [Y, X]] whose
  // spectrum is that of A with every eigenvalue doubled.
  const int big = 2 * n;
  std::vector<double> m(static_cast<std::size_t>(big) * big, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double x = a(i, j).real();
      const double y = a(i, j).imag();
      m[static_cast<std::size_t>(i) * big + j] = x;
      m[static_cast<std::size_t>(i) * big + (n + j)] = -y;
      m[static_cast<std::size_t>(n + i) * big + j] = y;
      m[static_cast<std::size_t>(n + i) * big + (n + j)] = x;
    }
  }
  std::vector<double> d, e;
  sym_tridiag_values(m, big, d, e);
  tql_values(d, e, big);
  std::sort(d.begin(), d.end(), std::greater<double>());
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = d[2 * i];
  return out;
}

double min_eigenvalue(const Mat& hermitian) {
  const auto vals = hermitian_eigenvalues(hermitian);
  if (vals.empty()) throw DimensionError("min_eigenvalue: empty matrix");
  return vals.back();
}

EigH hermitian_eig(const Mat& a) {
  require_square(a, "hermitian_eig");
  const std::size_t n = a.rows();
  Mat w = a;
  w.hermitize();
  Mat v = Mat::identity(n);

  const double fro = std::max(1.0, w.frobenius_norm());
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(w(p, q));
    }
    if (std::sqrt(off) <= 1e-14 * fro) break;
    if (sweep == 59) throw NumericalError("jacobi: no convergence in 60 sweeps");

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cxd apq = w(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        const double app = w(p, p).real();
        const double aqq = w(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        double t;
        if (std::isinf(tau)) {
          t = 0.0;
        } else if (tau >= 0.0) {
          t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
        } else {
          t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cxd sc = s * (apq / r);
        const cxd scc = std::conj(sc);
        // A <- R† A R with R = [[c, sc], [-conj(sc), c]] on the (p, q) plane.
        for (std::size_t k = 0; k < n; ++k) {
          const cxd akp = w(k, p);
          const cxd akq = w(k, q);
          w(k, p) = c * akp - scc * akq;
          w(k, q) = sc * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cxd apk = w(p, k);
          const cxd aqk = w(q, k);
          w(p, k) = c * apk - sc * aqk;
          w(q, k) = scc * apk + c * aqk;
        }
        w(p, p) = cxd{w(p, p).real(), 0.0};
        w(q, q) = cxd{w(q, q).real(), 0.0};
        w(p, q) = cxd{0.0, 0.0};
        w(q, p) = cxd{0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) {
          const cxd vkp = v(k, p);
          const cxd vkq = v(k, q);
          v(k, p) = c * vkp - scc * vkq;
          v(k, q) = sc * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return w(x, x).real() > w(y, y).real();
  });

  EigH out;
  out.values.resize(n);
  out.vectors = Mat(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = order[j];
    out.values[j] = w(src, src).real();
    CVec col = v.col(src);
    // Phase convention: largest-magnitude entry real positive.
    std::size_t imax = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double mag = std::abs(col[i]);
      if (mag > best) {
        best = mag;
        imax = i;
      }
    }
    if (best > 0.0) {
      const cxd phase = std::conj(col[imax]) / best;
      for (auto& x : col) x *= phase;
    }
    out.vectors.set_col(j, col);
  }
  return out;
}

double trace_norm(const Mat& m) {
  require_square(m, "trace_norm");
  const std::size_t n = m.rows();
  if (n == 0) return 0.0;
  if (m.hermiticity_defect() <= 1e-10 * std::max(1.0, m.max_abs())) {
    Mat h = m;
    h.hermitize();
    const auto vals = hermitian_eigenvalues(h);
    double sum = 0.0;
    for (double x : vals) sum += std::fabs(x);
    return sum;
  }
  // Hermitian dilation: eigenvalues come in ±σ pairs.
  Mat dil(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      dil(i, n + j) = m(i, j);
      dil(n + i, j) = std::conj(m(j, i));
    }
  }
  const auto vals = hermitian_eigenvalues(dil);
  double sum = 0.0;
  for (double x : vals) sum += std::fabs(x);
  return 0.5 * sum;
}

double trace_distance(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("trace_distance shape mismatch");
  }
  Mat d = a;
  d -= b;
  d.hermitize();
  const auto vals = hermitian_eigenvalues(d);
  double sum = 0.0;
  for (double x : vals) sum += std::fabs(x);
  return sum;
}

std::vector<cxd> unitary_eigenvalues(const Mat& u) {
  require_square(u, "unitary_eigenvalues");
  const std::size_t n = u.rows();
  const Mat gram = u.dagger() * u;
  if (max_abs_diff(gram, Mat::identity(n)) > 1e-8) {
    throw ValidationError("unitary_eigenvalues: input is not unitary");
  }
  const Mat ud = u.dagger();
  Mat cpart(n, n);
  Mat spart(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cpart(i, j) = 0.5 * (u(i, j) + ud(i, j));
      spart(i, j) = cxd{0.0, -0.5} * (u(i, j) - ud(i, j));
    }
  }
  const EigH ec = hermitian_eig(cpart);
  // S in the eigenbasis of C is block diagonal over C's eigenspaces because
  // the two parts commute for a normal input.
  const Mat sprime = ec.vectors.dagger() * (spart * ec.vectors);

  std::vector<cxd> eigs;
  eigs.reserve(n);
  std::size_t start = 0;
  while (start < n) {
    std::size_t stop = start + 1;
    while (stop < n && std::fabs(ec.values[stop - 1] - ec.values[stop]) <= 1e-7) {
      ++stop;
    }
    const std::size_t len = stop - start;
    if (len == 1) {
      eigs.emplace_back(ec.values[start], sprime(start, start).real());
    } else {
      Mat block(len, len);
      for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = 0; j < len; ++j) {
          block(i, j) = sprime(start + i, start + j);
        }
      }
      const EigH es = hermitian_eig(block);
      for (std::size_t j = 0; j < len; ++j) {
        // Rayleigh value of C on the rotated vector keeps the pairing exact
        // inside near-degenerate clusters.
        double cval = 0.0;
        for (std::size_t i = 0; i < len; ++i) {
          cval += std::norm(es.vectors(i, j)) * ec.values[start + i];
        }
        eigs.emplace_back(cval, es.values[j]);
      }
    }
    start = stop;
  }
  for (auto& z : eigs) {
    const double mag = std::abs(z);
    if (mag < 0.5) throw NumericalError("unitary_eigenvalues: eigenvalue far from unit circle");
    z /= mag;
  }
  return eigs;
}

}  // namespace ocusim
