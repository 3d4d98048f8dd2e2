/* Copyright 2026 The magnitude authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "magnitude/errors.hpp"
#include "magnitude/matrix.hpp"

namespace magnitude {

enum class SolveMethod { cholesky, lu };

struct SolveDiagnostics {
  SolveMethod method = SolveMethod::cholesky;
  bool positive_definite = false;
  double rcond_estimate = 0.0;
};

struct SymmetricSolve {
  std::vector<double> solution;
  SolveDiagnostics diagnostics;
};

/// Magnitude is declared numerically undefined below this reciprocal
/// condition estimate.
inline constexpr double kRcondThreshold = 1e-13;

/// Target relative residual of solve_symmetric, in the infinity norm.
inline constexpr double kResidualTarget = 1e-10;

namespace detail {

/// Cholesky if the matrix is numerically positive definite, otherwise LU with
/// partial pivoting.  Factorizations are stored in-place and reused for the
/// rcond estimate and iterative refinement.
class SymmetricFactorization {
 public:
  explicit SymmetricFactorization(const Matrix& a) : n_(a.rows()), f_(a) {
    if (try_cholesky()) {
      method_ = SolveMethod::cholesky;
      positive_definite_ = true;
    } else {
      f_ = a;
      method_ = SolveMethod::lu;
      positive_definite_ = false;
      lu_factorize();
    }
  }

  SolveMethod method() const { return method_; }
  bool positive_definite() const { return positive_definite_; }
  bool singular() const { return singular_; }

  std::vector<double> solve(std::span<const double> b) const {
    std::vector<double> x(b.begin(), b.end());
    if (method_ == SolveMethod::cholesky) {
      // L y = b, then L^T x = y
      for (std::size_t i = 0; i < n_; ++i) {
        double s = x[i];
        for (std::size_t k = 0; k < i; ++k) s -= f_(i, k) * x[k];
        x[i] = s / f_(i, i);
      }
      for (std::size_t ii = n_; ii-- > 0;) {
        double s = x[ii];
        for (std::size_t k = ii + 1; k < n_; ++k) s -= f_(k, ii) * x[k];
        x[ii] = s / f_(ii, ii);
      }
    } else {
      std::vector<double> pb(n_);
      for (std::size_t i = 0; i < n_; ++i) pb[i] = x[perm_[i]];
      for (std::size_t i = 0; i < n_; ++i) {
        double s = pb[i];
        for (std::size_t k = 0; k < i; ++k) s -= f_(i, k) * pb[k];
        pb[i] = s;  // unit lower triangle
      }
      for (std::size_t ii = n_; ii-- > 0;) {
        double s = pb[ii];
        for (std::size_t k = ii + 1; k < n_; ++k) s -= f_(ii, k) * pb[k];
        pb[ii] = s / f_(ii, ii);
      }
      x = std::move(pb);
    }
    return x;
  }

  /// Hager-style one-norm estimate of ||A^{-1}||_1.  The matrix is symmetric,
  /// so transpose solves coincide with plain solves.
  double inverse_one_norm_estimate() const {
    if (n_ == 0) return 0.0;
    std::vector<double> x(n_, 1.0 / static_cast<double>(n_));
    double est = 0.0;
    for (int iter = 0; iter < 5; ++iter) {
      std::vector<double> y = solve(x);
      est = one_norm(y);
      std::vector<double> xi(n_);
      for (std::size_t i = 0; i < n_; ++i) xi[i] = (y[i] >= 0.0) ? 1.0 : -1.0;
      std::vector<double> z = solve(xi);
      std::size_t j = 0;
      for (std::size_t i = 1; i < n_; ++i)
        if (std::abs(z[i]) > std::abs(z[j])) j = i;
      const double zx = std::inner_product(z.begin(), z.end(), x.begin(), 0.0);
      if (std::abs(z[j]) <= zx) break;
      std::fill(x.begin(), x.end(), 0.0);
      x[j] = 1.0;
    }
    return est;
  }

 private:
  bool try_cholesky() {
    for (std::size_t j = 0; j < n_; ++j) {
      double d = f_(j, j);
      for (std::size_t k = 0; k < j; ++k) d -= f_(j, k) * f_(j, k);
      if (!(d > 0.0)) return false;
      const double ljj = std::sqrt(d);
      f_(j, j) = ljj;
      for (std::size_t i = j + 1; i < n_; ++i) {
        double s = f_(i, j);
        for (std::size_t k = 0; k < j; ++k) s -= f_(i, k) * f_(j, k);
        f_(i, j) = s / ljj;
      }
    }
    return true;
  }

  void lu_factorize() {
    perm_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) perm_[i] = i;
    for (std::size_t k = 0; k < n_; ++k) {
      std::size_t p = k;
      for (std::size_t i = k + 1; i < n_; ++i)
        if (std::abs(f_(i, k)) > std::abs(f_(p, k))) p = i;
      if (f_(p, k) == 0.0) {
        singular_ = true;
        return;
      }
      if (p != k) {
        std::swap(perm_[p], perm_[k]);
        for (std::size_t j = 0; j < n_; ++j) std::swap(f_(p, j), f_(k, j));
      }
      for (std::size_t i = k + 1; i < n_; ++i) {
        const double m = f_(i, k) / f_(k, k);
        f_(i, k) = m;
        for (std::size_t j = k + 1; j < n_; ++j) f_(i, j) -= m * f_(k, j);
      }
    }
  }

  std::size_t n_;
  Matrix f_;
  std::vector<std::size_t> perm_;
  SolveMethod method_ = SolveMethod::cholesky;
  bool positive_definite_ = false;
  bool singular_ = false;
};

}  // namespace detail

/// Solves A x = b for symmetric A.  Cholesky doubles as the positive
/// definiteness detector; pivoted LU is the fallback.  Throws SingularMatrix
/// when the reciprocal condition estimate falls below kRcondThreshold or the
/// residual cannot be brought under kResidualTarget.
inline SymmetricSolve solve_symmetric(const Matrix& a, std::span<const double> b) {
  if (!a.square() || a.rows() != b.size())
    throw DimensionMismatch("solve_symmetric: shape mismatch");
  if (!a.is_symmetric())
    throw std::invalid_argument("solve_symmetric: matrix is not symmetric");
  const std::size_t n = a.rows();
  if (n == 0) return {{}, {SolveMethod::cholesky, true, 1.0}};

  detail::SymmetricFactorization fact(a);
  SolveDiagnostics diag;
  diag.method = fact.method();
  diag.positive_definite = fact.positive_definite();
  if (fact.singular()) {
    diag.rcond_estimate = 0.0;
    throw SingularMatrix("solve_symmetric: exact zero pivot");
  }

  const double anorm = detail::matrix_one_norm(a);
  const double inv_est = fact.inverse_one_norm_estimate();
  diag.rcond_estimate =
      (anorm > 0.0 && inv_est > 0.0) ? 1.0 / (anorm * inv_est) : (n == 0 ? 1.0 : 0.0);
  if (diag.rcond_estimate < kRcondThreshold)
    throw SingularMatrix("solve_symmetric: matrix numerically singular (rcond " +
                         std::to_string(diag.rcond_estimate) + ")");

  std::vector<double> x = fact.solve(b);
  const double bnorm = detail::inf_norm(b);
  for (int round = 0; round < 3; ++round) {
    std::vector<double> r = matvec(a, x);
    for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - r[i];
    if (detail::inf_norm(r) <= 0.5 * kResidualTarget * bnorm) break;
    const std::vector<double> dx = fact.solve(r);
    for (std::size_t i = 0; i < n; ++i) x[i] += dx[i];
  }
  {
    std::vector<double> r = matvec(a, x);
    for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - r[i];
    if (detail::inf_norm(r) > kResidualTarget * bnorm)
      throw SingularMatrix("solve_symmetric: residual not certifiable");
  }
  return {std::move(x), diag};
}

inline SymmetricSolve solve_symmetric(const Matrix& a, const std::vector<double>& b) {
  return solve_symmetric(a, std::span<const double>(b));
}

}  // namespace magnitude
