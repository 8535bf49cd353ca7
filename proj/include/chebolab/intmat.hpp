#pragma once

// Exact integer and prime-field linear algebra on Eigen dense types.

#include <Eigen/Dense>

#include <cstdint>
#include <cstdlib>
#include <algorithm>
#include <limits>
#include <tuple>
#include <utility>

#include "chebolab/error.hpp"

namespace chebo {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Mat2 = Eigen::Matrix<std::int64_t, 2, 2>;
using Vec2 = Eigen::Matrix<std::int64_t, 2, 1>;

inline Mat2 make_mat2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  Mat2 m;
  m << a, b, c, d;
  return m;
}

/// Least non-negative residue.
template <typename Scalar>
constexpr Scalar mod(Scalar a, Scalar m) {
  Scalar r = a % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t narrow_checked(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw Error(ErrorCode::Overflow, "integer matrix entry exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

inline Mat2 checked_product(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r(i, j) = narrow_checked(static_cast<__int128>(a(i, 0)) * b(0, j) +
                               static_cast<__int128>(a(i, 1)) * b(1, j));
  return r;
}

inline Vec2 checked_product(const Mat2& a, const Vec2& v) {
  Vec2 r;
  for (int i = 0; i < 2; ++i)
    r(i) = narrow_checked(static_cast<__int128>(a(i, 0)) * v(0) +
                          static_cast<__int128>(a(i, 1)) * v(1));
  return r;
}

inline Mat2 checked_power(const Mat2& a, int k) {
  Mat2 r = Mat2::Identity();
  for (int i = 0; i < k; ++i) r = checked_product(r, a);
  return r;
}

inline Mat2 reduce_mod(const Mat2& a, std::int64_t m) {
  return a.unaryExpr([m](std::int64_t x) { return mod(x, m); });
}

inline Mat2 product_mod(const Mat2& a, const Mat2& b, std::int64_t m) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r(i, j) = static_cast<std::int64_t>(
          mod<__int128>(static_cast<__int128>(a(i, 0)) * b(0, j) +
                            static_cast<__int128>(a(i, 1)) * b(1, j),
                        m));
  return r;
}

/// Multiplicative order of a unimodular matrix reduced mod m.
inline int order_mod(const Mat2& a, std::int64_t m) {
  const Mat2 base = reduce_mod(a, m);
  const Mat2 one = reduce_mod(Mat2::Identity(), m);
  Mat2 cur = base;
  for (int k = 1;; ++k) {
    if (cur == one) return k;
    cur = product_mod(cur, base, m);
    if (k > m * m * m * m) throw Error(ErrorCode::InvalidArgument, "matrix is not invertible mod m");
  }
}

/// U * input * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
template <typename Scalar>
struct SmithForm {
  Matrix<Scalar> D;
  Matrix<Scalar> U;
  Matrix<Scalar> V;
};

template <typename Derived>
SmithForm<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index rows = input.rows();
  const Eigen::Index cols = input.cols();
  SmithForm<Scalar> out{input.template cast<Scalar>(), Matrix<Scalar>::Identity(rows, rows),
                        Matrix<Scalar>::Identity(cols, cols)};
  auto& a = out.D;

  auto abs_of = [](Scalar x) { return x < 0 ? -x : x; };

  for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Pivot: smallest nonzero magnitude in the trailing block.
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = t; i < rows; ++i)
        for (Eigen::Index j = t; j < cols; ++j)
          if (a(i, j) != 0 && (pi < 0 || abs_of(a(i, j)) < abs_of(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) return out;
      a.row(t).swap(a.row(pi));
      out.U.row(t).swap(out.U.row(pi));
      a.col(t).swap(a.col(pj));
      out.V.col(t).swap(out.V.col(pj));

      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        const Scalar q = a(i, t) / a(t, t);
        if (q != 0) {
          a.row(i) -= q * a.row(t);
          out.U.row(i) -= q * out.U.row(t);
        }
        if (a(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        const Scalar q = a(t, j) / a(t, t);
        if (q != 0) {
          a.col(j) -= q * a.col(t);
          out.V.col(j) -= q * out.V.col(t);
        }
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      a.row(t) += a.row(bad);
      out.U.row(t) += out.U.row(bad);
    }
    if (a(t, t) < 0) {
      a.row(t) *= Scalar(-1);
      out.U.row(t) *= Scalar(-1);
    }
  }
  return out;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r0 = p, r1 = mod(a, p), s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  return mod(s0, p);
}

/// Row-reduces a copy of the matrix over F_p and returns its rank.
template <typename Derived>
Eigen::Index rank_mod_p(const Eigen::MatrixBase<Derived>& m, std::int64_t p) {
  Matrix<std::int64_t> a = m.template cast<std::int64_t>().unaryExpr(
      [p](std::int64_t x) { return mod(x, p); });
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < a.cols() && rank < a.rows(); ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = rank; r < a.rows(); ++r)
      if (a(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    a.row(rank).swap(a.row(piv));
    const std::int64_t inv = inverse_mod(a(rank, c), p);
    a.row(rank) = a.row(rank).unaryExpr([&](std::int64_t x) { return mod(x * inv, p); });
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r == rank || a(r, c) == 0) continue;
      const std::int64_t f = a(r, c);
      for (Eigen::Index j = 0; j < a.cols(); ++j) a(r, j) = mod(a(r, j) - f * a(rank, j), p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace chebo
