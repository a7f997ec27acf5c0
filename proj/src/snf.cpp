#include "braidq/snf.hpp"

#include <algorithm>
#include <cstdlib>

namespace braidq {

namespace {

using I128 = __int128;
constexpr Int kLimit = Int{1} << 62;

Int checked(I128 v) {
  if (v >= kLimit || v <= -kLimit) throw error("integer overflow in linear solve");
  return static_cast<Int>(v);
}

// Quotient minimizing |a - q*b| (ties toward the smaller quotient), so the
// remainder after one reduction step has magnitude <= |b|/2.
Int rounded_div(Int a, Int b) {
  Int q = a / b;
  Int r = a - q * b;
  if (std::abs(r) * 2 > std::abs(b)) q += (r > 0) == (b > 0) ? 1 : -1;
  return q;
}

}  // namespace

std::optional<IVec> solve_linear(IMat A, IVec b) {
  const Eigen::Index m = A.rows(), n = A.cols();
  if (b.rows() != m) throw error("solve_linear: dimension mismatch");
  IMat V = IMat::Identity(n, n);

  auto row_sub = [&](Eigen::Index i, Eigen::Index t, Int q) {
    for (Eigen::Index j = 0; j < n; ++j)
      A(i, j) = checked(I128{A(i, j)} - I128{q} * A(t, j));
    b(i) = checked(I128{b(i)} - I128{q} * b(t));
  };
  auto col_sub = [&](Eigen::Index j, Eigen::Index t, Int q) {
    for (Eigen::Index i = 0; i < m; ++i)
      A(i, j) = checked(I128{A(i, j)} - I128{q} * A(i, t));
    for (Eigen::Index i = 0; i < n; ++i)
      V(i, j) = checked(I128{V(i, j)} - I128{q} * V(i, t));
  };
  auto row_swap = [&](Eigen::Index i, Eigen::Index t) {
    A.row(i).swap(A.row(t));
    std::swap(b(i), b(t));
  };
  auto col_swap = [&](Eigen::Index j, Eigen::Index t) {
    A.col(j).swap(A.col(t));
    V.col(j).swap(V.col(t));
  };

  Eigen::Index rank = 0;
  for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
    // Deterministic pivot: smallest |entry| in the trailing block, then
    // lowest row, then lowest column.
    Eigen::Index bi = -1, bj = -1;
    Int best = 0;
    for (Eigen::Index i = t; i < m; ++i)
      for (Eigen::Index j = t; j < n; ++j) {
        const Int v = std::abs(A(i, j));
        if (v != 0 && (bi < 0 || v < best)) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (bi < 0) break;
    if (bi != t) row_swap(bi, t);
    if (bj != t) col_swap(bj, t);
    for (bool clean = false; !clean;) {
      clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (A(i, t) == 0) continue;
        row_sub(i, t, rounded_div(A(i, t), A(t, t)));
        if (A(i, t) != 0) {  // remainder is strictly smaller: make it the pivot
          row_swap(i, t);
          clean = false;
        }
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (A(t, j) == 0) continue;
        col_sub(j, t, rounded_div(A(t, j), A(t, t)));
        if (A(t, j) != 0) {
          col_swap(j, t);
          clean = false;
        }
      }
    }
    if (A(t, t) < 0) {
      for (Eigen::Index i = 0; i < m; ++i) A(i, t) = -A(i, t);
      for (Eigen::Index i = 0; i < n; ++i) V(i, t) = -V(i, t);
    }
    rank = t + 1;
  }

  IVec y = IVec::Zero(n);
  for (Eigen::Index i = 0; i < rank; ++i) {
    if (b(i) % A(i, i) != 0) return std::nullopt;
    y(i) = b(i) / A(i, i);
  }
  for (Eigen::Index i = rank; i < m; ++i)
    if (b(i) != 0) return std::nullopt;

  IVec x = IVec::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    I128 acc = 0;
    for (Eigen::Index j = 0; j < rank; ++j) acc += I128{V(i, j)} * y(j);
    x(i) = checked(acc);
  }
  return x;
}

}  // namespace braidq
