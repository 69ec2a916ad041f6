#include "ggv/linalg.hpp"

#include <cassert>

namespace ggv {

CycMat CycMat::identity(int n, int conductor) {
  CycMat m(n, n, CycNum::zero(conductor));
  for (int i = 0; i < n; ++i) m.at(i, i) = CycNum::one(conductor);
  return m;
}

CycVec mat_vec(const CycMat& A, const CycVec& v) {
  assert(static_cast<int>(v.size()) == A.cols);
  CycVec r(A.rows);
  for (int i = 0; i < A.rows; ++i) {
    CycNum s;
    for (int j = 0; j < A.cols; ++j)
      if (!A.at(i, j).is_zero() && !v[j].is_zero()) s += A.at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

SolveResult solve_exact(const CycMat& A, const CycVec& b) {
  assert(static_cast<int>(b.size()) == A.rows);
  const int m = A.rows, n = A.cols;
  CycMat w = A;
  CycVec rhs = b;

  std::vector<int> pivot_row_of_col(n, -1);
  int next_row = 0;
  for (int col = 0; col < n && next_row < m; ++col) {
    int pr = -1;
    for (int i = next_row; i < m; ++i)
      if (!w.at(i, col).is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != next_row) {
      for (int j = 0; j < n; ++j) std::swap(w.at(pr, j), w.at(next_row, j));
      std::swap(rhs[pr], rhs[next_row]);
    }
    pr = next_row;
    CycNum inv = w.at(pr, col).inverse();
    for (int j = col; j < n; ++j) w.at(pr, j) = w.at(pr, j) * inv;
    rhs[pr] = rhs[pr] * inv;
    for (int i = 0; i < m; ++i) {
      if (i == pr) continue;
      CycNum f = w.at(i, col);
      if (f.is_zero()) continue;
      for (int j = col; j < n; ++j)
        if (!w.at(pr, j).is_zero()) w.at(i, j) -= f * w.at(pr, j);
      rhs[i] -= f * rhs[pr];
    }
    pivot_row_of_col[col] = pr;
    ++next_row;
  }

  for (int i = next_row; i < m; ++i)
    if (!rhs[i].is_zero()) return {SolveStatus::Inconsistent, {}};
  for (int col = 0; col < n; ++col)
    if (pivot_row_of_col[col] < 0) return {SolveStatus::Ambiguous, {}};

  CycVec x(n);
  for (int col = 0; col < n; ++col) x[col] = rhs[pivot_row_of_col[col]];
  return {SolveStatus::Ok, std::move(x)};
}

int rank_exact(CycMat w) {
  const int m = w.rows, n = w.cols;
  int next_row = 0;
  for (int col = 0; col < n && next_row < m; ++col) {
    int pr = -1;
    for (int i = next_row; i < m; ++i)
      if (!w.at(i, col).is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != next_row)
      for (int j = 0; j < n; ++j) std::swap(w.at(pr, j), w.at(next_row, j));
    pr = next_row;
    CycNum inv = w.at(pr, col).inverse();
    for (int i = pr + 1; i < m; ++i) {
      CycNum f = w.at(i, col);
      if (f.is_zero()) continue;
      f = f * inv;
      for (int j = col; j < n; ++j)
        if (!w.at(pr, j).is_zero()) w.at(i, j) -= f * w.at(pr, j);
    }
    ++next_row;
  }
  return next_row;
}

CycNum det_exact(CycMat w) {
  assert(w.rows == w.cols);
  const int n = w.rows;
  CycNum det = CycNum(1);
  for (int col = 0; col < n; ++col) {
    int pr = -1;
    for (int i = col; i < n; ++i)
      if (!w.at(i, col).is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) return CycNum(0);
    if (pr != col) {
      for (int j = 0; j < n; ++j) std::swap(w.at(pr, j), w.at(col, j));
      det = -det;
    }
    det = det * w.at(col, col);
    CycNum inv = w.at(col, col).inverse();
    for (int i = col + 1; i < n; ++i) {
      CycNum f = w.at(i, col);
      if (f.is_zero()) continue;
      f = f * inv;
      for (int j = col; j < n; ++j)
        if (!w.at(col, j).is_zero()) w.at(i, j) -= f * w.at(col, j);
    }
  }
  return det;
}

Inverter::Inverter(const CycMat& A) {
  assert(A.rows == A.cols);
  const int n = A.rows;
  CycMat w = A;
  CycMat inv = CycMat::identity(n);
  for (int col = 0; col < n; ++col) {
    int pr = -1;
    for (int i = col; i < n; ++i)
      if (!w.at(i, col).is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) throw RankDeficient("matrix not invertible at column " + std::to_string(col));
    if (pr != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(w.at(pr, j), w.at(col, j));
        std::swap(inv.at(pr, j), inv.at(col, j));
      }
    }
    CycNum piv_inv = w.at(col, col).inverse();
    for (int j = 0; j < n; ++j) {
      w.at(col, j) = w.at(col, j) * piv_inv;
      inv.at(col, j) = inv.at(col, j) * piv_inv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      CycNum f = w.at(i, col);
      if (f.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (!w.at(col, j).is_zero()) w.at(i, j) -= f * w.at(col, j);
        if (!inv.at(col, j).is_zero()) inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  inv_ = std::move(inv);
}

}  // namespace ggv
