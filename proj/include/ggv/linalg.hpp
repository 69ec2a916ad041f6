#pragma once

#include <vector>

#include "ggv/cyclotomic.hpp"

namespace ggv {

using CycVec = std::vector<CycNum>;

// Dense matrix over Q(zeta_N); row-major.
struct CycMat {
  int rows{0};
  int cols{0};
  std::vector<CycNum> a;

  CycMat() = default;
  CycMat(int r, int c, const CycNum& fill = CycNum()) : rows(r), cols(c), a(r * c, fill) {}
  CycNum& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const CycNum& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  static CycMat identity(int n, int conductor = 1);
};

enum class SolveStatus { Ok, Inconsistent, Ambiguous };

struct SolveResult {
  SolveStatus status{SolveStatus::Ok};
  CycVec x;
};

// Exact Gaussian elimination with first-nonzero pivoting in fixed row
// order.  Any shape is accepted: Inconsistent if no solution exists,
// Ambiguous if the solution space has positive dimension.
SolveResult solve_exact(const CycMat& A, const CycVec& b);

int rank_exact(CycMat A);
CycNum det_exact(CycMat A);

CycVec mat_vec(const CycMat& A, const CycVec& v);

// Precomputed inverse for a square full-rank matrix, for repeated solves
// of A x = v (columns of A are the basis vectors).
class Inverter {
 public:
  explicit Inverter(const CycMat& A);  // throws RankDeficient if singular
  CycVec solve(const CycVec& v) const { return mat_vec(inv_, v); }
  const CycMat& inverse() const { return inv_; }

 private:
  CycMat inv_;
};

}  // namespace ggv
