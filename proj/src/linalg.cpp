#include "diffmod/linalg.hpp"

#include <algorithm>

namespace diffmod {

Rat f_reduce(const BaseField& F, Rat x) {
  if (F.p == 0) return x;
  Int num = x.get_num(), den = x.get_den();
  num %= F.p;
  if (num < 0) num += F.p;
  if (den != 1) {
    Int d = den % F.p;
    if (d < 0) d += F.p;
    Int dinv;
    if (mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), F.p.get_mpz_t()) == 0)
      throw Error("denominator not invertible modulo " + F.p.get_str());
    num = (num * dinv) % F.p;
  }
  return Rat(num);
}

Rat f_inv(const BaseField& F, const Rat& x) {
  if (x == 0) throw Error("division by zero");
  if (F.p == 0) return Rat(1) / x;
  Int v = x.get_num() % F.p;
  if (v < 0) v += F.p;
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), F.p.get_mpz_t()) == 0)
    throw Error("element not invertible modulo " + F.p.get_str());
  return Rat(inv);
}

FMat f_zero(int rows, int cols) { return FMat(rows, FVec(cols, Rat(0))); }

FMat f_identity(int n) {
  FMat I = f_zero(n, n);
  for (int i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

FMat f_mul(const BaseField& F, const FMat& A, const FMat& B) {
  int m = (int)A.size();
  int k = m ? (int)A[0].size() : 0;
  int n = B.empty() ? 0 : (int)B[0].size();
  if ((int)B.size() != k) throw Error("matrix dimension mismatch");
  FMat C = f_zero(m, n);
  for (int i = 0; i < m; ++i)
    for (int t = 0; t < k; ++t) {
      if (A[i][t] == 0) continue;
      for (int j = 0; j < n; ++j) C[i][j] = f_reduce(F, C[i][j] + A[i][t] * B[t][j]);
    }
  return C;
}

FVec f_apply(const BaseField& F, const FMat& A, const FVec& v) {
  FVec out(A.size(), Rat(0));
  for (size_t i = 0; i < A.size(); ++i) {
    Rat acc(0);
    for (size_t j = 0; j < v.size(); ++j)
      if (A[i][j] != 0 && v[j] != 0) acc += A[i][j] * v[j];
    out[i] = f_reduce(F, acc);
  }
  return out;
}

FMat f_transpose(const FMat& A) {
  int m = (int)A.size(), n = m ? (int)A[0].size() : 0;
  FMat T = f_zero(n, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) T[j][i] = A[i][j];
  return T;
}

bool f_is_zero(const FMat& A) {
  for (const auto& row : A)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

std::vector<int> f_rref(const BaseField& F, FMat& M) {
  std::vector<int> pivots;
  int rows = (int)M.size();
  int cols = rows ? (int)M[0].size() : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (M[i][c] != 0) { sel = i; break; }
    if (sel < 0) continue;
    std::swap(M[r], M[sel]);
    Rat inv = f_inv(F, M[r][c]);
    for (int j = c; j < cols; ++j) M[r][j] = f_reduce(F, M[r][j] * inv);
    for (int i = 0; i < rows; ++i) {
      if (i == r || M[i][c] == 0) continue;
      Rat f = M[i][c];
      for (int j = c; j < cols; ++j) M[i][j] = f_reduce(F, M[i][j] - f * M[r][j]);
    }
    pivots.push_back(c);
    ++r;
  }
  M.resize(r);  // drop zero rows
  return pivots;
}

int f_rank(const BaseField& F, FMat M) { return (int)f_rref(F, M).size(); }

std::vector<FVec> f_kernel(const BaseField& F, const FMat& A) {
  int cols = A.empty() ? 0 : (int)A[0].size();
  FMat M = A;
  std::vector<int> pivots = f_rref(F, M);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<FVec> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    FVec v(cols, Rat(0));
    v[c] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = f_reduce(F, -M[r][c]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<FVec> f_solve(const BaseField& F, const FMat& A, const FVec& b) {
  int rows = (int)A.size();
  int cols = rows ? (int)A[0].size() : 0;
  FMat M = A;
  for (int i = 0; i < rows; ++i) M[i].push_back(b[i]);
  std::vector<int> pivots = f_rref(F, M);
  FVec x(cols, Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == cols) return std::nullopt;  // inconsistent
    x[pivots[r]] = M[r][cols];
  }
  return x;
}

FMat f_inverse(const BaseField& F, const FMat& A) {
  int n = (int)A.size();
  FMat M = A;
  for (int i = 0; i < n; ++i) {
    FVec e(n, Rat(0));
    e[i] = 1;
    M[i].insert(M[i].end(), e.begin(), e.end());
  }
  std::vector<int> pivots = f_rref(F, M);
  if ((int)pivots.size() != n || pivots.back() >= n)
    throw Error("matrix is singular");
  FMat inv = f_zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = M[i][n + j];
  return inv;
}

Subspace make_span(const BaseField& F, int ambient, FMat vectors) {
  for (const auto& v : vectors)
    if ((int)v.size() != ambient) throw Error("span: wrong vector length");
  f_rref(F, vectors);
  return Subspace{ambient, std::move(vectors)};
}

Subspace coordinate_subspace(int ambient, int first_k) {
  FMat rows;
  for (int i = 0; i < std::min(first_k, ambient); ++i) {
    FVec v(ambient, Rat(0));
    v[i] = 1;
    rows.push_back(std::move(v));
  }
  return Subspace{ambient, std::move(rows)};
}

Subspace subspace_sum(const BaseField& F, const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) throw Error("subspace ambient mismatch");
  FMat rows = a.basis;
  rows.insert(rows.end(), b.basis.begin(), b.basis.end());
  return make_span(F, a.ambient, std::move(rows));
}

Subspace subspace_intersect(const BaseField& F, const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) throw Error("subspace ambient mismatch");
  // kernel of [A^T | -B^T] glued: solve xA = yB
  int n = a.ambient;
  int da = a.dim(), db = b.dim();
  if (da == 0 || db == 0) return Subspace{n, {}};
  FMat M = f_zero(n, da + db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < n; ++j) M[j][i] = a.basis[i][j];
  for (int i = 0; i < db; ++i)
    for (int j = 0; j < n; ++j) M[j][da + i] = f_reduce(F, -b.basis[i][j]);
  FMat rows;
  for (const FVec& k : f_kernel(F, M)) {
    FVec v(n, Rat(0));
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < n; ++j) v[j] = f_reduce(F, v[j] + k[i] * a.basis[i][j]);
    rows.push_back(std::move(v));
  }
  return make_span(F, n, std::move(rows));
}

Subspace subspace_image(const BaseField& F, const FMat& M, const Subspace& W) {
  FMat rows;
  for (const auto& v : W.basis) rows.push_back(f_apply(F, M, v));
  return make_span(F, (int)M.size(), std::move(rows));
}

Subspace subspace_preimage(const BaseField& F, const FMat& M, const Subspace& W) {
  int rows_m = (int)M.size();
  int cols_m = rows_m ? (int)M[0].size() : 0;
  if (W.ambient != rows_m) throw Error("preimage: ambient mismatch");
  int k = W.dim();
  // (x, y) with Mx = W^T y ; keep x
  FMat big = f_zero(rows_m, cols_m + k);
  for (int i = 0; i < rows_m; ++i) {
    for (int j = 0; j < cols_m; ++j) big[i][j] = M[i][j];
    for (int j = 0; j < k; ++j) big[i][cols_m + j] = f_reduce(F, -W.basis[j][i]);
  }
  FMat xs;
  for (const FVec& v : f_kernel(F, big))
    xs.push_back(FVec(v.begin(), v.begin() + cols_m));
  return make_span(F, cols_m, std::move(xs));
}

bool subspace_contains(const BaseField& F, const Subspace& W, const FVec& v) {
  FVec r = v;
  for (const auto& row : W.basis) {
    int pc = -1;
    for (size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) { pc = (int)j; break; }
    if (pc < 0) continue;
    if (r[pc] != 0) {
      Rat f = r[pc];
      for (size_t j = 0; j < r.size(); ++j) r[j] = f_reduce(F, r[j] - f * row[j]);
    }
  }
  for (const auto& x : r)
    if (x != 0) return false;
  return true;
}

bool subspace_leq(const BaseField& F, const Subspace& a, const Subspace& b) {
  for (const auto& v : a.basis)
    if (!subspace_contains(F, b, v)) return false;
  return true;
}

std::optional<FVec> subspace_coords(const BaseField& F, const Subspace& W, const FVec& v) {
  if (W.dim() == 0) {
    for (const auto& x : v)
      if (x != 0) return std::nullopt;
    return FVec{};
  }
  FMat A = f_zero(W.ambient, W.dim());
  for (int i = 0; i < W.dim(); ++i)
    for (int j = 0; j < W.ambient; ++j) A[j][i] = W.basis[i][j];
  auto c = f_solve(F, A, v);
  if (!c) return std::nullopt;
  // solutions are unique: basis rows are independent; verify residual
  FVec chk(v.size(), Rat(0));
  for (int i = 0; i < W.dim(); ++i)
    for (int j = 0; j < W.ambient; ++j)
      chk[j] = f_reduce(F, chk[j] + (*c)[i] * W.basis[i][j]);
  if (chk != v) return std::nullopt;
  return c;
}

std::vector<FVec> quotient_representatives(const BaseField& F, const Subspace& big,
                                           const Subspace& small) {
  // extend small's basis through big's: greedily add big-basis vectors
  std::vector<FVec> reps;
  FMat acc = small.basis;
  Subspace cur = make_span(F, big.ambient, acc);
  for (const auto& v : big.basis) {
    if (subspace_contains(F, cur, v)) continue;
    reps.push_back(v);
    acc.push_back(v);
    cur = make_span(F, big.ambient, acc);
  }
  return reps;
}

}  // namespace diffmod
