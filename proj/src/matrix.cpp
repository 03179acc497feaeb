#include "diffmod/matrix.hpp"

#include <algorithm>

namespace diffmod {

RingMatrix matrix_zero(RingPtr ring, int rows, int cols) {
  RingMatrix M;
  M.ring = std::move(ring);
  M.rows = rows;
  M.cols = cols;
  M.entries.assign((size_t)rows * cols, elem_zero());
  return M;
}

RingMatrix matrix_identity(RingPtr ring, int n) {
  RingMatrix M = matrix_zero(ring, n, n);
  for (int i = 0; i < n; ++i) M.at(i, i) = elem_one(*M.ring);
  return M;
}

static void require_same_ring(const RingMatrix& A, const RingMatrix& B) {
  if (!A.ring->same(*B.ring))
    throw Error("ring mismatch: " + A.ring->describe() + " vs " + B.ring->describe());
}

RingMatrix matrix_product(const RingMatrix& A, const RingMatrix& B) {
  require_same_ring(A, B);
  if (A.cols != B.rows)
    throw Error("dimension mismatch: " + std::to_string(A.rows) + "x" + std::to_string(A.cols) +
                " times " + std::to_string(B.rows) + "x" + std::to_string(B.cols));
  RingMatrix C = matrix_zero(A.ring, A.rows, B.cols);
  const RingSpec& R = *A.ring;
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      if (A.at(i, k).is_zero()) continue;
      for (int j = 0; j < B.cols; ++j) {
        if (B.at(k, j).is_zero()) continue;
        C.at(i, j) = add(R, C.at(i, j), mul(R, A.at(i, k), B.at(k, j)));
      }
    }
  return C;
}

RingMatrix matrix_add(const RingMatrix& A, const RingMatrix& B) {
  require_same_ring(A, B);
  if (A.rows != B.rows || A.cols != B.cols) throw Error("dimension mismatch in matrix sum");
  RingMatrix C = A;
  for (size_t i = 0; i < C.entries.size(); ++i)
    C.entries[i] = add(*A.ring, A.entries[i], B.entries[i]);
  return C;
}

RingMatrix matrix_neg(const RingMatrix& A) {
  RingMatrix C = A;
  for (auto& e : C.entries) e = neg(*A.ring, e);
  return C;
}

RingMatrix matrix_scalar(const RingMatrix& A, const Elem& c) {
  RingMatrix C = A;
  for (auto& e : C.entries) e = mul(*A.ring, e, c);
  return C;
}

RingMatrix matrix_transpose(const RingMatrix& A) {
  RingMatrix T = matrix_zero(A.ring, A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

bool matrix_is_zero(const RingMatrix& A) {
  for (const auto& e : A.entries)
    if (!e.is_zero()) return false;
  return true;
}

bool matrix_is_strictly_upper_triangular(const RingMatrix& A) {
  if (A.rows != A.cols) return false;
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j <= i; ++j)
      if (!A.at(i, j).is_zero()) return false;
  return true;
}

RingMatrix submatrix(const RingMatrix& A, const std::vector<int>& rows,
                     const std::vector<int>& cols) {
  RingMatrix S = matrix_zero(A.ring, (int)rows.size(), (int)cols.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) S.at((int)i, (int)j) = A.at(rows[i], cols[j]);
  return S;
}

RingMatrix matrix_from_blocks(RingPtr ring, int block_rows, int block_cols,
                              const std::vector<std::vector<const RingMatrix*>>& blocks) {
  std::vector<int> rh(block_rows, -1), cw(block_cols, -1);
  for (int i = 0; i < block_rows; ++i)
    for (int j = 0; j < block_cols; ++j) {
      const RingMatrix* b = blocks[i][j];
      if (!b) continue;
      if (rh[i] < 0) rh[i] = b->rows;
      else if (rh[i] != b->rows) throw Error("inconsistent block heights");
      if (cw[j] < 0) cw[j] = b->cols;
      else if (cw[j] != b->cols) throw Error("inconsistent block widths");
    }
  for (int i = 0; i < block_rows; ++i)
    if (rh[i] < 0) throw Error("undetermined block height");
  for (int j = 0; j < block_cols; ++j)
    if (cw[j] < 0) throw Error("undetermined block width");
  int rows = 0, cols = 0;
  for (int h : rh) rows += h;
  for (int w : cw) cols += w;
  RingMatrix M = matrix_zero(std::move(ring), rows, cols);
  int roff = 0;
  for (int i = 0; i < block_rows; ++i) {
    int coff = 0;
    for (int j = 0; j < block_cols; ++j) {
      if (const RingMatrix* b = blocks[i][j]) {
        for (int r = 0; r < b->rows; ++r)
          for (int c = 0; c < b->cols; ++c) M.at(roff + r, coff + c) = b->at(r, c);
      }
      coff += cw[j];
    }
    roff += rh[i];
  }
  return M;
}

Elem matrix_det(const RingMatrix& A) {
  if (A.rows != A.cols) throw Error("determinant of a non-square matrix");
  int n = A.rows;
  const RingSpec& R = *A.ring;
  if (n == 0) return elem_one(R);
  // Laplace expansion along the first remaining row with column-subset memo;
  // fine at the sizes this toolkit handles and division-free for all backends.
  std::vector<std::vector<Elem>> memo(1u << n);
  // memo[mask] = det of rows [n - popcount(mask)..n) on columns in mask
  std::vector<Elem> base{elem_one(R)};
  memo[0] = base;
  std::vector<unsigned> by_count((size_t)1u << n);
  std::vector<std::vector<unsigned>> masks(n + 1);
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    masks[__builtin_popcount(mask)].push_back(mask);
  for (int k = 1; k <= n; ++k) {
    for (unsigned mask : masks[k]) {
      int row = n - k;
      Elem acc = elem_zero();
      int sign = 1;
      for (int j = 0; j < n; ++j) {
        if (!(mask & (1u << j))) continue;
        const Elem& a = A.at(row, j);
        if (!a.is_zero()) {
          Elem sub = memo[mask ^ (1u << j)][0];
          Elem term = mul(R, a, sub);
          acc = (sign > 0) ? add(R, acc, term) : diffmod::sub(R, acc, term);
        }
        sign = -sign;
      }
      memo[mask] = {acc};
    }
    // free the previous layer
    if (k >= 2)
      for (unsigned mask : masks[k - 2]) memo[mask].clear();
  }
  return memo[(1u << n) - 1][0];
}

FMat to_field_matrix(const RingMatrix& A) {
  FMat M = f_zero(A.rows, A.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) {
      const Elem& e = A.at(i, j);
      if (e.is_zero()) continue;
      if (!is_constant(e)) throw Error("matrix entry is not a scalar");
      M[i][j] = constant_coeff(e);
    }
  return M;
}

RingMatrix from_field_matrix(RingPtr ring, const FMat& M) {
  int rows = (int)M.size(), cols = rows ? (int)M[0].size() : 0;
  RingMatrix A = matrix_zero(std::move(ring), rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) A.at(i, j) = elem_from_rat(*A.ring, M[i][j]);
  return A;
}

RingMatrix matrix_inverse(const RingMatrix& A) {
  if (A.rows != A.cols) throw Error("inverse of a non-square matrix");
  const RingSpec& R = *A.ring;
  if (R.is_field()) {
    BaseField F{R.kind == RingKind::PrimeField ? R.modulus : Int(0)};
    return from_field_matrix(A.ring, f_inverse(F, to_field_matrix(A)));
  }
  Elem d = matrix_det(A);
  if (!is_unit(R, d))
    throw Error("matrix is not invertible over " + R.describe() +
                " (determinant " + to_string(R, d) + ")");
  Elem dinv = unit_inverse(R, d);
  int n = A.rows;
  RingMatrix inv = matrix_zero(A.ring, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> rows, cols;
      for (int r = 0; r < n; ++r)
        if (r != j) rows.push_back(r);
      for (int c = 0; c < n; ++c)
        if (c != i) cols.push_back(c);
      Elem minor = matrix_det(submatrix(A, rows, cols));
      if ((i + j) % 2 == 1) minor = neg(R, minor);
      inv.at(i, j) = mul(R, minor, dinv);
    }
  return inv;
}

// --------------------------------------------------------------- Z kernels

ZMat z_identity(int n) {
  ZMat I(n, ZVec(n, 0));
  for (int i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

ZMat z_mul(const ZMat& A, const ZMat& B) {
  int m = (int)A.size(), k = m ? (int)A[0].size() : 0;
  int n = B.empty() ? 0 : (int)B[0].size();
  if ((int)B.size() != k) throw Error("integer matrix dimension mismatch");
  ZMat C(m, ZVec(n, 0));
  for (int i = 0; i < m; ++i)
    for (int t = 0; t < k; ++t) {
      if (A[i][t] == 0) continue;
      for (int j = 0; j < n; ++j) C[i][j] += A[i][t] * B[t][j];
    }
  return C;
}

Int z_det(ZMat A) {
  int n = (int)A.size();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (A[k][k] == 0) {
      int sel = -1;
      for (int i = k + 1; i < n; ++i)
        if (A[i][k] != 0) { sel = i; break; }
      if (sel < 0) return 0;
      std::swap(A[k], A[sel]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = A[i][j] * A[k][k] - A[i][k] * A[k][j];
        A[i][j] = num / prev;  // exact by Bareiss
      }
    prev = A[k][k];
  }
  return sign * A[n - 1][n - 1];
}

namespace {

struct SnfState {
  ZMat A, U, V;
  int m, n;

  void swap_rows(int a, int b) {
    if (a == b) return;
    std::swap(A[a], A[b]);
    std::swap(U[a], U[b]);
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (auto& row : A) std::swap(row[a], row[b]);
    for (auto& row : V) std::swap(row[a], row[b]);
  }
  void add_row(int dst, int src, const Int& f) {  // row dst += f * row src
    for (int j = 0; j < n; ++j) A[dst][j] += f * A[src][j];
    for (int j = 0; j < m; ++j) U[dst][j] += f * U[src][j];
  }
  void add_col(int dst, int src, const Int& f) {
    for (int i = 0; i < m; ++i) A[i][dst] += f * A[i][src];
    for (int i = 0; i < n; ++i) V[i][dst] += f * V[i][src];
  }
  void negate_row(int r) {
    for (int j = 0; j < n; ++j) A[r][j] = -A[r][j];
    for (int j = 0; j < m; ++j) U[r][j] = -U[r][j];
  }
};

}  // namespace

SmithZ smith_z(const ZMat& input) {
  SnfState st;
  st.A = input;
  st.m = (int)input.size();
  st.n = st.m ? (int)input[0].size() : 0;
  if (st.m && !st.n) st.n = 0;
  st.U = z_identity(st.m);
  st.V = z_identity(st.n);
  int k = 0;
  int minmn = std::min(st.m, st.n);
  while (k < minmn) {
    // smallest-absolute-value nonzero pivot, ties broken row-major
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = k; i < st.m; ++i)
      for (int j = k; j < st.n; ++j) {
        if (st.A[i][j] == 0) continue;
        Int a = abs(st.A[i][j]);
        if (pi < 0 || a < best) { best = a; pi = i; pj = j; }
      }
    if (pi < 0) break;  // rest is zero
    st.swap_rows(k, pi);
    st.swap_cols(k, pj);
    bool clean = true;
    for (int i = k + 1; i < st.m; ++i) {
      if (st.A[i][k] == 0) continue;
      Int q = st.A[i][k] / st.A[k][k];
      // round toward the smaller remainder
      Int r = st.A[i][k] - q * st.A[k][k];
      st.add_row(i, k, -q);
      if (r != 0) clean = false;
    }
    for (int j = k + 1; j < st.n; ++j) {
      if (st.A[k][j] == 0) continue;
      Int q = st.A[k][j] / st.A[k][k];
      Int r = st.A[k][j] - q * st.A[k][k];
      st.add_col(j, k, -q);
      if (r != 0) clean = false;
    }
    if (!clean) continue;  // pivot search again with smaller entries present
    bool zeroed = true;
    for (int i = k + 1; i < st.m && zeroed; ++i)
      if (st.A[i][k] != 0) zeroed = false;
    for (int j = k + 1; j < st.n && zeroed; ++j)
      if (st.A[k][j] != 0) zeroed = false;
    if (!zeroed) continue;
    ++k;
  }
  // positive diagonal
  for (int i = 0; i < minmn; ++i)
    if (st.A[i][i] < 0) st.negate_row(i);
  // enforce divisibility chain
  for (int i = 0; i + 1 < minmn; ++i) {
    if (st.A[i][i] == 0) {
      // push zeros to the end
      for (int j = i + 1; j < minmn; ++j)
        if (st.A[j][j] != 0) {
          st.swap_rows(i, j);
          st.swap_cols(i, j);
          break;
        }
      if (st.A[i][i] == 0) break;
    }
    if (st.A[i + 1][i + 1] % st.A[i][i] == 0) continue;
    // mix the pair: diag (a, b) becomes [[a, 0], [b, b]], then Euclid on
    // the column pair turns it into diag (gcd, ab/gcd)
    st.add_col(i, i + 1, 1);
    while (st.A[i + 1][i] != 0) {
      Int q = st.A[i][i] / st.A[i + 1][i];
      st.add_row(i, i + 1, -q);
      st.swap_rows(i, i + 1);
    }
    {
      Int q = st.A[i][i + 1] / st.A[i][i];  // divisibility holds: gcd | b
      st.add_col(i + 1, i, -q);
    }
    for (int r = 0; r < minmn; ++r)
      if (st.A[r][r] < 0) st.negate_row(r);
    i = -1;  // restart the chain scan
  }
  return SmithZ{st.U, st.A, st.V};
}

std::vector<ZVec> z_kernel(const ZMat& A) {
  int n = A.empty() ? 0 : (int)A[0].size();
  if ((int)A.size() == 0) {
    std::vector<ZVec> basis;
    for (int i = 0; i < n; ++i) {
      ZVec v(n, 0);
      v[i] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  SmithZ snf = smith_z(A);
  int m = (int)A.size();
  int minmn = std::min(m, n);
  std::vector<ZVec> basis;
  for (int j = 0; j < n; ++j) {
    bool zero_col = j >= minmn || snf.S[j][j] == 0;
    if (!zero_col) continue;
    ZVec v(n, 0);
    for (int i = 0; i < n; ++i) v[i] = snf.V[i][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

ZMat z_column_hnf(const ZMat& gens) {
  // column-style Hermite form: canonical basis of the column lattice
  int m = (int)gens.size();
  int n = m ? (int)gens[0].size() : 0;
  ZMat A = gens;
  int row = 0, col = 0;
  while (row < m && col < n) {
    int sel = -1;
    for (int j = col; j < n; ++j)
      if (A[row][j] != 0) { sel = j; break; }
    if (sel < 0) { ++row; continue; }
    for (auto& r : A) std::swap(r[col], r[sel]);
    // gcd out the row among columns >= col
    while (true) {
      int nz = -1;
      for (int j = col + 1; j < n; ++j)
        if (A[row][j] != 0) { nz = j; break; }
      if (nz < 0) break;
      if (abs(A[row][nz]) < abs(A[row][col]))
        for (auto& r : A) std::swap(r[col], r[nz]);
      Int q = A[row][nz] / A[row][col];
      for (int i = 0; i < m; ++i) A[i][nz] -= q * A[i][col];
      if (A[row][nz] != 0)
        for (auto& r : A) std::swap(r[col], r[nz]);
    }
    if (A[row][col] < 0)
      for (int i = 0; i < m; ++i) A[i][col] = -A[i][col];
    // reduce earlier columns
    for (int j = 0; j < col; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), A[row][j].get_mpz_t(), A[row][col].get_mpz_t());
      if (q != 0)
        for (int i = 0; i < m; ++i) A[i][j] -= q * A[i][col];
    }
    ++row;
    ++col;
  }
  // drop zero columns, keep order
  ZMat out(m);
  for (int j = 0; j < n; ++j) {
    bool zero = true;
    for (int i = 0; i < m; ++i)
      if (A[i][j] != 0) { zero = false; break; }
    if (!zero)
      for (int i = 0; i < m; ++i) out[i].push_back(A[i][j]);
  }
  return out;
}

std::optional<ZVec> z_solve(const ZMat& A, const ZVec& b) {
  int m = (int)A.size(), n = m ? (int)A[0].size() : 0;
  SmithZ snf = smith_z(A);
  // S y = U b, x = V y
  ZVec ub(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) ub[i] += snf.U[i][j] * b[j];
  ZVec y(n, 0);
  int minmn = std::min(m, n);
  for (int i = 0; i < m; ++i) {
    Int d = i < minmn ? snf.S[i][i] : Int(0);
    if (d == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % d != 0) return std::nullopt;
      y[i] = ub[i] / d;
    }
  }
  ZVec x(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x[i] += snf.V[i][j] * y[j];
  return x;
}

// --------------------------------------------------- SNF over the backend

ZMat matrix_to_zmat(const RingMatrix& A) {
  ZMat M((size_t)A.rows, ZVec((size_t)A.cols, 0));
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) {
      const Elem& e = A.at(i, j);
      if (e.is_zero()) continue;
      if (!is_constant(e)) throw Error("matrix entry is not an integer");
      Rat c = constant_coeff(e);
      if (c.get_den() != 1) throw Error("matrix entry is not an integer");
      M[i][j] = c.get_num();
    }
  return M;
}

RingMatrix zmat_to_matrix(RingPtr ring, const ZMat& M) {
  int rows = (int)M.size(), cols = rows ? (int)M[0].size() : 0;
  RingMatrix A = matrix_zero(std::move(ring), rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) A.at(i, j) = elem_from_int(*A.ring, M[i][j]);
  return A;
}

namespace {

// Smallest "norm" gcd(lift, n) drives pivoting over Z/n.
Int mod_norm(const Int& a, const Int& n) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return g;
}

// unit u (mod n) with u*a = gcd(a, n) (mod n)
Int unit_scaling_to_gcd(const Int& a, const Int& n) {
  Int g = mod_norm(a, n);
  Int ap = a / g, np = n / g;
  Int u0;
  if (np == 1) u0 = 1;
  else if (mpz_invert(u0.get_mpz_t(), ap.get_mpz_t(), np.get_mpz_t()) == 0)
    throw Error("internal: expected invertible residue");
  Int u = u0 == 0 ? np : u0;
  while (mod_norm(u, n) != 1) u += np;
  return u % n;
}

struct ModSnfState {
  ZMat A, U, V;
  Int n;
  int m, c;

  void reduce() {
    for (auto& row : A)
      for (auto& x : row) { x %= n; if (x < 0) x += n; }
  }
  void scale_row(int r, const Int& u) {
    for (auto& x : A[r]) x = (x * u) % n;
    for (auto& x : U[r]) x = (x * u) % n;
  }
  void swap_rows(int a, int b) {
    if (a == b) return;
    std::swap(A[a], A[b]);
    std::swap(U[a], U[b]);
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (auto& row : A) std::swap(row[a], row[b]);
    for (auto& row : V) std::swap(row[a], row[b]);
  }
  void add_row(int dst, int src, const Int& f) {
    for (int j = 0; j < c; ++j) A[dst][j] = (A[dst][j] + f * A[src][j]) % n;
    for (int j = 0; j < m; ++j) U[dst][j] = (U[dst][j] + f * U[src][j]) % n;
  }
  void add_col(int dst, int src, const Int& f) {
    for (int i = 0; i < m; ++i) A[i][dst] = (A[i][dst] + f * A[i][src]) % n;
    for (int i = 0; i < c; ++i) V[i][dst] = (V[i][dst] + f * V[i][src]) % n;
  }
};

SmithResult smith_mod_n(const RingMatrix& Ain) {
  ModSnfState st;
  st.A = matrix_to_zmat(Ain);
  st.n = Ain.ring->modulus;
  st.m = Ain.rows;
  st.c = Ain.cols;
  st.U = z_identity(st.m);
  st.V = z_identity(st.c);
  int minmn = std::min(st.m, st.c);
  int k = 0;
  while (k < minmn) {
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = k; i < st.m; ++i)
      for (int j = k; j < st.c; ++j) {
        if (st.A[i][j] % st.n == 0) continue;
        Int nm = mod_norm(st.A[i][j], st.n);
        if (pi < 0 || nm < best) { best = nm; pi = i; pj = j; }
      }
    if (pi < 0) break;
    st.swap_rows(k, pi);
    st.swap_cols(k, pj);
    Int u = unit_scaling_to_gcd(st.A[k][k], st.n);
    st.scale_row(k, u);
    st.reduce();
    // now A[k][k] = gcd(old, n), which divides n
    Int piv = st.A[k][k];
    bool clean = true;
    for (int i = k + 1; i < st.m; ++i) {
      if (st.A[i][k] == 0) continue;
      st.add_row(i, k, -(st.A[i][k] / piv));
      if (st.A[i][k] % st.n != 0) clean = false;  // remainder < piv survives
    }
    for (int j = k + 1; j < st.c; ++j) {
      if (st.A[k][j] == 0) continue;
      st.add_col(j, k, -(st.A[k][j] / piv));
      if (st.A[k][j] % st.n != 0) clean = false;
    }
    st.reduce();
    if (!clean) continue;  // a smaller-norm entry appeared; re-pivot
    ++k;
  }
  // divisibility chain on canonical lifts
  for (int i = 0; i + 1 < minmn; ++i) {
    Int a = st.A[i][i], b = st.A[i + 1][i + 1];
    if (a == 0 && b != 0) {
      st.swap_rows(i, i + 1);
      st.swap_cols(i, i + 1);
      std::swap(a, b);
    }
    if (a == 0 || b % a == 0) continue;
    // mix the pair and rediagonalize it: [a 0; 0 b] -> [g 0; 0 y] with g | y
    st.add_col(i, i + 1, 1);
    while (st.A[i + 1][i] != 0) {
      if (mod_norm(st.A[i + 1][i], st.n) < mod_norm(st.A[i][i], st.n))
        st.swap_rows(i, i + 1);
      Int uu = unit_scaling_to_gcd(st.A[i][i], st.n);
      st.scale_row(i, uu);
      st.reduce();
      st.add_row(i + 1, i, -(st.A[i + 1][i] / st.A[i][i]));
      st.reduce();
    }
    Int uu = unit_scaling_to_gcd(st.A[i][i], st.n);
    st.scale_row(i, uu);
    st.reduce();
    Int piv = st.A[i][i];
    if (st.A[i][i + 1] % piv != 0) throw Error("internal: mod-n SNF chain repair failed");
    st.add_col(i + 1, i, -(st.A[i][i + 1] / piv));
    st.reduce();
    i = -1;  // restart scan
  }
  SmithResult out;
  out.U = zmat_to_matrix(Ain.ring, st.U);
  out.S = zmat_to_matrix(Ain.ring, st.A);
  out.V = zmat_to_matrix(Ain.ring, st.V);
  return out;
}

}  // namespace

SmithResult smith_normal_form(const RingMatrix& A) {
  switch (A.ring->kind) {
    case RingKind::Integers: {
      SmithZ s = smith_z(matrix_to_zmat(A));
      return SmithResult{zmat_to_matrix(A.ring, s.U), zmat_to_matrix(A.ring, s.S),
                         zmat_to_matrix(A.ring, s.V)};
    }
    case RingKind::IntegersMod:
    case RingKind::PrimeField:
      return smith_mod_n(A);
    default:
      throw Error("smith_normal_form: backend must be Z or Z/n, got " + A.ring->describe());
  }
}

}  // namespace diffmod
