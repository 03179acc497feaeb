#pragma once

#include <optional>
#include <vector>

#include "diffmod/linalg.hpp"
#include "diffmod/ring.hpp"

namespace diffmod {

// Dense matrix of exact ring elements over one RingSpec.
struct RingMatrix {
  RingPtr ring;
  int rows = 0, cols = 0;
  std::vector<Elem> entries;  // row-major

  Elem& at(int i, int j) { return entries[(size_t)i * cols + j]; }
  const Elem& at(int i, int j) const { return entries[(size_t)i * cols + j]; }
  bool operator==(const RingMatrix& o) const {
    return rows == o.rows && cols == o.cols && ring->same(*o.ring) && entries == o.entries;
  }
};

RingMatrix matrix_zero(RingPtr ring, int rows, int cols);
RingMatrix matrix_identity(RingPtr ring, int n);
RingMatrix matrix_product(const RingMatrix& A, const RingMatrix& B);
RingMatrix matrix_add(const RingMatrix& A, const RingMatrix& B);
RingMatrix matrix_neg(const RingMatrix& A);
RingMatrix matrix_scalar(const RingMatrix& A, const Elem& c);
RingMatrix matrix_transpose(const RingMatrix& A);
bool matrix_is_zero(const RingMatrix& A);
bool matrix_is_strictly_upper_triangular(const RingMatrix& A);
RingMatrix submatrix(const RingMatrix& A, const std::vector<int>& rows,
                     const std::vector<int>& cols);
// Block-diagonal / stacked assembly helper.
RingMatrix matrix_from_blocks(RingPtr ring, int block_rows, int block_cols,
                              const std::vector<std::vector<const RingMatrix*>>& blocks);

Elem matrix_det(const RingMatrix& A);
// Exact inverse; requires unit determinant representable over the ring.
RingMatrix matrix_inverse(const RingMatrix& A);

// Entries of a field-backend matrix (or constant entries) as a field matrix.
FMat to_field_matrix(const RingMatrix& A);
RingMatrix from_field_matrix(RingPtr ring, const FMat& M);

// --- integer lattice kernels -------------------------------------------

using ZVec = std::vector<Int>;
using ZMat = std::vector<ZVec>;  // row-major

ZMat z_identity(int n);
ZMat z_mul(const ZMat& A, const ZMat& B);
Int z_det(ZMat A);  // Bareiss

struct SmithZ {
  ZMat U, S, V;  // U*A*V = S, U and V unimodular, S diagonal with d_i | d_{i+1}
};
SmithZ smith_z(const ZMat& A);

// Basis vectors of {x : Ax = 0} over Z (spanning the full saturated kernel).
std::vector<ZVec> z_kernel(const ZMat& A);
// Column-style Hermite normal form of the lattice spanned by the columns.
ZMat z_column_hnf(const ZMat& generators);
std::optional<ZVec> z_solve(const ZMat& A, const ZVec& b);

// --- Smith normal form over the ring -----------------------------------

struct SmithResult {
  RingMatrix U, S, V;  // U*A*V = S over Z or Z/n
};
// Backend must be integers or integers-mod(n); over Z/n the diagonal
// divisibility chain holds for the canonical lifts.
SmithResult smith_normal_form(const RingMatrix& A);

ZMat matrix_to_zmat(const RingMatrix& A);  // integers / integers-mod lifts
RingMatrix zmat_to_matrix(RingPtr ring, const ZMat& M);

}  // namespace diffmod
