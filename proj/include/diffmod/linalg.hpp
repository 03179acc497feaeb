#pragma once

#include <optional>
#include <vector>

#include "diffmod/ring.hpp"

namespace diffmod {

// Dense exact linear algebra over a base field (Q, or F_p on canonical lifts).
// Values are mpq_class; over F_p they are kept reduced in [0, p).

using FVec = std::vector<Rat>;
using FMat = std::vector<FVec>;  // row-major

Rat f_reduce(const BaseField& F, Rat x);
Rat f_inv(const BaseField& F, const Rat& x);

FMat f_zero(int rows, int cols);
FMat f_identity(int n);
FMat f_mul(const BaseField& F, const FMat& A, const FMat& B);
FVec f_apply(const BaseField& F, const FMat& A, const FVec& v);
FMat f_transpose(const FMat& A);
bool f_is_zero(const FMat& A);

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> f_rref(const BaseField& F, FMat& M);
int f_rank(const BaseField& F, FMat M);
// Basis of {x : Ax = 0}, one vector per entry.
std::vector<FVec> f_kernel(const BaseField& F, const FMat& A);
std::optional<FVec> f_solve(const BaseField& F, const FMat& A, const FVec& b);
FMat f_inverse(const BaseField& F, const FMat& A);

// A subspace of k^ambient, basis rows kept in RREF (canonical representation).
struct Subspace {
  int ambient = 0;
  FMat basis;  // RREF rows

  int dim() const { return static_cast<int>(basis.size()); }
  bool operator==(const Subspace& o) const { return ambient == o.ambient && basis == o.basis; }
};

Subspace make_span(const BaseField& F, int ambient, FMat vectors);
Subspace coordinate_subspace(int ambient, int first_k);
Subspace subspace_sum(const BaseField& F, const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const BaseField& F, const Subspace& a, const Subspace& b);
// Image M(W) inside k^{rows(M)}.
Subspace subspace_image(const BaseField& F, const FMat& M, const Subspace& W);
// Preimage {x : Mx in W}.
Subspace subspace_preimage(const BaseField& F, const FMat& M, const Subspace& W);
bool subspace_contains(const BaseField& F, const Subspace& W, const FVec& v);
bool subspace_leq(const BaseField& F, const Subspace& a, const Subspace& b);
// Coordinates of v in W's basis; nullopt if v is outside W.
std::optional<FVec> subspace_coords(const BaseField& F, const Subspace& W, const FVec& v);
// Representatives of big/small: vectors of big completing a basis of small.
std::vector<FVec> quotient_representatives(const BaseField& F, const Subspace& big,
                                           const Subspace& small);

}  // namespace diffmod
