#pragma once

#include <optional>
#include <vector>

#include "diffmod/matrix.hpp"

namespace diffmod {

// Internal grading of a differential module over a graded ring: generator
// degrees g_1..g_s and the degree w of the differential, so that every
// nonzero entry a_ij is homogeneous of degree g_j - g_i + w.
struct Grading {
  std::vector<int> gen_degrees;
  int diff_degree = 0;
  bool operator==(const Grading& o) const = default;
};

// A square-zero matrix acting on a free module, the paper's (D, delta).
struct DiffModule {
  RingPtr ring;
  int size = 0;
  RingMatrix delta;
  std::optional<Grading> grading;

  bool operator==(const DiffModule& o) const {
    return size == o.size && delta == o.delta && grading == o.grading;
  }
};

// Bounded complex of finite free modules; diffs[k] maps degree lo+k+1 to
// degree lo+k and has shape ranks[k] x ranks[k+1].
struct FreeComplex {
  RingPtr ring;
  int lo = 0, hi = 0;
  std::vector<int> ranks;
  std::vector<RingMatrix> diffs;

  int length() const { return hi - lo; }
  int rank_at(int n) const { return (n < lo || n > hi) ? 0 : ranks[n - lo]; }
};

FreeComplex make_free_complex(RingPtr ring, int lo, std::vector<int> ranks,
                              std::vector<RingMatrix> diffs);

// Validates delta^2 = 0 and, when a grading is given, homogeneity of every
// nonzero entry. Error messages name the offending entry.
DiffModule make_diff_module(RingPtr ring, RingMatrix delta,
                            std::optional<Grading> grading = std::nullopt);

DiffModule suspension(const DiffModule& D);

// Cone of a morphism phi : D -> E, block layout [[-delta_D, 0], [phi, delta_E]]
// with D-generators before E-generators.
DiffModule cone(const RingMatrix& phi, const DiffModule& D, const DiffModule& E);

// Compression: direct sum of the complex with the d_n on the superdiagonal
// blocks, blocks ordered by ascending homological degree. Over a graded ring
// with homogeneous differentials the result is graded with diff degree -1.
DiffModule compress(const FreeComplex& X);

// Two-periodic expansion ... -> D -> D -> ... truncated to [lo, hi].
FreeComplex expand(const DiffModule& D, int lo, int hi);

// X box-tensor D with the sign rule d(x ⊗ m) = dx ⊗ m + (-1)^|x| x ⊗ delta m;
// blocks ordered by ascending complex degree, then module index.
DiffModule tensor(const FreeComplex& X, const DiffModule& D);

DiffModule direct_sum(const DiffModule& D, const DiffModule& E);

// Base change to the residue field of a local backend (entrywise reduction).
DiffModule residue_reduction(const DiffModule& D);

// Koszul compression on ring elements: rank 2^e with subset basis ordered by
// (cardinality, subset index); graded with diff degree -1 when the elements
// are homogeneous.
DiffModule koszul_compression(RingPtr ring, const std::vector<Elem>& elements);
FreeComplex koszul_complex(RingPtr ring, const std::vector<Elem>& elements);

// Generator degrees making delta homogeneous of degree w, pinned to 0 at the
// first generator of each connected component; nullopt if none exist.
std::optional<std::vector<int>> infer_grading(const RingSpec& R, const RingMatrix& delta,
                                              int w);

}  // namespace diffmod
