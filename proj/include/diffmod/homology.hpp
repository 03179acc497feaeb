#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diffmod/diff_module.hpp"

namespace diffmod {

// Backend-specific description of H(D) = Ker(delta)/Im(delta).
struct HomologyPresentation {
  enum class Backend { Field, Integers, IntegersMod, Graded };
  Backend backend;

  int dim = 0;                        // field backends
  std::vector<Int> invariant_factors; // Z (0 = free summand) and Z/n
  std::map<int, int> hilbert;         // graded: degree -> dimension, no gaps
  std::vector<Elem> annihilator_verified;  // graded: minimal verified monomials
  std::optional<int> cutoff;

  bool is_zero() const;
  // Total length/dimension where that makes sense (graded: sum of table).
  Int total_size() const;
};

// Extra annihilator candidates (homogeneous elements) may be supplied for the
// graded backend; they are verified alongside all quotient-basis monomials of
// degree <= cutoff, and only divisibility-minimal verified monomials are kept.
HomologyPresentation homology(const DiffModule& D, std::optional<int> cutoff = std::nullopt,
                              const std::vector<Elem>& extra_candidates = {});

enum class Acyclicity { Yes, No, YesUpToCutoff };
Acyclicity is_acyclic(const DiffModule& D, std::optional<int> cutoff = std::nullopt);
std::string acyclicity_to_string(Acyclicity a);

struct ContractibleResult {
  bool yes = false;
  std::optional<RingMatrix> witness;  // W with W * delta * W^{-1} standard form
  std::string reason;                 // which condition fails on "no"
};
// Decision over field, Z/p^k, Z, or local graded backends. The witness
// conjugates delta to [[0, 1_r], [0, 0]].
ContractibleResult is_contractible(const DiffModule& D,
                                   std::optional<int> cutoff = std::nullopt);

// Rank of delta over the residue field of a local backend.
int residue_rank(const DiffModule& D);

// Standard form [[0, 1_r],[0, 0]] of size 2r.
RingMatrix standard_form_matrix(RingPtr ring, int r);

// dim_k H for a field-backend module.
int field_homology_dim(const DiffModule& D);

// Induced map H(D) -> H(E) of a morphism over a field backend; returns the
// matrix in the chosen representative bases together with its shape.
struct FieldHomologyMap {
  int dim_source = 0, dim_target = 0;
  FMat matrix;
};
FieldHomologyMap homology_map_field(const RingMatrix& phi, const DiffModule& D,
                                    const DiffModule& E);

// Homology of a two-step composite (A after B with A*B = 0): Ker A / Im B.
// Used for complexes; backend rules follow homology().
struct PairHomology {
  int dim = 0;                         // field
  std::vector<Int> invariant_factors;  // Z, Z/n
};
PairHomology pair_homology(const RingMatrix& A, const RingMatrix& B);

// Per-degree component machinery for graded modules (shared with spectral).
struct GradedComponents {
  const RingSpec* ring;
  std::vector<int> gen_degrees;
  int w;

  std::vector<std::pair<int, Mono>> basis(int degree) const;
  int dim(int degree) const;
  // matrix of delta from the degree-t component to degree t+w
  FMat delta_component(const RingMatrix& delta, int t) const;
};

}  // namespace diffmod
