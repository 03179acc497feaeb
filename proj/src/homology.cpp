#include "diffmod/homology.hpp"

#include <algorithm>

namespace diffmod {

bool HomologyPresentation::is_zero() const {
  switch (backend) {
    case Backend::Field: return dim == 0;
    case Backend::Integers:
    case Backend::IntegersMod: return invariant_factors.empty();
    case Backend::Graded:
      for (const auto& [d, v] : hilbert)
        if (v != 0) return false;
      return true;
  }
  return false;
}

Int HomologyPresentation::total_size() const {
  switch (backend) {
    case Backend::Field: return dim;
    case Backend::Integers:
    case Backend::IntegersMod: {
      Int n = 0;
      for (const Int& f : invariant_factors) n += 1;  // number of cyclic summands
      return n;
    }
    case Backend::Graded: {
      Int n = 0;
      for (const auto& [d, v] : hilbert) n += v;
      return n;
    }
  }
  return 0;
}

// ------------------------------------------------------------- components

std::vector<std::pair<int, Mono>> GradedComponents::basis(int degree) const {
  std::vector<std::pair<int, Mono>> out;
  for (size_t j = 0; j < gen_degrees.size(); ++j) {
    int d = degree - gen_degrees[j];
    if (d < 0) continue;
    for (const Mono& m : ring->degree_data(d).basis) out.emplace_back((int)j, m);
  }
  return out;
}

int GradedComponents::dim(int degree) const { return (int)basis(degree).size(); }

FMat GradedComponents::delta_component(const RingMatrix& delta, int t) const {
  auto dom = basis(t);
  auto cod = basis(t + w);
  std::map<std::pair<int, Mono>, int> cod_index;
  for (size_t i = 0; i < cod.size(); ++i) cod_index[cod[i]] = (int)i;
  FMat M = f_zero((int)cod.size(), (int)dom.size());
  for (size_t c = 0; c < dom.size(); ++c) {
    auto [j, m] = dom[c];
    Elem me = elem_monomial(*ring, m, Rat(1));
    for (size_t i = 0; i < gen_degrees.size(); ++i) {
      const Elem& a = delta.at((int)i, j);
      if (a.is_zero()) continue;
      Elem prod = mul(*ring, a, me);
      for (const auto& [pm, pc] : prod.terms) {
        auto it = cod_index.find({(int)i, pm});
        if (it == cod_index.end())
          throw Error("internal: homogeneity violated in graded component map");
        M[it->second][(size_t)c] = pc;
      }
    }
  }
  return M;
}

namespace {

BaseField field_of(const RingSpec& R) {
  switch (R.kind) {
    case RingKind::Rationals: return BaseField{Int(0)};
    case RingKind::PrimeField: return BaseField{R.modulus};
    case RingKind::GradedPoly: return R.base;
    default: throw Error("not a field-coefficient backend");
  }
}

std::vector<FVec> kernel_or_everything(const BaseField& F, const FMat& A, int ncols) {
  if (A.empty() || ncols == 0) {
    std::vector<FVec> basis;
    for (int i = 0; i < ncols; ++i) {
      FVec v(ncols, Rat(0));
      v[i] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  return f_kernel(F, A);
}

GradedComponents components_of(const DiffModule& D) {
  if (!D.ring->is_graded()) throw Error("graded components need a graded backend");
  if (!D.grading)
    throw Error("graded homology requires grading data (generator degrees and "
                "differential degree)");
  return GradedComponents{D.ring.get(), D.grading->gen_degrees, D.grading->diff_degree};
}

// invariant factors of Z^k / im(X), X given by columns; 0 marks free summands
std::vector<Int> quotient_factors(int k, const ZMat& X) {
  std::vector<Int> out;
  if (k == 0) return out;
  if (X.empty() || X[0].empty()) {
    out.assign(k, Int(0));
    return out;
  }
  SmithZ s = smith_z(X);
  int minmn = std::min((int)X.size(), (int)X[0].size());
  int nonzero = 0;
  for (int i = 0; i < minmn; ++i) {
    if (s.S[i][i] == 0) break;
    ++nonzero;
    if (s.S[i][i] != 1) out.push_back(s.S[i][i]);
  }
  for (int i = nonzero; i < k; ++i) out.push_back(0);
  return out;
}

// --- Z backend: Ker A / Im B as invariant factors (A*B = 0 assumed) ---
std::vector<Int> z_pair_factors(const ZMat& A, const ZMat& B, int n) {
  // kernel lattice of A inside Z^n
  std::vector<ZVec> kernel =
      A.empty() ? std::vector<ZVec>() : z_kernel(A);
  if (A.empty()) {
    for (int i = 0; i < n; ++i) {
      ZVec v(n, 0);
      v[i] = 1;
      kernel.push_back(std::move(v));
    }
  }
  int k = (int)kernel.size();
  ZMat K(n, ZVec(k, 0));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) K[i][j] = kernel[j][i];
  // express the columns of B in the kernel basis
  int cols = B.empty() ? 0 : (int)B[0].size();
  ZMat X(k, ZVec(cols, 0));
  for (int c = 0; c < cols; ++c) {
    ZVec b(n, 0);
    for (int i = 0; i < n; ++i) b[i] = B[i][c];
    auto x = z_solve(K, b);
    if (!x) throw Error("internal: image does not lie in the kernel");
    for (int i = 0; i < k; ++i) X[i][c] = (*x)[i];
  }
  return quotient_factors(k, X);
}

// --- Z/n backend: (Ker A / Im B) over Z/n via integer lattices ---
std::vector<Int> modn_pair_factors(const ZMat& A, const ZMat& B, int n, const Int& mod) {
  // L = {v in Z^n : Av = 0 (mod m)}, via kernel of [A | m*I_rows]
  int arows = (int)A.size();
  std::vector<ZVec> lbasis;
  if (arows == 0) {
    for (int i = 0; i < n; ++i) {
      ZVec v(n, 0);
      v[i] = 1;
      lbasis.push_back(std::move(v));
    }
  } else {
    ZMat big(arows, ZVec(n + arows, 0));
    for (int i = 0; i < arows; ++i) {
      for (int j = 0; j < n; ++j) big[i][j] = A[i][j];
      big[i][n + i] = mod;
    }
    for (const ZVec& v : z_kernel(big)) lbasis.push_back(ZVec(v.begin(), v.begin() + n));
  }
  int k = (int)lbasis.size();
  ZMat L(n, ZVec(k, 0));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) L[i][j] = lbasis[j][i];
  // M = Im B + m Z^n, expressed in the L basis
  int bcols = B.empty() ? 0 : (int)B[0].size();
  ZMat X(k, ZVec(bcols + n, 0));
  for (int c = 0; c < bcols + n; ++c) {
    ZVec g(n, 0);
    if (c < bcols)
      for (int i = 0; i < n; ++i) g[i] = B[i][c];
    else
      g[c - bcols] = mod;
    auto x = z_solve(L, g);
    if (!x) throw Error("internal: image does not lie in the mod-n kernel");
    for (int i = 0; i < k; ++i) X[i][c] = (*x)[i];
  }
  return quotient_factors(k, X);
}

}  // namespace

PairHomology pair_homology(const RingMatrix& A, const RingMatrix& B) {
  if (A.cols != B.rows) throw Error("pair_homology: shapes do not compose");
  PairHomology H;
  const RingSpec& R = *A.ring;
  switch (R.kind) {
    case RingKind::Rationals:
    case RingKind::PrimeField: {
      BaseField F = field_of(R);
      int n = A.cols;
      int ra = A.rows ? f_rank(F, to_field_matrix(A)) : 0;
      int rb = B.cols ? f_rank(F, to_field_matrix(B)) : 0;
      H.dim = n - ra - rb;
      return H;
    }
    case RingKind::Integers:
      H.invariant_factors = z_pair_factors(matrix_to_zmat(A), matrix_to_zmat(B), A.cols);
      return H;
    case RingKind::IntegersMod:
      H.invariant_factors =
          modn_pair_factors(matrix_to_zmat(A), matrix_to_zmat(B), A.cols, R.modulus);
      return H;
    default:
      throw Error("pair_homology: unsupported backend " + R.describe());
  }
}

namespace {

// minimal verified annihilator monomials plus verified extras
std::vector<Elem> verify_annihilators(const DiffModule& D, const GradedComponents& comps,
                                      int cutoff, const std::vector<Elem>& extras) {
  const RingSpec& R = *D.ring;
  BaseField F = R.base;
  int dmin = *std::min_element(comps.gen_degrees.begin(), comps.gen_degrees.end());

  // kernel bases and image subspaces per degree
  std::map<int, std::vector<FVec>> kernels;
  std::map<int, Subspace> images;
  for (int t = dmin; t <= cutoff; ++t) {
    FMat dc = comps.delta_component(D.delta, t);
    kernels[t] = kernel_or_everything(F, dc, comps.dim(t));
    FMat prev = comps.delta_component(D.delta, t - comps.w);
    FMat cols;
    int dim_t = comps.dim(t);
    for (size_t c = 0; prev.size() && c < prev[0].size(); ++c) {
      FVec v(dim_t, Rat(0));
      for (int i = 0; i < dim_t; ++i) v[i] = prev[i][c];
      cols.push_back(std::move(v));
    }
    images.emplace(t, make_span(F, dim_t, std::move(cols)));
  }

  auto verified = [&](const Elem& g) -> bool {
    int e = elem_degree(g);
    if (e < 0) return false;  // zero annihilates but generates nothing
    bool tested = false;
    for (int t = dmin; t + e <= cutoff; ++t) {
      auto dom = comps.basis(t);
      const auto& ker = kernels[t];
      if (ker.empty()) continue;
      auto cod = comps.basis(t + e);
      std::map<std::pair<int, Mono>, int> cod_index;
      for (size_t i = 0; i < cod.size(); ++i) cod_index[cod[i]] = (int)i;
      for (const FVec& v : ker) {
        tested = true;
        FVec gv((int)cod.size(), Rat(0));
        for (size_t c = 0; c < dom.size(); ++c) {
          if (v[c] == 0) continue;
          auto [j, m] = dom[c];
          Elem prod = mul(R, g, elem_monomial(R, m, Rat(1)));
          for (const auto& [pm, pc] : prod.terms) {
            auto it = cod_index.find({j, pm});
            if (it == cod_index.end()) return false;  // fell outside the window
            gv[it->second] = f_reduce(F, gv[it->second] + v[c] * pc);
          }
        }
        if (!subspace_contains(F, images.at(t + e), gv)) return false;
      }
    }
    (void)tested;
    return true;
  };

  std::vector<Elem> out;
  // quotient-basis monomials, by ascending degree; keep divisibility-minimal ones
  std::vector<Mono> minimal;
  for (int d = 0; d <= cutoff; ++d) {
    for (const Mono& m : R.degree_data(d).basis) {
      bool redundant = false;
      for (const Mono& prev : minimal)
        if (mono_divides(prev, m)) { redundant = true; break; }
      if (redundant) continue;
      Elem g = elem_monomial(R, m, Rat(1));
      if (verified(g)) {
        minimal.push_back(m);
        out.push_back(g);
      }
    }
  }
  for (const Elem& g : extras) {
    bool already = false;
    for (const Elem& h : out)
      if (h == g) { already = true; break; }
    if (!already && verified(g)) out.push_back(g);
  }
  return out;
}

}  // namespace

HomologyPresentation homology(const DiffModule& D, std::optional<int> cutoff,
                              const std::vector<Elem>& extra_candidates) {
  HomologyPresentation H;
  const RingSpec& R = *D.ring;
  switch (R.kind) {
    case RingKind::Rationals:
    case RingKind::PrimeField: {
      H.backend = HomologyPresentation::Backend::Field;
      BaseField F = field_of(R);
      int r = f_rank(F, to_field_matrix(D.delta));
      H.dim = D.size - 2 * r;
      return H;
    }
    case RingKind::Integers: {
      H.backend = HomologyPresentation::Backend::Integers;
      ZMat A = matrix_to_zmat(D.delta);
      H.invariant_factors = z_pair_factors(A, A, D.size);
      return H;
    }
    case RingKind::IntegersMod: {
      H.backend = HomologyPresentation::Backend::IntegersMod;
      ZMat A = matrix_to_zmat(D.delta);
      H.invariant_factors = modn_pair_factors(A, A, D.size, R.modulus);
      return H;
    }
    case RingKind::GradedPoly: {
      H.backend = HomologyPresentation::Backend::Graded;
      GradedComponents comps = components_of(D);
      if (!cutoff) throw Error("cutoff-missing: graded homology needs an explicit cutoff");
      int maxg = *std::max_element(comps.gen_degrees.begin(), comps.gen_degrees.end());
      if (*cutoff < maxg)
        throw Error("cutoff " + std::to_string(*cutoff) +
                    " is below the maximum generator degree " + std::to_string(maxg));
      H.cutoff = cutoff;
      for (const Elem& g : extra_candidates)
        if (!is_homogeneous(g))
          throw Error("annihilator candidate '" + to_string(R, g) + "' is not homogeneous");
      BaseField F = R.base;
      int dmin = *std::min_element(comps.gen_degrees.begin(), comps.gen_degrees.end());
      std::map<int, int> rank_cache;
      auto rank_at = [&](int t) {
        auto it = rank_cache.find(t);
        if (it != rank_cache.end()) return it->second;
        FMat M = comps.delta_component(D.delta, t);
        int r = M.empty() ? 0 : f_rank(F, M);
        rank_cache[t] = r;
        return r;
      };
      for (int t = dmin; t <= *cutoff; ++t) {
        int dim_t = comps.dim(t);
        int ker = dim_t - rank_at(t);
        int im = rank_at(t - comps.w);
        H.hilbert[t] = ker - im;
      }
      H.annihilator_verified = verify_annihilators(D, comps, *cutoff, extra_candidates);
      return H;
    }
  }
  throw Error("unreachable");
}

Acyclicity is_acyclic(const DiffModule& D, std::optional<int> cutoff) {
  HomologyPresentation H = homology(D, cutoff);
  if (H.backend == HomologyPresentation::Backend::Graded)
    return H.is_zero() ? Acyclicity::YesUpToCutoff : Acyclicity::No;
  return H.is_zero() ? Acyclicity::Yes : Acyclicity::No;
}

std::string acyclicity_to_string(Acyclicity a) {
  switch (a) {
    case Acyclicity::Yes: return "yes";
    case Acyclicity::No: return "no";
    case Acyclicity::YesUpToCutoff: return "yes-up-to-cutoff";
  }
  return "?";
}

int residue_rank(const DiffModule& D) {
  DiffModule K = residue_reduction(D);
  BaseField F = field_of(*K.ring);
  return f_rank(F, to_field_matrix(K.delta));
}

RingMatrix standard_form_matrix(RingPtr ring, int r) {
  RingMatrix M = matrix_zero(ring, 2 * r, 2 * r);
  for (int i = 0; i < r; ++i) M.at(i, r + i) = elem_one(*M.ring);
  return M;
}

int field_homology_dim(const DiffModule& D) {
  BaseField F = field_of(*D.ring);
  return D.size - 2 * f_rank(F, to_field_matrix(D.delta));
}

namespace {

// columns with independent residues spanning the residue column space
std::vector<int> residue_pivot_columns(const BaseField& F, const FMat& Abar) {
  FMat M = Abar;
  return f_rref(F, M);  // pivot columns of the RREF are what we need
}

ContractibleResult build_witness_local(const DiffModule& D) {
  // residue rank is s/2; pick columns whose residues are independent and
  // form U = [A e_{j_1} .. A e_{j_r} | e_{j_1} .. e_{j_r}]
  ContractibleResult res;
  DiffModule Dbar = residue_reduction(D);
  BaseField F = field_of(*Dbar.ring);
  std::vector<int> cols = residue_pivot_columns(F, to_field_matrix(Dbar.delta));
  int r = (int)cols.size();
  RingMatrix U = matrix_zero(D.ring, D.size, D.size);
  for (int t = 0; t < r; ++t) {
    for (int i = 0; i < D.size; ++i) U.at(i, t) = D.delta.at(i, cols[t]);
    U.at(cols[t], r + t) = elem_one(*D.ring);
  }
  RingMatrix Uinv = matrix_inverse(U);
  RingMatrix W = Uinv;  // W delta W^{-1} = standard form
  RingMatrix check = matrix_product(matrix_product(W, D.delta), U);
  if (!(check == standard_form_matrix(D.ring, r)))
    throw Error("internal: standard form witness failed verification");
  res.yes = true;
  res.witness = std::move(W);
  res.reason = "standard form of rank " + std::to_string(r);
  return res;
}

}  // namespace

ContractibleResult is_contractible(const DiffModule& D, std::optional<int> cutoff) {
  const RingSpec& R = *D.ring;
  if (D.size == 0) {
    ContractibleResult res;
    res.yes = true;
    res.witness = matrix_zero(D.ring, 0, 0);
    res.reason = "zero module";
    return res;
  }
  if (R.kind == RingKind::Integers) {
    // over Z: contractible iff acyclic; witness from the Smith form of delta
    HomologyPresentation H = homology(D);
    if (!H.is_zero()) {
      ContractibleResult res;
      res.reason = "not acyclic: homology has " +
                   std::to_string(H.invariant_factors.size()) + " invariant factor(s)";
      return res;
    }
    SmithZ s = smith_z(matrix_to_zmat(D.delta));
    int r = 0;
    int minmn = D.size;
    while (r < minmn && s.S[r][r] != 0) ++r;
    RingMatrix U = matrix_zero(D.ring, D.size, D.size);
    for (int t = 0; t < r; ++t) {
      // c_t = V e_t, b_t = A c_t
      ZVec c(D.size);
      for (int i = 0; i < D.size; ++i) c[i] = s.V[i][t];
      for (int i = 0; i < D.size; ++i) {
        Elem acc = elem_zero();
        for (int j = 0; j < D.size; ++j)
          acc = add(R, acc, mul(R, D.delta.at(i, j), elem_from_int(R, c[j])));
        U.at(i, t) = acc;               // b_t
        U.at(i, r + t) = elem_from_int(R, c[i]);  // c_t
      }
    }
    RingMatrix W = matrix_inverse(U);
    RingMatrix check = matrix_product(matrix_product(W, D.delta), U);
    if (!(check == standard_form_matrix(D.ring, r)))
      throw Error("internal: standard form witness failed verification over Z");
    ContractibleResult res;
    res.yes = true;
    res.witness = std::move(W);
    res.reason = "acyclic over Z";
    return res;
  }

  if (!R.is_local())
    throw Error("is_contractible: unsupported backend " + R.describe() +
                " (needs a field, Z/p^k, Z, or a local graded ring)");
  if (R.is_graded() && !D.grading)
    throw Error("is_contractible over a graded ring requires grading data");

  int r = residue_rank(D);
  if (2 * r == D.size) return build_witness_local(D);

  ContractibleResult res;
  std::string acyclic_note;
  if (!R.is_graded()) {
    acyclic_note = is_acyclic(D) == Acyclicity::Yes ? "acyclic but " : "not acyclic and ";
  } else if (cutoff) {
    acyclic_note = is_acyclic(D, cutoff) == Acyclicity::YesUpToCutoff
                       ? "acyclic up to cutoff " + std::to_string(*cutoff) + " but "
                       : "not acyclic and ";
  }
  res.reason = acyclic_note + "residue rank " + std::to_string(r) + " != " +
               std::to_string(D.size) + "/2";
  return res;
}

FieldHomologyMap homology_map_field(const RingMatrix& phi, const DiffModule& D,
                                    const DiffModule& E) {
  BaseField F = field_of(*D.ring);
  FMat Ad = to_field_matrix(D.delta), Ae = to_field_matrix(E.delta);
  FMat P = to_field_matrix(phi);

  auto reps_of = [&](const FMat& A, int n) {
    Subspace ker = make_span(F, n, [&] {
      FMat rows;
      for (const FVec& v : kernel_or_everything(F, A, n)) rows.push_back(v);
      return rows;
    }());
    FMat cols;
    for (int c = 0; c < n; ++c) {
      FVec v(n, Rat(0));
      for (int i = 0; i < n; ++i) v[i] = A[i][c];
      cols.push_back(std::move(v));
    }
    Subspace im = make_span(F, n, std::move(cols));
    return std::make_tuple(ker, im, quotient_representatives(F, ker, im));
  };

  auto [kerD, imD, repsD] = reps_of(Ad, D.size);
  auto [kerE, imE, repsE] = reps_of(Ae, E.size);

  FieldHomologyMap out;
  out.dim_source = (int)repsD.size();
  out.dim_target = (int)repsE.size();
  out.matrix = f_zero(out.dim_target, out.dim_source);
  if (out.dim_source == 0 || out.dim_target + imE.dim() == 0) return out;

  // solve phi(rep) = sum lambda_u repsE[u] + imE-part
  FMat basis;  // columns: repsE then imE basis
  int n = E.size;
  int k = out.dim_target + imE.dim();
  basis = f_zero(n, k);
  for (int u = 0; u < out.dim_target; ++u)
    for (int i = 0; i < n; ++i) basis[i][u] = repsE[u][i];
  for (int u = 0; u < imE.dim(); ++u)
    for (int i = 0; i < n; ++i) basis[i][out.dim_target + u] = imE.basis[u][i];
  for (int c = 0; c < out.dim_source; ++c) {
    FVec img = f_apply(F, P, repsD[c]);
    auto sol = f_solve(F, basis, img);
    if (!sol) throw Error("internal: morphism image escaped the kernel");
    for (int u = 0; u < out.dim_target; ++u) out.matrix[u][c] = (*sol)[u];
  }
  return out;
}

}  // namespace diffmod
