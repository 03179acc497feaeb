#include "diffmod/diff_module.hpp"

#include <algorithm>
#include <deque>

namespace diffmod {

FreeComplex make_free_complex(RingPtr ring, int lo, std::vector<int> ranks,
                              std::vector<RingMatrix> diffs) {
  FreeComplex X;
  X.ring = std::move(ring);
  X.lo = lo;
  X.hi = lo + (int)ranks.size() - 1;
  if (ranks.empty()) throw Error("complex needs at least one term");
  if (diffs.size() + 1 != ranks.size())
    throw Error("complex needs one differential per adjacent pair of terms");
  for (size_t k = 0; k < diffs.size(); ++k) {
    const RingMatrix& d = diffs[k];
    if (!d.ring->same(*X.ring)) throw Error("complex differential ring mismatch");
    if (d.rows != ranks[k] || d.cols != ranks[k + 1])
      throw Error("differential d_" + std::to_string(lo + (int)k + 1) + " has shape " +
                  std::to_string(d.rows) + "x" + std::to_string(d.cols) + ", expected " +
                  std::to_string(ranks[k]) + "x" + std::to_string(ranks[k + 1]));
  }
  for (size_t k = 0; k + 1 < diffs.size(); ++k) {
    if (!matrix_is_zero(matrix_product(diffs[k], diffs[k + 1])))
      throw Error("complex differentials do not compose to zero at degree " +
                  std::to_string(lo + (int)k + 2));
  }
  X.ranks = std::move(ranks);
  X.diffs = std::move(diffs);
  return X;
}

DiffModule make_diff_module(RingPtr ring, RingMatrix delta, std::optional<Grading> grading) {
  if (delta.rows != delta.cols) throw Error("delta must be square");
  if (!delta.ring->same(*ring)) throw Error("delta entries live in a different ring");
  RingMatrix sq = matrix_product(delta, delta);
  for (int i = 0; i < sq.rows; ++i)
    for (int j = 0; j < sq.cols; ++j)
      if (!sq.at(i, j).is_zero())
        throw Error("not-square-zero: entry (" + std::to_string(i + 1) + "," +
                    std::to_string(j + 1) + ") of delta^2 is " +
                    to_string(*ring, sq.at(i, j)));
  if (grading) {
    if (!ring->is_graded())
      throw Error("grading data requires a graded-poly backend");
    if ((int)grading->gen_degrees.size() != delta.rows)
      throw Error("grading has " + std::to_string(grading->gen_degrees.size()) +
                  " generator degrees for a module of size " + std::to_string(delta.rows));
    for (int i = 0; i < delta.rows; ++i)
      for (int j = 0; j < delta.cols; ++j) {
        const Elem& a = delta.at(i, j);
        if (a.is_zero()) continue;
        int deg = 0;
        int want = grading->gen_degrees[j] - grading->gen_degrees[i] + grading->diff_degree;
        if (!is_homogeneous(a, &deg) || deg != want)
          throw Error("grading-mismatch: entry (" + std::to_string(i + 1) + "," +
                      std::to_string(j + 1) + ") = " + to_string(*ring, a) +
                      " is not homogeneous of degree " + std::to_string(want));
      }
  }
  DiffModule D;
  D.ring = std::move(ring);
  D.size = delta.rows;
  D.delta = std::move(delta);
  D.grading = std::move(grading);
  return D;
}

DiffModule suspension(const DiffModule& D) {
  DiffModule S = D;
  S.delta = matrix_neg(D.delta);
  return S;
}

DiffModule cone(const RingMatrix& phi, const DiffModule& D, const DiffModule& E) {
  if (!D.ring->same(*E.ring) || !phi.ring->same(*D.ring))
    throw Error("cone: ring mismatch");
  if (phi.rows != E.size || phi.cols != D.size)
    throw Error("cone: phi must be " + std::to_string(E.size) + "x" + std::to_string(D.size));
  RingMatrix lhs = matrix_product(E.delta, phi);
  RingMatrix rhs = matrix_product(phi, D.delta);
  if (!(lhs == rhs)) throw Error("not-a-morphism: delta_E * phi != phi * delta_D");

  RingMatrix neg_dD = matrix_neg(D.delta);
  std::vector<std::vector<const RingMatrix*>> blocks{{&neg_dD, nullptr}, {&phi, &E.delta}};
  RingMatrix M = matrix_from_blocks(D.ring, 2, 2, blocks);

  std::optional<Grading> grading;
  if (D.grading && E.grading && D.grading->diff_degree == E.grading->diff_degree) {
    // shift the D part so that the phi block becomes homogeneous
    int w = D.grading->diff_degree;
    std::optional<int> shift;
    bool ok = true;
    for (int i = 0; i < phi.rows && ok; ++i)
      for (int j = 0; j < phi.cols && ok; ++j) {
        const Elem& a = phi.at(i, j);
        if (a.is_zero()) continue;
        int deg = 0;
        if (!is_homogeneous(a, &deg)) { ok = false; break; }
        int c = deg - D.grading->gen_degrees[j] + E.grading->gen_degrees[i] - w;
        if (!shift) shift = c;
        else if (*shift != c) ok = false;
      }
    if (ok) {
      Grading g;
      g.diff_degree = w;
      for (int d : D.grading->gen_degrees) g.gen_degrees.push_back(d + shift.value_or(0));
      for (int d : E.grading->gen_degrees) g.gen_degrees.push_back(d);
      grading = std::move(g);
    }
  }
  return make_diff_module(D.ring, std::move(M), std::move(grading));
}

namespace {

RingMatrix compress_matrix(const FreeComplex& X) {
  int total = 0;
  for (int r : X.ranks) total += r;
  RingMatrix M = matrix_zero(X.ring, total, total);
  std::vector<int> offset(X.ranks.size() + 1, 0);
  for (size_t k = 0; k < X.ranks.size(); ++k) offset[k + 1] = offset[k] + X.ranks[k];
  for (size_t k = 0; k < X.diffs.size(); ++k) {
    const RingMatrix& d = X.diffs[k];  // block (k) x (k+1)
    for (int i = 0; i < d.rows; ++i)
      for (int j = 0; j < d.cols; ++j) M.at(offset[k] + i, offset[k + 1] + j) = d.at(i, j);
  }
  return M;
}

}  // namespace

std::optional<std::vector<int>> infer_grading(const RingSpec& R, const RingMatrix& delta,
                                              int w) {
  if (!R.is_graded()) return std::nullopt;
  int s = delta.rows;
  std::vector<std::optional<int>> g(s);
  // edges j -> i with g_j - g_i = deg(a_ij) - w
  for (int root = 0; root < s; ++root) {
    if (g[root]) continue;
    g[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v = 0; v < s; ++v) {
        // entry (v, u): column u maps into row v
        auto relate = [&](int from, int to, const Elem& a) -> bool {
          if (a.is_zero()) return true;
          int deg = 0;
          if (!is_homogeneous(a, &deg)) return false;
          int diff = deg - w;  // g_from - g_to
          if (!g[to]) {
            g[to] = *g[from] - diff;
            queue.push_back(to);
          } else if (*g[from] - *g[to] != diff) {
            return false;
          }
          return true;
        };
        if (!relate(u, v, delta.at(v, u))) return std::nullopt;   // u as column
        if (!relate(v, u, delta.at(u, v))) return std::nullopt;   // u as row
      }
    }
  }
  std::vector<int> out(s);
  for (int i = 0; i < s; ++i) out[i] = *g[i];
  return out;
}

DiffModule compress(const FreeComplex& X) {
  RingMatrix M = compress_matrix(X);
  std::optional<Grading> grading;
  if (X.ring->is_graded()) {
    if (auto g = infer_grading(*X.ring, M, -1))
      grading = Grading{std::move(*g), -1};
  }
  return make_diff_module(X.ring, std::move(M), std::move(grading));
}

FreeComplex expand(const DiffModule& D, int lo, int hi) {
  if (hi < lo) throw Error("expand: window must satisfy hi >= lo");
  std::vector<int> ranks(hi - lo + 1, D.size);
  std::vector<RingMatrix> diffs(hi - lo, D.delta);
  return make_free_complex(D.ring, lo, std::move(ranks), std::move(diffs));
}

DiffModule tensor(const FreeComplex& X, const DiffModule& D) {
  if (!X.ring->same(*D.ring)) throw Error("tensor: ring mismatch");
  int s = D.size;
  int terms = (int)X.ranks.size();
  std::vector<int> offset(terms + 1, 0);
  for (int k = 0; k < terms; ++k) offset[k + 1] = offset[k] + X.ranks[k] * s;
  RingMatrix M = matrix_zero(D.ring, offset[terms], offset[terms]);
  const RingSpec& R = *D.ring;
  for (int k = 0; k < terms; ++k) {
    int n = X.lo + k;
    bool odd = ((n % 2) + 2) % 2 == 1;
    // boundary part: d_n ⊗ id
    if (k > 0) {
      const RingMatrix& d = X.diffs[k - 1];
      for (int v = 0; v < d.rows; ++v)
        for (int u = 0; u < d.cols; ++u) {
          if (d.at(v, u).is_zero()) continue;
          for (int j = 0; j < s; ++j)
            M.at(offset[k - 1] + v * s + j, offset[k] + u * s + j) = d.at(v, u);
        }
    }
    // module part: (-1)^n id ⊗ delta
    for (int u = 0; u < X.ranks[k]; ++u)
      for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
          const Elem& a = D.delta.at(i, j);
          if (a.is_zero()) continue;
          M.at(offset[k] + u * s + i, offset[k] + u * s + j) = odd ? neg(R, a) : a;
        }
  }
  std::optional<Grading> grading;
  if (D.grading) {
    if (auto t = infer_grading(R, compress_matrix(X), D.grading->diff_degree)) {
      Grading g;
      g.diff_degree = D.grading->diff_degree;
      g.gen_degrees.resize(offset[terms]);
      int pos = 0;
      for (int k = 0; k < terms; ++k) {
        for (int u = 0; u < X.ranks[k]; ++u)
          for (int j = 0; j < s; ++j)
            g.gen_degrees[offset[k] + u * s + j] = (*t)[pos + u] + D.grading->gen_degrees[j];
        pos += X.ranks[k];
      }
      grading = std::move(g);
    }
  }
  return make_diff_module(D.ring, std::move(M), std::move(grading));
}

DiffModule direct_sum(const DiffModule& D, const DiffModule& E) {
  if (!D.ring->same(*E.ring)) throw Error("direct sum: ring mismatch");
  std::vector<std::vector<const RingMatrix*>> blocks{{&D.delta, nullptr}, {nullptr, &E.delta}};
  RingMatrix M = matrix_from_blocks(D.ring, 2, 2, blocks);
  std::optional<Grading> grading;
  if (D.grading && E.grading && D.grading->diff_degree == E.grading->diff_degree) {
    Grading g;
    g.diff_degree = D.grading->diff_degree;
    g.gen_degrees = D.grading->gen_degrees;
    g.gen_degrees.insert(g.gen_degrees.end(), E.grading->gen_degrees.begin(),
                         E.grading->gen_degrees.end());
    grading = std::move(g);
  }
  return make_diff_module(D.ring, std::move(M), std::move(grading));
}

DiffModule residue_reduction(const DiffModule& D) {
  RingPtr K = residue_field(*D.ring);
  RingMatrix M = matrix_zero(K, D.size, D.size);
  for (int i = 0; i < D.size; ++i)
    for (int j = 0; j < D.size; ++j) M.at(i, j) = residue_map(*D.ring, *K, D.delta.at(i, j));
  return make_diff_module(K, std::move(M));
}

FreeComplex koszul_complex(RingPtr ring, const std::vector<Elem>& elements) {
  int e = (int)elements.size();
  if (e == 0) throw Error("Koszul complex needs at least one element");
  if (e > 20) throw Error("Koszul complex on more than 20 elements is not supported");
  // subsets of {0..e-1} by (cardinality, bitmask)
  std::vector<std::vector<unsigned>> by_card(e + 1);
  for (unsigned mask = 0; mask < (1u << e); ++mask)
    by_card[__builtin_popcount(mask)].push_back(mask);
  std::vector<std::map<unsigned, int>> index(e + 1);
  for (int c = 0; c <= e; ++c)
    for (size_t i = 0; i < by_card[c].size(); ++i) index[c][by_card[c][i]] = (int)i;

  const RingSpec& R = *ring;
  std::vector<int> ranks;
  for (int c = 0; c <= e; ++c) ranks.push_back((int)by_card[c].size());
  std::vector<RingMatrix> diffs;
  for (int c = 1; c <= e; ++c) {
    RingMatrix d = matrix_zero(ring, ranks[c - 1], ranks[c]);
    for (size_t col = 0; col < by_card[c].size(); ++col) {
      unsigned S = by_card[c][col];
      int sign_count = 0;
      for (int i = 0; i < e; ++i) {
        if (!(S & (1u << i))) continue;
        unsigned T = S & ~(1u << i);
        Elem a = elements[i];
        if (sign_count % 2 == 1) a = neg(R, a);
        d.at(index[c - 1][T], (int)col) = a;
        ++sign_count;
      }
    }
    diffs.push_back(std::move(d));
  }
  return make_free_complex(std::move(ring), 0, std::move(ranks), std::move(diffs));
}

DiffModule koszul_compression(RingPtr ring, const std::vector<Elem>& elements) {
  return compress(koszul_complex(std::move(ring), elements));
}

}  // namespace diffmod
