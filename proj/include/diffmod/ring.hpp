#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace diffmod {

using Int = mpz_class;
using Rat = mpq_class;

/// Error raised by every precondition and arithmetic failure in the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Monomial = exponent vector over the ring's variables; constants are the
// all-zero vector. Non-graded backends use an empty vector throughout.
using Mono = std::vector<int>;

int mono_degree(const Mono& m);
Mono mono_mul(const Mono& a, const Mono& b);
bool mono_divides(const Mono& a, const Mono& b);

// Exact ring element: sparse polynomial with rational coefficients.
// For prime-field / integers-mod backends the coefficient is the canonical
// lift in [0, n); for integers the denominator is 1; graded-poly elements
// are kept in normal form modulo the relation ideal, degree by degree.
struct Elem {
  std::map<Mono, Rat> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const Elem& o) const { return terms == o.terms; }
  bool operator!=(const Elem& o) const { return terms != o.terms; }
};

enum class RingKind { PrimeField, Rationals, Integers, IntegersMod, GradedPoly };

// Coefficient field of a graded-poly backend: p == 0 means Q, else F_p.
struct BaseField {
  Int p{0};
  bool operator==(const BaseField& o) const { return p == o.p; }
};

class RingSpec;
using RingPtr = std::shared_ptr<const RingSpec>;

class RingSpec {
 public:
  RingKind kind;
  Int modulus{0};  // prime-field p / integers-mod n
  BaseField base;
  std::vector<std::string> vars;
  std::vector<Elem> relations;  // homogeneous polynomials in vars
  bool local{false};

  static RingPtr rationals();
  static RingPtr integers();
  static RingPtr prime_field(const Int& p);
  static RingPtr integers_mod(const Int& n);
  static RingPtr graded_poly(BaseField base, std::vector<std::string> vars,
                             const std::vector<std::string>& relations,
                             bool local = true);

  bool same(const RingSpec& o) const;

  bool is_field() const { return kind == RingKind::PrimeField || kind == RingKind::Rationals; }
  bool is_graded() const { return kind == RingKind::GradedPoly; }
  // Domain backends: Z, Q, F_p, polynomial rings over a field without relations.
  bool is_domain() const;
  // Field, Z/p^k, or graded-poly carrying the local flag.
  bool is_local() const;
  int nvars() const { return static_cast<int>(vars.size()); }
  std::string describe() const;

  // Degreewise data for the graded quotient: all degree-d monomials,
  // reduction rows for the relation span, and the surviving basis.
  struct DegreeData {
    std::vector<Mono> monomials;  // canonical order (lex descending)
    std::map<Mono, int> index;
    // RREF rows of span{m*f : f relation, deg m = d - deg f}; pivot column first.
    std::vector<std::pair<int, std::vector<Rat>>> reducers;
    std::vector<Mono> basis;
  };
  const DegreeData& degree_data(int d) const;

 private:
  mutable std::mutex cache_mu_;
  mutable std::map<int, DegreeData> cache_;
};

// --- element constructors ---
Elem elem_zero();
Elem elem_one(const RingSpec& R);
Elem elem_from_int(const RingSpec& R, const Int& v);
Elem elem_from_rat(const RingSpec& R, const Rat& v);
Elem elem_monomial(const RingSpec& R, const Mono& m, const Rat& coeff);
Elem elem_variable(const RingSpec& R, int var);

// --- arithmetic; every result is in normal form for R ---
Elem normalize(const RingSpec& R, Elem e);
Elem add(const RingSpec& R, const Elem& a, const Elem& b);
Elem sub(const RingSpec& R, const Elem& a, const Elem& b);
Elem neg(const RingSpec& R, const Elem& a);
Elem mul(const RingSpec& R, const Elem& a, const Elem& b);

int elem_degree(const Elem& e);                      // -1 for zero
bool is_homogeneous(const Elem& e, int* deg = nullptr);
bool is_constant(const Elem& e);
Rat constant_coeff(const Elem& e);

bool is_unit(const RingSpec& R, const Elem& e);
Elem unit_inverse(const RingSpec& R, const Elem& e);

// Residue field of a local backend and the reduction map into it.
RingPtr residue_field(const RingSpec& R);
Elem residue_map(const RingSpec& R, const RingSpec& K, const Elem& e);

// gcd over the supported UFDs: Z, or univariate polynomials over a field
// (graded-poly, one variable, no relations). Normalized positive / monic.
Elem gcd(const RingSpec& R, const Elem& a, const Elem& b);
// Exact division in the same rings; throws if b does not divide a.
Elem exact_div(const RingSpec& R, const Elem& a, const Elem& b);

std::string to_string(const RingSpec& R, const Elem& e);
Elem parse_elem(const RingSpec& R, const std::string& text);

// Shorthand ring descriptions for the CLI: "Q", "Z", "Z/4", "F5",
// "Q[x,y]", "F2[x,y,z]", "Q[x,y,z]/(x^2+y*z)".
RingPtr parse_ring_shorthand(const std::string& text);

}  // namespace diffmod
