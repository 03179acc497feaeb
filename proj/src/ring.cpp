#include "diffmod/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace diffmod {

int mono_degree(const Mono& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

Mono mono_mul(const Mono& a, const Mono& b) {
  if (a.size() != b.size()) throw Error("monomial arity mismatch");
  Mono r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool mono_divides(const Mono& a, const Mono& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// ---------------------------------------------------------------- RingSpec

RingPtr RingSpec::rationals() {
  auto r = std::make_shared<RingSpec>();
  r->kind = RingKind::Rationals;
  r->local = true;  // a field is local
  return r;
}

RingPtr RingSpec::integers() {
  auto r = std::make_shared<RingSpec>();
  r->kind = RingKind::Integers;
  return r;
}

namespace {

bool is_prime(const Int& p) {
  return p > 1 && mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

// n = p^k for some prime p?  Returns p, or 0.
Int prime_power_radical(Int n) {
  if (n < 2) return 0;
  Int p = 2;
  while (p * p <= n) {
    if (n % p == 0) {
      Int m = n;
      while (m % p == 0) m /= p;
      return m == 1 ? p : Int(0);
    }
    p += 1;
  }
  return n;  // n itself prime
}

}  // namespace

RingPtr RingSpec::prime_field(const Int& p) {
  if (!is_prime(p)) throw Error("prime-field modulus " + p.get_str() + " is not prime");
  auto r = std::make_shared<RingSpec>();
  r->kind = RingKind::PrimeField;
  r->modulus = p;
  r->local = true;
  return r;
}

RingPtr RingSpec::integers_mod(const Int& n) {
  if (n < 2) throw Error("integers-mod modulus must be at least 2");
  auto r = std::make_shared<RingSpec>();
  r->kind = RingKind::IntegersMod;
  r->modulus = n;
  r->local = prime_power_radical(n) != 0;
  return r;
}

RingPtr RingSpec::graded_poly(BaseField base, std::vector<std::string> vars,
                              const std::vector<std::string>& relations, bool local) {
  if (base.p != 0 && !is_prime(base.p))
    throw Error("graded-poly base field characteristic must be 0 or prime");
  auto r = std::make_shared<RingSpec>();
  r->kind = RingKind::GradedPoly;
  r->base = base;
  r->vars = std::move(vars);
  r->local = local;
  for (const auto& s : relations) {
    Elem f = parse_elem(*r, s);  // relations empty at this point: no reduction yet
    int deg = 0;
    if (!is_homogeneous(f, &deg))
      throw Error("relation '" + s + "' is not homogeneous");
    if (f.is_zero() || deg == 0) throw Error("relation '" + s + "' is trivial");
    r->relations.push_back(std::move(f));
  }
  return r;
}

bool RingSpec::same(const RingSpec& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case RingKind::Rationals:
    case RingKind::Integers:
      return true;
    case RingKind::PrimeField:
    case RingKind::IntegersMod:
      return modulus == o.modulus;
    case RingKind::GradedPoly:
      return base == o.base && vars == o.vars && local == o.local &&
             [&] {
               if (relations.size() != o.relations.size()) return false;
               for (size_t i = 0; i < relations.size(); ++i)
                 if (!(relations[i] == o.relations[i])) return false;
               return true;
             }();
  }
  return false;
}

bool RingSpec::is_domain() const {
  switch (kind) {
    case RingKind::Rationals:
    case RingKind::Integers:
    case RingKind::PrimeField:
      return true;
    case RingKind::IntegersMod:
      return false;
    case RingKind::GradedPoly:
      return relations.empty();
  }
  return false;
}

bool RingSpec::is_local() const {
  switch (kind) {
    case RingKind::Rationals:
    case RingKind::PrimeField:
      return true;
    case RingKind::Integers:
      return false;
    case RingKind::IntegersMod:
      return local;
    case RingKind::GradedPoly:
      return local;
  }
  return false;
}

std::string RingSpec::describe() const {
  switch (kind) {
    case RingKind::Rationals: return "Q";
    case RingKind::Integers: return "Z";
    case RingKind::PrimeField: return "F" + modulus.get_str();
    case RingKind::IntegersMod: return "Z/" + modulus.get_str();
    case RingKind::GradedPoly: {
      std::string s = base.p == 0 ? "Q" : "F" + base.p.get_str();
      s += "[";
      for (size_t i = 0; i < vars.size(); ++i) s += (i ? "," : "") + vars[i];
      s += "]";
      if (!relations.empty()) {
        s += "/(";
        for (size_t i = 0; i < relations.size(); ++i)
          s += (i ? ", " : "") + to_string(*this, relations[i]);
        s += ")";
      }
      return s;
    }
  }
  return "?";
}

namespace {

void enumerate_monomials(int nvars, int degree, Mono& cur, int pos, int left,
                         std::vector<Mono>& out) {
  if (pos == nvars - 1) {
    cur[pos] = left;
    out.push_back(cur);
    return;
  }
  for (int e = left; e >= 0; --e) {
    cur[pos] = e;
    enumerate_monomials(nvars, degree, cur, pos + 1, left - e, out);
  }
}

std::vector<Mono> monomials_of_degree(int nvars, int degree) {
  std::vector<Mono> out;
  if (nvars == 0) {
    if (degree == 0) out.push_back(Mono{});
    return out;
  }
  Mono cur(nvars, 0);
  enumerate_monomials(nvars, degree, cur, 0, degree, out);
  return out;  // lex descending on exponent vectors
}

Rat coeff_reduce(const BaseField& F, Rat c) {
  if (F.p == 0) return c;
  // canonical lift in [0, p)
  Int num = c.get_num(), den = c.get_den();
  Int p = F.p;
  num %= p;
  if (num < 0) num += p;
  if (den != 1) {
    Int dinv;
    Int d = den % p;
    if (d < 0) d += p;
    if (mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t()) == 0)
      throw Error("denominator not invertible modulo " + p.get_str());
    num = (num * dinv) % p;
  }
  return Rat(num);
}

Rat f_inv_coeff(const BaseField& F, const Rat& c) {
  if (F.p == 0) {
    if (c == 0) throw Error("division by zero");
    return Rat(1) / c;
  }
  Int v = c.get_num() % F.p;
  if (v < 0) v += F.p;
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), F.p.get_mpz_t()) == 0)
    throw Error("element not invertible modulo " + F.p.get_str());
  return Rat(inv);
}

}  // namespace

const RingSpec::DegreeData& RingSpec::degree_data(int d) const {
  if (kind != RingKind::GradedPoly) throw Error("degree_data: not a graded backend");
  if (d < 0) throw Error("degree_data: negative degree");
  std::lock_guard<std::mutex> lock(cache_mu_);
  auto it = cache_.find(d);
  if (it != cache_.end()) return it->second;

  DegreeData dd;
  dd.monomials = monomials_of_degree(nvars(), d);
  for (size_t i = 0; i < dd.monomials.size(); ++i) dd.index[dd.monomials[i]] = (int)i;

  // Rows of the relation span in degree d, then plain Gaussian elimination.
  std::vector<std::vector<Rat>> rows;
  for (const Elem& f : relations) {
    int df = elem_degree(f);
    if (df > d) continue;
    for (const Mono& m : monomials_of_degree(nvars(), d - df)) {
      std::vector<Rat> row(dd.monomials.size(), Rat(0));
      for (const auto& [fm, fc] : f.terms) {
        Mono prod = mono_mul(m, fm);
        row[dd.index.at(prod)] = coeff_reduce(base, fc);
      }
      rows.push_back(std::move(row));
    }
  }
  // reduce to RREF
  size_t nc = dd.monomials.size();
  std::vector<std::pair<int, std::vector<Rat>>> reducers;
  for (size_t col = 0; col < nc && !rows.empty(); ++col) {
    size_t pivot_row = rows.size();
    for (size_t r = 0; r < rows.size(); ++r)
      if (rows[r][col] != 0) { pivot_row = r; break; }
    if (pivot_row == rows.size()) continue;
    std::vector<Rat> prow = rows[pivot_row];
    rows.erase(rows.begin() + pivot_row);
    Rat inv = f_inv_coeff(base, prow[col]);
    for (auto& x : prow) { x *= inv; if (base.p != 0) x = coeff_reduce(base, x); }
    for (auto& r : rows) {
      if (r[col] == 0) continue;
      Rat f = r[col];
      for (size_t j = col; j < nc; ++j) {
        r[j] -= f * prow[j];
        if (base.p != 0) r[j] = coeff_reduce(base, r[j]);
      }
    }
    for (auto& [pc, pr] : reducers) {
      if (pr[col] == 0) continue;
      Rat f = pr[col];
      for (size_t j = 0; j < nc; ++j) {
        pr[j] -= f * prow[j];
        if (base.p != 0) pr[j] = coeff_reduce(base, pr[j]);
      }
    }
    reducers.emplace_back((int)col, std::move(prow));
  }
  std::vector<bool> is_pivot(nc, false);
  for (const auto& [pc, pr] : reducers) is_pivot[pc] = true;
  for (size_t i = 0; i < nc; ++i)
    if (!is_pivot[i]) dd.basis.push_back(dd.monomials[i]);
  dd.reducers = std::move(reducers);

  auto [pos, ok] = cache_.emplace(d, std::move(dd));
  (void)ok;
  return pos->second;
}

// ---------------------------------------------------------------- elements

Elem elem_zero() { return Elem{}; }

Elem elem_one(const RingSpec& R) { return elem_from_int(R, 1); }

Elem elem_from_int(const RingSpec& R, const Int& v) {
  return elem_from_rat(R, Rat(v));
}

Elem elem_from_rat(const RingSpec& R, const Rat& v) {
  Elem e;
  if (v != 0) e.terms[Mono(R.nvars(), 0)] = v;
  return normalize(R, std::move(e));
}

Elem elem_monomial(const RingSpec& R, const Mono& m, const Rat& coeff) {
  if ((int)m.size() != R.nvars()) throw Error("monomial arity mismatch");
  Elem e;
  if (coeff != 0) e.terms[m] = coeff;
  return normalize(R, std::move(e));
}

Elem elem_variable(const RingSpec& R, int var) {
  if (var < 0 || var >= R.nvars()) throw Error("variable index out of range");
  Mono m(R.nvars(), 0);
  m[var] = 1;
  return elem_monomial(R, m, Rat(1));
}

namespace {

void drop_zeros(Elem& e) {
  for (auto it = e.terms.begin(); it != e.terms.end();)
    it = (it->second == 0) ? e.terms.erase(it) : std::next(it);
}

// Reduce the degree-d slice of e against the relation span.
void reduce_degree_slice(const RingSpec& R, Elem& e, int d) {
  const auto& dd = R.degree_data(d);
  if (dd.reducers.empty()) return;
  std::vector<Rat> vec(dd.monomials.size(), Rat(0));
  bool any = false;
  for (auto it = e.terms.begin(); it != e.terms.end();) {
    if (mono_degree(it->first) == d) {
      vec[dd.index.at(it->first)] = it->second;
      any = true;
      it = e.terms.erase(it);
    } else {
      ++it;
    }
  }
  if (!any) return;
  for (const auto& [pc, row] : dd.reducers) {
    if (vec[pc] == 0) continue;
    Rat f = vec[pc];
    for (size_t j = 0; j < vec.size(); ++j) {
      vec[j] -= f * row[j];
      if (R.base.p != 0) vec[j] = coeff_reduce(R.base, vec[j]);
    }
  }
  for (size_t j = 0; j < vec.size(); ++j)
    if (vec[j] != 0) e.terms[dd.monomials[j]] = vec[j];
}

}  // namespace

Elem normalize(const RingSpec& R, Elem e) {
  switch (R.kind) {
    case RingKind::Rationals:
      break;
    case RingKind::Integers:
      for (auto& [m, c] : e.terms)
        if (c.get_den() != 1) throw Error("non-integer value in integer ring");
      break;
    case RingKind::PrimeField:
    case RingKind::IntegersMod:
      for (auto& [m, c] : e.terms) c = coeff_reduce(BaseField{R.modulus}, c);
      break;
    case RingKind::GradedPoly: {
      if (R.base.p != 0)
        for (auto& [m, c] : e.terms) c = coeff_reduce(R.base, c);
      drop_zeros(e);
      if (!R.relations.empty()) {
        std::vector<int> degrees;
        for (const auto& [m, c] : e.terms) degrees.push_back(mono_degree(m));
        std::sort(degrees.begin(), degrees.end());
        degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
        for (int d : degrees)
          if (d > 0) reduce_degree_slice(R, e, d);
      }
      break;
    }
  }
  for (const auto& [m, c] : e.terms)
    if ((int)m.size() != R.nvars())
      throw Error("element does not belong to this ring");
  drop_zeros(e);
  return e;
}

Elem add(const RingSpec& R, const Elem& a, const Elem& b) {
  Elem r = a;
  for (const auto& [m, c] : b.terms) r.terms[m] += c;
  return normalize(R, std::move(r));
}

Elem sub(const RingSpec& R, const Elem& a, const Elem& b) {
  Elem r = a;
  for (const auto& [m, c] : b.terms) r.terms[m] -= c;
  return normalize(R, std::move(r));
}

Elem neg(const RingSpec& R, const Elem& a) {
  Elem r;
  for (const auto& [m, c] : a.terms) r.terms[m] = -c;
  return normalize(R, std::move(r));
}

Elem mul(const RingSpec& R, const Elem& a, const Elem& b) {
  Elem r;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) r.terms[mono_mul(ma, mb)] += ca * cb;
  return normalize(R, std::move(r));
}

int elem_degree(const Elem& e) {
  int d = -1;
  for (const auto& [m, c] : e.terms) d = std::max(d, mono_degree(m));
  return d;
}

bool is_homogeneous(const Elem& e, int* deg) {
  int d = -1;
  for (const auto& [m, c] : e.terms) {
    int dm = mono_degree(m);
    if (d == -1) d = dm;
    else if (d != dm) return false;
  }
  if (deg) *deg = std::max(d, 0);
  return true;
}

bool is_constant(const Elem& e) {
  return e.terms.empty() || (e.terms.size() == 1 && mono_degree(e.terms.begin()->first) == 0);
}

Rat constant_coeff(const Elem& e) {
  for (const auto& [m, c] : e.terms)
    if (mono_degree(m) == 0) return c;
  return Rat(0);
}

bool is_unit(const RingSpec& R, const Elem& e) {
  if (e.is_zero()) return false;
  switch (R.kind) {
    case RingKind::Rationals:
    case RingKind::PrimeField:
      return is_constant(e);
    case RingKind::Integers: {
      Rat c = constant_coeff(e);
      return is_constant(e) && (c == 1 || c == -1);
    }
    case RingKind::IntegersMod: {
      if (!is_constant(e)) return false;
      Int g;
      Int v = constant_coeff(e).get_num();
      mpz_gcd(g.get_mpz_t(), v.get_mpz_t(), R.modulus.get_mpz_t());
      return g == 1;
    }
    case RingKind::GradedPoly:
      // units of a positively graded ring are the nonzero constants
      return is_constant(e) && constant_coeff(e) != 0;
  }
  return false;
}

Elem unit_inverse(const RingSpec& R, const Elem& e) {
  if (!is_unit(R, e)) throw Error("element is not a unit");
  Rat c = constant_coeff(e);
  switch (R.kind) {
    case RingKind::Rationals:
      return elem_from_rat(R, Rat(1) / c);
    case RingKind::Integers:
      return elem_from_rat(R, c);  // +-1
    case RingKind::PrimeField:
    case RingKind::IntegersMod: {
      Int inv;
      Int v = c.get_num();
      if (mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), R.modulus.get_mpz_t()) == 0)
        throw Error("element is not invertible");
      return elem_from_int(R, inv);
    }
    case RingKind::GradedPoly:
      return elem_from_rat(R, f_inv_coeff(R.base, c));
  }
  throw Error("unreachable");
}

RingPtr residue_field(const RingSpec& R) {
  switch (R.kind) {
    case RingKind::Rationals:
      return RingSpec::rationals();
    case RingKind::PrimeField:
      return RingSpec::prime_field(R.modulus);
    case RingKind::IntegersMod: {
      Int p = prime_power_radical(R.modulus);
      if (p == 0) throw Error("Z/" + R.modulus.get_str() + " is not local: no residue field");
      return RingSpec::prime_field(p);
    }
    case RingKind::GradedPoly:
      if (!R.local) throw Error("graded-poly ring without local flag: no residue field");
      return R.base.p == 0 ? RingSpec::rationals() : RingSpec::prime_field(R.base.p);
    case RingKind::Integers:
      throw Error("Z is not local: no residue field");
  }
  throw Error("unreachable");
}

Elem residue_map(const RingSpec&, const RingSpec& K, const Elem& e) {
  // kill the maximal ideal: variables for graded backends, p for Z/p^k
  Rat c = constant_coeff(e);
  return elem_from_rat(K, c);
}

namespace {

// univariate view for gcd / division over k[x]
int uni_degree(const Elem& e) {
  int d = -1;
  for (const auto& [m, c] : e.terms) d = std::max(d, m[0]);
  return d;
}

Rat uni_coeff(const Elem& e, int d) {
  Mono m{d};
  auto it = e.terms.find(m);
  return it == e.terms.end() ? Rat(0) : it->second;
}

void require_gcd_backend(const RingSpec& R) {
  if (R.kind == RingKind::Integers) return;
  if (R.kind == RingKind::GradedPoly && R.nvars() == 1 && R.relations.empty()) return;
  throw Error("gcd: unsupported backend " + R.describe() +
              " (supported: Z and univariate polynomials over a field)");
}

// division with remainder over k[x]
std::pair<Elem, Elem> uni_divmod(const RingSpec& R, Elem a, const Elem& b) {
  if (b.is_zero()) throw Error("division by zero polynomial");
  Elem q = elem_zero();
  int db = uni_degree(b);
  Rat lead_inv = f_inv_coeff(R.base, uni_coeff(b, db));
  while (!a.is_zero() && uni_degree(a) >= db) {
    int da = uni_degree(a);
    Rat f = uni_coeff(a, da) * lead_inv;
    Elem t = elem_monomial(R, Mono{da - db}, f);
    q = add(R, q, t);
    a = sub(R, a, mul(R, t, b));
  }
  return {q, a};
}

Elem uni_monic(const RingSpec& R, const Elem& a) {
  if (a.is_zero()) return a;
  Rat inv = f_inv_coeff(R.base, uni_coeff(a, uni_degree(a)));
  return mul(R, a, elem_from_rat(R, inv));
}

}  // namespace

Elem gcd(const RingSpec& R, const Elem& a, const Elem& b) {
  require_gcd_backend(R);
  if (R.kind == RingKind::Integers) {
    Int x = constant_coeff(a).get_num(), y = constant_coeff(b).get_num();
    Int g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return elem_from_int(R, g);
  }
  Elem x = a, y = b;
  while (!y.is_zero()) {
    auto [q, r] = uni_divmod(R, x, y);
    x = y;
    y = r;
  }
  return uni_monic(R, x);
}

Elem exact_div(const RingSpec& R, const Elem& a, const Elem& b) {
  require_gcd_backend(R);
  if (b.is_zero()) throw Error("exact division by zero");
  if (R.kind == RingKind::Integers) {
    Int x = constant_coeff(a).get_num(), y = constant_coeff(b).get_num();
    if (x % y != 0) throw Error("exact division failed over Z");
    return elem_from_int(R, x / y);
  }
  auto [q, r] = uni_divmod(R, a, b);
  if (!r.is_zero()) throw Error("exact division failed over " + R.describe());
  return q;
}

// ---------------------------------------------------------------- printing

namespace {

std::string rat_to_string(const Rat& c) {
  std::string s = c.get_num().get_str();
  if (c.get_den() != 1) s += "/" + c.get_den().get_str();
  return s;
}

std::string term_to_string(const RingSpec& R, const Mono& m, const Rat& c, bool first) {
  std::string out;
  Rat cc = c;
  bool negative = cc < 0;
  if (negative) cc = -cc;
  if (first) out += negative ? "-" : "";
  else out += negative ? " - " : " + ";
  std::string vars;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!vars.empty()) vars += "*";
    vars += R.vars[i];
    if (m[i] > 1) vars += "^" + std::to_string(m[i]);
  }
  if (vars.empty()) return out + rat_to_string(cc);
  if (cc != 1) out += rat_to_string(cc) + "*";
  return out + vars;
}

}  // namespace

std::string to_string(const RingSpec& R, const Elem& e) {
  if (e.is_zero()) return "0";
  // highest total degree first, lex descending inside a degree
  std::vector<std::pair<Mono, Rat>> terms(e.terms.begin(), e.terms.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int da = mono_degree(a.first), db = mono_degree(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    out += term_to_string(R, m, c, first);
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------- parsing

namespace {

struct Parser {
  const RingSpec& R;
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw Error("parse error in '" + s + "' at position " + std::to_string(pos) + ": " + what);
  }

  Elem parse_expression() {
    skip_ws();
    bool negate = false;
    while (eat('+') || (pos < s.size() && s[pos] == '-' && (++pos, true))) {
      if (s[pos - 1] == '-') negate = !negate;
      skip_ws();
    }
    Elem acc = parse_term();
    if (negate) acc = diffmod::neg(R, acc);
    for (;;) {
      skip_ws();
      if (pos >= s.size()) break;
      if (s[pos] == '+') { ++pos; acc = add(R, acc, parse_term()); }
      else if (s[pos] == '-') { ++pos; acc = sub(R, acc, parse_term()); }
      else break;
    }
    return acc;
  }

  Elem parse_term() {
    Elem acc = parse_factor();
    for (;;) {
      skip_ws();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        acc = mul(R, acc, parse_factor());
      } else if (pos < s.size() && s[pos] == '/') {
        ++pos;
        Elem d = parse_factor();
        if (!is_unit(R, d)) fail("divisor is not a unit");
        acc = mul(R, acc, unit_inverse(R, d));
      } else {
        break;
      }
    }
    return acc;
  }

  Elem parse_factor() {
    skip_ws();
    bool negate = false;
    while (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
      if (s[pos] == '-') negate = !negate;
      ++pos;
      skip_ws();
    }
    Elem base = parse_primary();
    skip_ws();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      skip_ws();
      size_t start = pos;
      while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
      if (start == pos) fail("expected exponent");
      long e = std::stol(s.substr(start, pos - start));
      Elem acc = elem_one(R);
      for (long i = 0; i < e; ++i) acc = mul(R, acc, base);
      base = acc;
    }
    return negate ? diffmod::neg(R, base) : base;
  }

  Elem parse_primary() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (std::isdigit((unsigned char)c)) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
      return elem_from_int(R, Int(s.substr(start, pos - start)));
    }
    if (c == '(') {
      ++pos;
      Elem e = parse_expression();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isalpha((unsigned char)c) || c == '_') {
      size_t start = pos;
      while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
      std::string name = s.substr(start, pos - start);
      for (int i = 0; i < R.nvars(); ++i)
        if (R.vars[i] == name) return elem_variable(R, i);
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected character");
  }
};

}  // namespace

Elem parse_elem(const RingSpec& R, const std::string& text) {
  Parser p{R, text};
  Elem e = p.parse_expression();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return e;
}

RingPtr parse_ring_shorthand(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace((unsigned char)c)) s += c;
  if (s.empty()) throw Error("empty ring description");

  auto bracket = s.find('[');
  std::string head = s.substr(0, bracket);
  BaseField base;
  bool graded = bracket != std::string::npos;

  if (head == "Q") base.p = 0;
  else if (head == "Z" && !graded) {
    return RingSpec::integers();
  } else if (head.size() >= 2 && head[0] == 'Z' && head[1] == '/') {
    Int n(head.substr(2));
    if (graded) throw Error("polynomials over Z/n are not supported");
    return is_prime(n) ? RingSpec::prime_field(n) : RingSpec::integers_mod(n);
  } else if (head.size() >= 2 && (head[0] == 'F' || head[0] == 'f')) {
    base.p = Int(head.substr(1));
  } else {
    throw Error("cannot parse ring '" + text + "'");
  }

  if (!graded) {
    if (base.p == 0) return RingSpec::rationals();
    return RingSpec::prime_field(base.p);
  }

  auto close = s.find(']', bracket);
  if (close == std::string::npos) throw Error("missing ']' in ring '" + text + "'");
  std::vector<std::string> vars;
  std::string varlist = s.substr(bracket + 1, close - bracket - 1);
  std::string cur;
  for (char c : varlist + ",") {
    if (c == ',') {
      if (!cur.empty()) vars.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  std::vector<std::string> relations;
  if (close + 1 < s.size()) {
    std::string rest = s.substr(close + 1);
    if (rest.size() < 3 || rest[0] != '/' || rest[1] != '(' || rest.back() != ')')
      throw Error("cannot parse relations in ring '" + text + "'");
    std::string body = rest.substr(2, rest.size() - 3);
    int depth = 0;
    cur.clear();
    for (char c : body + ",") {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        if (!cur.empty()) relations.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
  }
  return RingSpec::graded_poly(base, std::move(vars), relations);
}

}  // namespace diffmod
