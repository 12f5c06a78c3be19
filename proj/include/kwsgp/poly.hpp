#pragma once

#include "kwsgp/numsgp.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kwsgp {

// Monomial in a fixed variable list, stored as its exponent vector.
// Variable order throughout: index 0 = u, index 1 = v, index 2+i = u_i.
struct Monomial {
  std::vector<Int> e;

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator<(const Monomial& o) const { return e < o.e; }
};

Monomial mono_one(Int nvars);
Monomial mono_mul(const Monomial& a, const Monomial& b);
Int mono_weight(const Monomial& m, const std::vector<Int>& weights);
std::string mono_string(const Monomial& m);

// Difference of two distinct monomials, normalized so plus > minus in
// exponent-vector order; equality is therefore sign-insensitive.
struct Binomial {
  Monomial plus;
  Monomial minus;

  bool operator==(const Binomial& o) const {
    return plus == o.plus && minus == o.minus;
  }
  bool operator<(const Binomial& o) const {
    return plus != o.plus ? plus < o.plus : minus < o.minus;
  }
};

Binomial make_binomial(const Monomial& a, const Monomial& b);
bool binomial_homogeneous(const Binomial& b, const std::vector<Int>& weights);
Int binomial_degree(const Binomial& b, const std::vector<Int>& weights);
std::string binomial_string(const Binomial& b);

// Exact multivariate polynomial with integer coefficients; terms are kept
// in a sorted map so cancellation and comparison are canonical.
struct Poly {
  std::map<std::vector<Int>, Int> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const Poly& o) const { return terms == o.terms; }
};

Poly poly_zero();
Poly poly_mono(const Monomial& m, Int coeff);
Poly poly_binomial(const Binomial& b);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_neg(const Poly& a);
Poly poly_mul(const Poly& a, const Poly& b);
std::string poly_string(const Poly& p);

// Degree w.r.t. the weight vector when every term agrees; nullopt for an
// inhomogeneous polynomial. Zero polynomials report homogeneous-of-any-degree
// via the has_degree=false flag.
struct PolyDegree {
  bool is_homogeneous;
  bool has_degree;
  Int degree;
};
PolyDegree poly_degree(const Poly& p, const std::vector<Int>& weights);

struct PolyMatrix {
  Int rows = 0;
  Int cols = 0;
  std::vector<std::vector<Poly>> entries;

  const Poly& at(Int r, Int c) const { return entries[r][c]; }
  Poly& at(Int r, Int c) { return entries[r][c]; }
};

PolyMatrix poly_matrix(Int rows, Int cols);
PolyMatrix poly_matmul(const PolyMatrix& a, const PolyMatrix& b);
bool poly_matrix_zero(const PolyMatrix& m);

// Rank of the matrix after substituting deterministic pseudo-random values
// for the variables modulo a large prime.
Int specialized_rank(const PolyMatrix& m, Int nvars, unsigned seed);

}  // namespace kwsgp
