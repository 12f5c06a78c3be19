#pragma once

#include "kwsgp/kw2d.hpp"
#include "kwsgp/numsgp.hpp"

#include <optional>
#include <vector>

namespace kwsgp {

// Square relation matrix for a generator tuple: each row annihilates the
// generator vector, the diagonal entry -c_i is minimal (no smaller positive
// multiple of a_i lies in the monoid spanned by the other generators), and
// off-diagonal entries are non-negative factorization coefficients.
struct PrincipalMatrix {
  std::vector<std::vector<Int>> entries;
  std::vector<Int> generator_order;

  Int n() const { return static_cast<Int>(entries.size()); }
};

// Exponent data of a corner set: alphas[i] = q - 2x_i (weakly decreasing,
// parity of q), betas[i] = p - 2y_i (weakly increasing, parity of p).
// The adjoined generator h_i equals (p*alpha_i + q*beta_i) / 2.
struct AlphaBeta {
  KWParams params;
  std::vector<Int> alphas;
  std::vector<Int> betas;

  Int size() const { return static_cast<Int>(alphas.size()); }
  Int h(Int i) const {
    return (params.p * alphas[i] + params.q * betas[i]) / 2;
  }
};

// Which closed-form construction applies. The first five tags mean the
// standard matrix is principal; the last two select an exceptional form.
enum class CaseTag {
  case_i,
  case_ii,
  case_iii,
  case_iv,
  case_v,
  even_p_exception,
  even_q_exception,
};

const char* case_tag_name(CaseTag tag);

AlphaBeta alpha_beta(const KWCorners& c);

// Closed-form candidate matrix for generators (p, q, h_1, ..., h_{n-2}):
// row 0 relates p, row 1 relates q, row 2+i relates h_i via 2h_i = p a + q b.
PrincipalMatrix standard_matrix(const AlphaBeta& ab);

CaseTag classify_case(const AlphaBeta& ab);

// Replacement first row (even p) or second row (even q) when the standard
// matrix's diagonal is not minimal. tag must be one of the exception tags.
PrincipalMatrix exceptional_matrix(const AlphaBeta& ab, CaseTag tag);

// Definition-chasing computation for an arbitrary semigroup: c_i by linear
// scan, off-diagonals the lexicographically smallest factorization.
PrincipalMatrix principal_matrix_bruteforce(const NumericalSemigroup& H);

// Generator tuple from a nonzero adjugate column, normalized by gcd.
// Absent when the matrix rank is not n-1.
std::optional<std::vector<Int>> recover_generators(const PrincipalMatrix& P);

struct ClosedFormReport {
  CaseTag tag;
  PrincipalMatrix constructed;
  PrincipalMatrix brute;
  bool kernel_ok;
  bool diagonal_ok;
  bool recovered_ok;

  bool ok() const { return kernel_ok && diagonal_ok && recovered_ok; }
};

// Builds the closed-form matrix per classify_case and compares it against
// the brute-force one. Throws TheoremViolation on any mismatch.
ClosedFormReport verify_closed_form(const KWCorners& c);

}  // namespace kwsgp
