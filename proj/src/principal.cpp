#include "kwsgp/principal.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace kwsgp {

namespace {

using I128 = __int128;

// Fraction-free Gaussian elimination; returns the rank. Entry growth is
// bounded by minor determinants, far below the __int128 range for the
// matrix sizes handled here.
Int bareiss_rank(std::vector<std::vector<I128>> m) {
  const Int rows = static_cast<Int>(m.size());
  const Int cols = rows == 0 ? 0 : static_cast<Int>(m[0].size());
  I128 prev = 1;
  Int rank = 0;
  for (Int col = 0; col < cols && rank < rows; ++col) {
    Int pivot = -1;
    for (Int r = rank; r < rows; ++r) {
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (Int r = rank + 1; r < rows; ++r) {
      for (Int c = col + 1; c < cols; ++c) {
        m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
      }
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

I128 bareiss_det(std::vector<std::vector<I128>> m) {
  const Int n = static_cast<Int>(m.size());
  I128 prev = 1;
  Int sign = 1;
  for (Int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      Int pivot = -1;
      for (Int r = k + 1; r < n; ++r) {
        if (m[r][k] != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (Int r = k + 1; r < n; ++r) {
      for (Int c = k + 1; c < n; ++c) {
        m[r][c] = (m[k][k] * m[r][c] - m[r][k] * m[k][c]) / prev;
      }
      m[r][k] = 0;
    }
    prev = m[k][k];
  }
  return n == 0 ? 1 : sign * m[n - 1][n - 1];
}

I128 minor_det(const std::vector<std::vector<Int>>& a, Int skip_row,
               Int skip_col) {
  const Int n = static_cast<Int>(a.size());
  std::vector<std::vector<I128>> m;
  m.reserve(n - 1);
  for (Int r = 0; r < n; ++r) {
    if (r == skip_row) continue;
    std::vector<I128> row;
    row.reserve(n - 1);
    for (Int c = 0; c < n; ++c) {
      if (c == skip_col) continue;
      row.push_back(a[r][c]);
    }
    m.push_back(std::move(row));
  }
  return bareiss_det(std::move(m));
}

bool kernel_ok(const PrincipalMatrix& P) {
  for (const auto& row : P.entries) {
    I128 acc = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      acc += static_cast<I128>(row[j]) * P.generator_order[j];
    }
    if (acc != 0) return false;
  }
  return true;
}

void require_even(Int value) {
  if (value % 2 != 0) {
    throw Error(Errc::ParityViolation,
                "half-integer entry in closed-form matrix");
  }
}

std::string corners_string(const KWCorners& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.corners.size(); ++i) {
    if (i) s += ",";
    s += "(" + std::to_string(c.corners[i].first) + "," +
         std::to_string(c.corners[i].second) + ")";
  }
  return s + "}";
}

}  // namespace

const char* case_tag_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::case_i: return "i";
    case CaseTag::case_ii: return "ii";
    case CaseTag::case_iii: return "iii";
    case CaseTag::case_iv: return "iv";
    case CaseTag::case_v: return "v";
    case CaseTag::even_p_exception: return "even-p-exception";
    case CaseTag::even_q_exception: return "even-q-exception";
  }
  return "?";
}

AlphaBeta alpha_beta(const KWCorners& c) {
  AlphaBeta ab;
  ab.params = c.params;
  for (const auto& [x, y] : c.corners) {
    ab.alphas.push_back(c.params.q - 2 * x);
    ab.betas.push_back(c.params.p - 2 * y);
  }
  return ab;
}

PrincipalMatrix standard_matrix(const AlphaBeta& ab) {
  const Int k = ab.size();
  if (k < 1) {
    throw Error(Errc::InvalidCorners, "closed form needs at least one corner");
  }
  const Int n = k + 2;
  const Int p = ab.params.p;
  const Int q = ab.params.q;
  const Int a_first = ab.alphas.front();
  const Int a_last = ab.alphas.back();
  const Int b_first = ab.betas.front();
  const Int b_last = ab.betas.back();
  require_even(q + a_last);
  require_even(p - b_last);
  require_even(q - a_first);
  require_even(p + b_first);

  PrincipalMatrix P;
  P.entries.assign(n, std::vector<Int>(n, 0));
  P.entries[0][0] = -(q + a_last) / 2;
  P.entries[0][1] = (p - b_last) / 2;
  P.entries[0][n - 1] = 1;
  P.entries[1][0] = (q - a_first) / 2;
  P.entries[1][1] = -(p + b_first) / 2;
  P.entries[1][2] = 1;
  for (Int i = 0; i < k; ++i) {
    P.entries[2 + i][0] = ab.alphas[i];
    P.entries[2 + i][1] = ab.betas[i];
    P.entries[2 + i][2 + i] = -2;
  }
  P.generator_order = {p, q};
  for (Int i = 0; i < k; ++i) P.generator_order.push_back(ab.h(i));
  return P;
}

CaseTag classify_case(const AlphaBeta& ab) {
  const Int p = ab.params.p;
  const Int q = ab.params.q;
  if (p % 2 != 0 && q % 2 != 0) return CaseTag::case_i;
  const Int a_first = ab.alphas.front();
  const Int a_last = ab.alphas.back();
  const Int b_first = ab.betas.front();
  const Int b_last = ab.betas.back();
  if (p % 2 == 0) {
    if (2 * ab.h(0) != p * a_first) return CaseTag::case_ii;
    if (q <= 2 * a_first - a_last) return CaseTag::case_iii;
    return CaseTag::even_p_exception;
  }
  if (2 * ab.h(ab.size() - 1) != q * b_last) return CaseTag::case_iv;
  if (p <= 2 * b_last - b_first) return CaseTag::case_v;
  return CaseTag::even_q_exception;
}

PrincipalMatrix exceptional_matrix(const AlphaBeta& ab, CaseTag tag) {
  PrincipalMatrix P = standard_matrix(ab);
  const Int n = P.n();
  if (tag == CaseTag::even_p_exception) {
    if (ab.params.p % 2 != 0) {
      throw Error(Errc::WrongTag, "even-p form requires even p");
    }
    std::fill(P.entries[0].begin(), P.entries[0].end(), 0);
    P.entries[0][0] = -ab.alphas.front();
    P.entries[0][2] = 2;
  } else if (tag == CaseTag::even_q_exception) {
    if (ab.params.q % 2 != 0) {
      throw Error(Errc::WrongTag, "even-q form requires even q");
    }
    std::fill(P.entries[1].begin(), P.entries[1].end(), 0);
    P.entries[1][1] = -ab.betas.back();
    P.entries[1][n - 1] = 2;
  } else {
    throw Error(Errc::WrongTag, "not an exceptional case tag");
  }
  return P;
}

PrincipalMatrix principal_matrix_bruteforce(const NumericalSemigroup& H) {
  const Int n = H.embdim;
  PrincipalMatrix P;
  P.entries.assign(n, std::vector<Int>(n, 0));
  P.generator_order = H.gens;
  for (Int i = 0; i < n; ++i) {
    std::vector<Int> others;
    for (Int j = 0; j < n; ++j) {
      if (j != i) others.push_back(H.gens[j]);
    }
    for (Int c = 1;; ++c) {
      const Int target = c * H.gens[i];
      if (!knapsack_representable(others, target)) continue;
      const auto coeffs = *knapsack_first(others, target);
      P.entries[i][i] = -c;
      Int k = 0;
      for (Int j = 0; j < n; ++j) {
        if (j != i) P.entries[i][j] = coeffs[k++];
      }
      break;
    }
  }
  return P;
}

std::optional<std::vector<Int>> recover_generators(const PrincipalMatrix& P) {
  const Int n = P.n();
  if (n < 2) return std::nullopt;
  std::vector<std::vector<I128>> wide(n, std::vector<I128>(n));
  for (Int r = 0; r < n; ++r) {
    for (Int c = 0; c < n; ++c) wide[r][c] = P.entries[r][c];
  }
  if (bareiss_rank(wide) != n - 1) return std::nullopt;
  // Column j of the adjugate is the cofactor vector along row j; any nonzero
  // column spans the one-dimensional kernel.
  for (Int j = 0; j < n; ++j) {
    std::vector<I128> col(n);
    bool nonzero = false;
    for (Int i = 0; i < n; ++i) {
      I128 cof = minor_det(P.entries, j, i);
      if ((i + j) % 2 != 0) cof = -cof;
      col[i] = cof;
      if (cof != 0) nonzero = true;
    }
    if (!nonzero) continue;
    I128 g = 0;
    for (I128 v : col) {
      I128 a = v < 0 ? -v : v;
      while (a != 0) {
        I128 t = g % a;
        g = a;
        a = t;
      }
    }
    std::vector<Int> out(n);
    for (Int i = 0; i < n; ++i) {
      I128 v = col[i] < 0 ? -col[i] : col[i];
      out[i] = static_cast<Int>(v / g);
    }
    return out;
  }
  return std::nullopt;
}

ClosedFormReport verify_closed_form(const KWCorners& c) {
  if (c.variant != KWVariant::corner_member || c.corners.empty()) {
    throw Error(Errc::InvalidCorners,
                "closed-form comparison needs a corner member");
  }
  const AlphaBeta ab = alpha_beta(c);
  ClosedFormReport rep{};
  rep.tag = classify_case(ab);
  rep.constructed = (rep.tag == CaseTag::even_p_exception ||
                     rep.tag == CaseTag::even_q_exception)
                        ? exceptional_matrix(ab, rep.tag)
                        : standard_matrix(ab);
  rep.brute = principal_matrix_bruteforce(build_kw(c));
  // The brute rows follow ascending generators; adjoined values below q
  // (small gaps) would misalign them, so permute into closed-form order.
  const auto& order = rep.constructed.generator_order;
  if (rep.brute.generator_order != order) {
    PrincipalMatrix aligned;
    aligned.generator_order = order;
    const Int n = rep.constructed.n();
    std::vector<Int> perm(n);
    for (Int i = 0; i < n; ++i) {
      const auto& bg = rep.brute.generator_order;
      perm[i] = std::find(bg.begin(), bg.end(), order[i]) - bg.begin();
    }
    aligned.entries.assign(n, std::vector<Int>(n, 0));
    for (Int i = 0; i < n; ++i) {
      for (Int j = 0; j < n; ++j) {
        aligned.entries[i][j] = rep.brute.entries[perm[i]][perm[j]];
      }
    }
    rep.brute = aligned;
  }
  rep.kernel_ok = kernel_ok(rep.constructed);
  rep.diagonal_ok = true;
  for (Int i = 0; i < rep.constructed.n(); ++i) {
    if (rep.constructed.entries[i][i] != rep.brute.entries[i][i]) {
      rep.diagonal_ok = false;
    }
  }
  const auto recovered = recover_generators(rep.constructed);
  rep.recovered_ok =
      recovered.has_value() && *recovered == rep.constructed.generator_order;
  if (!rep.ok()) {
    throw Error(Errc::TheoremViolation,
                "closed-form principal matrix mismatch at (p,q)=(" +
                    std::to_string(c.params.p) + "," +
                    std::to_string(c.params.q) + ") corners " +
                    corners_string(c) + " case " + case_tag_name(rep.tag) +
                    (rep.kernel_ok ? "" : " [kernel]") +
                    (rep.diagonal_ok ? "" : " [diagonal]") +
                    (rep.recovered_ok ? "" : " [recovery]"));
  }
  return rep;
}

}  // namespace kwsgp
