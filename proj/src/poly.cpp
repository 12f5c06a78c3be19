#include "kwsgp/poly.hpp"

#include <algorithm>
#include <random>

namespace kwsgp {

namespace {

constexpr Int kRankPrime = 1000000007;

Int mod_pow(Int base, Int exp, Int mod) {
  Int r = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) r = (__int128)r * base % mod;
    base = (__int128)base * base % mod;
    exp >>= 1;
  }
  return r;
}

Int mod_inv(Int a, Int mod) { return mod_pow(a, mod - 2, mod); }

std::string var_name(std::size_t idx) {
  if (idx == 0) return "u";
  if (idx == 1) return "v";
  return "u" + std::to_string(idx - 1);
}

}  // namespace

Monomial mono_one(Int nvars) { return Monomial{std::vector<Int>(nvars, 0)}; }

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
  return r;
}

Int mono_weight(const Monomial& m, const std::vector<Int>& weights) {
  Int acc = 0;
  for (std::size_t i = 0; i < m.e.size(); ++i) acc += m.e[i] * weights[i];
  return acc;
}

std::string mono_string(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.e.size(); ++i) {
    if (m.e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += var_name(i);
    if (m.e[i] != 1) s += "^" + std::to_string(m.e[i]);
  }
  return s.empty() ? "1" : s;
}

Binomial make_binomial(const Monomial& a, const Monomial& b) {
  if (a == b) {
    throw Error(Errc::InvalidSpec, "binomial with equal monomials");
  }
  return b < a ? Binomial{a, b} : Binomial{b, a};
}

bool binomial_homogeneous(const Binomial& b, const std::vector<Int>& weights) {
  return mono_weight(b.plus, weights) == mono_weight(b.minus, weights);
}

Int binomial_degree(const Binomial& b, const std::vector<Int>& weights) {
  return mono_weight(b.plus, weights);
}

std::string binomial_string(const Binomial& b) {
  return mono_string(b.plus) + " - " + mono_string(b.minus);
}

Poly poly_zero() { return Poly{}; }

Poly poly_mono(const Monomial& m, Int coeff) {
  Poly p;
  if (coeff != 0) p.terms[m.e] = coeff;
  return p;
}

Poly poly_binomial(const Binomial& b) {
  Poly p;
  p.terms[b.plus.e] = 1;
  p.terms[b.minus.e] = -1;
  return p;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [e, c] : b.terms) {
    auto it = r.terms.find(e);
    if (it == r.terms.end()) {
      r.terms.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) r.terms.erase(it);
    }
  }
  return r;
}

Poly poly_neg(const Poly& a) {
  Poly r = a;
  for (auto& [e, c] : r.terms) c = -c;
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      std::vector<Int> e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      auto it = r.terms.find(e);
      if (it == r.terms.end()) {
        Int c = ca * cb;
        if (c != 0) r.terms.emplace(std::move(e), c);
      } else {
        it->second += ca * cb;
        if (it->second == 0) r.terms.erase(it);
      }
    }
  }
  return r;
}

std::string poly_string(const Poly& p) {
  if (p.terms.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : p.terms) {
    if (!s.empty()) s += c > 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    Int a = c > 0 ? c : -c;
    std::string m = mono_string(Monomial{e});
    if (a != 1) {
      s += std::to_string(a);
      if (m != "1") s += "*" + m;
    } else {
      s += m;
    }
  }
  return s;
}

PolyDegree poly_degree(const Poly& p, const std::vector<Int>& weights) {
  if (p.terms.empty()) return {true, false, 0};
  Int deg = 0;
  bool first = true;
  for (const auto& [e, c] : p.terms) {
    const Int w = mono_weight(Monomial{e}, weights);
    if (first) {
      deg = w;
      first = false;
    } else if (w != deg) {
      return {false, false, 0};
    }
  }
  return {true, true, deg};
}

PolyMatrix poly_matrix(Int rows, Int cols) {
  PolyMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.entries.assign(rows, std::vector<Poly>(cols));
  return m;
}

PolyMatrix poly_matmul(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols != b.rows) {
    throw Error(Errc::InvalidSpec, "matrix dimension mismatch");
  }
  PolyMatrix r = poly_matrix(a.rows, b.cols);
  for (Int i = 0; i < a.rows; ++i) {
    for (Int j = 0; j < b.cols; ++j) {
      Poly acc;
      for (Int k = 0; k < a.cols; ++k) {
        acc = poly_add(acc, poly_mul(a.at(i, k), b.at(k, j)));
      }
      r.at(i, j) = std::move(acc);
    }
  }
  return r;
}

bool poly_matrix_zero(const PolyMatrix& m) {
  for (const auto& row : m.entries) {
    for (const auto& p : row) {
      if (!p.is_zero()) return false;
    }
  }
  return true;
}

Int specialized_rank(const PolyMatrix& m, Int nvars, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<Int> dist(2, kRankPrime - 2);
  std::vector<Int> point(nvars);
  for (auto& v : point) v = dist(rng);

  std::vector<std::vector<Int>> num(m.rows, std::vector<Int>(m.cols, 0));
  for (Int i = 0; i < m.rows; ++i) {
    for (Int j = 0; j < m.cols; ++j) {
      Int acc = 0;
      for (const auto& [e, c] : m.at(i, j).terms) {
        Int t = ((c % kRankPrime) + kRankPrime) % kRankPrime;
        for (Int v = 0; v < nvars; ++v) {
          if (e[v] != 0) {
            t = (__int128)t * mod_pow(point[v], e[v], kRankPrime) % kRankPrime;
          }
        }
        acc = (acc + t) % kRankPrime;
      }
      num[i][j] = acc;
    }
  }

  Int rank = 0;
  for (Int col = 0; col < m.cols && rank < m.rows; ++col) {
    Int pivot = -1;
    for (Int r = rank; r < m.rows; ++r) {
      if (num[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(num[rank], num[pivot]);
    const Int inv = mod_inv(num[rank][col], kRankPrime);
    for (Int r = rank + 1; r < m.rows; ++r) {
      if (num[r][col] == 0) continue;
      const Int f = (__int128)num[r][col] * inv % kRankPrime;
      for (Int c = col; c < m.cols; ++c) {
        num[r][c] =
            ((num[r][c] - (__int128)f * num[rank][c]) % kRankPrime +
             kRankPrime) %
            kRankPrime;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace kwsgp
