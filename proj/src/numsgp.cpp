#include "kwsgp/numsgp.hpp"

#include <algorithm>
#include <numeric>

namespace kwsgp {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::NonCoprime: return "NonCoprime";
    case Errc::NegativeInput: return "NegativeInput";
    case Errc::ModulusNotInSemigroup: return "ModulusNotInSemigroup";
    case Errc::InvalidCorners: return "InvalidCorners";
    case Errc::NotMinimal: return "NotMinimal";
    case Errc::ParityViolation: return "ParityViolation";
    case Errc::WrongTag: return "WrongTag";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::TheoremViolation: return "TheoremViolation";
    case Errc::ComplexBroken: return "ComplexBroken";
    case Errc::NotAGap: return "NotAGap";
    case Errc::DuplicateGenerator: return "DuplicateGenerator";
    case Errc::UnknownTable: return "UnknownTable";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::CapExceeded: return "CapExceeded";
  }
  return "Unknown";
}

namespace {

Int gcd_all(const std::vector<Int>& v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x);
  return g;
}

// Representability table for 0..limit over gens (bounded knapsack DP).
std::vector<char> reach_table(const std::vector<Int>& gens, Int limit) {
  std::vector<char> ok(static_cast<size_t>(limit) + 1, 0);
  ok[0] = 1;
  for (Int t = 1; t <= limit; ++t) {
    for (Int g : gens) {
      if (g <= t && ok[static_cast<size_t>(t - g)]) {
        ok[static_cast<size_t>(t)] = 1;
        break;
      }
    }
  }
  return ok;
}

}  // namespace

bool knapsack_representable(const std::vector<Int>& gens, Int t) {
  if (t < 0) return false;
  if (t == 0) return true;
  if (gens.empty()) return false;
  return reach_table(gens, t)[static_cast<size_t>(t)] != 0;
}

std::optional<std::vector<Int>> knapsack_first(const std::vector<Int>& gens, Int t) {
  // Lexicographically smallest coefficient vector: greedy on the reach table
  // of suffix monoids, taking the smallest admissible coefficient per slot.
  if (t < 0) return std::nullopt;
  size_t n = gens.size();
  std::vector<std::vector<char>> suffix_ok(n + 1);
  suffix_ok[n] = std::vector<char>(static_cast<size_t>(t) + 1, 0);
  suffix_ok[n][0] = 1;
  for (size_t i = n; i-- > 0;) {
    suffix_ok[i] = suffix_ok[i + 1];
    for (Int v = gens[i]; v <= t; ++v) {
      if (suffix_ok[i][static_cast<size_t>(v - gens[i])]) suffix_ok[i][static_cast<size_t>(v)] = 1;
    }
  }
  if (!suffix_ok[0][static_cast<size_t>(t)]) return std::nullopt;
  std::vector<Int> coeffs(n, 0);
  Int rem = t;
  for (size_t i = 0; i < n; ++i) {
    Int c = 0;
    while (!suffix_ok[i + 1][static_cast<size_t>(rem - c * gens[i])]) ++c;
    coeffs[i] = c;
    rem -= c * gens[i];
  }
  return coeffs;
}

GeneratorSet minimalize(const std::vector<Int>& raw) {
  if (raw.empty()) throw Error(Errc::EmptyInput, "minimalize: empty generator list");
  for (Int x : raw) {
    if (x <= 0) throw Error(Errc::NegativeInput, "minimalize: generators must be positive");
  }
  std::vector<Int> xs(raw);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  if (gcd_all(xs) != 1) throw Error(Errc::NonCoprime, "minimalize: gcd of generators exceeds 1");
  std::vector<Int> out;
  for (size_t i = 0; i < xs.size(); ++i) {
    std::vector<Int> others;
    others.reserve(xs.size() - 1);
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j != i) others.push_back(xs[j]);
    }
    if (!knapsack_representable(others, xs[i])) out.push_back(xs[i]);
  }
  return GeneratorSet{out};
}

NumericalSemigroup build(const GeneratorSet& gens) {
  const std::vector<Int>& g = gens.gens;
  if (g.empty()) throw Error(Errc::EmptyInput, "build: empty generator set");
  if (!std::is_sorted(g.begin(), g.end()) || std::adjacent_find(g.begin(), g.end()) != g.end()) {
    throw Error(Errc::NotMinimal, "build: generators must be strictly increasing");
  }
  if (gcd_all(g) != 1) throw Error(Errc::NonCoprime, "build: gcd of generators exceeds 1");
  {
    GeneratorSet m = minimalize(g);
    if (m.gens != g) throw Error(Errc::NotMinimal, "build: generator set is not minimal");
  }
  NumericalSemigroup H;
  H.gens = gens.gens;
  H.multiplicity = g.front();
  H.embdim = static_cast<int>(g.size());
  if (g.front() == 1) {
    H.frobenius = -1;
    H.membership = {1};
    return H;
  }
  // Frobenius is below the two-generator bound g0*g1 - g0 - g1 < g0*g1.
  Int bound = g[0] * g[1];
  Int maxg = g.back();
  std::vector<char> table = reach_table(g, bound + maxg);
  Int f = -1;
  for (Int t = bound; t >= 0; --t) {
    if (!table[static_cast<size_t>(t)]) {
      f = t;
      break;
    }
  }
  H.frobenius = f;
  table.resize(static_cast<size_t>(f + maxg) + 1);
  H.membership = std::move(table);
  return H;
}

bool contains(const NumericalSemigroup& H, Int t) {
  if (t < 0) return false;
  if (t > H.frobenius) return true;
  return H.membership[static_cast<size_t>(t)] != 0;
}

std::vector<Int> gaps(const NumericalSemigroup& H) {
  std::vector<Int> out;
  for (Int t = 1; t <= H.frobenius; ++t) {
    if (!H.membership[static_cast<size_t>(t)]) out.push_back(t);
  }
  return out;
}

AperySet apery(const NumericalSemigroup& H, Int m) {
  if (m <= 0 || !contains(H, m)) {
    throw Error(Errc::ModulusNotInSemigroup, "apery: modulus not a positive member");
  }
  AperySet ap;
  ap.modulus = m;
  ap.elements.assign(static_cast<size_t>(m), -1);
  Int found = 0;
  // Everything past the Frobenius number is a member, so t <= frobenius + m suffices.
  for (Int t = 0; t <= H.frobenius + m && found < m; ++t) {
    size_t r = static_cast<size_t>(t % m);
    if (ap.elements[r] == -1 && contains(H, t)) {
      ap.elements[r] = t;
      ++found;
    }
  }
  return ap;
}

PFSet pseudo_frobenius(const NumericalSemigroup& H) {
  PFSet pf;
  if (H.gens.front() == 1) {
    pf.elements = {-1};  // convention: F(<1>) = -1 is its single pseudo-Frobenius element
    return pf;
  }
  for (Int g = 0; g <= H.frobenius; ++g) {
    if (contains(H, g)) continue;
    bool all = true;
    for (Int a : H.gens) {
      if (!contains(H, g + a)) {
        all = false;
        break;
      }
    }
    if (all) pf.elements.push_back(g);
  }
  return pf;
}

int type_of(const NumericalSemigroup& H) {
  return static_cast<int>(pseudo_frobenius(H).elements.size());
}

namespace {

void enumerate_factorizations(const std::vector<Int>& gens, size_t i, Int rem,
                              std::vector<Int>& cur, std::vector<Factorization>& out) {
  if (i + 1 == gens.size()) {
    if (rem % gens[i] == 0) {
      cur[i] = rem / gens[i];
      out.push_back(Factorization{cur});
    }
    return;
  }
  for (Int c = 0; c * gens[i] <= rem; ++c) {
    cur[i] = c;
    enumerate_factorizations(gens, i + 1, rem - c * gens[i], cur, out);
  }
  cur[i] = 0;
}

}  // namespace

std::vector<Factorization> factorizations(const NumericalSemigroup& H, Int t) {
  if (t < 0) throw Error(Errc::NegativeInput, "factorizations: negative degree");
  std::vector<Factorization> out;
  std::vector<Int> cur(H.gens.size(), 0);
  enumerate_factorizations(H.gens, 0, t, cur, out);
  return out;
}

}  // namespace kwsgp
