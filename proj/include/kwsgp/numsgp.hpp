#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kwsgp {

using Int = long long;

enum class Errc {
  EmptyInput,
  NonCoprime,
  NegativeInput,
  ModulusNotInSemigroup,
  InvalidCorners,
  NotMinimal,
  ParityViolation,
  WrongTag,
  RankDeficient,
  TheoremViolation,
  ComplexBroken,
  NotAGap,
  DuplicateGenerator,
  UnknownTable,
  InvalidSpec,
  CapExceeded,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

const char* errc_name(Errc code);

// Strictly increasing positive integers with gcd 1, minimally generating
// their semigroup. Construct via minimalize() or validate explicitly.
struct GeneratorSet {
  std::vector<Int> gens;
};

struct NumericalSemigroup {
  std::vector<Int> gens;  // minimal, strictly increasing
  Int frobenius = -1;  // -1 for <1>
  std::vector<char> membership;  // indexed 0 .. frobenius + max(gens)
  Int multiplicity = 0;
  int embdim = 0;
};

struct Factorization {
  std::vector<Int> coeffs;  // aligned with the semigroup's generators
};

struct AperySet {
  Int modulus = 0;
  std::vector<Int> elements;  // elements[r] is the least member congruent to r (mod modulus)
};

struct PFSet {
  std::vector<Int> elements;  // sorted ascending; the Frobenius number is always last
};

// Unique minimal generating set of the monoid generated by raw.
GeneratorSet minimalize(const std::vector<Int>& raw);

// Validates minimality and gcd, computes the membership table and Frobenius number.
NumericalSemigroup build(const GeneratorSet& gens);

bool contains(const NumericalSemigroup& H, Int t);
std::vector<Int> gaps(const NumericalSemigroup& H);
AperySet apery(const NumericalSemigroup& H, Int m);
PFSet pseudo_frobenius(const NumericalSemigroup& H);
int type_of(const NumericalSemigroup& H);

// All non-negative solutions of sum(coeffs[i] * gens[i]) = t in lexicographically
// increasing coefficient order. Empty when t is not a member.
std::vector<Factorization> factorizations(const NumericalSemigroup& H, Int t);

// Membership of t in the (possibly non-numerical) monoid generated by gens.
bool knapsack_representable(const std::vector<Int>& gens, Int t);

// Lexicographically smallest factorization of t over gens, if any.
std::optional<std::vector<Int>> knapsack_first(const std::vector<Int>& gens, Int t);

}  // namespace kwsgp
