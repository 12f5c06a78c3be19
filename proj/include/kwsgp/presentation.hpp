#pragma once

#include "kwsgp/kw2d.hpp"
#include "kwsgp/numsgp.hpp"
#include "kwsgp/poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace kwsgp {

// Weight of each variable under the semigroup grading, in the fixed
// variable order u, v, u_1, ..., u_{n-2} (so weights = p, q, h_1, ...).
std::vector<Int> grading_weights(const KWCorners& c);

// The binomial generating set of the defining ideal for a corner member:
// products u_i u_j rewritten over u,v; adjacent corner exchanges; and the
// two boundary relations. Cardinality C(n,2), every element homogeneous.
std::vector<Binomial> ideal_generators(const KWCorners& c);

struct DetMatrix {
  std::string label;
  std::vector<std::vector<Monomial>> m;
};

// The 2x3 monomial matrices whose 2x2 minors cut out the ideal: one per
// corner pair (i<j) plus the two boundary matrices.
std::vector<DetMatrix> determinantal_matrices(const KWCorners& c);

// Nonzero 2x2 minors of one matrix, sign-normalized.
std::vector<Binomial> minors_2x2(const DetMatrix& d);

// Union of all minors, deduplicated up to sign, sorted.
std::vector<Binomial> dedup_minors(const std::vector<DetMatrix>& mats);

// One binomial per generator encoding the minimal relation c_i a_i =
// sum of others, over variables indexed by generator position.
std::vector<Binomial> critical_binomials(const NumericalSemigroup& H);

// Independent count of minimal ideal generators: for each semigroup element
// up to F + min + max, factorizations form a graph (edges join
// factorizations sharing a support generator); each extra connected
// component forces one new generator in that degree.
struct BettiReport {
  std::vector<std::pair<Int, Int>> elements;  // (degree, new generators)
  Int mu = 0;

  std::vector<Int> degrees() const;
};
BettiReport betti_elements(const NumericalSemigroup& H);

struct PresentationReport {
  Int n = 0;
  Int mu = 0;
  Int expected_mu = 0;
  Int type = 0;
  Int expected_type = 0;
  std::vector<Int> betti_degrees;
  std::vector<Int> generator_degrees;
  std::vector<Binomial> extra_minors;  // composite exchange relations, n >= 5
  // Lone corner on a parameter midline (2x = q or 2y = p): the member is a
  // gluing, so the expected counts drop to mu = n-1 and type 1.
  bool complete_intersection = false;
  bool mu_ok = false;
  bool type_ok = false;
  bool betti_degrees_ok = false;
  bool minors_ok = false;

  bool ok() const { return mu_ok && type_ok && betti_degrees_ok && minors_ok; }
};

// Cross-checks generator count, type, Betti degrees and the minor set for
// one corner member; throws TheoremViolation with details on failure.
// For n >= 5 the minor set properly contains the generating set; the
// extras must be composite exchange relations that decompose over adjacent
// ones, which is verified symbolically.
// A lone corner on a parameter midline is a gluing: 2h = p*alpha (even p)
// or 2h = q*beta (even q) makes <p,h> resp. <q,h> a scaled copy of <2,alpha>
// resp. <2,beta> and the third generator attaches as a gluing, so the ring
// is a complete intersection. Such members are reported with
// complete_intersection set and checked against mu = n-1, type 1; their
// binomial set still generates the ideal, just not minimally.
PresentationReport verify_presentation(const KWCorners& c);

}  // namespace kwsgp
