#pragma once

#include "kwsgp/numsgp.hpp"

#include <vector>

namespace kwsgp {

// Parameters of the three-generator base semigroup S = <sp, sq, w> with
// w = r1*p + r2*q. Requires 1 < p < q coprime, r1, r2 >= 1, s >= 2, and
// gcd(s, w) = 1 (which makes S symmetric).
struct KW3Params {
  Int p = 0;
  Int q = 0;
  Int r1 = 0;
  Int r2 = 0;
  Int s = 0;
  Int w = 0;
};

KW3Params make_kw3_params(Int p, Int q, Int r1, Int r2, Int s);

struct GapPoint3 {
  Int x = 0;
  Int y = 0;
  Int z = 0;

  bool operator==(const GapPoint3& o) const {
    return x == o.x && y == o.y && z == o.z;
  }
  bool operator<(const GapPoint3& o) const {
    if (x != o.x) return x < o.x;
    if (y != o.y) return y < o.y;
    return z < o.z;
  }
};

// Closed-form Frobenius number of S: s(pq - p - q) + w(s - 1).
Int frobenius_formula(const KW3Params& params);

// Gap parametrized by a lattice point: F(S) - x*sp - y*sq - z*w.
Int gamma_value(const KW3Params& params, const GapPoint3& pt);

// S itself; the closed-form Frobenius number and the symmetry gap count
// (F+1)/2 are verified on construction.
NumericalSemigroup base_semigroup(const KW3Params& params);

// The unique lattice point with x in [0,q), z in [0,s), y >= 0 whose gamma
// value is t. x and z are pinned by t's residues mod q and mod s, y by the
// value; y = p is reached by the gaps F - s*p*q - w*z when those are
// positive, so y is not capped at p. Uniqueness is asserted by exhaustive
// search; throws NotAGap when t is not a gap of S.
GapPoint3 gap_rep(const KW3Params& params, Int t);

// Canonical points of every gap of S, sorted; the 3D figure data.
std::vector<GapPoint3> gap_cloud(const KW3Params& params);

struct KW3Semigroup {
  KW3Params params;
  std::vector<GapPoint3> points;
  std::vector<Int> hs;
  NumericalSemigroup H;
  bool strict_class = false;  // all points within the class box
};

bool point_in_strict_box(const KW3Params& params, const GapPoint3& pt);

// Extension semigroup <sp, sq, w, h_1, ...>. Every adjoined gamma value
// must be a gap and stay a minimal generator; otherwise DuplicateGenerator.
KW3Semigroup build_kw3(const KW3Params& params,
                       const std::vector<GapPoint3>& points);

// Single-point domain scanned by the tables: 2x <= q-3, 2y <= p-3,
// z <= s-2. Slightly wider than the class box for odd parameters; every
// point in it yields a minimal fourth generator.
std::vector<GapPoint3> enumerate_valid_points(const KW3Params& params);

// Minimal generators beyond sp, sq, w must be exactly the common elements
// of the three Apery sets (the zero element excluded).
struct AperyIntersectionReport {
  std::vector<Int> expected;
  std::vector<Int> intersection;
  bool ok = false;
};
AperyIntersectionReport verify_apery_intersection(const KW3Semigroup& K);

// Pseudo-Frobenius prediction for a single-point extension: p_x, p_y, p_z
// are the gaps one step further along each axis; when p_z stays a gap the
// prediction is PF = {p_x, p_y, p_z} and type 3.
struct Type3Report {
  GapPoint3 point;
  Int h = 0;
  Int px = 0;
  Int py = 0;
  Int pz = 0;
  bool strict = false;
  bool pz_in_h = false;
  bool applicable = false;
  std::vector<Int> predicted;
  std::vector<Int> actual;
  Int type = 0;
  bool agrees = false;
};
Type3Report verify_type3(const KW3Params& params, const GapPoint3& point);

struct SingleGapRow {
  GapPoint3 point;
  Int h = 0;
  Int type = 0;
  Int mu = 0;
};
std::vector<SingleGapRow> single_gap_table(const KW3Params& params);

struct TwoGapRow {
  Int hprime = 0;
  Int mu = 0;
};
std::vector<TwoGapRow> two_gap_table(const KW3Params& params,
                                     const GapPoint3& first);

}  // namespace kwsgp
