#pragma once

#include "kwsgp/numsgp.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace kwsgp {

struct KWParams {
  Int p = 0;  // 3 <= p < q, gcd(p,q) = 1
  Int q = 0;
};

KWParams make_kw_params(Int p, Int q);

// r such that <p,q> subset H subset <p,q,r> characterizes the class:
// p/2 (p even), q/2 (q even), (p+q)/2 (both odd).
Int kw_r(const KWParams& params);

// The two even-parameter members <p/2,q> and <p,q/2> have no corner
// representation; they are carried as dedicated variants.
enum class KWVariant { corner_member, half_p, half_q };

struct KWCorners {
  KWParams params;
  std::vector<std::pair<Int, Int>> corners;  // sorted by strictly increasing x, strictly decreasing y
  KWVariant variant = KWVariant::corner_member;
};

// pq - xp - yq; negative for out-of-range input, caller validates.
Int gap_value(const KWParams& params, Int x, Int y);

// Checks the corner invariants (ordering and 2x <= q, 2y <= p). Throws InvalidCorners.
void validate_corners(const KWCorners& c);

// <p, q, h_1, ..., h_k> with every h_i verified minimal (embdim = 2 + k).
NumericalSemigroup build_kw(const KWCorners& c);

// All members: corner sets in lexicographic order (empty set = <p,q> first),
// then the half variants for an even parameter.
std::vector<KWCorners> enumerate_kw(const KWParams& params);

// Recovers corner data from a semigroup, or nullopt when it is not of KW shape.
std::optional<KWCorners> is_kw(const NumericalSemigroup& H, const KWParams& params);

struct PathDescription {
  KWParams params;
  Int width = 0;   // q' = floor(q/2)
  Int height = 0;  // p' = floor(p/2)
  std::vector<std::pair<Int, Int>> vertices;  // staircase from (0, p') to (q', 0)
  std::string steps;                          // 'D' and 'R' moves between vertices
  std::vector<std::pair<Int, Int>> corners;   // the interior right-to-down turning points
};

// Monotone staircase whose right-to-down turning points are exactly c.corners.
PathDescription render_path(const KWCorners& c);

}  // namespace kwsgp
