#pragma once

#include "kwsgp/kw2d.hpp"
#include "kwsgp/poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace kwsgp {

// Chain of free-module maps ending in the ground ring: maps[t] has shape
// ranks[t] x ranks[t+1], adjacent products vanish, and every entry is
// homogeneous for the degree shifts (inferred from the entries, shifts[0] =
// {0}).
struct GradedComplex {
  Int nvars = 0;
  std::vector<Int> weights;
  std::vector<Int> ranks;
  std::vector<PolyMatrix> maps;
  std::vector<std::vector<Int>> shifts;
};

struct ComplexReport {
  bool shapes_ok = false;
  bool products_zero = false;
  bool homogeneous = false;
  bool last_map_full_rank = false;
  std::string detail;

  bool ok() const {
    return shapes_ok && products_zero && homogeneous && last_map_full_rank;
  }
};

// Length-2 resolution for a one-corner member (embedding dimension 3):
// ranks (1,3,2), first map the three defining binomials.
GradedComplex resolution_ed3(Int p, Int q, Int x1, Int y1);

// Length-3 resolution for a two-corner member (embedding dimension 4):
// ranks (1,6,8,3). Requires 2*x1 >= x2 and 2*y2 >= y1 so that every entry
// exponent is non-negative; outside that box the displayed matrices do not
// apply and InvalidCorners is thrown.
GradedComplex resolution_ed4(Int p, Int q, std::pair<Int, Int> c1,
                             std::pair<Int, Int> c2);

// Exact symbolic verification: shapes, zero products, per-entry
// homogeneity against inferred shifts, and full rank of the last map under
// a random specialization. The report carries the first failure.
ComplexReport verify_complex(const GradedComplex& g);

// Plain-text rendering: one aligned block per map plus the shift rows.
std::string format_complex(const GradedComplex& g);

}  // namespace kwsgp
