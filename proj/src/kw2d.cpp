#include "kwsgp/kw2d.hpp"

#include <algorithm>
#include <numeric>

namespace kwsgp {

KWParams make_kw_params(Int p, Int q) {
  if (p < 3 || q <= p) throw Error(Errc::InvalidSpec, "kw params: need 3 <= p < q");
  if (std::gcd(p, q) != 1) throw Error(Errc::NonCoprime, "kw params: p and q must be coprime");
  return KWParams{p, q};
}

Int kw_r(const KWParams& params) {
  if (params.p % 2 == 0) return params.p / 2;
  if (params.q % 2 == 0) return params.q / 2;
  return (params.p + params.q) / 2;
}

Int gap_value(const KWParams& params, Int x, Int y) {
  return params.p * params.q - x * params.p - y * params.q;
}

void validate_corners(const KWCorners& c) {
  if (c.variant == KWVariant::half_p) {
    if (c.params.p % 2 != 0 || !c.corners.empty()) {
      throw Error(Errc::InvalidCorners, "half_p variant requires even p and no corners");
    }
    return;
  }
  if (c.variant == KWVariant::half_q) {
    if (c.params.q % 2 != 0 || !c.corners.empty()) {
      throw Error(Errc::InvalidCorners, "half_q variant requires even q and no corners");
    }
    return;
  }
  for (size_t i = 0; i < c.corners.size(); ++i) {
    auto [x, y] = c.corners[i];
    if (x < 1 || y < 1 || 2 * x > c.params.q || 2 * y > c.params.p) {
      throw Error(Errc::InvalidCorners, "corner outside the admissible box");
    }
    if (i > 0) {
      auto [px, py] = c.corners[i - 1];
      if (!(px < x && py > y)) {
        throw Error(Errc::InvalidCorners, "corners must have strictly increasing x and strictly decreasing y");
      }
    }
  }
}

NumericalSemigroup build_kw(const KWCorners& c) {
  validate_corners(c);
  if (c.variant == KWVariant::half_p) return build(minimalize({c.params.p / 2, c.params.q}));
  if (c.variant == KWVariant::half_q) return build(minimalize({c.params.p, c.params.q / 2}));
  std::vector<Int> raw = {c.params.p, c.params.q};
  for (auto [x, y] : c.corners) raw.push_back(gap_value(c.params, x, y));
  GeneratorSet m = minimalize(raw);
  if (m.gens.size() != raw.size()) {
    throw Error(Errc::NotMinimal, "build_kw: an adjoined gap is not a minimal generator");
  }
  return build(m);
}

namespace {

// Recursive corner-set enumeration in lexicographic order: at each step extend
// with the next corner (x, y), x greater than the previous x, y smaller than
// the previous y.
void enumerate_sets(const KWParams& params, Int min_x, Int max_y,
                    std::vector<std::pair<Int, Int>>& cur, std::vector<KWCorners>& out) {
  out.push_back(KWCorners{params, cur, KWVariant::corner_member});
  Int xmax = params.q / 2;
  for (Int x = min_x; x <= xmax; ++x) {
    for (Int y = max_y; y >= 1; --y) {
      // The degenerate corner regenerates an even-parameter half member
      // (its gap value equals p/2 or q/2); it is carried as a half variant
      // instead, so skip it here.
      Int h = gap_value(params, x, y);
      if (h == params.p / 2 && params.p % 2 == 0) continue;
      if (h == params.q / 2 && params.q % 2 == 0) continue;
      cur.emplace_back(x, y);
      enumerate_sets(params, x + 1, y - 1, cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<KWCorners> enumerate_kw(const KWParams& params) {
  std::vector<KWCorners> out;
  std::vector<std::pair<Int, Int>> cur;
  enumerate_sets(params, 1, params.p / 2, cur, out);
  std::sort(out.begin(), out.end(),
            [](const KWCorners& a, const KWCorners& b) { return a.corners < b.corners; });
  if (params.p % 2 == 0) out.push_back(KWCorners{params, {}, KWVariant::half_p});
  if (params.q % 2 == 0) out.push_back(KWCorners{params, {}, KWVariant::half_q});
  return out;
}

std::optional<KWCorners> is_kw(const NumericalSemigroup& H, const KWParams& params) {
  const std::vector<Int>& g = H.gens;
  if (params.p % 2 == 0 && g == std::vector<Int>{params.p / 2, params.q}) {
    return KWCorners{params, {}, KWVariant::half_p};
  }
  if (params.q % 2 == 0) {
    std::vector<Int> half = {params.p, params.q / 2};
    std::sort(half.begin(), half.end());
    if (g == half) return KWCorners{params, {}, KWVariant::half_q};
  }
  std::vector<std::pair<Int, Int>> corners;
  for (Int h : g) {
    if (h == params.p || h == params.q) continue;
    // h = pq - xp - yq has at most one solution with 1 <= x <= q/2,
    // 1 <= y <= p/2 (x is determined mod q within a window shorter than q).
    bool found = false;
    for (Int x = 1; 2 * x <= params.q && !found; ++x) {
      Int rest = params.p * params.q - x * params.p - h;
      if (rest <= 0 || rest % params.q != 0) continue;
      Int y = rest / params.q;
      if (y >= 1 && 2 * y <= params.p) {
        corners.emplace_back(x, y);
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  bool has_p = std::find(g.begin(), g.end(), params.p) != g.end();
  bool has_q = std::find(g.begin(), g.end(), params.q) != g.end();
  if (!has_p || !has_q) return std::nullopt;
  std::sort(corners.begin(), corners.end());
  for (size_t i = 1; i < corners.size(); ++i) {
    if (!(corners[i - 1].first < corners[i].first && corners[i - 1].second > corners[i].second)) {
      return std::nullopt;
    }
  }
  KWCorners c{params, corners, KWVariant::corner_member};
  validate_corners(c);
  return c;
}

PathDescription render_path(const KWCorners& c) {
  validate_corners(c);
  PathDescription d;
  d.params = c.params;
  d.width = c.params.q / 2;
  d.height = c.params.p / 2;
  d.corners = c.corners;
  Int cx = 0;
  Int cy = d.height;
  d.vertices.emplace_back(cx, cy);
  auto down_to = [&](Int y) {
    while (cy > y) {
      --cy;
      d.steps.push_back('D');
      d.vertices.emplace_back(cx, cy);
    }
  };
  auto right_to = [&](Int x) {
    while (cx < x) {
      ++cx;
      d.steps.push_back('R');
      d.vertices.emplace_back(cx, cy);
    }
  };
  for (auto [x, y] : c.corners) {
    down_to(y);
    right_to(x);
  }
  down_to(0);
  right_to(d.width);
  return d;
}

}  // namespace kwsgp
